#include "ddca/deligne.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ddca {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] <= 0 || (i && rows[i] > rows[i - 1])) throw std::invalid_argument("not a Young diagram");
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string YoungDiagram::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
  return s + ")";
}

long content(const YoungDiagram& l) {
  long c = 0;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l.rows[i]; ++j) c += j - i;
  return c;
}

int min_pad_rank(const YoungDiagram& l) { return (l.rows.empty() ? 0 : l.rows[0]) + l.size(); }

YoungDiagram pad(const YoungDiagram& l, int n) {
  if (n < min_pad_rank(l))
    throw InvalidN("pad: n = " + std::to_string(n) + " < " + std::to_string(min_pad_rank(l)));
  std::vector<int> r{n - l.size()};
  r.insert(r.end(), l.rows.begin(), l.rows.end());
  if (r[0] == 0) r.clear();
  return YoungDiagram(std::move(r));
}

std::vector<YoungDiagram> partitions_of(int size) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (!left) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

ParamPoly omega_interpolated(const YoungDiagram& l, const ParamPoly& nu) {
  ParamPoly a = nu - ParamPoly(Rat(l.size()));
  return ParamPoly(Rat(content(l) - l.size())) + a * (a - ParamPoly(1L)) * ParamPoly(rat(1, 2));
}

InterpolationReport interpolation_consistency(const YoungDiagram& l, const std::vector<int>& samples) {
  InterpolationReport r;
  r.expected = omega_interpolated(l);
  std::vector<std::pair<Rat, Rat>> pts;
  for (int n : samples) pts.emplace_back(Rat(n), Rat(content(pad(l, n))));
  if (pts.size() < 3) throw std::invalid_argument("interpolation_consistency: need 3 samples");
  try {
    r.fitted = fit_polynomial(pts, 2, Sym::nu);
  } catch (const InconsistentSamples& e) {
    r.detail = e.what();
    return r;
  }
  r.ok = r.fitted == r.expected;
  r.detail = r.fitted.str();
  return r;
}

PartitionDiagram::PartitionDiagram(int n_, int m_, std::vector<std::vector<int>> b) : n(n_), m(m_), blocks(std::move(b)) {
  std::vector<int> seen;
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("empty block");
    std::sort(blk.begin(), blk.end());
    seen.insert(seen.end(), blk.begin(), blk.end());
  }
  std::sort(blocks.begin(), blocks.end());
  std::sort(seen.begin(), seen.end());
  std::vector<int> want(n + m);
  std::iota(want.begin(), want.end(), 1);
  if (seen != want) throw std::invalid_argument("blocks do not partition the points");
}

PartitionDiagram PartitionDiagram::identity(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 1; i <= n; ++i) b.push_back({i, n + i});
  return PartitionDiagram(n, n, std::move(b));
}

std::string PartitionDiagram::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    os << (i ? "," : "") << "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      int p = blocks[i][j];
      os << (j ? "," : "") << (p <= n ? std::to_string(p) : std::to_string(p - n) + "'");
    }
    os << "}";
  }
  return os.str() + "}";
}

std::pair<PartitionDiagram, int> stack_diagrams(const PartitionDiagram& mu, const PartitionDiagram& lambda) {
  if (lambda.m != mu.n) throw SizeMismatch("compose: inner sizes differ");
  const int n = lambda.n, m = lambda.m, k = mu.m;
  // 0..n-1 top, n..n+m-1 middle, n+m..n+m+k-1 bottom
  std::vector<int> parent(n + m + k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& blk : lambda.blocks)
    for (int p : blk) join(blk[0] - 1, p - 1);
  for (const auto& blk : mu.blocks)
    for (int p : blk) join(blk[0] - 1 + n, p - 1 + n);
  std::map<int, std::vector<int>> comps;
  std::map<int, bool> outer;
  for (int i = 0; i < n + m + k; ++i) {
    int r = find(i);
    bool mid = i >= n && i < n + m;
    outer[r] = outer[r] || !mid;
    if (!mid) comps[r].push_back(i < n ? i + 1 : i - m + 1);
  }
  int middle = 0;
  for (const auto& [r, o] : outer) middle += !o;
  std::vector<std::vector<int>> blocks;
  for (auto& [r, b] : comps) blocks.push_back(std::move(b));
  return {PartitionDiagram(n, k, std::move(blocks)), middle};
}

PartitionElem compose_diagrams(const PartitionDiagram& mu, const PartitionDiagram& lambda, const ParamPoly& nu) {
  auto [d, l] = stack_diagrams(mu, lambda);
  return PartitionElem(d, nu.pow(l));
}

PartitionElem compose(const PartitionElem& mu, const PartitionElem& lambda, const ParamPoly& nu) {
  PartitionElem r;
  for (const auto& [a, ca] : mu.terms)
    for (const auto& [b, cb] : lambda.terms) r.add(compose_diagrams(a, b, nu), ca * cb);
  return r;
}

std::vector<PartitionDiagram> all_partition_diagrams(int n, int m) {
  // restricted growth strings over n + m points
  const int N = n + m;
  std::vector<PartitionDiagram> out;
  std::vector<int> a(N, 0);
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == N) {
      std::vector<std::vector<int>> b(mx);
      for (int j = 0; j < N; ++j) b[a[j]].push_back(j + 1);
      out.emplace_back(n, m, std::move(b));
      return;
    }
    for (int v = 0; v <= mx; ++v) {
      a[i] = v;
      rec(i + 1, std::max(mx, v + 1));
    }
  };
  if (N == 0)
    out.emplace_back(0, 0, std::vector<std::vector<int>>{});
  else
    rec(0, 0);
  return out;
}

long bell_number(int n) {
  // Bell triangle
  std::vector<long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long> next{row.back()};
    for (long x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

AssociativityReport partition_associativity(int n, const ParamPoly& nu) {
  AssociativityReport rep;
  auto ds = all_partition_diagrams(n, n);
  for (const auto& a : ds)
    for (const auto& b : ds)
      for (const auto& c : ds) {
        ++rep.triples;
        PartitionElem A(a, ParamPoly(1L)), B(b, ParamPoly(1L)), C(c, ParamPoly(1L));
        if (compose(compose(A, B, nu), C, nu) != compose(A, compose(B, C, nu), nu)) ++rep.failures;
      }
  return rep;
}

}  // namespace ddca
