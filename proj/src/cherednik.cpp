#include "ddca/cherednik.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "ddca/linalg.hpp"

namespace ddca {

using Exps8 = std::vector<std::uint8_t>;

GroupElem GroupElem::identity(int n) {
  GroupElem g;
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

GroupElem GroupElem::transposition(int n, int i, int j) {
  GroupElem g = identity(n);
  std::swap(g.perm[i], g.perm[j]);
  return g;
}

GroupElem GroupElem::gamma(int n, int i) {
  GroupElem g = identity(n);
  g.signs = 1u << i;
  return g;
}

GroupElem GroupElem::operator*(const GroupElem& o) const {
  GroupElem r;
  r.perm.resize(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    r.perm[j] = perm[o.perm[j]];
    bool s = ((o.signs >> j) & 1u) ^ ((signs >> o.perm[j]) & 1u);
    if (s) r.signs |= 1u << j;
  }
  return r;
}

GroupElem GroupElem::inverse() const {
  GroupElem r;
  r.perm.resize(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    r.perm[perm[j]] = static_cast<std::uint8_t>(j);
    if ((signs >> j) & 1u) r.signs |= 1u << perm[j];
  }
  return r;
}

int GroupElem::act(const Exps8& e, Exps8& out) const {
  out.assign(e.size(), 0);
  int sign = 1;
  for (std::size_t j = 0; j < e.size(); ++j) {
    out[perm[j]] = e[j];
    if (((signs >> j) & 1u) && (e[j] & 1u)) sign = -sign;
  }
  return sign;
}

std::string GroupElem::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < perm.size(); ++j) os << (j ? " " : "") << int(perm[j]) + 1;
  os << "]";
  if (signs) {
    os << "{";
    bool first = true;
    for (std::size_t j = 0; j < perm.size(); ++j)
      if ((signs >> j) & 1u) {
        os << (first ? "" : ",") << j + 1;
        first = false;
      }
    os << "}";
  }
  return os.str();
}

std::vector<GroupElem> group_elements(CherType type, int n) {
  std::vector<GroupElem> out;
  GroupElem g = GroupElem::identity(n);
  do {
    std::uint32_t top = type == CherType::B ? (1u << n) : 1u;
    for (std::uint32_t s = 0; s < top; ++s) {
      g.signs = s;
      out.push_back(g);
    }
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- TIndex

int TIndex::weight() const {
  int w = 0;
  for (const auto& [rq, k] : m) w += (rq.first + rq.second) * k;
  return w;
}

int TIndex::size() const {
  int s = 0;
  for (const auto& [rq, k] : m) s += k;
  return s;
}

std::string TIndex::str() const {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [rq, k] : m) {
    if (!s.empty()) s += ",";
    s += "(" + std::to_string(rq.first) + "," + std::to_string(rq.second) + ")^" + std::to_string(k);
  }
  return s;
}

TIndex TIndex::parse(const std::string& text) {
  TIndex t;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "1") return t;
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("bad T-index: " + text); };
  auto number = [&] {
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) fail();
    int v = std::stoi(s.substr(pos, end - pos));
    pos = end;
    return v;
  };
  auto expect = [&](char ch) {
    if (pos >= s.size() || s[pos] != ch) fail();
    ++pos;
  };
  while (pos < s.size()) {
    expect('(');
    int r = number();
    expect(',');
    int q = number();
    expect(')');
    int mult = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      mult = number();
    }
    if (r + q == 0 || mult == 0) fail();
    t.m[{r, q}] += mult;
    if (pos < s.size()) expect(',');
  }
  return t;
}

std::vector<TIndex> tindices_of_weight(int w, bool even_only) {
  // parts (r, q) listed in a fixed order; choose multiplicities recursively
  std::vector<std::pair<int, int>> parts;
  for (int L = 1; L <= w; ++L)
    if (!even_only || L % 2 == 0)
      for (int r = L; r >= 0; --r) parts.push_back({r, L - r});
  std::vector<TIndex> out;
  TIndex cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (i == parts.size()) return;
    int L = parts[i].first + parts[i].second;
    for (int k = left / L; k >= 0; --k) {
      if (k) cur.m[parts[i]] = k;
      rec(i + 1, left - k * L);
      cur.m.erase(parts[i]);
    }
  };
  rec(0, w);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- algebra

Cherednik::Cherednik(CherType type, int n, ParamPoly t, ParamPoly k, ParamPoly c)
    : type_(type), n_(n), t_(std::move(t)), k_(std::move(k)), c_(std::move(c)) {
  if (n < 1 || n > 8) throw std::invalid_argument("rank out of range");
  group_ = group_elements(type, n);
  comm_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Comm& cm = comm_[i * n + j];
      if (i == j) {
        cm.scalar = t_;
        for (int m = 0; m < n; ++m) {
          if (m == i) continue;
          GroupElem s = GroupElem::transposition(n, i, m);
          cm.group.push_back({-k_, s});
          if (type == CherType::B) cm.group.push_back({-k_, s * GroupElem::gamma(n, i) * GroupElem::gamma(n, m)});
        }
        if (type == CherType::B) cm.group.push_back({Rat(-2) * c_, GroupElem::gamma(n, i)});
      } else {
        GroupElem s = GroupElem::transposition(n, i, j);
        cm.group.push_back({k_, s});
        if (type == CherType::B) cm.group.push_back({-k_, s * GroupElem::gamma(n, i) * GroupElem::gamma(n, j)});
      }
    }
}

CherElement Cherednik::one() const { return CherElement(CherKey{Exps8(n_), Exps8(n_), GroupElem::identity(n_)}, 1); }

CherElement Cherednik::x(int i) const {
  CherKey k{Exps8(n_), Exps8(n_), GroupElem::identity(n_)};
  k.a[i] = 1;
  return CherElement(k, 1);
}

CherElement Cherednik::y(int i) const {
  CherKey k{Exps8(n_), Exps8(n_), GroupElem::identity(n_)};
  k.b[i] = 1;
  return CherElement(k, 1);
}

CherElement Cherednik::g(const GroupElem& w) const { return CherElement(CherKey{Exps8(n_), Exps8(n_), w}, 1); }

CherElement Cherednik::commutator(int i, int j) const {
  const Comm& cm = comm(i, j);
  CherElement r = one() * cm.scalar;
  for (const auto& [c, w] : cm.group) r.add(CherKey{Exps8(n_), Exps8(n_), w}, c);
  return r;
}

// y_i x^a y^b in normal order: y_i x_j X = x_j y_i X + [y_i, x_j] X.
const CherElement& Cherednik::ymul(int i, const Exps8& a, const Exps8& b) {
  auto key = std::make_tuple(i, a, b);
  auto it = ymemo_.find(key);
  if (it != ymemo_.end()) return it->second;
  CherElement r;
  int j = 0;
  while (j < n_ && a[j] == 0) ++j;
  if (j == n_) {
    CherKey k{a, b, GroupElem::identity(n_)};
    ++k.b[i];
    r.add(k, 1);
  } else {
    Exps8 a1 = a;
    --a1[j];
    for (const auto& [k, c] : ymul(i, a1, b).terms) {
      CherKey k2 = k;
      ++k2.a[j];
      r.add(k2, c);
    }
    const Comm& cm = comm(i, j);
    if (!cm.scalar.is_zero()) r.add(CherKey{a1, b, GroupElem::identity(n_)}, cm.scalar);
    for (const auto& [c, w] : cm.group) {
      CherKey k{{}, {}, w};
      int s = w.act(a1, k.a) * w.act(b, k.b);
      r.add(k, c * Rat(s));
    }
  }
  return ymemo_.emplace(std::move(key), std::move(r)).first->second;
}

CherElement Cherednik::product(const CherElement& u, const CherElement& v) {
  CherElement out;
  for (const auto& [ku, cu] : u.terms) {
    // g v
    CherElement cur;
    for (const auto& [kv, cv] : v.terms) {
      CherKey k{{}, {}, ku.g * kv.g};
      int s = ku.g.act(kv.a, k.a) * ku.g.act(kv.b, k.b);
      cur.add(k, cv * Rat(s));
    }
    // y^b
    for (int i = 0; i < n_; ++i)
      for (int p = 0; p < ku.b[i]; ++p) {
        CherElement next;
        for (const auto& [k, c] : cur.terms)
          for (const auto& [k2, c2] : ymul(i, k.a, k.b).terms) next.add(CherKey{k2.a, k2.b, k2.g * k.g}, c * c2);
        cur = std::move(next);
      }
    // x^a
    for (const auto& [k, c] : cur.terms) {
      CherKey k2 = k;
      for (int i = 0; i < n_; ++i) k2.a[i] += ku.a[i];
      out.add(k2, c * cu);
    }
  }
  return out;
}

CherElement Cherednik::symmetrizer() const {
  CherElement e;
  Rat w = rat(1, static_cast<long>(group_.size()));
  for (const auto& g : group_) e.add(CherKey{Exps8(n_), Exps8(n_), g}, w);
  return e;
}

CherElement Cherednik::omega() const {
  CherElement r;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) r.add(CherKey{Exps8(n_), Exps8(n_), GroupElem::transposition(n_, i, j)}, 1);
  return r;
}

namespace {

std::string mono_str(const Exps8& a, const Exps8& b) {
  std::string s;
  auto put = [&](char v, const Exps8& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += v + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(int(e[i]));
    }
  };
  put('x', a);
  put('y', b);
  return s;
}

}  // namespace

std::string Cherednik::str(const CherElement& u) const {
  GroupElem id = GroupElem::identity(n_);
  return u.str([&](const CherKey& k) {
    std::string s = mono_str(k.a, k.b);
    if (k.g != id) s += (s.empty() ? "" : "*") + k.g.str();
    return s;
  });
}

// ---- spherical

SphElement Cherednik::sph_one() const { return SphElement(SphKey{Exps8(n_), Exps8(n_)}, 1); }

SphElement Cherednik::to_sph(const CherElement& u) const {
  SphElement r;
  for (const auto& [k, c] : u.terms) r.add(SphKey{k.a, k.b}, c);
  return r;
}

SphElement Cherednik::sph_lmul_x(int j, const SphElement& v) const {
  SphElement r;
  for (const auto& [k, c] : v.terms) {
    SphKey k2 = k;
    ++k2.a[j];
    r.terms.emplace(std::move(k2), c);
  }
  return r;
}

const SphElement& Cherednik::sph_ymul(int i, const Exps8& a, const Exps8& b) {
  auto key = std::make_tuple(i, a, b);
  auto it = sph_ymemo_.find(key);
  if (it != sph_ymemo_.end()) return it->second;
  SphElement r;
  int j = 0;
  while (j < n_ && a[j] == 0) ++j;
  if (j == n_) {
    SphKey k{a, b};
    ++k.b[i];
    r.add(k, 1);
  } else {
    Exps8 a1 = a;
    --a1[j];
    for (const auto& [k, c] : sph_ymul(i, a1, b).terms) {
      SphKey k2 = k;
      ++k2.a[j];
      r.add(k2, c);
    }
    const Comm& cm = comm(i, j);
    if (!cm.scalar.is_zero()) r.add(SphKey{a1, b}, cm.scalar);
    for (const auto& [c, w] : cm.group) {
      SphKey k;
      int s = w.act(a1, k.a) * w.act(b, k.b);
      r.add(k, c * Rat(s));
    }
  }
  return sph_ymemo_.emplace(std::move(key), std::move(r)).first->second;
}

SphElement Cherednik::sph_lmul_y(int i, const SphElement& v) {
  SphElement r;
  for (const auto& [k, c] : v.terms) r.add(sph_ymul(i, k.a, k.b), c);
  return r;
}

SphElement Cherednik::sph_product(const SphElement& u, const SphElement& v) {
  SphElement out;
  // group terms of u by y-part so the y-action on v is shared
  std::map<Exps8, std::vector<std::pair<Exps8, ParamPoly>>> by_y;
  for (const auto& [k, c] : u.terms) by_y[k.b].push_back({k.a, c});
  for (const auto& [b, xs] : by_y) {
    SphElement cur = v;
    for (int i = 0; i < n_; ++i)
      for (int p = 0; p < b[i]; ++p) cur = sph_lmul_y(i, cur);
    for (const auto& [a, cu] : xs)
      for (const auto& [k, c] : cur.terms) {
        SphKey k2 = k;
        for (int i = 0; i < n_; ++i) k2.a[i] += a[i];
        out.add(k2, c * cu);
      }
  }
  return out;
}

bool Cherednik::is_spherical(const SphElement& u) const {
  for (const auto& g : group_)
    for (const auto& [k, c] : u.terms) {
      SphKey k2;
      int s = g.act(k.a, k2.a) * g.act(k.b, k2.b);
      if (u.coeff(k2) != c * Rat(s)) return false;
    }
  return true;
}

std::string Cherednik::str(const SphElement& u) const {
  return u.str([](const SphKey& k) { return mono_str(k.a, k.b); });
}

namespace {

// e u for u in H e: average of the group images of the monomials.
SphElement symmetrize(const SphElement& u, const std::vector<GroupElem>& group) {
  SphElement r;
  Rat w = rat(1, static_cast<long>(group.size()));
  for (const auto& g : group)
    for (const auto& [k, c] : u.terms) {
      SphKey k2;
      int s = g.act(k.a, k2.a) * g.act(k.b, k2.b);
      r.add(k2, c * (w * s));
    }
  return r;
}

SphElement poly_mul(const SphElement& u, const SphElement& v) {
  SphElement r;
  for (const auto& [ku, cu] : u.terms)
    for (const auto& [kv, cv] : v.terms) {
      SphKey k = ku;
      for (std::size_t i = 0; i < k.a.size(); ++i) {
        k.a[i] += kv.a[i];
        k.b[i] += kv.b[i];
      }
      r.add(k, cu * cv);
    }
  return r;
}

Rat factorial(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

SphElement Cherednik::T(int r, int q) {
  auto it = tmemo_.find({r, q});
  if (it != tmemo_.end()) return it->second;
  // (r! q! / (r+q)!) sum_i sum over arrangements of r x's and q y's
  std::vector<int> word(r, 0);
  word.insert(word.end(), q, 1);
  std::sort(word.begin(), word.end());
  SphElement sum;
  Rat w = factorial(r) * factorial(q) / factorial(r + q);
  do {
    for (int i = 0; i < n_; ++i) {
      SphElement cur = sph_one();
      for (auto l = word.rbegin(); l != word.rend(); ++l) cur = *l ? sph_lmul_y(i, cur) : sph_lmul_x(i, cur);
      sum.add(cur, w);
    }
  } while (std::next_permutation(word.begin(), word.end()));
  SphElement out = symmetrize(sum, group_);
  return tmemo_.emplace(std::pair{r, q}, out).first->second;
}

SphElement Cherednik::Tm(const TIndex& m) {
  if (m.empty()) return sph_one();
  auto it = tmmemo_.find(m);
  if (it != tmmemo_.end()) return it->second;
  // average over the distinct orderings of the factors
  std::vector<std::pair<int, int>> factors;
  for (const auto& [rq, k] : m.m) factors.insert(factors.end(), k, rq);
  std::sort(factors.begin(), factors.end());
  SphElement sum;
  long count = 0;
  do {
    SphElement cur = sph_one();
    for (auto f = factors.rbegin(); f != factors.rend(); ++f) cur = sph_product(T(f->first, f->second), cur);
    sum += cur;
    ++count;
  } while (std::next_permutation(factors.begin(), factors.end()));
  SphElement out = sum * ParamPoly(rat(1, count));
  return tmmemo_.emplace(m, out).first->second;
}

int Cherednik::degree(const SphElement& u) {
  int d = -1;
  for (const auto& [k, c] : u.terms) {
    int s = 0;
    for (std::size_t i = 0; i < k.a.size(); ++i) s += k.a[i] + k.b[i];
    d = std::max(d, s);
  }
  return d;
}

SphElement Cherednik::top(const SphElement& u) {
  int d = degree(u);
  SphElement r;
  for (const auto& [k, c] : u.terms) {
    int s = 0;
    for (std::size_t i = 0; i < k.a.size(); ++i) s += k.a[i] + k.b[i];
    if (s == d) r.terms.emplace(k, c);
  }
  return r;
}

SphElement Cherednik::leading_symbol(const TIndex& m) const {
  SphElement r = sph_one();
  for (const auto& [rq, k] : m.m) {
    SphElement p;
    for (int i = 0; i < n_; ++i) {
      SphKey key{Exps8(n_), Exps8(n_)};
      key.a[i] = static_cast<std::uint8_t>(rq.first);
      key.b[i] = static_cast<std::uint8_t>(rq.second);
      p.add(key, 1);
    }
    for (int j = 0; j < k; ++j) r = poly_mul(r, p);
  }
  return r;
}

std::map<TIndex, ParamPoly> Cherednik::decompose(SphElement u) {
  std::map<TIndex, ParamPoly> out;
  while (!u.is_zero()) {
    int L = degree(u);
    if (L == 0) {
      out[TIndex{}] = u.coeff(SphKey{Exps8(n_), Exps8(n_)});
      break;
    }
    if (L > n_) throw DegreeExceedsRank("degree " + std::to_string(L) + " exceeds rank " + std::to_string(n_));
    auto idx = tindices_of_weight(L, type_ == CherType::B);
    std::vector<SphElement> syms;
    std::map<SphKey, int> row;
    for (const auto& m : idx) {
      syms.push_back(leading_symbol(m));
      for (const auto& [k, c] : syms.back().terms) row.emplace(k, 0);
    }
    SphElement t = top(u);
    for (const auto& [k, c] : t.terms) row.emplace(k, 0);
    int nr = 0;
    for (auto& [k, i] : row) i = nr++;
    RatMatrix a(nr, RatVec(idx.size(), Rat(0)));
    PolyVec rhs(nr);
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (const auto& [k, c] : syms[j].terms) a[row.at(k)][j] = c.to_rat();
    for (const auto& [k, c] : t.terms) rhs[row.at(k)] = c;
    auto sol = solve_poly_rhs(a, rhs);
    if (!sol) throw std::logic_error("top part is not in the span of the leading symbols");
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (!(*sol)[j].is_zero()) {
        out[idx[j]] += (*sol)[j];
        u -= Tm(idx[j]) * (*sol)[j];
      }
    if (!u.is_zero() && degree(u) >= L) throw std::logic_error("top degree did not cancel");
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace ddca
