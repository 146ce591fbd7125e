#include "ddca/lie_quotient.hpp"

#include <functional>

#include "ddca/linalg.hpp"
#include "ddca/relations.hpp"
#include "ddca/sl2rep.hpp"

namespace ddca {

namespace {

LiePresentation from_catalog(CatalogKind kind, const LetterRealizer& real, std::vector<std::string> gens,
                             const std::map<std::string, int>& degree, const std::set<std::string>& drop) {
  LiePresentation p;
  p.generators = std::move(gens);
  for (const auto& m : relation_catalog(kind)) {
    if (drop.count(m.name)) continue;
    for (const auto& v : m.orbit()) p.relations.push_back({m.name, degree.at(m.name), realize_lie(v, real)});
  }
  return p;
}

}  // namespace

LiePresentation n_presentation_typeA(const std::set<std::string>& drop) {
  return from_catalog(CatalogKind::po_A, typeA_free_realizer(), {"c1", "c2", "c3", "c4"},
                      {{"phi1", 2}, {"psi4", 3}, {"psi1", 3}, {"chi1", 4}}, drop);
}

LiePresentation n_presentation_typeB(const std::set<std::string>& drop) {
  return from_catalog(CatalogKind::po_B, typeB_realizer(), {"d1", "d2", "d3", "d4", "d5"},
                      {{"phi'1", 2}, {"psi'5", 3}, {"psi'2", 3}}, drop);
}

// Evaluates relations of degree d: brackets landing in degree d become symbols.
struct PartialModel {
  using Key = GradedLieQuotient::Key;
  using Elem = std::map<Key, Rat>;
  const GradedLieQuotient& q;
  int d;
  std::function<std::pair<int, int>(int, int, int, int)> symbol;  // (index, sign)

  Elem bracket(const Elem& u, const Elem& v) const {
    Elem r;
    for (const auto& [ku, cu] : u)
      for (const auto& [kv, cv] : v) {
        int s = ku.d + kv.d;
        if (s > d) throw std::logic_error("relation is not homogeneous");
        if (s < d) {
          for (const auto& [i, c] : q.table(ku.d, ku.i, kv.d, kv.i)) r[Key{s, i}] += cu * cv * c;
        } else {
          auto [idx, sign] = symbol(ku.d, ku.i, kv.d, kv.i);
          if (sign) r[Key{d, idx}] += cu * cv * sign;
        }
      }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
  }
  Elem product(const Elem&, const Elem&) const { throw std::logic_error("no product in a Lie algebra"); }
  Elem one() const { throw std::logic_error("no unit in a Lie algebra"); }
  Elem add(Elem a, const Elem& b) const {
    for (const auto& [k, c] : b) a[k] += c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
  }
  Elem scale(Elem a, const ParamPoly& c) const {
    Rat x = c.to_rat();
    if (x == 0) return {};
    for (auto& [k, v] : a) v *= x;
    return a;
  }
  bool is_zero(const Elem& a) const { return a.empty(); }
};

GradedLieQuotient::GradedLieQuotient(const LiePresentation& pres, int max_degree)
    : pres_(pres), max_degree_(max_degree), basis_size_(max_degree + 1, 0) {
  if (max_degree >= 1) basis_size_[1] = pres.generators.size();
  for (int d = 2; d <= max_degree; ++d) build(d);
}

std::vector<int> GradedLieQuotient::dims() const {
  std::vector<int> out;
  for (int d = 1; d <= max_degree_; ++d) out.push_back(dim(d));
  return out;
}

const GradedLieQuotient::Vec& GradedLieQuotient::table(int i, int a, int j, int b) const {
  static const Vec zero;
  auto it = table_.find({i, a, j, b});
  return it == table_.end() ? zero : it->second;
}

void GradedLieQuotient::build(int d) {
  // canonical symbols [(i,a),(j,b)] with (i,a) < (j,b)
  std::map<std::tuple<int, int, int, int>, int> sym;
  std::vector<std::tuple<int, int, int, int>> syms;
  for (int i = 1; 2 * i <= d; ++i) {
    int j = d - i;
    for (int a = 0; a < dim(i); ++a)
      for (int b = (i == j ? a + 1 : 0); b < dim(j); ++b) {
        sym[{i, a, j, b}] = static_cast<int>(syms.size());
        syms.push_back({i, a, j, b});
      }
  }
  auto symbol = [&](int i, int a, int j, int b) -> std::pair<int, int> {
    if (i == j && a == b) return {0, 0};
    if (i > j || (i == j && a > b)) return {sym.at({j, b, i, a}), -1};
    return {sym.at({i, a, j, b}), 1};
  };
  EchelonBasis<int> rows;
  // [x, v] for basis x in degree i and v in degree d - i, as a symbol row
  auto outer = [&](int i, int a, int j, const Vec& v, const Rat& c, Vec& row) {
    for (const auto& [b, cv] : v) {
      auto [idx, sign] = symbol(i, a, j, b);
      if (sign) row[idx] += c * cv * sign;
    }
  };
  for (int i = 1; i <= d; ++i)
    for (int j = i; i + j < d; ++j) {
      int k = d - i - j;
      if (k < j) continue;
      for (int a = 0; a < dim(i); ++a)
        for (int b = (i == j ? a + 1 : 0); b < dim(j); ++b)
          for (int c = (j == k ? b + 1 : 0); c < dim(k); ++c) {
            Vec row;
            outer(i, a, j + k, table(j, b, k, c), 1, row);
            outer(j, b, k + i, table(k, c, i, a), 1, row);
            outer(k, c, i + j, table(i, a, j, b), 1, row);
            std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
            if (!row.empty()) rows.insert(std::move(row));
          }
    }
  PartialModel model{*this, d, symbol};
  std::map<std::string, PartialModel::Elem> asg;
  for (std::size_t g = 0; g < pres_.generators.size(); ++g)
    asg[pres_.generators[g]] = {{Key{1, static_cast<int>(g)}, Rat(1)}};
  Evaluator<PartialModel> ev(model, asg);
  for (const auto& r : pres_.relations) {
    if (r.degree != d) continue;
    Vec row;
    for (const auto& [k, c] : ev(r.expr)) {
      if (k.d != d) throw std::logic_error("relation of wrong degree");
      row[k.i] += c;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    if (!row.empty()) rows.insert(std::move(row));
  }
  // quotient basis: free symbols; each symbol reduced onto them
  std::vector<Vec> image(syms.size());
  std::map<int, int> free_index;
  for (std::size_t s = 0; s < syms.size(); ++s) {
    Vec v{{static_cast<int>(s), Rat(1)}};
    rows.reduce(v);
    image[s] = std::move(v);
    for (const auto& [k, c] : image[s])
      if (!free_index.count(k)) free_index.emplace(k, 0);
  }
  int n = 0;
  for (auto& [k, idx] : free_index) idx = n++;
  basis_size_[d] = n;
  for (std::size_t s = 0; s < syms.size(); ++s) {
    Vec v;
    for (const auto& [k, c] : image[s]) v[free_index.at(k)] = c;
    auto [i, a, j, b] = syms[s];
    Vec neg = v;
    for (auto& [k, c] : neg) c = -c;
    if (!v.empty()) {
      table_[{i, a, j, b}] = std::move(v);
      table_[{j, b, i, a}] = std::move(neg);
    }
  }
}

std::vector<int> presentation_dims(const LiePresentation& pres, int max_degree) {
  return GradedLieQuotient(pres, max_degree).dims();
}

std::vector<std::vector<int>> lyndon_words(int k, int d) {
  // Duval's generation of Lyndon words of length exactly d
  std::vector<std::vector<int>> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    int m = static_cast<int>(w.size());
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  return out;
}

long witt_dimension(int k, int d) {
  auto mobius = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
      }
    return n > 1 ? -r : r;
  };
  long total = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) {
      long pw = 1;
      for (int i = 0; i < d / e; ++i) pw *= k;
      total += mobius(e) * pw;
    }
  return total / d;
}

namespace {

using TVec = std::map<long, Rat>;

long pow_k(int k, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= k;
  return r;
}

// [a, b] in the tensor algebra, a of length la, b of length lb
TVec tensor_bracket(const TVec& a, int la, const TVec& b, int lb, int k) {
  TVec r;
  long sa = pow_k(k, la), sb = pow_k(k, lb);
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      r[u * sb + v] += x * y;
      r[v * sa + u] -= x * y;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

bool lyndon_less(const std::vector<int>& a, const std::vector<int>& b) { return a < b; }

bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<int> rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (!lyndon_less(w, rot)) return false;
  }
  return true;
}

}  // namespace

std::map<long, Rat> lyndon_bracket_tensor(const std::vector<int>& w, int k) {
  if (w.size() == 1) return {{w[0], Rat(1)}};
  // standard factorization: v is the longest proper Lyndon suffix
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<int> v(w.begin() + i, w.end());
    if (is_lyndon(v)) {
      std::vector<int> u(w.begin(), w.begin() + i);
      return tensor_bracket(lyndon_bracket_tensor(u, k), static_cast<int>(u.size()),
                            lyndon_bracket_tensor(v, k), static_cast<int>(v.size()), k);
    }
  }
  throw std::logic_error("no standard factorization");
}

int free_lie_rank(int k, int d) {
  EchelonBasis<long> b;
  for (const auto& w : lyndon_words(k, d)) b.insert(lyndon_bracket_tensor(w, k));
  return static_cast<int>(b.rank());
}

namespace {

std::vector<EchelonBasis<long>> ideal_components(const LiePresentation& pres, int max_degree) {
  int k = static_cast<int>(pres.generators.size());
  std::map<std::string, int> letter;
  for (int i = 0; i < k; ++i) letter[pres.generators[i]] = i;
  std::vector<EchelonBasis<long>> comps(max_degree + 1);
  std::vector<std::vector<TVec>> basis(max_degree + 1);
  for (int d = 1; d <= max_degree; ++d) {
    auto push = [&](TVec v) {
      if (comps[d].insert(v)) basis[d].push_back(std::move(v));
    };
    for (const auto& y : basis[d - 1])
      for (int x = 0; x < k; ++x) push(tensor_bracket({{x, Rat(1)}}, 1, y, d - 1, k));
    for (const auto& r : pres.relations) {
      if (r.degree != d) continue;
      TVec v;
      for (const auto& [w, c] : to_ncpoly(r.expr).terms) {
        long code = 0;
        for (const auto& s : w) code = code * k + letter.at(s);
        v[code] += c.to_rat();
      }
      std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
      if (!v.empty()) push(std::move(v));
    }
  }
  return comps;
}

}  // namespace

std::vector<int> lie_ideal_dims(const LiePresentation& pres, int max_degree) {
  auto comps = ideal_components(pres, max_degree);
  std::vector<int> out;
  for (int d = 1; d <= max_degree; ++d) out.push_back(static_cast<int>(comps[d].rank()));
  return out;
}

std::vector<int> presentation_dims_tensor(const LiePresentation& pres, int max_degree) {
  int k = static_cast<int>(pres.generators.size());
  auto ideal = lie_ideal_dims(pres, max_degree);
  std::vector<int> out;
  for (int d = 1; d <= max_degree; ++d) out.push_back(static_cast<int>(witt_dimension(k, d)) - ideal[d - 1]);
  return out;
}

}  // namespace ddca
