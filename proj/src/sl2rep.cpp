#include "ddca/sl2rep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ddca/linalg.hpp"

namespace ddca {

namespace {

bool numeric_top(const Letter& x) {
  return x.m.is_constant() && x.m.to_rat() == Rat(x.index - 1);
}

int numeric_m(const Letter& x) {
  if (!x.m.is_constant()) throw std::invalid_argument("symbolic module in a finite word space");
  return static_cast<int>(x.m.to_rat().get_num().get_si());
}

// Sorts w, returning the permutation sign; 0 if a letter repeats.
int sort_with_sign(Sl2Word& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      std::swap(w[j], w[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return 0;
  return sign;
}

}  // namespace

std::optional<std::pair<ParamPoly, Letter>> Letter::f_image() const {
  if (numeric_top(*this)) return std::nullopt;
  Letter y = *this;
  ++y.index;
  return std::make_pair(ParamPoly(1L), y);
}

std::optional<std::pair<ParamPoly, Letter>> Letter::e_image() const {
  if (index == 1) return std::nullopt;
  Letter y = *this;
  --y.index;
  // e f^{i-1} v = (i-1)(m-i+2) f^{i-2} v
  ParamPoly c = (m - ParamPoly(static_cast<long>(index - 2))) * Rat(index - 1);
  if (c.is_zero()) return std::nullopt;
  return std::make_pair(c, y);
}

bool operator<(const Letter& a, const Letter& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.family != b.family) return a.family < b.family;
  if (a.index != b.index) return a.index < b.index;
  return a.m < b.m;
}

bool operator==(const Letter& a, const Letter& b) {
  return a.degree == b.degree && a.family == b.family && a.index == b.index && a.m == b.m;
}

Letter letter(const std::string& family, const ParamPoly& m, int degree, int index) {
  if (index < 1) throw std::invalid_argument("letter index starts at 1");
  return Letter{family, m, degree, index};
}

Sl2Vector Sl2Vector::word(WordKind kind, Sl2Word w, const ParamPoly& c) {
  Sl2Vector v(kind);
  v.add(std::move(w), c);
  return v;
}

void Sl2Vector::add(Sl2Word w, const ParamPoly& c) {
  if (c.is_zero()) return;
  ParamPoly coef = c;
  if (kind_ == WordKind::wedge) {
    int s = sort_with_sign(w);
    if (s == 0) return;
    if (s < 0) coef = -coef;
  } else if (kind_ == WordKind::symmetric) {
    std::sort(w.begin(), w.end());
  }
  auto [it, fresh] = terms_.try_emplace(std::move(w), coef);
  if (!fresh) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Sl2Vector& Sl2Vector::operator+=(const Sl2Vector& o) {
  if (o.kind_ != kind_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("word kind mismatch");
  if (is_zero()) kind_ = o.kind_;
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Sl2Vector& Sl2Vector::operator-=(const Sl2Vector& o) { return *this += o * ParamPoly(-1L); }

Sl2Vector Sl2Vector::operator*(const ParamPoly& c) const {
  Sl2Vector r(kind_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

ParamPoly Sl2Vector::weight() const {
  std::optional<ParamPoly> wt;
  for (const auto& [w, c] : terms_) {
    ParamPoly s;
    for (const auto& x : w) s += x.weight();
    if (wt && *wt != s) throw std::invalid_argument("vector is not weight-homogeneous");
    wt = s;
  }
  return wt.value_or(ParamPoly());
}

std::string Sl2Vector::str() const {
  if (terms_.empty()) return "0";
  const char* sep = kind_ == WordKind::wedge ? "^" : kind_ == WordKind::tensor ? "@" : "*";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? sep : " ") << w[i].name();
  }
  return os.str();
}

Sl2Vector act(Sl2Gen g, const Sl2Vector& v) {
  Sl2Vector out(v.kind());
  for (const auto& [w, c] : v.terms()) {
    if (g == Sl2Gen::h) {
      ParamPoly wt;
      for (const auto& x : w) wt += x.weight();
      out.add(w, c * wt);
      continue;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto img = g == Sl2Gen::f ? w[i].f_image() : w[i].e_image();
      if (!img) continue;
      Sl2Word nw = w;
      nw[i] = img->second;
      out.add(std::move(nw), c * img->first);
    }
  }
  return out;
}

Sl2Vector act_power(Sl2Gen g, const Sl2Vector& v, int times) {
  Sl2Vector r = v;
  for (int i = 0; i < times; ++i) r = act(g, r);
  return r;
}

std::vector<Sl2Word> weight_basis(const WordSpace& space, int weight) {
  std::vector<Sl2Word> out;
  const auto& fs = space.factors;
  bool same = std::all_of(fs.begin(), fs.end(), [&](const Letter& x) {
    return x.family == fs[0].family && x.m == fs[0].m && x.degree == fs[0].degree;
  });
  if (space.kind != WordKind::tensor && !same)
    throw std::invalid_argument("wedge and symmetric spaces need a single repeated factor");
  Sl2Word cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int wt) {
    if (pos == fs.size()) {
      if (wt == weight) out.push_back(cur);
      return;
    }
    int m = numeric_m(fs[pos]);
    int lo = 1;
    if (space.kind != WordKind::tensor && pos > 0)
      lo = cur.back().index + (space.kind == WordKind::wedge ? 1 : 0);
    for (int i = lo; i <= m + 1; ++i) {
      cur.push_back(letter(fs[pos].family, fs[pos].m, fs[pos].degree, i));
      rec(pos + 1, wt + m - 2 * (i - 1));
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Sl2Vector> highest_weight_vectors(const WordSpace& space, int weight) {
  auto src = weight_basis(space, weight);
  auto dst = weight_basis(space, weight + 2);
  std::map<Sl2Word, int> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = static_cast<int>(i);
  RatMatrix m(dst.size(), RatVec(src.size(), Rat(0)));
  for (std::size_t j = 0; j < src.size(); ++j) {
    Sl2Vector img = act(Sl2Gen::e, Sl2Vector::word(space.kind, src[j]));
    for (const auto& [w, c] : img.terms()) m[row_of.at(w)][j] = c.to_rat();
  }
  std::vector<Sl2Vector> out;
  RatMatrix ker = dst.empty() ? RatMatrix{} : nullspace(m, static_cast<int>(src.size()));
  if (dst.empty())
    for (std::size_t j = 0; j < src.size(); ++j) {
      RatVec u(src.size(), Rat(0));
      u[j] = 1;
      ker.push_back(u);
    }
  for (const auto& k : ker) {
    Sl2Vector v(space.kind);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (k[j] != 0) v.add(src[j], ParamPoly(k[j]));
    out.push_back(v);
  }
  return out;
}

std::map<int, int> decomposition(const WordSpace& space) {
  int top = 0;
  for (const auto& x : space.factors) top += numeric_m(x);
  std::map<int, int> out;
  for (int w = top; w >= 0; --w) {
    int n = static_cast<int>(highest_weight_vectors(space, w).size());
    if (n) out[w] = n;
  }
  return out;
}

std::vector<Sl2Vector> f_orbit(const Sl2Vector& v) {
  if (v.is_zero()) throw std::invalid_argument("f_orbit of the zero vector");
  if (!act(Sl2Gen::e, v).is_zero()) throw NotHighestWeight("e does not annihilate " + v.str());
  ParamPoly wt = v.weight();
  if (!wt.is_constant() || wt.to_rat() < 0 || wt.to_rat().get_den() != 1)
    throw NotHighestWeight("weight is not a nonnegative integer");
  long m = wt.to_rat().get_num().get_si();
  std::vector<Sl2Vector> out{v};
  for (long i = 0; i < m; ++i) {
    out.push_back(act(Sl2Gen::f, out.back()));
    if (out.back().is_zero()) throw std::logic_error("orbit vanished early");
  }
  if (!act(Sl2Gen::f, out.back()).is_zero()) throw std::logic_error("f^(m+1) does not vanish");
  return out;
}

namespace letters {
Letter c(int i) { return letter("c", 3, 1, i); }
Letter d(int i) { return letter("d", 4, 2, i); }
Letter a(int i) { return letter("a", 1, -1, i); }
Letter b(int i) { return letter("b", 2, 0, i); }
Letter K() { return letter("K", 0, -2, 1); }
Letter dB(int i) { return letter("d", 4, 2, i); }
Letter g(int i) { return letter("g", 6, 4, i); }
Letter v(int i) { return letter("v", ParamPoly::var(Sym::l), 0, i); }
}  // namespace letters

namespace {

using namespace letters;

Sl2Vector combo(WordKind kind, std::vector<std::pair<ParamPoly, Sl2Word>> ts) {
  Sl2Vector v(kind);
  for (auto& [c, w] : ts) v.add(std::move(w), c);
  return v;
}

RelationModule module(std::string name, std::string ambient, Sl2Vector hw, Sl2Vector rhs) {
  RelationModule r;
  r.name = std::move(name);
  r.ambient = std::move(ambient);
  r.m = static_cast<int>(hw.weight().to_rat().get_num().get_si());
  r.hw = std::move(hw);
  r.rhs = std::move(rhs);
  return r;
}

ParamPoly s(Sym x) { return ParamPoly::var(x); }

}  // namespace

std::vector<RelationModule> relation_catalog(CatalogKind kind) {
  const auto T = WordKind::tensor;
  const auto W = WordKind::wedge;
  const Sl2Vector zero(T);
  std::vector<RelationModule> out;
  bool deformed = kind == CatalogKind::A_s1s2 || kind == CatalogKind::A_s1s2s3;
  if (kind == CatalogKind::po_A || kind == CatalogKind::A_s1s2) {
    out.push_back(module("phi1", "Lambda^2 n1", combo(W, {{1, {c(1), c(4)}}, {-1, {c(2), c(3)}}}),
                         deformed ? combo(T, {{s(Sym::s1) * rat(-1, 2), {K()}}}) : zero));
    out.push_back(module("psi4", "phi2 (x) n1", combo(T, {{1, {d(1), c(1)}}}), zero));
    out.push_back(module("psi1", "phi2 (x) n1",
                         combo(T, {{-4, {d(1), c(4)}}, {3, {d(2), c(3)}}, {-2, {d(3), c(2)}}, {1, {d(4), c(1)}}}),
                         deformed ? combo(T, {{s(Sym::s1) * Rat(15), {a(1)}}}) : zero));
    out.push_back(module("chi1", "Lambda^2 phi2", combo(W, {{3, {d(3), d(2)}}, {-2, {d(4), d(1)}}}),
                         deformed ? combo(T, {{s(Sym::s1) * Rat(90), {b(1)}},
                                              {s(Sym::s2) * Rat(42), {K(), b(1)}},
                                              {s(Sym::s2) * Rat(21), {a(1), a(1)}}})
                                  : zero));
  } else if (kind == CatalogKind::po_B || kind == CatalogKind::A_s1s2s3) {
    Letter (*d)(int) = dB;
    out.push_back(module("phi'1", "Lambda^2 n2", combo(W, {{3, {d(2), d(3)}}, {-2, {d(1), d(4)}}}),
                         deformed ? combo(T, {{s(Sym::s1) * Rat(6), {b(1)}}}) : zero));
    out.push_back(module("psi'5", "phi'2 (x) n2", combo(T, {{1, {g(1), d(1)}}}), zero));
    out.push_back(module("psi'2", "phi'2 (x) n2",
                         combo(T, {{1, {g(4), d(1)}}, {-3, {g(3), d(2)}}, {5, {g(2), d(3)}}, {-5, {g(1), d(4)}}}),
                         deformed ? combo(T, {{s(Sym::s3) * Rat(24), {b(1), b(1)}},
                                              {s(Sym::s2) * Rat(288), {d(1)}}})
                                  : zero));
  } else {
    throw std::invalid_argument("unknown catalog kind");
  }
  return out;
}

CatalogKind catalog_kind_from_name(const std::string& name) {
  if (name == "po-A" || name == "po") return CatalogKind::po_A;
  if (name == "A-s1s2" || name == "a-s1s2") return CatalogKind::A_s1s2;
  if (name == "po-B" || name == "po-plus") return CatalogKind::po_B;
  if (name == "A-s1s2s3" || name == "a-typeB") return CatalogKind::A_s1s2s3;
  throw std::invalid_argument("unknown catalog kind: " + name);
}

}  // namespace ddca
