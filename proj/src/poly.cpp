#include "ddca/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ddca {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0 || s.empty()) throw std::invalid_argument("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {
constexpr const char* kSymNames[kNumSyms] = {"n", "t", "k", "c", "lam", "K", "l", "s1", "s2", "s3", "nu"};

bool exps_greater(const ParamPoly::Term& a, const ParamPoly::Term& b) { return a.e > b.e; }
}  // namespace

const char* sym_name(Sym s) { return kSymNames[static_cast<int>(s)]; }

std::optional<Sym> sym_from_name(const std::string& name) {
  for (int i = 0; i < kNumSyms; ++i)
    if (name == kSymNames[i]) return static_cast<Sym>(i);
  if (name == "lambda" || name == "λ") return Sym::lam;
  if (name == "ν") return Sym::nu;
  return std::nullopt;
}

ParamPoly::ParamPoly(const Rat& c) {
  if (c != 0) terms_.push_back({Exps{}, c});
}

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.push_back({Exps{}, Rat(c)});
}

ParamPoly ParamPoly::var(Sym s, int power) {
  Exps e{};
  e[static_cast<int>(s)] = static_cast<std::uint8_t>(power);
  return monomial(e, Rat(1));
}

ParamPoly ParamPoly::monomial(const Exps& e, const Rat& c) {
  ParamPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  ParamPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), exps_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Rat c = terms_[i].c;
    while (j < terms_.size() && terms_[j].e == terms_[i].e) c += terms_[j++].c;
    if (c != 0) {
      terms_[out].e = terms_[i].e;
      terms_[out].c = c;
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exps{});
}

Rat ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().e == Exps{}) return terms_.back().c;
  return Rat(0);
}

Rat ParamPoly::to_rat() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + str());
  return constant_term();
}

int ParamPoly::degree(Sym s) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.e[static_cast<int>(s)]));
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto x : t.e) s += x;
    d = std::max(d, s);
  }
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {
std::vector<ParamPoly::Term> merge(const std::vector<ParamPoly::Term>& a,
                                   const std::vector<ParamPoly::Term>& b, bool subtract) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].e > b[j].e)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].e > a[i].e) {
      out.push_back(b[j]);
      if (subtract) out.back().c = -out.back().c;
      ++j;
    } else {
      Rat c = subtract ? Rat(a[i].c - b[j].c) : Rat(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].e, c});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.is_constant()) return a * b.terms_[0].c;
  if (a.is_constant()) return b * a.terms_[0].c;
  std::vector<ParamPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      ParamPoly::Term u;
      for (int i = 0; i < kNumSyms; ++i) u.e[i] = static_cast<std::uint8_t>(s.e[i] + t.e[i]);
      u.c = s.c * t.c;
      out.push_back(std::move(u));
    }
  return ParamPoly::from_terms(std::move(out));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rat& r) {
  if (r == 0) {
    terms_.clear();
  } else if (r != 1) {
    for (auto& t : terms_) t.c *= r;
  }
  return *this;
}

ParamPoly ParamPoly::pow(int e) const {
  ParamPoly r(1L), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

bool operator<(const ParamPoly& a, const ParamPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].e != b.terms_[i].e) return a.terms_[i].e < b.terms_[i].e;
    if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c;
  }
  return a.terms_.size() < b.terms_.size();
}

Rat ParamPoly::eval(const std::map<Sym, Rat>& assignment) const {
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat v = t.c;
    for (int i = 0; i < kNumSyms; ++i) {
      if (!t.e[i]) continue;
      auto it = assignment.find(static_cast<Sym>(i));
      if (it == assignment.end())
        throw std::invalid_argument(std::string("missing value for variable ") + kSymNames[i]);
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), t.e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), t.e[i]);
      v *= p;
    }
    total += v;
  }
  return total;
}

ParamPoly ParamPoly::partial_eval(const std::map<Sym, Rat>& assignment) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    for (const auto& [s, v] : assignment) {
      int i = static_cast<int>(s);
      if (!u.e[i]) continue;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), v.get_num_mpz_t(), u.e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), v.get_den_mpz_t(), u.e[i]);
      u.c *= p;
      u.e[i] = 0;
    }
    if (u.c != 0) out.push_back(std::move(u));
  }
  return from_terms(std::move(out));
}

ParamPoly ParamPoly::subs(const std::map<Sym, ParamPoly>& assignment) const {
  ParamPoly result;
  std::map<std::pair<int, int>, ParamPoly> powers;
  for (const auto& t : terms_) {
    Term rest = t;
    ParamPoly factor(1L);
    for (const auto& [s, v] : assignment) {
      int i = static_cast<int>(s);
      if (!rest.e[i]) continue;
      auto key = std::make_pair(i, static_cast<int>(rest.e[i]));
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, v.pow(rest.e[i])).first;
      factor *= it->second;
      rest.e[i] = 0;
    }
    result += factor * monomial(rest.e, rest.c);
  }
  return result;
}

std::vector<ParamPoly> ParamPoly::coeffs(Sym v) const {
  int vi = static_cast<int>(v);
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    u.e[vi] = 0;
    buckets[t.e[vi]].push_back(std::move(u));
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

ParamPoly ParamPoly::from_coeffs(Sym v, const std::vector<ParamPoly>& cs) {
  std::vector<Term> out;
  int vi = static_cast<int>(v);
  for (std::size_t d = 0; d < cs.size(); ++d)
    for (auto t : cs[d].terms_) {
      t.e[vi] = static_cast<std::uint8_t>(t.e[vi] + d);
      out.push_back(std::move(t));
    }
  return from_terms(std::move(out));
}

ParamPoly ParamPoly::divexact(const ParamPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) return *this * Rat(1 / b.terms_[0].c);
  ParamPoly rem = *this, quot;
  const Term& lb = b.terms_.front();
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_.front();
    Term q;
    for (int i = 0; i < kNumSyms; ++i) {
      if (lr.e[i] < lb.e[i]) throw std::domain_error("inexact polynomial division");
      q.e[i] = static_cast<std::uint8_t>(lr.e[i] - lb.e[i]);
    }
    q.c = lr.c / lb.c;
    ParamPoly qt = monomial(q.e, q.c);
    quot += qt;
    rem -= qt * b;
  }
  return quot;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (auto x : t.e) has_var |= x != 0;
    bool wrote = false;
    if (c != 1 || !has_var) {
      os << to_string(c);
      wrote = true;
    }
    for (int i = 0; i < kNumSyms; ++i) {
      if (!t.e[i]) continue;
      if (wrote) os << "*";
      os << kSymNames[i];
      if (t.e[i] > 1) os << "^" << static_cast<int>(t.e[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::size_t ParamPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (auto x : t.e) h = h * 131 + x;
    h = h * 1000003 + mpz_get_ui(t.c.get_num_mpz_t()) + 7 * mpz_get_ui(t.c.get_den_mpz_t());
    if (t.c < 0) h ^= 0x9e3779b97f4a7c15ULL;
  }
  return h;
}

// Recursive-descent parser: sums, products, '/' by constants, '^' integer powers.
namespace {
struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + s + "': " + why);
  }
  ParamPoly expr() {
    skip();
    ParamPoly r;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    r = term();
    if (neg) r = -r;
    for (;;) {
      skip();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) return r;
      char op = s[i++];
      ParamPoly t = term();
      if (op == '+') r += t; else r -= t;
    }
  }
  ParamPoly term() {
    ParamPoly r = factor();
    for (;;) {
      skip();
      if (i >= s.size() || (s[i] != '*' && s[i] != '/')) return r;
      char op = s[i++];
      ParamPoly f = factor();
      if (op == '*') {
        r *= f;
      } else {
        if (!f.is_constant() || f.is_zero()) fail("division by a non-constant");
        r *= Rat(1 / f.to_rat());
      }
    }
  }
  ParamPoly factor() {
    ParamPoly b = base();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip();
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (st == i) fail("expected exponent");
      b = b.pow(std::stoi(s.substr(st, i - st)));
    }
    return b;
  }
  ParamPoly base() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (s[i] == '(') {
      ++i;
      ParamPoly r = expr();
      skip();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return r;
    }
    if (s[i] == '-') {
      ++i;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return ParamPoly(Rat(mpz_class(s.substr(st, i - st))));
    }
    std::size_t st = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                            static_cast<unsigned char>(s[i]) >= 0x80))
      ++i;
    if (st == i) fail(std::string("unexpected character '") + s[i] + "'");
    auto sym = sym_from_name(s.substr(st, i - st));
    if (!sym) fail("unknown symbol '" + s.substr(st, i - st) + "'");
    return ParamPoly::var(*sym);
  }
};
}  // namespace

ParamPoly ParamPoly::parse(const std::string& text) {
  Parser p{text};
  ParamPoly r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

// ---- gcd ----

ParamPoly monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p * Rat(1 / p.leading().c);
}

namespace {
std::optional<Sym> main_var(const ParamPoly& a, const ParamPoly& b) {
  for (int i = 0; i < kNumSyms; ++i) {
    Sym s = static_cast<Sym>(i);
    if (a.uses(s) || b.uses(s)) return s;
  }
  return std::nullopt;
}

ParamPoly prem(ParamPoly a, const ParamPoly& b, Sym v) {
  int db = b.degree(v);
  ParamPoly lb = b.coeffs(v).back();
  while (!a.is_zero() && a.degree(v) >= db) {
    int da = a.degree(v);
    ParamPoly la = a.coeffs(v).back();
    a = lb * a - la * ParamPoly::var(v, da - db) * b;
  }
  return a;
}
}  // namespace

ParamPoly content(const ParamPoly& p, Sym v) {
  ParamPoly g;
  for (const auto& c : p.coeffs(v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) return ParamPoly(1L);
  }
  return g;
}

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly(1L);
  Sym v = *main_var(a, b);
  ParamPoly ca = content(a, v), cb = content(b, v);
  ParamPoly gc = poly_gcd(ca, cb);
  if (!a.uses(v) || !b.uses(v)) return gc;
  ParamPoly pa = a.divexact(ca), pb = b.divexact(cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ParamPoly r = prem(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : r.divexact(content(r, v));
  }
  pa = pa.divexact(content(pa, v));
  return monic(gc * pa);
}

ParamPoly fit_polynomial(const std::vector<std::pair<Rat, Rat>>& samples, int degree_bound, Sym var) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < need) throw std::invalid_argument("not enough samples for the degree bound");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first) throw std::invalid_argument("repeated abscissa");
  // Newton divided differences on the first degree_bound+1 points.
  std::vector<Rat> xs(need), dd(need);
  for (std::size_t i = 0; i < need; ++i) {
    xs[i] = samples[i].first;
    dd[i] = samples[i].second;
  }
  for (std::size_t lvl = 1; lvl < need; ++lvl)
    for (std::size_t i = need - 1; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
  ParamPoly x = ParamPoly::var(var), result(dd[need - 1]);
  for (std::size_t i = need - 1; i-- > 0;) result = result * (x - ParamPoly(xs[i])) + ParamPoly(dd[i]);
  for (std::size_t i = need; i < samples.size(); ++i) {
    if (result.eval({{var, samples[i].first}}) != samples[i].second)
      throw InconsistentSamples("sample (" + to_string(samples[i].first) + ", " +
                                to_string(samples[i].second) + ") is off the fitted polynomial " +
                                result.str());
  }
  return result;
}

}  // namespace ddca
