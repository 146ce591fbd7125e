#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddca/rat.hpp"

namespace ddca {

// Global parameter order; earlier symbols dominate the lex term order.
enum class Sym : std::uint8_t { n, t, k, c, lam, K, l, s1, s2, s3, nu };
inline constexpr int kNumSyms = 11;

const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(const std::string& name);

using Exps = std::array<std::uint8_t, kNumSyms>;

class ParamPoly {
 public:
  struct Term {
    Exps e{};
    Rat c;
  };

  ParamPoly() = default;
  ParamPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c);        // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(static_cast<long>(c)) {}  // NOLINT

  static ParamPoly var(Sym s, int power = 1);
  static ParamPoly monomial(const Exps& e, const Rat& c);
  // Terms need not be sorted or merged.
  static ParamPoly from_terms(std::vector<Term> terms);
  static ParamPoly parse(const std::string& text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent).
  Rat constant_term() const;
  // Requires is_constant().
  Rat to_rat() const;

  int degree(Sym s) const;
  int total_degree() const;
  bool uses(Sym s) const { return degree(s) > 0; }
  const Term& leading() const { return terms_.front(); }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rat& r);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rat& r) { return a *= r; }
  friend ParamPoly operator*(const Rat& r, ParamPoly a) { return a *= r; }
  ParamPoly pow(int e) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
  // Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const ParamPoly& a, const ParamPoly& b);

  // Throws std::invalid_argument naming the first unassigned variable.
  Rat eval(const std::map<Sym, Rat>& assignment) const;
  ParamPoly partial_eval(const std::map<Sym, Rat>& assignment) const;
  ParamPoly subs(const std::map<Sym, ParamPoly>& assignment) const;
  ParamPoly subs(Sym s, const ParamPoly& value) const { return subs({{s, value}}); }

  // coeffs(v)[d] is the coefficient of v^d.
  std::vector<ParamPoly> coeffs(Sym v) const;
  static ParamPoly from_coeffs(Sym v, const std::vector<ParamPoly>& cs);

  // Exact quotient; throws if b does not divide *this.
  ParamPoly divexact(const ParamPoly& b) const;

  std::string str() const;
  std::size_t hash() const;

 private:
  void normalize();
  std::vector<Term> terms_;  // strictly decreasing exponent vectors, nonzero coefficients
};

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);
// gcd of the coefficients with respect to v, as a polynomial in the other variables.
ParamPoly content(const ParamPoly& p, Sym v);
// Makes the leading coefficient 1.
ParamPoly monic(const ParamPoly& p);

// Unique polynomial in `var` of degree <= degree_bound through the samples;
// extra samples must lie on it.
ParamPoly fit_polynomial(const std::vector<std::pair<Rat, Rat>>& samples, int degree_bound,
                         Sym var = Sym::n);

struct InconsistentSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ddca

template <>
struct std::hash<ddca::ParamPoly> {
  std::size_t operator()(const ddca::ParamPoly& p) const { return p.hash(); }
};
