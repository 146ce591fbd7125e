#pragma once

#include "ddca/poly.hpp"

namespace ddca {

// num/den with gcd(num, den) = 1 and den monic; equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(const ParamPoly& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& r) : num_(r), den_(1L) {}        // NOLINT(google-explicit-constructor)
  RatFunc(long r) : num_(r), den_(1L) {}              // NOLINT(google-explicit-constructor)
  RatFunc(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(int e) const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Substitutes rational functions for symbols.
  RatFunc subs(const std::map<Sym, RatFunc>& assignment) const;
  Rat eval(const std::map<Sym, Rat>& assignment) const;

  std::string str() const;

 private:
  ParamPoly num_, den_;
};

RatFunc ratfunc_normalize(const ParamPoly& num, const ParamPoly& den);
RatFunc subs_poly(const ParamPoly& p, const std::map<Sym, RatFunc>& assignment);

}  // namespace ddca
