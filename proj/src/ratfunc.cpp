#include "ddca/ratfunc.hpp"

namespace ddca {

RatFunc::RatFunc(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = ParamPoly(1L);
    return;
  }
  ParamPoly g = poly_gcd(num, den);
  num_ = num.divexact(g);
  den_ = den.divexact(g);
  Rat lc = den_.leading().c;
  if (lc != 1) {
    num_ *= Rat(1 / lc);
    den_ *= Rat(1 / lc);
  }
}

RatFunc ratfunc_normalize(const ParamPoly& num, const ParamPoly& den) { return {num, den}; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc(1L) / pow(-e);
  return {num_.pow(e), den_.pow(e)};
}

RatFunc subs_poly(const ParamPoly& p, const std::map<Sym, RatFunc>& assignment) {
  RatFunc total;
  for (const auto& t : p.terms()) {
    Exps rest = t.e;
    RatFunc f(t.c);
    for (const auto& [s, v] : assignment) {
      int i = static_cast<int>(s);
      if (!rest[i]) continue;
      f = f * v.pow(rest[i]);
      rest[i] = 0;
    }
    total = total + f * RatFunc(ParamPoly::monomial(rest, Rat(1)));
  }
  return total;
}

RatFunc RatFunc::subs(const std::map<Sym, RatFunc>& assignment) const {
  return subs_poly(num_, assignment) / subs_poly(den_, assignment);
}

Rat RatFunc::eval(const std::map<Sym, Rat>& assignment) const {
  Rat d = den_.eval(assignment);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.eval(assignment) / d;
}

std::string RatFunc::str() const {
  if (den_ == ParamPoly(1L)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace ddca
