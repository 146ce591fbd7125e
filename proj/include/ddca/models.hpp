#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ddca/expr.hpp"
#include "ddca/liealg.hpp"
#include "ddca/relations.hpp"

namespace ddca {

// C[x, d] as an associative algebra.
struct WeylModel {
  using Elem = WeylElement;
  Elem bracket(const Elem& a, const Elem& b) const { return weyl_bracket(a, b); }
  Elem product(const Elem& a, const Elem& b) const { return weyl_product(a, b); }
  Elem one() const { return weyl(0, 0); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) const { return a * c; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return weyl_str(a); }
};

// po as a Lie algebra: products are not available.
struct PoLieModel {
  using Elem = PoElement;
  Elem bracket(const Elem& a, const Elem& b) const { return po_bracket(a, b); }
  Elem product(const Elem&, const Elem&) const { throw std::logic_error("po has no product here"); }
  Elem one() const { return po(0, 0); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) const { return a * c; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return po_str(a); }
};

// U(sl2)/(C - (lam^2 - 1)/2), coefficients in Q[lam].
struct GlModel {
  using Elem = GlLambda::Elem;
  Elem bracket(const Elem& a, const Elem& b) const { return GlLambda::bracket(a, b); }
  Elem product(const Elem& a, const Elem& b) const { return GlLambda::product(a, b); }
  Elem one() const { return GlLambda::scalar(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) const { return a * c; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return GlLambda::str(a); }
};

// K -> 1, q -> x, p -> d, e -> -x^2/2, f -> d^2/2, r -> x^3/6
std::map<std::string, WeylElement> weyl_assignment(RelKind kind);
// The same images read in po: K -> 1, q, p, e = -q^2/2, f = p^2/2, r = q^3/6;
// for po_plus: e, h = pq, f and d_i = ad_f^{i-1}(q^4/8).
std::map<std::string, PoElement> po_assignment(RelKind kind);
// e, h, f the sl2 generators, K -> 1, d_i = ad_f^{i-1}(e^2/2).
std::map<std::string, GlLambda::Elem> gl_assignment();
// s1 = lam^2 - 4, s2 = lam^2 - 9, s3 = 0
ParamSubs gl_params();

}  // namespace ddca
