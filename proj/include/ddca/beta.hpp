#pragma once

#include "ddca/cherednik.hpp"
#include "ddca/relations.hpp"

namespace ddca {

// Spherical subalgebra e H e as an evaluation model.
struct SphericalModel {
  using Elem = SphElement;
  Cherednik& h;
  Elem bracket(const Elem& a, const Elem& b) { return h.sph_bracket(a, b); }
  Elem product(const Elem& a, const Elem& b) { return h.sph_product(a, b); }
  Elem one() { return h.sph_one(); }
  Elem add(const Elem& a, const Elem& b) { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) { return a * c; }
  bool is_zero(const Elem& a) { return a.is_zero(); }
  std::string str(const Elem& a) { return h.str(a); }
};

// Type A: K -> n, q -> T10, p -> T01, e -> -T20/2, f -> T02/2, r -> T30/6 (t = 1).
// Type B: K -> n, e -> -T20/2, f -> T02/2, h -> [e, f], d1 -> T40/8, d_{i+1} = [f, d_i];
// the algebra is built with c = lam - 1/2.
std::map<std::string, SphElement> beta_images(Cherednik& h);
Cherednik beta_algebra(CherType type, int n, const ParamPoly& k = ParamPoly::var(Sym::k),
                       const ParamPoly& lam = ParamPoly::var(Sym::lam));
// s1 = 1 + k(k+1)(1-K), s2 = k(k+1) in type A;
// s1 = 4k(k+1)K + lam^2 - 4(k^2+k+1), s2 = 4k(k+1)K + lam^2 - 9(k^2+k+1), s3 = k(k+1) in type B.
std::map<Sym, ParamPoly> beta_s_values(CherType type);
// Relations of a-s1s2 (type A) or a-typeB with full orbits (type B), s-values at K = n.
std::vector<RelationCheck> verify_beta_finite(CherType type, int n, const ParamPoly& k = ParamPoly::var(Sym::k),
                                              const std::function<bool(const Relation&)>& filter = {},
                                              const ParamPoly& lam = ParamPoly::var(Sym::lam));

}  // namespace ddca

namespace ddca {

// The psi'2 orbit checked against -24(30 s3 e^2 + 12 s2 d1), the value found at finite rank.
std::vector<RelationCheck> verify_psi2_observed(int n, const ParamPoly& k = ParamPoly::var(Sym::k),
                                               const ParamPoly& lam = ParamPoly::var(Sym::lam));

}  // namespace ddca
