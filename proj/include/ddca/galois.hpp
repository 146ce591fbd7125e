#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ddca/cherednik.hpp"
#include "ddca/ratfunc.hpp"

namespace ddca {

// (k, nu) in type A, (k, lambda) in type B.
struct ParamPoint {
  RatFunc k, second;
  friend bool operator==(const ParamPoint& a, const ParamPoint& b) { return a.k == b.k && a.second == b.second; }
};
ParamPoint generic_point(CherType type);  // (k, nu) or (k, lam) as symbols

// s1* = s1 nu^2 and s2* = s2 nu^3 with K = nu.
std::pair<RatFunc, RatFunc> essential_params_A(const ParamPoint& p);
// (u, v) at K = 0.
std::pair<RatFunc, RatFunc> essential_params_B(const ParamPoint& p);

ParamPoint g1(const ParamPoint& p);  // (1/k, k nu)
ParamPoint g2(const ParamPoint& p);  // (-k-1, nu)
ParamPoint h1(const ParamPoint& p);  // (1/k, lam/k)
ParamPoint h2(const ParamPoint& p);  // (-k-1, lam)
ParamPoint h3(const ParamPoint& p);  // (k, -lam)

struct IdentityCheck {
  std::string name;
  bool ok = false;
  // the displayed form disagrees with the computation
  bool discrepancy = false;
  std::string detail;
};

// Invariance of the essential parameters, the group relations, and the group order.
std::vector<IdentityCheck> verify_symmetry_group(CherType type);
// Size of the group generated by the parameter maps, composed symbolically.
int symmetry_group_order(CherType type);

// zeta = k + 1/k + 1; returns zeta^3 - u zeta + u and zeta^3 - u zeta - u.
std::pair<RatFunc, RatFunc> cubic_variants(CherType type);
std::vector<IdentityCheck> cubic_identity_check();

// s-values of type B as functions of k, lam^2 and K.
struct TypeBParams {
  RatFunc s1, s2, s3;
  friend bool operator==(const TypeBParams& a, const TypeBParams& b) {
    return a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3;
  }
};
TypeBParams typeB_params(const RatFunc& k, const RatFunc& lam2, const RatFunc& K);
std::vector<IdentityCheck> verify_typeB_param_identities();

}  // namespace ddca
