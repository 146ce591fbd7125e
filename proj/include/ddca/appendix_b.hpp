#pragma once

#include <map>
#include <vector>

#include "ddca/ratfunc.hpp"
#include "ddca/sl2rep.hpp"

namespace ddca {

// Induction step for n = L(n_1)/I in degree l - 1: l_{l-2} (x) n_1 with v_i^l = f^{i-1} q^l.
// Coordinates of weight l - 3 vectors are listed on (v4 c1, v3 c2, v2 c3, v1 c4).
struct AppendixB {
  // highest weight vectors of V_{l+3}, V_{l+1}, V_{l-1}, V_{l-3} inside V_l (x) V_3
  std::vector<Sl2Vector> hw;
  std::vector<bool> hw_killed_by_e;
  std::vector<ParamPoly> hw_weights;

  // [v_2^{l-2}, [d1, c1]] = top_coefficient * [v_1^l, c_1]
  RatFunc top_coefficient;
  // [v_1^{l-1}, [c1, c4] - [c2, c3]] on (v3 c1, v2 c2, v1 c3)
  std::vector<RatFunc> phi1_image;
  // [v_2^{l-2}, [d4,c1] - 2[d3,c2] + 3[d2,c3] - 4[d1,c4]]
  std::vector<RatFunc> alpha1_derived;

  std::vector<ParamPoly> alpha1_stated, alpha2, alpha3;
  bool alpha2_is_f3_top = false;     // alpha2 = f^3 (v1 c1)
  bool alpha3_is_f_of_hw3 = false;   // alpha3 = f (hw of V_{l-1})
  // alpha1_stated = x * alpha1_derived + z * alpha3
  RatFunc combo_x, combo_z;
  bool combo_holds = false;

  std::vector<ParamPoly> minors;  // 3x3 minors of (alpha1_stated; alpha2; alpha3)
  std::vector<long> common_roots;
};

AppendixB appendix_b();

// Integer roots of a univariate polynomial in `var`; throws on the zero polynomial.
std::vector<long> integer_roots(const ParamPoly& p, Sym var);

}  // namespace ddca
