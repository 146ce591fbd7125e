#pragma once

#include <string>
#include <vector>

#include "ddca/rank_table.hpp"

namespace ddca {

// Models for word ranks over the generators p, f, r.
//   upo      U(po): p, p^2/2, q^3/6
//   weyl     U(C[x, d]) with the images d, d^2/2, x^3/6
//   ddca     D^ext at t = 1, k = 1/2, K free: T01, T02/2, T30/6
//   ddca-n3  the same at K = 3, ungraded
//   broken   U(C[x, d]) with r -> x^3/6 + x^2
//   broken4  U(C[x, d]) with r -> x^4
enum class RankModel { upo, weyl, ddca, ddca_n3, broken, broken4 };

RankModel rank_model_from_name(const std::string& name);
std::string rank_model_name(RankModel m);
// Graded models are split by h-weight (p -1, f -2, r +3); ddca-n3 and the broken ones are not.
bool rank_model_graded(RankModel m);

// with_K adds the central generator K (weight 0) to p, f, r.
std::vector<int> rank_table(RankModel m, int max_length, bool with_K = false, std::size_t term_budget = 5'000'000);

}  // namespace ddca
