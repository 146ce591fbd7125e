#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ddca/linalg.hpp"

namespace ddca {

struct RankBudgetExceeded : std::runtime_error {
  std::vector<int> partial;
  RankBudgetExceeded(std::vector<int> p) : std::runtime_error("term budget exceeded"), partial(std::move(p)) {}
};

// Rank of span{images of words of length 1..l} for l = 1..max_length.
// Words of length l are g * (words of length l - 1), so only a basis of the
// exact-length span is carried forward. With `weights` given, images are split
// by weight; this is only valid when the model is graded by it.
template <class Elem, class Key>
std::vector<int> word_rank_table(const std::vector<Elem>& gens, const std::function<Elem(const Elem&, const Elem&)>& mul,
                                 const std::function<std::map<Key, Rat>(const Elem&)>& flatten, int max_length,
                                 const std::vector<int>& weights = {}, std::size_t term_budget = 5'000'000) {
  if (!weights.empty() && weights.size() != gens.size()) throw std::invalid_argument("one weight per generator");
  std::map<int, EchelonBasis<Key>> total;
  std::map<int, std::vector<Elem>> layer;
  std::vector<int> out;
  std::size_t terms = 0;
  auto weight = [&](std::size_t g) { return weights.empty() ? 0 : weights[g]; };
  for (int len = 1; len <= max_length; ++len) {
    std::map<int, EchelonBasis<Key>> exact;
    std::map<int, std::vector<Elem>> next;
    auto offer = [&](int w, Elem x) {
      auto flat = flatten(x);
      terms += flat.size();
      if (terms > term_budget) throw RankBudgetExceeded(out);
      if (exact[w].insert(flat)) {
        total[w].insert(std::move(flat));
        next[w].push_back(std::move(x));
      }
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (len == 1) {
        offer(weight(g), gens[g]);
        continue;
      }
      for (const auto& [w, xs] : layer)
        for (const auto& x : xs) offer(w + weight(g), mul(gens[g], x));
    }
    layer = std::move(next);
    std::size_t r = 0;
    for (const auto& [w, b] : total) r += b.rank();
    out.push_back(static_cast<int>(r));
  }
  return out;
}

}  // namespace ddca
