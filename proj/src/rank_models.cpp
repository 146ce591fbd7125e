#include "ddca/rank_models.hpp"

#include <stdexcept>

#include "ddca/admissible.hpp"
#include "ddca/liealg.hpp"

namespace ddca {

RankModel rank_model_from_name(const std::string& name) {
  for (auto m : {RankModel::upo, RankModel::weyl, RankModel::ddca, RankModel::ddca_n3, RankModel::broken, RankModel::broken4})
    if (rank_model_name(m) == name) return m;
  throw std::invalid_argument("unknown rank model: " + name);
}

std::string rank_model_name(RankModel m) {
  switch (m) {
    case RankModel::upo: return "upo";
    case RankModel::weyl: return "weyl";
    case RankModel::ddca: return "ddca";
    case RankModel::ddca_n3: return "ddca-n3";
    case RankModel::broken: return "broken";
    case RankModel::broken4: return "broken4";
  }
  return "?";
}

bool rank_model_graded(RankModel m) { return m == RankModel::upo || m == RankModel::weyl || m == RankModel::ddca; }

namespace {

template <class Lie>
std::vector<int> uenv_table(std::vector<typename UEnv<Lie>::Elem> gens, int L, const std::vector<int>& w, bool with_K,
                            std::size_t budget) {
  using U = UEnv<Lie>;
  if (with_K) gens.push_back(U::gen({0, 0}));
  using E = typename U::Elem;
  using K = typename U::Mono;
  U u;
  return word_rank_table<E, K>(
      gens, [&](const E& a, const E& b) { return u.product(a, b); },
      [](const E& x) {
        std::map<K, Rat> m;
        for (const auto& [k, c] : x.terms) m[k] = c.to_rat();
        return m;
      },
      L, w, budget);
}

}  // namespace

std::vector<int> rank_table(RankModel m, int L, bool with_K, std::size_t budget) {
  std::vector<int> w = rank_model_graded(m) ? std::vector<int>{-1, -2, 3} : std::vector<int>{};
  if (with_K && !w.empty()) w.push_back(0);
  using UP = UEnv<PoLie>;
  using UW = UEnv<WeylLie>;
  switch (m) {
    case RankModel::upo:
      return uenv_table<PoLie>({UP::gen({0, 1}), UP::gen({0, 2}, rat(1, 2)), UP::gen({3, 0}, rat(1, 6))}, L, w, with_K, budget);
    case RankModel::weyl:
      return uenv_table<WeylLie>({UW::gen({0, 1}), UW::gen({0, 2}, rat(1, 2)), UW::gen({3, 0}, rat(1, 6))}, L, w,
                                 with_K, budget);
    case RankModel::broken:
      return uenv_table<WeylLie>(
          {UW::gen({0, 1}), UW::gen({0, 2}, rat(1, 2)), UW::gen({3, 0}, rat(1, 6)) + UW::gen({2, 0})}, L, w, with_K, budget);
    case RankModel::broken4:
      return uenv_table<WeylLie>({UW::gen({0, 1}), UW::gen({0, 2}, rat(1, 2)), UW::gen({4, 0})}, L, w, with_K, budget);
    case RankModel::ddca:
    case RankModel::ddca_n3: {
      Admissible a = m == RankModel::ddca ? Admissible(1, rat(1, 2)) : Admissible(1, rat(1, 2), 3);
      std::vector<AdmVec> gens{a.T(TIndex::single(0, 1)), a.T(TIndex::single(0, 2)) * ParamPoly(rat(1, 2)),
                               a.T(TIndex::single(3, 0)) * ParamPoly(rat(1, 6))};
      if (with_K) gens.push_back(a.unit() * a.n_value());
      using Key = std::pair<TIndex, int>;
      return word_rank_table<AdmVec, Key>(
          gens, [&](const AdmVec& x, const AdmVec& y) { return a.product(x, y); },
          [](const AdmVec& x) {
            // Q-coordinates over the Q[K]-basis D(m) K^j
            std::map<Key, Rat> out;
            for (const auto& [m, c] : x.terms) {
              auto cs = c.coeffs(Sym::n);
              for (std::size_t j = 0; j < cs.size(); ++j)
                if (!cs[j].is_zero()) out[{m, static_cast<int>(j)}] = cs[j].to_rat();
            }
            return out;
          },
          L, w, budget);
    }
  }
  throw std::logic_error("bad rank model");
}

}  // namespace ddca
