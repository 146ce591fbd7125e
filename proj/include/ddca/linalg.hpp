#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ddca/poly.hpp"

namespace ddca {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;
using PolyVec = std::vector<ParamPoly>;
using PolyMatrix = std::vector<PolyVec>;

struct Rref {
  RatMatrix m;              // reduced rows; rows past `rank` are zero
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank = 0;
};

Rref rref(RatMatrix m);
int rank(const RatMatrix& m);
// Basis of {x : m x = 0}, one vector per free column.
RatMatrix nullspace(const RatMatrix& m, int cols);

struct LinearSolution {
  int rank = 0;
  std::optional<RatVec> particular;  // absent when inconsistent
  RatMatrix kernel;
};

// Throws std::invalid_argument on shape mismatch.
LinearSolution solve_linear_exact(const RatMatrix& a, const RatVec& b);

// Solves a x = b with rational matrix and polynomial right-hand side;
// nullopt if inconsistent, free variables set to zero.
std::optional<PolyVec> solve_poly_rhs(const RatMatrix& a, const PolyVec& b);

struct BareissResult {
  PolyMatrix m;  // fraction-free row echelon form
  int rank = 0;
  ParamPoly det;  // meaningful for square input
};

BareissResult bareiss(PolyMatrix m);
int rank(const PolyMatrix& m);
ParamPoly determinant(const PolyMatrix& m);

// Reference determinant by Laplace expansion; used as an oracle.
ParamPoly determinant_laplace(const PolyMatrix& m);

// All k x k minors, columns chosen in lexicographic order (rows fixed when k = rows).
PolyVec maximal_minors(const PolyMatrix& m);

// Sparse row echelon basis over Rat, keyed by an ordered type.
template <class Key>
class EchelonBasis {
 public:
  using Vec = std::map<Key, Rat>;

  // Returns true when v is independent of the stored rows (and stores it).
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    Rat inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
  }

  void reduce(Vec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      Rat f = it->second;
      for (const auto& [k, c] : row->second) {
        auto [pos, fresh] = v.try_emplace(k, 0);
        pos->second -= f * c;
      }
      for (auto p = v.begin(); p != v.end();) p = p->second == 0 ? v.erase(p) : std::next(p);
      it = v.upper_bound(key);
    }
  }

  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<Key, Vec> rows_;
};

}  // namespace ddca
