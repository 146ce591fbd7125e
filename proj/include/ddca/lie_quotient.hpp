#pragma once

#include <set>
#include <string>
#include <vector>

#include "ddca/expr.hpp"

namespace ddca {

// Lie algebra generated in degree 1 by `generators`, with homogeneous Lie relations.
struct LiePresentation {
  std::vector<std::string> generators;
  struct Rel {
    std::string family;
    int degree;
    Expr expr;
  };
  std::vector<Rel> relations;
};

// n = L(n_1)/(phi1, psi4, psi1, chi1), every module expanded to its f-orbit.
LiePresentation n_presentation_typeA(const std::set<std::string>& drop = {});
// n^+ = L(n_2)/(phi'1, psi'5, psi'2), Lie degree d <-> grading 2d.
LiePresentation n_presentation_typeB(const std::set<std::string>& drop = {});

// Graded quotient built degree by degree: L_d is spanned by brackets of lower
// components modulo antisymmetry, the Jacobi identity and degree-d relations.
class GradedLieQuotient {
 public:
  GradedLieQuotient(const LiePresentation& pres, int max_degree);
  int dim(int d) const { return static_cast<int>(basis_size_.at(d)); }
  std::vector<int> dims() const;
  int max_degree() const { return max_degree_; }

 private:
  using Vec = std::map<int, Rat>;
  struct Key {
    int d, i;
    auto operator<=>(const Key&) const = default;
  };
  using Elem = std::map<Key, Rat>;
  friend struct PartialModel;

  void build(int d);
  // bracket of basis vectors (i, a) and (j, b) with i + j <= built degree
  const Vec& table(int i, int a, int j, int b) const;

  const LiePresentation& pres_;
  int max_degree_;
  std::vector<std::size_t> basis_size_;
  std::map<std::tuple<int, int, int, int>, Vec> table_;
};

std::vector<int> presentation_dims(const LiePresentation& pres, int max_degree);

// ---- tensor-algebra side

// Lyndon words of length d over k letters (letters 0..k-1).
std::vector<std::vector<int>> lyndon_words(int k, int d);
// Necklace count (1/d) sum_{e | d} mu(e) k^{d/e}.
long witt_dimension(int k, int d);
// Tensor expansion of the standard bracketing of a Lyndon word; words encoded base k.
std::map<long, Rat> lyndon_bracket_tensor(const std::vector<int>& w, int k);
// Rank of the standard-bracketed Lyndon words inside T(V)_d.
int free_lie_rank(int k, int d);
// dim I_d for I_d = [L_1, I_{d-1}] + S_d, d = 1..max_degree.
std::vector<int> lie_ideal_dims(const LiePresentation& pres, int max_degree);
// Quotient dimensions computed on the tensor side.
std::vector<int> presentation_dims_tensor(const LiePresentation& pres, int max_degree);

}  // namespace ddca
