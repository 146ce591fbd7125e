#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ddca/lincomb.hpp"

namespace ddca {

enum class CherType { A, B };

// (sigma, eps) acting by x_j -> eps_j x_{sigma(j)}; bit j of `signs` set means eps_j = -1.
struct GroupElem {
  std::vector<std::uint8_t> perm;
  std::uint32_t signs = 0;

  static GroupElem identity(int n);
  static GroupElem transposition(int n, int i, int j);  // 0-based
  static GroupElem gamma(int n, int i);
  GroupElem operator*(const GroupElem& o) const;
  GroupElem inverse() const;
  // Moves exponents: result[sigma(j)] = e[j]; returns the sign prod eps_j^{e_j}.
  int act(const std::vector<std::uint8_t>& e, std::vector<std::uint8_t>& out) const;
  std::string str() const;
  auto operator<=>(const GroupElem&) const = default;
};

std::vector<GroupElem> group_elements(CherType type, int n);

struct CherKey {
  std::vector<std::uint8_t> a, b;  // x and y exponents
  GroupElem g;
  auto operator<=>(const CherKey&) const = default;
};
using CherElement = LinComb<CherKey>;

// x^a y^b e in the module H e.
struct SphKey {
  std::vector<std::uint8_t> a, b;
  auto operator<=>(const SphKey&) const = default;
};
using SphElement = LinComb<SphKey>;

// Multiplicities m_{r,q} with r + q > 0.
struct TIndex {
  std::map<std::pair<int, int>, int> m;
  int weight() const;
  int size() const;
  bool empty() const { return m.empty(); }
  std::string str() const;  // "(r,q)^mult" joined by commas; "1" for the empty index
  static TIndex parse(const std::string& s);
  static TIndex single(int r, int q, int mult = 1) { return TIndex{{{{r, q}, mult}}}; }
  auto operator<=>(const TIndex&) const = default;
};

// All T-indices of weight exactly w, restricted to even r + q when even_only.
std::vector<TIndex> tindices_of_weight(int w, bool even_only = false);

struct DegreeExceedsRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Cherednik {
 public:
  Cherednik(CherType type, int n, ParamPoly t = ParamPoly::var(Sym::t), ParamPoly k = ParamPoly::var(Sym::k),
            ParamPoly c = ParamPoly::var(Sym::c));

  CherType type() const { return type_; }
  int rank() const { return n_; }
  const std::vector<GroupElem>& group() const { return group_; }

  // ---- full algebra, normal order x^a y^b g
  CherElement one() const;
  CherElement x(int i) const;  // 0-based
  CherElement y(int i) const;
  CherElement g(const GroupElem& w) const;
  CherElement product(const CherElement& u, const CherElement& v);
  CherElement bracket(const CherElement& u, const CherElement& v) { return product(u, v) - product(v, u); }
  CherElement symmetrizer() const;
  CherElement omega() const;  // sum of transpositions
  // [y_i, x_j] as a group algebra element
  CherElement commutator(int i, int j) const;
  std::string str(const CherElement& u) const;

  // ---- spherical calculus in H e
  SphElement sph_one() const;
  SphElement to_sph(const CherElement& u) const;  // u e
  SphElement sph_product(const SphElement& u, const SphElement& v);
  SphElement sph_bracket(const SphElement& u, const SphElement& v) { return sph_product(u, v) - sph_product(v, u); }
  SphElement sph_lmul_x(int j, const SphElement& v) const;
  SphElement sph_lmul_y(int i, const SphElement& v);
  bool is_spherical(const SphElement& u) const;  // invariant under the group
  std::string str(const SphElement& u) const;

  SphElement T(int r, int q);
  SphElement Tm(const TIndex& m);
  // Top filtration degree and its homogeneous part (a commutative polynomial).
  static int degree(const SphElement& u);
  static SphElement top(const SphElement& u);
  // prod P_{r,q}^{m_{r,q}} computed commutatively
  SphElement leading_symbol(const TIndex& m) const;
  // Coordinates in the T_n(m) basis; the empty index is the unit.
  std::map<TIndex, ParamPoly> decompose(SphElement u);

 private:
  const CherElement& ymul(int i, const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);
  const SphElement& sph_ymul(int i, const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);
  // [y_i, x_j] as scalar + sum c_g g
  struct Comm {
    ParamPoly scalar;
    std::vector<std::pair<ParamPoly, GroupElem>> group;
  };
  const Comm& comm(int i, int j) const { return comm_[i * n_ + j]; }

  CherType type_;
  int n_;
  ParamPoly t_, k_, c_;
  std::vector<GroupElem> group_;
  std::vector<Comm> comm_;
  std::map<std::tuple<int, std::vector<std::uint8_t>, std::vector<std::uint8_t>>, CherElement> ymemo_;
  std::map<std::tuple<int, std::vector<std::uint8_t>, std::vector<std::uint8_t>>, SphElement> sph_ymemo_;
  std::map<std::pair<int, int>, SphElement> tmemo_;
  std::map<TIndex, SphElement> tmmemo_;
};

}  // namespace ddca
