#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddca/poly.hpp"

namespace ddca {

// Basis vector `index` (1-based) of an irreducible V_m whose highest weight
// vector is `family`1; basis vectors are f-powers: family_i = f^{i-1} family_1.
// m may be symbolic (a polynomial in l).
struct Letter {
  std::string family;
  ParamPoly m;
  int degree = 0;
  int index = 1;

  std::string name() const { return family + std::to_string(index); }
  ParamPoly weight() const { return m - ParamPoly(2L * (index - 1)); }
  // f and e images as (scalar, letter); nullopt means the image is zero.
  std::optional<std::pair<ParamPoly, Letter>> f_image() const;
  std::optional<std::pair<ParamPoly, Letter>> e_image() const;
};

bool operator<(const Letter& a, const Letter& b);
bool operator==(const Letter& a, const Letter& b);

Letter letter(const std::string& family, const ParamPoly& m, int degree, int index);

enum class WordKind { tensor, wedge, symmetric };
enum class Sl2Gen { e, f, h };

using Sl2Word = std::vector<Letter>;

class Sl2Vector {
 public:
  explicit Sl2Vector(WordKind kind = WordKind::tensor) : kind_(kind) {}
  static Sl2Vector word(WordKind kind, Sl2Word w, const ParamPoly& c = ParamPoly(1L));

  WordKind kind() const { return kind_; }
  const std::map<Sl2Word, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * w after canonicalizing w for this kind.
  void add(Sl2Word w, const ParamPoly& c);
  Sl2Vector& operator+=(const Sl2Vector& o);
  Sl2Vector& operator-=(const Sl2Vector& o);
  Sl2Vector operator*(const ParamPoly& c) const;
  friend Sl2Vector operator+(Sl2Vector a, const Sl2Vector& b) { return a += b; }
  friend Sl2Vector operator-(Sl2Vector a, const Sl2Vector& b) { return a -= b; }
  friend bool operator==(const Sl2Vector& a, const Sl2Vector& b) {
    return a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

  // Common weight of all terms; throws if the vector is not weight-homogeneous.
  ParamPoly weight() const;
  std::string str() const;

 private:
  WordKind kind_;
  std::map<Sl2Word, ParamPoly> terms_;
};

struct UndefinedImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotHighestWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Sl2Vector act(Sl2Gen g, const Sl2Vector& v);
Sl2Vector act_power(Sl2Gen g, const Sl2Vector& v, int times);

// k-fold tensor / wedge / symmetric power or tensor product of numeric V_m's.
struct WordSpace {
  WordKind kind = WordKind::tensor;
  std::vector<Letter> factors;  // any basis letter of each factor; only family, m, degree matter
};

std::vector<Sl2Word> weight_basis(const WordSpace& space, int weight);
std::vector<Sl2Vector> highest_weight_vectors(const WordSpace& space, int weight);
// Multiplicity of V_w in the space for every w >= 0.
std::map<int, int> decomposition(const WordSpace& space);

std::vector<Sl2Vector> f_orbit(const Sl2Vector& v);

enum class CatalogKind { po_A, A_s1s2, po_B, A_s1s2s3 };

struct RelationModule {
  std::string name;
  std::string ambient;
  Sl2Vector hw;   // brackets of Lie letters (words read as iterated brackets)
  int m = 0;      // isomorphic to V_m
  Sl2Vector rhs;  // tensor words read as products; zero when undeformed
  std::vector<Sl2Vector> orbit() const { return f_orbit(hw); }
};

std::vector<RelationModule> relation_catalog(CatalogKind kind);
CatalogKind catalog_kind_from_name(const std::string& name);

// Named letters used by the catalogs.
namespace letters {
Letter c(int i);   // n_1 = V_3, c_1 = q^3/6
Letter d(int i);   // phi_2 = V_4 inside Lambda^2 n_1
Letter a(int i);   // b_{-1} = V_1, a_1 = q
Letter b(int i);   // b_0 = V_2, b_1 = e
Letter K();        // b_{-2} = V_0
Letter dB(int i);  // n_2 = V_4 in type B, d_1 = q^4/8
Letter g(int i);   // phi'_2 = V_6 inside Lambda^2 n_2
Letter v(int i);   // V_l with symbolic l
}  // namespace letters

}  // namespace ddca
