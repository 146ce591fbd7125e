#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ddca/expr.hpp"
#include "ddca/sl2rep.hpp"

namespace ddca {

// po, A_{s1,s2} with generators K, q, p, e, f, r; the *_pfr kinds use only p, f, r;
// po_plus and a_typeB use K, e, h, f, d1..d5.
enum class RelKind { po, a_s1s2, po_pfr, a_s1s2_pfr, po_plus, a_typeB };

RelKind rel_kind_from_name(const std::string& name);
std::string rel_kind_name(RelKind k);

struct Relation {
  std::string name;
  int degree = 0;
  Expr lhs;
  Expr rhs;  // nullptr means zero
  Expr value() const { return rhs ? lhs - rhs : lhs; }
};

struct RelationSet {
  RelKind kind;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
};

// full_orbits expands every module relation to its whole f-orbit (type B only;
// the type A lists are the displayed highest-weight forms).
RelationSet relation_set(RelKind kind, bool full_orbits = false);

// Lie-word realization of catalog letters.
using LetterRealizer = std::function<Expr(const Letter&)>;
LetterRealizer typeA_realizer();        // c_i = ad_f^{i-1} r, d_i = ad_f^{i-1} ad_r^2 f, ...
LetterRealizer typeA_free_realizer();   // c_i generators, d_i = f^{i-1}[c_2, c_1] by the Leibniz rule
LetterRealizer typeB_realizer();        // d_i generators, g_i = f^{i-1}[d_2, d_1], b_1 = e, b_2 = -h, b_3 = -2f
// Words of a catalog vector read as iterated brackets.
Expr realize_lie(const Sl2Vector& v, const LetterRealizer& r);
// Words read as products (used for the deformation right-hand sides).
Expr realize_assoc(const Sl2Vector& v, const LetterRealizer& r);

struct RelationCheck {
  std::string name;
  int degree = 0;
  bool ok = false;
  std::string residual;
};

template <class Model>
std::vector<RelationCheck> verify_relations_in_model(const RelationSet& rs, Model& model,
                                                     const std::map<std::string, typename Model::Elem>& asg,
                                                     const ParamSubs& params,
                                                     const std::function<bool(const Relation&)>& filter = {}) {
  Evaluator<Model> ev(model, asg, params);
  std::vector<RelationCheck> out;
  for (const auto& r : rs.relations) {
    if (filter && !filter(r)) continue;
    auto v = ev(r.value());
    RelationCheck c{r.name, r.degree, model.is_zero(v), ""};
    if (!c.ok) c.residual = model.str(v);
    out.push_back(std::move(c));
  }
  return out;
}

inline bool all_ok(const std::vector<RelationCheck>& cs) {
  for (const auto& c : cs)
    if (!c.ok) return false;
  return true;
}

// Zero images for sl2 and n_2 generators, K -> K0, s-parameters left symbolic.
std::vector<RelationCheck> counit_check_typeB(const ParamPoly& K0);
// The same zero assignment applied to the type A relation phi1 = -s1 K / 2.
RelationCheck counit_check_typeA_phi1(const ParamPoly& K0, const ParamPoly& s1);

}  // namespace ddca
