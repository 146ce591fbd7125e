#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddca/lincomb.hpp"

namespace ddca {

// Noncommutative expressions over named generators. Nodes are immutable and
// shared, so evaluation can memoize on node identity.
struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class ExprKind { gen, bracket, product, sum, unit };

struct ExprNode {
  ExprKind kind;
  std::string name;                              // gen
  Expr a, b;                                     // bracket, product
  std::vector<std::pair<ParamPoly, Expr>> terms;  // sum
};

Expr gen(const std::string& name);
Expr br(const Expr& a, const Expr& b);
Expr prod(const Expr& a, const Expr& b);
Expr unit();
Expr lin(std::vector<std::pair<ParamPoly, Expr>> terms);
Expr scaled(const ParamPoly& c, const Expr& e);
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
// ad_x^times(y) = [x, [x, ... [x, y]]]
Expr ad(const Expr& x, const Expr& y, int times = 1);

std::string expr_str(const Expr& e);

struct MissingGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient substitution applied before scaling: values may mention other
// symbols, substituted in turn (e.g. s1 -> 1 + k(k+1)(1 - K), then K -> n).
using ParamSubs = std::vector<std::map<Sym, ParamPoly>>;
ParamPoly apply_params(const ParamPoly& c, const ParamSubs& subs);

// Model requirements: typename Elem; Elem bracket(a, b); Elem product(a, b);
// Elem one(); Elem add(a, b); Elem scale(a, ParamPoly); bool is_zero(a).
template <class Model>
class Evaluator {
 public:
  using Elem = typename Model::Elem;
  Evaluator(Model& model, std::map<std::string, Elem> assignment, ParamSubs params = {})
      : model_(model), asg_(std::move(assignment)), params_(std::move(params)) {}

  const Elem& operator()(const Expr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    Elem v = compute(e);
    keep_.push_back(e);
    return memo_.emplace(e.get(), std::move(v)).first->second;
  }

  Model& model() { return model_; }

 private:
  Elem compute(const Expr& e) {
    switch (e->kind) {
      case ExprKind::gen: {
        auto it = asg_.find(e->name);
        if (it == asg_.end()) throw MissingGenerator("no image for generator " + e->name);
        return it->second;
      }
      case ExprKind::unit:
        return model_.one();
      case ExprKind::bracket: {
        Elem x = (*this)(e->a);
        return model_.bracket(x, (*this)(e->b));
      }
      case ExprKind::product: {
        Elem x = (*this)(e->a);
        return model_.product(x, (*this)(e->b));
      }
      case ExprKind::sum: {
        Elem acc{};
        bool first = true;
        for (const auto& [c, t] : e->terms) {
          ParamPoly cc = apply_params(c, params_);
          if (cc.is_zero()) continue;
          Elem v = model_.scale((*this)(t), cc);
          acc = first ? v : model_.add(acc, v);
          first = false;
        }
        if (first) return model_.scale(model_.one(), ParamPoly());
        return acc;
      }
    }
    throw std::logic_error("bad expression node");
  }

  Model& model_;
  std::map<std::string, Elem> asg_;
  ParamSubs params_;
  std::unordered_map<const ExprNode*, Elem> memo_;
  std::vector<Expr> keep_;
};

template <class Model>
typename Model::Elem evaluate_nc(const Expr& e, Model& model,
                                 const std::map<std::string, typename Model::Elem>& assignment,
                                 const ParamSubs& params = {}) {
  Evaluator<Model> ev(model, assignment, params);
  return ev(e);
}

// Adapts any model whose Elem is a LinComb and which provides product and one().
template <class Impl>
struct LinCombModel {
  using Elem = typename Impl::Elem;
  Impl& impl;
  Elem bracket(const Elem& a, const Elem& b) { return impl.product(a, b) - impl.product(b, a); }
  Elem product(const Elem& a, const Elem& b) { return impl.product(a, b); }
  Elem one() { return impl.one(); }
  Elem add(const Elem& a, const Elem& b) { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) { return a * c; }
  bool is_zero(const Elem& a) { return a.is_zero(); }
};

// ---- free associative algebra

using NcWord = std::vector<std::string>;
using NcPoly = LinComb<NcWord>;

struct FreeAssocModel {
  using Elem = NcPoly;
  Elem product(const Elem& a, const Elem& b) const;
  Elem bracket(const Elem& a, const Elem& b) const { return product(a, b) - product(b, a); }
  Elem one() const { return Elem(NcWord{}, 1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) const { return a * c; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

NcPoly to_ncpoly(const Expr& e, const ParamSubs& params = {});
std::string ncpoly_str(const NcPoly& p);

// Commutative scalars: every generator maps to a number, brackets vanish.
struct ScalarModel {
  using Elem = ParamPoly;
  Elem bracket(const Elem& a, const Elem& b) const { return a * b - b * a; }
  Elem product(const Elem& a, const Elem& b) const { return a * b; }
  Elem one() const { return ParamPoly(1L); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem scale(const Elem& a, const ParamPoly& c) const { return a * c; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

}  // namespace ddca
