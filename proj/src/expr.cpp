#include "ddca/expr.hpp"

#include <set>
#include <sstream>

namespace ddca {

namespace {

Expr make(ExprKind k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  return n;
}

}  // namespace

Expr gen(const std::string& name) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::gen;
  n->name = name;
  return n;
}

Expr br(const Expr& a, const Expr& b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::bracket;
  n->a = a;
  n->b = b;
  return n;
}

Expr prod(const Expr& a, const Expr& b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::product;
  n->a = a;
  n->b = b;
  return n;
}

Expr unit() {
  static const Expr u = make(ExprKind::unit);
  return u;
}

Expr lin(std::vector<std::pair<ParamPoly, Expr>> terms) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::sum;
  n->terms = std::move(terms);
  return n;
}

Expr scaled(const ParamPoly& c, const Expr& e) { return lin({{c, e}}); }
Expr operator+(const Expr& a, const Expr& b) { return lin({{1, a}, {1, b}}); }
Expr operator-(const Expr& a, const Expr& b) { return lin({{1, a}, {-1, b}}); }

Expr ad(const Expr& x, const Expr& y, int times) {
  Expr r = y;
  for (int i = 0; i < times; ++i) r = br(x, r);
  return r;
}

std::string expr_str(const Expr& e) {
  switch (e->kind) {
    case ExprKind::gen:
      return e->name;
    case ExprKind::unit:
      return "1";
    case ExprKind::bracket:
      return "[" + expr_str(e->a) + ", " + expr_str(e->b) + "]";
    case ExprKind::product:
      return expr_str(e->a) + "*" + expr_str(e->b);
    case ExprKind::sum: {
      std::ostringstream os;
      for (std::size_t i = 0; i < e->terms.size(); ++i) {
        if (i) os << " + ";
        const auto& [c, t] = e->terms[i];
        if (c == ParamPoly(1L))
          os << expr_str(t);
        else
          os << "(" << c.str() << ")*" << expr_str(t);
      }
      return e->terms.empty() ? "0" : os.str();
    }
  }
  return "?";
}

ParamPoly apply_params(const ParamPoly& c, const ParamSubs& subs) {
  ParamPoly r = c;
  for (const auto& s : subs) r = r.subs(s);
  return r;
}

NcPoly FreeAssocModel::product(const Elem& a, const Elem& b) const {
  Elem r;
  for (const auto& [u, x] : a.terms)
    for (const auto& [v, y] : b.terms) {
      NcWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, x * y);
    }
  return r;
}

NcPoly to_ncpoly(const Expr& e, const ParamSubs& params) {
  FreeAssocModel m;
  // generators map to themselves; collect names first
  std::map<std::string, NcPoly> asg;
  std::vector<Expr> stack{e};
  std::set<const ExprNode*> seen;
  while (!stack.empty()) {
    Expr x = stack.back();
    stack.pop_back();
    if (!seen.insert(x.get()).second) continue;
    if (x->kind == ExprKind::gen) asg.emplace(x->name, NcPoly(NcWord{x->name}, 1));
    if (x->a) stack.push_back(x->a);
    if (x->b) stack.push_back(x->b);
    for (const auto& [c, t] : x->terms) stack.push_back(t);
  }
  return evaluate_nc(e, m, asg, params);
}

std::string ncpoly_str(const NcPoly& p) {
  return p.str([](const NcWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + w[i];
    return s;
  });
}

}  // namespace ddca
