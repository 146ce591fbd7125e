#include "ddca/galois.hpp"

#include <set>

namespace ddca {

namespace {

RatFunc sym(Sym s) { return RatFunc(ParamPoly::var(s)); }
RatFunc one() { return RatFunc(1L); }
RatFunc kk1(const RatFunc& k) { return k * (k + one()); }
RatFunc quad(const RatFunc& k) { return k * k + k + one(); }

ParamPoint compose(const ParamPoint& outer, const ParamPoint& inner, Sym second) {
  std::map<Sym, RatFunc> s{{Sym::k, inner.k}, {second, inner.second}};
  return {outer.k.subs(s), outer.second.subs(s)};
}

Sym second_sym(CherType type) { return type == CherType::A ? Sym::nu : Sym::lam; }

std::vector<std::pair<std::string, std::function<ParamPoint(const ParamPoint&)>>> generators(CherType type) {
  if (type == CherType::A) return {{"g1", g1}, {"g2", g2}};
  return {{"h1", h1}, {"h2", h2}, {"h3", h3}};
}

std::string point_str(const ParamPoint& p) { return "(" + p.k.str() + ", " + p.second.str() + ")"; }

}  // namespace

ParamPoint generic_point(CherType type) { return {sym(Sym::k), sym(second_sym(type))}; }

std::pair<RatFunc, RatFunc> essential_params_A(const ParamPoint& p) {
  const RatFunc& nu = p.second;
  return {quad(p.k) * nu.pow(2) - kk1(p.k) * nu.pow(3), kk1(p.k) * nu.pow(3)};
}

std::pair<RatFunc, RatFunc> essential_params_B(const ParamPoint& p) {
  TypeBParams s = typeB_params(p.k, p.second * p.second, RatFunc());
  RatFunc u = (s.s1 - s.s2).pow(3) / (RatFunc(125L) * s.s3.pow(2));
  RatFunc v = (RatFunc(4L) * s.s2 - RatFunc(9L) * s.s1) / (s.s2 - s.s1);
  return {u, v};
}

ParamPoint g1(const ParamPoint& p) { return {one() / p.k, p.k * p.second}; }
ParamPoint g2(const ParamPoint& p) { return {-p.k - one(), p.second}; }
ParamPoint h1(const ParamPoint& p) { return {one() / p.k, p.second / p.k}; }
ParamPoint h2(const ParamPoint& p) { return {-p.k - one(), p.second}; }
ParamPoint h3(const ParamPoint& p) { return {p.k, -p.second}; }

int symmetry_group_order(CherType type) {
  const ParamPoint id = generic_point(type);
  auto key = [](const ParamPoint& p) { return p.k.str() + "|" + p.second.str(); };
  std::set<std::string> seen{key(id)};
  std::vector<ParamPoint> frontier{id};
  while (!frontier.empty()) {
    std::vector<ParamPoint> next;
    for (const auto& p : frontier)
      for (const auto& [name, g] : generators(type)) {
        ParamPoint q = compose(g(id), p, second_sym(type));
        if (seen.insert(key(q)).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return static_cast<int>(seen.size());
}

std::vector<IdentityCheck> verify_symmetry_group(CherType type) {
  std::vector<IdentityCheck> out;
  const ParamPoint id = generic_point(type);
  const Sym s2 = second_sym(type);
  auto ess = [&](const ParamPoint& p) { return type == CherType::A ? essential_params_A(p) : essential_params_B(p); };
  for (const auto& [name, g] : generators(type)) {
    auto before = ess(id), after = ess(g(id));
    out.push_back({"invariance under " + name, before == after, false, point_str(g(id))});
  }
  auto comp = [&](std::vector<std::function<ParamPoint(const ParamPoint&)>> fs) {
    ParamPoint p = id;
    for (const auto& f : fs) p = compose(f(id), p, s2);
    return p;
  };
  auto relation = [&](const std::string& name, std::vector<std::function<ParamPoint(const ParamPoint&)>> fs) {
    ParamPoint p = comp(std::move(fs));
    out.push_back({name, p == id, false, point_str(p)});
  };
  if (type == CherType::A) {
    relation("g1^2 = 1", {g1, g1});
    relation("g2^2 = 1", {g2, g2});
    relation("(g1 g2)^3 = 1", {g1, g2, g1, g2, g1, g2});
    ParamPoint p = comp({g1, g2});
    out.push_back({"g1 g2 != 1", !(p == id), false, point_str(p)});
  } else {
    relation("h1^2 = 1", {h1, h1});
    relation("h2^2 = 1", {h2, h2});
    relation("h3^2 = 1", {h3, h3});
    relation("(h1 h2)^3 = 1", {h1, h2, h1, h2, h1, h2});
    out.push_back({"h1 h3 = h3 h1", comp({h1, h3}) == comp({h3, h1}), false, ""});
    out.push_back({"h2 h3 = h3 h2", comp({h2, h3}) == comp({h3, h2}), false, ""});
  }
  int order = symmetry_group_order(type), expect = type == CherType::A ? 6 : 12;
  out.push_back({"group order " + std::to_string(expect), order == expect, false, std::to_string(order)});
  return out;
}

std::pair<RatFunc, RatFunc> cubic_variants(CherType type) {
  RatFunc k = sym(Sym::k);
  RatFunc u;
  if (type == CherType::A) {
    auto [s1, s2] = essential_params_A(generic_point(CherType::A));
    u = (s1 + s2).pow(3) / s2.pow(2);
  } else {
    u = essential_params_B(generic_point(CherType::B)).first;
  }
  RatFunc z = k + one() / k + one();
  return {z.pow(3) - u * z + u, z.pow(3) - u * z - u};
}

std::vector<IdentityCheck> cubic_identity_check() {
  std::vector<IdentityCheck> out;
  const RatFunc k = sym(Sym::k), nu = sym(Sym::nu);
  auto [s1, s2] = essential_params_A(generic_point(CherType::A));
  RatFunc target = quad(k).pow(3) / kk1(k).pow(2);
  RatFunc u_s2 = (s1 + s2).pow(3) / s2.pow(2), u_s1 = (s1 + s2).pow(3) / s1.pow(2);
  out.push_back({"u = (s1*+s2*)^3/s2*^2 = (k^2+k+1)^3/(k^2(k+1)^2)", u_s2 == target, false, u_s2.str()});
  out.push_back({"displayed u = (s1*+s2*)^3/s1*^2 is free of nu", !u_s1.num().uses(Sym::nu) && !u_s1.den().uses(Sym::nu),
                 true, u_s1.str()});
  for (auto type : {CherType::A, CherType::B}) {
    auto [plus, minus] = cubic_variants(type);
    std::string t = type == CherType::A ? "A" : "B";
    out.push_back({t + ": zeta^3 - u zeta - u = 0", minus.is_zero(), false, minus.str()});
    out.push_back({t + ": displayed zeta^3 - u zeta + u = 0", plus.is_zero(), true, plus.str()});
    out.push_back({t + ": exactly one sign variant vanishes", plus.is_zero() != minus.is_zero(), false, ""});
  }
  return out;
}

TypeBParams typeB_params(const RatFunc& k, const RatFunc& lam2, const RatFunc& K) {
  RatFunc base = RatFunc(4L) * kk1(k) * K + lam2;
  return {base - RatFunc(4L) * quad(k), base - RatFunc(9L) * quad(k), kk1(k)};
}

std::vector<IdentityCheck> verify_typeB_param_identities() {
  std::vector<IdentityCheck> out;
  const RatFunc k = sym(Sym::k), lam = sym(Sym::lam), K = sym(Sym::K), nu = sym(Sym::nu);
  const RatFunc lam2 = lam * lam;
  TypeBParams s = typeB_params(k, lam2, K);
  out.push_back({"s1 - s2 = 5(s3 + 1)", s.s1 - s.s2 == RatFunc(5L) * (s.s3 + one()), false, (s.s1 - s.s2).str()});
  TypeBParams s0 = typeB_params(k, lam2, RatFunc());
  RatFunc lhs = RatFunc(9L) * s0.s1 - RatFunc(4L) * s0.s2;
  out.push_back({"K = 0: 9 s1 - 4 s2 = 5 lam^2", lhs == RatFunc(5L) * lam2, false, lhs.str()});
  auto [u, v] = essential_params_B(generic_point(CherType::B));
  out.push_back({"u = (k^2+k+1)^3/(k^2(k+1)^2)", u == quad(k).pow(3) / kk1(k).pow(2), false, u.str()});
  out.push_back({"K = 0: v = lam^2/(k^2+k+1)", v == lam2 / quad(k), false, v.str()});
  // Reduction to nu = 0, compared on lam'^2.
  TypeBParams at_nu = typeB_params(k, lam2, nu);
  TypeBParams shown = typeB_params(k, lam2 - RatFunc(4L) * kk1(k) * nu, RatFunc());
  TypeBParams flipped = typeB_params(k, lam2 + RatFunc(4L) * kk1(k) * nu, RatFunc());
  out.push_back({"reduction lam'^2 = lam^2 + 4k(k+1)nu keeps (s1, s2, s3)", at_nu == flipped, false, ""});
  out.push_back({"displayed reduction lam'^2 = lam^2 - 4k(k+1)nu keeps (s1, s2, s3)", at_nu == shown, true,
                 (at_nu.s1 - shown.s1).str()});
  return out;
}

}  // namespace ddca
