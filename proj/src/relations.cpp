#include "ddca/relations.hpp"

#include <tuple>

namespace ddca {

namespace {

ParamPoly s(Sym x) { return ParamPoly::var(x); }

Rat binom(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// f^{i-1}[x_2, x_1] in a V_m family expanded by the Leibniz rule.
Expr leibniz_pair(const std::function<Expr(int)>& x, int m, int i) {
  std::vector<std::pair<ParamPoly, Expr>> ts;
  for (int j = 0; j <= i - 1; ++j) {
    int u = 2 + j, v = 1 + (i - 1 - j);
    if (u > m + 1 || v > m + 1) continue;
    ts.push_back({binom(i - 1, j), br(x(u), x(v))});
  }
  return lin(std::move(ts));
}

struct TypeAGens {
  Expr K, q, p, e, f, r;
};

// The displayed relation lists; rhs_* are the deformed right-hand sides.
std::vector<Relation> typeA_list(const TypeAGens& g, bool three_gens, bool deformed) {
  std::vector<Relation> out;
  auto add = [&](std::string n, int deg, Expr lhs, Expr rhs = nullptr) {
    out.push_back({std::move(n), deg, std::move(lhs), std::move(rhs)});
  };
  Expr X = ad(g.r, g.f, 2);
  Expr c2 = ad(g.f, g.r, 1), c3 = ad(g.f, g.r, 2), c4 = ad(g.f, g.r, 3);
  Expr d2 = ad(g.f, X, 1), d3 = ad(g.f, X, 2), d4 = ad(g.f, X, 3);
  if (!three_gens) {
    for (auto [n, x, dg] : {std::tuple{"q", g.q, -1}, {"p", g.p, -1}, {"e", g.e, 0}, {"f", g.f, 0}, {"r", g.r, 1}})
      add(std::string("[K,") + n + "]", dg - 2, br(g.K, x));
    add("[p,q]=K", -2, br(g.p, g.q), g.K);
    add("[f,q]=p", -1, br(g.f, g.q), g.p);
    add("[p,f]=0", -1, br(g.p, g.f));
    add("[e,p]=q", -1, br(g.e, g.p), g.q);
    add("[[f,e],f]=2f", 0, br(br(g.f, g.e), g.f), scaled(2, g.f));
    add("[r,p]=e", 0, br(g.r, g.p), g.e);
    add("[e,r]=0", 1, br(g.e, g.r));
    add("ad_f^4(r)=0", 1, ad(g.f, g.r, 4));
    add("[e,[f,r]]=3r", 1, br(g.e, br(g.f, g.r)), scaled(3, g.r));
  } else {
    Expr pr = br(g.p, g.r);
    for (auto [n, x, dg] : {std::tuple{"p", g.p, -1}, {"f", g.f, 0}, {"r", g.r, 1}})
      add(std::string("[ad_p^3(r),") + n + "]", dg - 2, br(g.K, x));
    add("[[[p,r],f],p]=p", -1, br(br(pr, g.f), g.p), g.p);
    add("[p,f]=0", -1, br(g.p, g.f));
    add("[[[p,r],f],f]=2f", 0, br(br(pr, g.f), g.f), scaled(2, g.f));
    add("ad_r^2(p)=0", 1, ad(g.r, g.p, 2));
    add("ad_f^4(r)=0", 1, ad(g.f, g.r, 4));
    add("[r,[[p,r],f]]=3r", 1, br(g.r, br(pr, g.f)), scaled(3, g.r));
  }
  add("deg2", 2, br(g.r, c4) - br(c2, c3), deformed ? scaled(s(Sym::s1) * rat(-1, 2), g.K) : nullptr);
  add("ad_r^3(f)=0", 3, ad(g.r, g.f, 3));
  Expr deg3 = lin({{4, br(c4, X)}, {-3, br(c3, d2)}, {2, br(c2, d3)}, {-1, br(g.r, d4)}});
  add("deg3", 3, deg3, deformed ? scaled(s(Sym::s1) * Rat(15), g.q) : nullptr);
  Expr deg4 = lin({{3, br(d3, d2)}, {-2, br(d4, X)}});
  Expr rhs4;
  if (deformed)
    rhs4 = lin({{s(Sym::s1) * Rat(90), g.e}, {s(Sym::s2) * Rat(42), prod(g.K, g.e)}, {s(Sym::s2) * Rat(21), prod(g.q, g.q)}});
  add("deg4", 4, deg4, rhs4);
  return out;
}

}  // namespace

RelKind rel_kind_from_name(const std::string& name) {
  if (name == "po") return RelKind::po;
  if (name == "a-s1s2") return RelKind::a_s1s2;
  if (name == "po-pfr") return RelKind::po_pfr;
  if (name == "a-s1s2-pfr") return RelKind::a_s1s2_pfr;
  if (name == "po-plus") return RelKind::po_plus;
  if (name == "a-typeB") return RelKind::a_typeB;
  throw std::invalid_argument("unknown relation kind: " + name);
}

std::string rel_kind_name(RelKind k) {
  switch (k) {
    case RelKind::po: return "po";
    case RelKind::a_s1s2: return "a-s1s2";
    case RelKind::po_pfr: return "po-pfr";
    case RelKind::a_s1s2_pfr: return "a-s1s2-pfr";
    case RelKind::po_plus: return "po-plus";
    case RelKind::a_typeB: return "a-typeB";
  }
  return "?";
}

LetterRealizer typeA_realizer() {
  Expr f = gen("f"), r = gen("r"), e = gen("e");
  Expr X = ad(r, f, 2);
  return [=](const Letter& x) -> Expr {
    int i = x.index;
    if (x.family == "c") return ad(f, r, i - 1);
    if (x.family == "d") return ad(f, X, i - 1);
    if (x.family == "a") return i == 1 ? gen("q") : gen("p");
    if (x.family == "b") return ad(f, e, i - 1);
    if (x.family == "K") return gen("K");
    throw std::invalid_argument("no type A realization for " + x.name());
  };
}

LetterRealizer typeA_free_realizer() {
  return [](const Letter& x) -> Expr {
    if (x.family == "c") return gen(x.name());
    if (x.family == "d")
      return leibniz_pair([](int j) { return gen("c" + std::to_string(j)); }, 3, x.index);
    throw std::invalid_argument("no free realization for " + x.name());
  };
}

LetterRealizer typeB_realizer() {
  return [](const Letter& x) -> Expr {
    if (x.family == "d") return gen(x.name());
    if (x.family == "g")
      return leibniz_pair([](int j) { return gen("d" + std::to_string(j)); }, 4, x.index);
    if (x.family == "b") {
      if (x.index == 1) return gen("e");
      if (x.index == 2) return scaled(-1, gen("h"));
      return scaled(-2, gen("f"));
    }
    if (x.family == "K") return gen("K");
    throw std::invalid_argument("no type B realization for " + x.name());
  };
}

Expr realize_lie(const Sl2Vector& v, const LetterRealizer& r) {
  std::vector<std::pair<ParamPoly, Expr>> ts;
  for (const auto& [w, c] : v.terms()) {
    Expr x = r(w.back());
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) x = br(r(w[i]), x);
    ts.push_back({c, x});
  }
  return lin(std::move(ts));
}

Expr realize_assoc(const Sl2Vector& v, const LetterRealizer& r) {
  std::vector<std::pair<ParamPoly, Expr>> ts;
  for (const auto& [w, c] : v.terms()) {
    Expr x = r(w.back());
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) x = prod(r(w[i]), x);
    ts.push_back({c, x});
  }
  return lin(std::move(ts));
}

RelationSet relation_set(RelKind kind, bool full_orbits) {
  RelationSet rs{kind, {}, {}};
  switch (kind) {
    case RelKind::po:
    case RelKind::a_s1s2: {
      rs.generators = {"K", "q", "p", "e", "f", "r"};
      TypeAGens g{gen("K"), gen("q"), gen("p"), gen("e"), gen("f"), gen("r")};
      rs.relations = typeA_list(g, false, kind == RelKind::a_s1s2);
      return rs;
    }
    case RelKind::po_pfr:
    case RelKind::a_s1s2_pfr: {
      rs.generators = {"p", "f", "r"};
      Expr p = gen("p"), f = gen("f"), r = gen("r");
      Expr pr = br(p, r);
      TypeAGens g{ad(p, r, 3), ad(p, r, 2), p, scaled(-1, pr), f, r};
      rs.relations = typeA_list(g, true, kind == RelKind::a_s1s2_pfr);
      return rs;
    }
    case RelKind::po_plus:
    case RelKind::a_typeB:
      break;
  }
  rs.generators = {"K", "e", "h", "f", "d1", "d2", "d3", "d4", "d5"};
  Expr K = gen("K"), e = gen("e"), h = gen("h"), f = gen("f");
  auto d = [](int i) { return gen("d" + std::to_string(i)); };
  auto add = [&](std::string n, int deg, Expr lhs, Expr rhs = nullptr) {
    rs.relations.push_back({std::move(n), deg, std::move(lhs), std::move(rhs)});
  };
  for (const auto& x : rs.generators)
    if (x != "K") add("[K," + x + "]", x[0] == 'd' ? 0 : -2, br(K, gen(x)));
  add("[e,f]=h", 0, br(e, f), h);
  add("[h,e]=2e", 0, br(h, e), scaled(2, e));
  add("[h,f]=-2f", 0, br(h, f), scaled(-2, f));
  for (int i = 1; i <= 5; ++i) {
    std::string si = std::to_string(i);
    add("[f,d" + si + "]", 2, br(f, d(i)), i < 5 ? d(i + 1) : nullptr);
    add("[e,d" + si + "]", 2, br(e, d(i)), i > 1 ? scaled((i - 1) * (6 - i), d(i - 1)) : nullptr);
    add("[h,d" + si + "]", 2, br(h, d(i)), scaled(6 - 2 * i, d(i)));
  }
  auto cat = relation_catalog(kind == RelKind::a_typeB ? CatalogKind::A_s1s2s3 : CatalogKind::po_B);
  auto real = typeB_realizer();
  int degs[] = {4, 6, 6};
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const auto& m = cat[k];
    auto lhs = m.orbit();
    std::size_t count = full_orbits ? lhs.size() : 1;
    Sl2Vector rhs = m.rhs;
    for (std::size_t j = 0; j < count; ++j) {
      std::string n = m.name + (full_orbits ? "/f^" + std::to_string(j) : "");
      add(n, degs[k], realize_lie(lhs[j], real), rhs.is_zero() ? nullptr : realize_assoc(rhs, real));
      rhs = act(Sl2Gen::f, rhs);
    }
  }
  return rs;
}

std::vector<RelationCheck> counit_check_typeB(const ParamPoly& K0) {
  RelationSet rs = relation_set(RelKind::a_typeB, true);
  std::map<std::string, ParamPoly> asg;
  for (const auto& g : rs.generators) asg[g] = ParamPoly();
  asg["K"] = K0;
  struct Named : ScalarModel {
    std::string str(const ParamPoly& x) const { return x.str(); }
  } named;
  return verify_relations_in_model(rs, named, asg, {});
}

RelationCheck counit_check_typeA_phi1(const ParamPoly& K0, const ParamPoly& s1) {
  RelationSet rs = relation_set(RelKind::a_s1s2);
  struct Named : ScalarModel {
    std::string str(const ParamPoly& x) const { return x.str(); }
  } named;
  std::map<std::string, ParamPoly> asg;
  for (const auto& g : rs.generators) asg[g] = ParamPoly();
  asg["K"] = K0;
  auto cs = verify_relations_in_model(rs, named, asg, {{{Sym::s1, s1}}},
                                      [](const Relation& r) { return r.name == "deg2"; });
  return cs.at(0);
}

}  // namespace ddca
