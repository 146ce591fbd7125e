#include "ddca/beta.hpp"

namespace ddca {

Cherednik beta_algebra(CherType type, int n, const ParamPoly& k, const ParamPoly& lam) {
  ParamPoly c = type == CherType::B ? lam - ParamPoly(rat(1, 2)) : ParamPoly();
  return Cherednik(type, n, 1, k, c);
}

std::map<std::string, SphElement> beta_images(Cherednik& h) {
  std::map<std::string, SphElement> a;
  a["K"] = h.sph_one() * ParamPoly(h.rank());
  a["e"] = h.T(2, 0) * ParamPoly(rat(-1, 2));
  a["f"] = h.T(0, 2) * ParamPoly(rat(1, 2));
  if (h.type() == CherType::A) {
    a["q"] = h.T(1, 0);
    a["p"] = h.T(0, 1);
    a["r"] = h.T(3, 0) * ParamPoly(rat(1, 6));
    return a;
  }
  a["h"] = h.sph_bracket(a["e"], a["f"]);
  SphElement d = h.T(4, 0) * ParamPoly(rat(1, 8));
  for (int i = 1; i <= 5; ++i) {
    a["d" + std::to_string(i)] = d;
    d = h.sph_bracket(a["f"], d);
  }
  return a;
}

std::map<Sym, ParamPoly> beta_s_values(CherType type) {
  ParamPoly k = ParamPoly::var(Sym::k), K = ParamPoly::var(Sym::K), lam = ParamPoly::var(Sym::lam);
  ParamPoly kk = k * (k + ParamPoly(1));
  if (type == CherType::A) return {{Sym::s1, ParamPoly(1) + kk * (ParamPoly(1) - K)}, {Sym::s2, kk}};
  ParamPoly base = Rat(4) * kk * K + lam * lam;
  ParamPoly q = k * k + k + ParamPoly(1);
  return {{Sym::s1, base - Rat(4) * q}, {Sym::s2, base - Rat(9) * q}, {Sym::s3, kk}};
}

std::vector<RelationCheck> verify_beta_finite(CherType type, int n, const ParamPoly& k,
                                              const std::function<bool(const Relation&)>& filter,
                                              const ParamPoly& lam) {
  Cherednik h = beta_algebra(type, n, k, lam);
  SphericalModel model{h};
  RelationSet rs = type == CherType::A ? relation_set(RelKind::a_s1s2) : relation_set(RelKind::a_typeB, true);
  ParamSubs params{beta_s_values(type), {{Sym::K, ParamPoly(n)}, {Sym::k, k}, {Sym::lam, lam}}};
  return verify_relations_in_model(rs, model, beta_images(h), params, filter);
}

}  // namespace ddca

namespace ddca {

std::vector<RelationCheck> verify_psi2_observed(int n, const ParamPoly& k, const ParamPoly& lam) {
  Cherednik h = beta_algebra(CherType::B, n, k, lam);
  SphericalModel model{h};
  RelationSet rs{RelKind::a_typeB, {}, {}};
  auto real = typeB_realizer();
  for (const auto& m : relation_catalog(CatalogKind::A_s1s2s3)) {
    if (m.name != "psi'2") continue;
    Sl2Vector rhs(WordKind::tensor);
    rhs.add({letters::b(1), letters::b(1)}, ParamPoly::var(Sym::s3) * Rat(-720));
    rhs.add({letters::dB(1)}, ParamPoly::var(Sym::s2) * Rat(-288));
    auto lhs = m.orbit();
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      rs.relations.push_back({m.name + "/f^" + std::to_string(j), 6, realize_lie(lhs[j], real), realize_assoc(rhs, real)});
      rhs = act(Sl2Gen::f, rhs);
    }
  }
  ParamSubs params{beta_s_values(CherType::B), {{Sym::K, ParamPoly(n)}, {Sym::k, k}, {Sym::lam, lam}}};
  return verify_relations_in_model(rs, model, beta_images(h), params);
}

}  // namespace ddca
