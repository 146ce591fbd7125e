#include "ddca/models.hpp"

namespace ddca {

std::map<std::string, WeylElement> weyl_assignment(RelKind kind) {
  std::map<std::string, WeylElement> a{{"p", weyl(0, 1)}, {"f", weyl(0, 2, rat(1, 2))}, {"r", weyl(3, 0, rat(1, 6))}};
  if (kind == RelKind::po_pfr || kind == RelKind::a_s1s2_pfr) return a;
  if (kind != RelKind::po && kind != RelKind::a_s1s2) throw std::invalid_argument("no Weyl images for this kind");
  a["K"] = weyl(0, 0);
  a["q"] = weyl(1, 0);
  a["e"] = weyl(2, 0, rat(-1, 2));
  return a;
}

std::map<std::string, PoElement> po_assignment(RelKind kind) {
  std::map<std::string, PoElement> a{{"K", po(0, 0)}, {"e", po(2, 0, rat(-1, 2))}, {"f", po(0, 2, rat(1, 2))}};
  switch (kind) {
    case RelKind::po:
    case RelKind::a_s1s2:
      a["q"] = po(1, 0);
      a["p"] = po(0, 1);
      a["r"] = po(3, 0, rat(1, 6));
      return a;
    case RelKind::po_pfr:
    case RelKind::a_s1s2_pfr:
      return {{"p", po(0, 1)}, {"f", a["f"]}, {"r", po(3, 0, rat(1, 6))}};
    case RelKind::po_plus:
    case RelKind::a_typeB: {
      a["h"] = po(1, 1);
      PoElement d = po(4, 0, rat(1, 8));
      for (int i = 1; i <= 5; ++i) {
        a["d" + std::to_string(i)] = d;
        d = po_bracket(a["f"], d);
      }
      return a;
    }
  }
  return a;
}

std::map<std::string, GlLambda::Elem> gl_assignment() {
  using G = GlLambda;
  std::map<std::string, G::Elem> a{{"K", G::scalar(1)}, {"e", G::e()}, {"h", G::h()}, {"f", G::f()}};
  G::Elem d = G::product(G::e(), G::e()) * ParamPoly(rat(1, 2));
  for (int i = 1; i <= 5; ++i) {
    a["d" + std::to_string(i)] = d;
    d = G::bracket(G::f(), d);
  }
  return a;
}

ParamSubs gl_params() {
  ParamPoly l = ParamPoly::var(Sym::lam);
  return {{{Sym::s1, l * l - ParamPoly(4L)}, {Sym::s2, l * l - ParamPoly(9L)}, {Sym::s3, ParamPoly()}}};
}

}  // namespace ddca
