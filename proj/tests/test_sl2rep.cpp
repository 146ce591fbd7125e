#include <gtest/gtest.h>

#include "ddca/sl2rep.hpp"

using namespace ddca;
using namespace ddca::letters;

namespace {

const auto T = WordKind::tensor;
const auto W = WordKind::wedge;
const auto S = WordKind::symmetric;

Sl2Vector vec(WordKind k, std::vector<std::pair<long, Sl2Word>> ts) {
  Sl2Vector v(k);
  for (auto& [c, w] : ts) v.add(w, ParamPoly(c));
  return v;
}

// Weight multiplicities by counting words; V_w multiplicity is mult(w) - mult(w+2).
std::map<int, int> character_decomposition(const WordSpace& sp) {
  int top = 0;
  for (const auto& f : sp.factors) top += static_cast<int>(f.m.to_rat().get_num().get_si());
  std::map<int, int> out;
  for (int w = top; w >= 0; --w) {
    int d = static_cast<int>(weight_basis(sp, w).size()) - static_cast<int>(weight_basis(sp, w + 2).size());
    if (d) out[w] = d;
  }
  return out;
}

void expect_sl2_relations(const WordSpace& sp) {
  int top = 0;
  for (const auto& f : sp.factors) top += static_cast<int>(f.m.to_rat().get_num().get_si());
  for (int w = -top; w <= top; ++w)
    for (const auto& word : weight_basis(sp, w)) {
      Sl2Vector v = Sl2Vector::word(sp.kind, word);
      Sl2Vector ef = act(Sl2Gen::e, act(Sl2Gen::f, v)) - act(Sl2Gen::f, act(Sl2Gen::e, v));
      EXPECT_EQ(ef, act(Sl2Gen::h, v));
      Sl2Vector he = act(Sl2Gen::h, act(Sl2Gen::e, v)) - act(Sl2Gen::e, act(Sl2Gen::h, v));
      EXPECT_EQ(he, act(Sl2Gen::e, v) * ParamPoly(2L));
      Sl2Vector hf = act(Sl2Gen::h, act(Sl2Gen::f, v)) - act(Sl2Gen::f, act(Sl2Gen::h, v));
      EXPECT_EQ(hf, act(Sl2Gen::f, v) * ParamPoly(-2L));
    }
}

// True iff a and b are proportional and nonzero.
bool proportional(const Sl2Vector& a, const Sl2Vector& b) {
  if (a.is_zero() || b.is_zero() || a.terms().size() != b.terms().size()) return false;
  const auto& [w0, c0] = *a.terms().begin();
  auto it = b.terms().find(w0);
  if (it == b.terms().end()) return false;
  return a * it->second == b * c0;
}

}  // namespace

TEST(Sl2, ActionExamples) {
  Sl2Vector cc = Sl2Vector::word(T, {c(1), c(1)});
  EXPECT_EQ(act(Sl2Gen::f, cc), vec(T, {{1, {c(2), c(1)}}, {1, {c(1), c(2)}}}));
  Sl2Vector phi1 = vec(W, {{1, {c(1), c(4)}}, {-1, {c(2), c(3)}}});
  EXPECT_TRUE(act(Sl2Gen::e, phi1).is_zero());
  Sl2Vector d1 = Sl2Vector::word(W, {c(2), c(1)});
  EXPECT_EQ(act(Sl2Gen::h, d1), d1 * ParamPoly(4L));
  EXPECT_TRUE(act(Sl2Gen::e, d1).is_zero());
}

TEST(Sl2, WedgeCanonicalForm) {
  Sl2Vector a = Sl2Vector::word(W, {c(2), c(1)});
  Sl2Vector b = Sl2Vector::word(W, {c(1), c(2)});
  EXPECT_EQ(a + b, Sl2Vector(W));
  EXPECT_TRUE(Sl2Vector::word(W, {c(3), c(3)}).is_zero());
  EXPECT_EQ(Sl2Vector::word(S, {c(2), c(1)}), Sl2Vector::word(S, {c(1), c(2)}));
}

TEST(Sl2, CommutationRelationsOnBases) {
  expect_sl2_relations({W, {c(1), c(1)}});
  expect_sl2_relations({T, {d(1), c(1)}});
  expect_sl2_relations({W, {dB(1), dB(1)}});
  expect_sl2_relations({T, {g(1), dB(1)}});
  expect_sl2_relations({S, {a(1), a(1)}});
  expect_sl2_relations({W, {c(1), c(1), c(1)}});
}

TEST(Sl2, Decompositions) {
  std::vector<std::pair<WordSpace, std::map<int, int>>> cases = {
      {{W, {c(1), c(1)}}, {{4, 1}, {0, 1}}},
      {{T, {d(1), c(1)}}, {{7, 1}, {5, 1}, {3, 1}, {1, 1}}},
      {{W, {dB(1), dB(1)}}, {{6, 1}, {2, 1}}},
      {{T, {g(1), dB(1)}}, {{10, 1}, {8, 1}, {6, 1}, {4, 1}, {2, 1}}},
  };
  for (const auto& [sp, want] : cases) {
    EXPECT_EQ(decomposition(sp), want);
    EXPECT_EQ(character_decomposition(sp), want);
  }
  int dims[] = {6, 20, 10, 35};
  for (int i = 0; i < 4; ++i) {
    int total = 0;
    for (auto [w, n] : cases[i].second) total += n * (w + 1);
    EXPECT_EQ(total, dims[i]);
  }
}

TEST(Sl2, HighestWeightVectors) {
  auto hw = highest_weight_vectors({W, {c(1), c(1)}}, 4);
  ASSERT_EQ(hw.size(), 1u);
  EXPECT_TRUE(proportional(hw[0], Sl2Vector::word(W, {c(2), c(1)})));

  auto psi1 = highest_weight_vectors({T, {d(1), c(1)}}, 1);
  ASSERT_EQ(psi1.size(), 1u);
  EXPECT_TRUE(proportional(
      psi1[0], vec(T, {{-4, {d(1), c(4)}}, {3, {d(2), c(3)}}, {-2, {d(3), c(2)}}, {1, {d(4), c(1)}}})));

  auto phi1b = highest_weight_vectors({W, {dB(1), dB(1)}}, 2);
  ASSERT_EQ(phi1b.size(), 1u);
  EXPECT_TRUE(proportional(phi1b[0], vec(W, {{3, {dB(2), dB(3)}}, {-2, {dB(1), dB(4)}}})));

  auto chi = highest_weight_vectors({W, {d(1), d(1)}}, 2);
  ASSERT_EQ(chi.size(), 1u);
  EXPECT_TRUE(proportional(chi[0], vec(W, {{3, {d(3), d(2)}}, {-2, {d(4), d(1)}}})));

  EXPECT_TRUE(highest_weight_vectors({W, {c(1), c(1)}}, 2).empty());
}

TEST(Sl2, Orbits) {
  auto oc = f_orbit(Sl2Vector::word(T, {c(1)}));
  ASSERT_EQ(oc.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(oc[i], Sl2Vector::word(T, {c(i + 1)}));
  auto oa = f_orbit(Sl2Vector::word(T, {a(1)}));
  ASSERT_EQ(oa.size(), 2u);
  EXPECT_EQ(oa[1], Sl2Vector::word(T, {a(2)}));
  auto od = f_orbit(Sl2Vector::word(W, {c(2), c(1)}));
  EXPECT_EQ(od.size(), 5u);
  EXPECT_TRUE(act(Sl2Gen::f, od.back()).is_zero());
  EXPECT_THROW(f_orbit(Sl2Vector::word(T, {c(2)})), NotHighestWeight);
}

TEST(Sl2, SymbolicModule) {
  // e f^{i-1} v_1 = (i-1)(l-i+2) f^{i-2} v_1 in V_l
  auto img = v(3).e_image();
  ASSERT_TRUE(img);
  EXPECT_EQ(img->first, ParamPoly::parse("2*l - 2"));
  EXPECT_EQ(img->second, v(2));
  Sl2Vector x = Sl2Vector::word(T, {v(2)});
  Sl2Vector ef = act(Sl2Gen::e, act(Sl2Gen::f, x)) - act(Sl2Gen::f, act(Sl2Gen::e, x));
  EXPECT_EQ(ef, act(Sl2Gen::h, x));
}

TEST(Sl2, Catalogs) {
  for (auto kind : {CatalogKind::po_A, CatalogKind::A_s1s2, CatalogKind::po_B, CatalogKind::A_s1s2s3}) {
    auto cat = relation_catalog(kind);
    for (const auto& r : cat) {
      SCOPED_TRACE(r.name);
      EXPECT_TRUE(act(Sl2Gen::e, r.hw).is_zero());
      EXPECT_EQ(act(Sl2Gen::h, r.hw), r.hw * ParamPoly(static_cast<long>(r.m)));
      EXPECT_TRUE(act_power(Sl2Gen::f, r.hw, r.m + 1).is_zero());
      EXPECT_EQ(r.orbit().size(), static_cast<std::size_t>(r.m + 1));
      // the right-hand side lies in a module of the same type
      if (!r.rhs.is_zero()) {
        EXPECT_TRUE(act(Sl2Gen::e, r.rhs).is_zero());
        EXPECT_EQ(r.rhs.weight(), ParamPoly(static_cast<long>(r.m)));
      }
    }
  }
  auto a = relation_catalog(CatalogKind::po_A);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0].name, "phi1");
  EXPECT_EQ(a[0].m, 0);
  EXPECT_EQ(a[1].m, 7);
  EXPECT_EQ(a[2].m, 1);
  EXPECT_EQ(a[3].m, 2);
  for (const auto& r : a) EXPECT_TRUE(r.rhs.is_zero());

  auto d = relation_catalog(CatalogKind::A_s1s2);
  EXPECT_EQ(d[2].rhs, Sl2Vector::word(T, {letters::a(1)}, ParamPoly::parse("15*s1")));
  auto b = relation_catalog(CatalogKind::A_s1s2s3);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].m, 2);
  EXPECT_EQ(b[0].rhs, Sl2Vector::word(T, {letters::b(1)}, ParamPoly::parse("6*s1")));
  EXPECT_EQ(b[1].m, 10);
  EXPECT_EQ(b[2].m, 4);
  EXPECT_THROW(catalog_kind_from_name("nope"), std::invalid_argument);
}
