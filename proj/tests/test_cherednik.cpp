#include <gtest/gtest.h>

#include <random>

#include "ddca/beta.hpp"
#include "ddca/linalg.hpp"

using namespace ddca;

namespace {

const ParamPoly t = ParamPoly::var(Sym::t), k = ParamPoly::var(Sym::k);

CherElement mono(const Cherednik& h, std::vector<std::uint8_t> a, std::vector<std::uint8_t> b,
                 const GroupElem& g, const ParamPoly& c = 1) {
  return CherElement(CherKey{std::move(a), std::move(b), g}, c);
}

SphElement sph(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b, const ParamPoly& c = 1) {
  return SphElement(SphKey{std::move(a), std::move(b)}, c);
}

// sum_i x_i^r y_i^q as a commutative polynomial
SphElement power_sum(int n, int r, int q) {
  SphElement p;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint8_t> a(n), b(n);
    a[i] = r;
    b[i] = q;
    p.add(SphKey{a, b}, 1);
  }
  return p;
}

SphElement degree_part(const SphElement& u, int d) {
  SphElement r;
  for (const auto& [key, c] : u.terms) {
    int s = 0;
    for (std::size_t i = 0; i < key.a.size(); ++i) s += key.a[i] + key.b[i];
    if (s == d) r.add(key, c);
  }
  return r;
}

// x^a d^b products in n commuting variables: d^b x^c = sum_j C(b,j) c!/(c-j)! x^{c-j} d^{b-j} per variable
SphElement weyl_n_product(const SphElement& u, const SphElement& v, int n) {
  SphElement r;
  for (const auto& [ku, cu] : u.terms)
    for (const auto& [kv, cv] : v.terms) {
      // expand variable by variable
      std::vector<std::pair<SphKey, Rat>> cur{{SphKey{std::vector<std::uint8_t>(n), std::vector<std::uint8_t>(n)}, Rat(1)}};
      for (int i = 0; i < n; ++i) {
        std::vector<std::pair<SphKey, Rat>> next;
        int b = ku.b[i], c = kv.a[i];
        Rat binom(1), fall(1);
        for (int j = 0; j <= std::min(b, c); ++j) {
          for (const auto& [key, w] : cur) {
            SphKey k2 = key;
            k2.a[i] = ku.a[i] + c - j;
            k2.b[i] = b - j + kv.b[i];
            next.push_back({k2, w * binom * fall});
          }
          binom = binom * (b - j) / (j + 1);
          fall *= c - j;
        }
        cur = std::move(next);
      }
      for (const auto& [key, w] : cur) r.add(key, cu * cv * w);
    }
  return r;
}

}  // namespace

TEST(Cherednik, BasicCommutators) {
  Cherednik h(CherType::A, 2);
  GroupElem id = GroupElem::identity(2), s = GroupElem::transposition(2, 0, 1);
  EXPECT_EQ(h.product(h.y(0), h.x(0)), mono(h, {1, 0}, {1, 0}, id) + h.one() * t - h.g(s) * k);
  EXPECT_EQ(h.product(h.y(0), h.x(1)), mono(h, {0, 1}, {1, 0}, id) + h.g(s) * k);
  EXPECT_EQ(h.product(h.g(s), h.x(0)), mono(h, {0, 1}, {0, 0}, s));
  EXPECT_EQ(h.product(h.x(1), h.x(0)), h.product(h.x(0), h.x(1)));
}

TEST(Cherednik, TypeBCommutatorsFromTheSymplecticForm) {
  // [y_i, x_j] = t w(y_i, x_j) - k sum_S w(y_i, (1-s)x_j) s - c sum_i w((1-g)y_i, (1-g)x_j) g / 2, done by hand
  Cherednik h(CherType::B, 2);
  auto s = GroupElem::transposition(2, 0, 1), g0 = GroupElem::gamma(2, 0), g1 = GroupElem::gamma(2, 1);
  ParamPoly c = ParamPoly::var(Sym::c);
  EXPECT_EQ(h.commutator(0, 0), h.one() * t - h.g(s) * k - h.g(s * g0 * g1) * k - h.g(g0) * (Rat(2) * c));
  EXPECT_EQ(h.commutator(0, 1), h.g(s) * k - h.g(s * g0 * g1) * k);
  EXPECT_EQ(h.product(h.g(g0), h.y(0)), h.product(h.y(0), h.g(g0)) * ParamPoly(-1));
  EXPECT_EQ(h.product(h.g(g0), h.x(1)), h.product(h.x(1), h.g(g0)));
}

TEST(Cherednik, GroupLaw) {
  auto g = group_elements(CherType::B, 3);
  EXPECT_EQ(g.size(), 48u);
  EXPECT_EQ(group_elements(CherType::A, 4).size(), 24u);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto a = g[pick(rng)], b = g[pick(rng)], c = g[pick(rng)];
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * a.inverse(), GroupElem::identity(3));
    // action is a homomorphism
    std::vector<std::uint8_t> e{1, 2, 3}, u, v, w;
    int s1 = b.act(e, u), s2 = a.act(u, v), s3 = (a * b).act(e, w);
    ASSERT_EQ(v, w);
    ASSERT_EQ(s1 * s2, s3);
  }
}

TEST(Cherednik, Symmetrizer) {
  Cherednik a2(CherType::A, 2), b1(CherType::B, 1), a3(CherType::A, 3);
  EXPECT_EQ(a2.symmetrizer(), (a2.one() + a2.g(GroupElem::transposition(2, 0, 1))) * ParamPoly(rat(1, 2)));
  EXPECT_EQ(b1.symmetrizer(), (b1.one() + b1.g(GroupElem::gamma(1, 0))) * ParamPoly(rat(1, 2)));
  auto e = a3.symmetrizer();
  EXPECT_EQ(a3.product(e, e), e);
  Cherednik b2(CherType::B, 2);
  EXPECT_EQ(b2.product(b2.symmetrizer(), b2.symmetrizer()), b2.symmetrizer());
}

TEST(Cherednik, PbwDimensions) {
  // span of word * g over words of length <= d has dimension dim S_{<=d} * |G|
  for (auto [type, n, d] : {std::tuple{CherType::A, 2, 4}, {CherType::A, 3, 4}, {CherType::B, 1, 4},
                            {CherType::B, 2, 4}, {CherType::B, 3, 2}}) {
    Cherednik h(type, n, 1, rat(1, 2), rat(1, 3));
    std::vector<CherElement> layer{h.one()}, gens;
    for (int i = 0; i < n; ++i) {
      gens.push_back(h.x(i));
      gens.push_back(h.y(i));
    }
    EchelonBasis<CherKey> span;
    auto offer = [&](const CherElement& w) {
      for (const auto& g : h.group()) {
        std::map<CherKey, Rat> v;
        for (const auto& [key, c] : h.product(w, h.g(g)).terms) v[key] = c.to_rat();
        span.insert(v);
      }
    };
    offer(h.one());
    for (int len = 1; len <= d; ++len) {
      std::vector<CherElement> next;
      for (const auto& w : layer)
        for (const auto& g : gens) {
          next.push_back(h.product(g, w));
          offer(next.back());
        }
      layer = std::move(next);
    }
    long sym = 1;  // C(2n + d, d)
    for (int i = 1; i <= d; ++i) sym = sym * (2 * n + i) / i;
    EXPECT_EQ(static_cast<long>(span.rank()), sym * static_cast<long>(h.group().size())) << n << " " << d;
  }
}

TEST(Cherednik, Associativity) {
  std::mt19937 rng(2024);
  for (auto [type, n] : {std::pair{CherType::A, 2}, {CherType::A, 3}, {CherType::B, 2}, {CherType::B, 3}}) {
    Cherednik h(type, n);
    std::uniform_int_distribution<int> ex(0, 3), pos(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick(0, h.group().size() - 1);
    auto random_mono = [&] {
      std::vector<std::uint8_t> a(n), b(n);
      int deg = ex(rng);
      for (int i = 0; i < deg; ++i) (ex(rng) % 2 ? a : b)[pos(rng)]++;
      return mono(h, a, b, h.group()[pick(rng)]);
    };
    for (int i = 0; i < 50; ++i) {
      auto u = random_mono(), v = random_mono(), w = random_mono();
      ASSERT_EQ(h.product(h.product(u, v), w), h.product(u, h.product(v, w)));
    }
  }
}

TEST(Cherednik, TElements) {
  Cherednik h1(CherType::A, 1);
  // (x y + y x)/2 = x y + t/2
  EXPECT_EQ(h1.T(1, 1), sph({1}, {1}) + sph({0}, {0}, t * rat(1, 2)));
  for (int n : {2, 3, 4}) {
    Cherednik h(CherType::A, n);
    EXPECT_EQ(h.sph_bracket(h.T(0, 1), h.T(1, 0)), h.sph_one() * (t * Rat(n)));
    for (auto [r, q] : {std::pair{2, 0}, {1, 1}, {2, 1}, {0, 3}}) {
      auto x = h.T(r, q);
      EXPECT_TRUE(h.is_spherical(x));
      EXPECT_EQ(Cherednik::top(x), power_sum(n, r, q));
    }
  }
  Cherednik b2(CherType::B, 2);
  EXPECT_TRUE(b2.T(1, 0).is_zero());
  EXPECT_TRUE(b2.is_spherical(b2.T(2, 2)));
}

TEST(Cherednik, FullAndSphericalAgree) {
  // T built in the full algebra with the symmetrizer absorbs e on both sides
  for (auto type : {CherType::A, CherType::B}) {
    Cherednik h(type, 2);
    CherElement e = h.symmetrizer(), sum;
    for (int i = 0; i < 2; ++i) {
      CherElement xy = h.product(h.x(i), h.y(i)), yx = h.product(h.y(i), h.x(i));
      CherElement xx = h.product(h.x(i), h.x(i));
      sum += h.product(h.product(xy + yx, xx), e) * ParamPoly(rat(1, 2));
    }
    EXPECT_EQ(h.product(e, sum), sum);
    EXPECT_EQ(h.product(sum, e), sum);
    // the spherical product matches the full product
    CherElement full = h.product(sum, sum);
    EXPECT_EQ(h.to_sph(full), h.sph_product(h.to_sph(sum), h.to_sph(sum)));
  }
}

TEST(Cherednik, TmNormalization) {
  Cherednik h(CherType::A, 2);
  // average over orderings: T({(1,0)^2}) = T10^2
  EXPECT_EQ(h.Tm(TIndex::single(1, 0, 2)), h.sph_product(h.T(1, 0), h.T(1, 0)));
  EXPECT_EQ(h.Tm(TIndex::single(2, 0)), h.T(2, 0));
  Cherednik h3(CherType::A, 3);
  TIndex m{{{{1, 1}, 1}, {{2, 0}, 1}}};
  EXPECT_EQ(Cherednik::top(h3.Tm(m)), h3.leading_symbol(m));
  EXPECT_EQ(h3.Tm(m), (h3.sph_product(h3.T(1, 1), h3.T(2, 0)) + h3.sph_product(h3.T(2, 0), h3.T(1, 1))) *
                          ParamPoly(rat(1, 2)));
}

TEST(Cherednik, TIndexParse) {
  TIndex m = TIndex::parse("(1,0)^2, (1,1)");
  EXPECT_EQ(m.weight(), 4);
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(TIndex::parse(m.str()), m);
  EXPECT_TRUE(TIndex::parse("1").empty());
  EXPECT_THROW(TIndex::parse("(0,0)"), std::invalid_argument);
  EXPECT_THROW(TIndex::parse("(1,2"), std::invalid_argument);
  EXPECT_EQ(tindices_of_weight(2).size(), 6u);
}

TEST(Cherednik, TIndicesCountedByInvariants) {
  // number of T-indices of weight w = number of multisets of (r,q) pairs = dim of invariants for large n
  for (int w = 1; w <= 4; ++w) {
    Cherednik h(CherType::A, w);
    // count S_w-orbits of degree-w monomials in (x_i, y_i)
    std::set<std::vector<std::pair<int, int>>> orbits;
    std::function<void(int, int, std::vector<std::pair<int, int>>)> rec = [&](int i, int left,
                                                                               std::vector<std::pair<int, int>> cur) {
      if (i == w) {
        if (left == 0) {
          std::sort(cur.begin(), cur.end());
          orbits.insert(cur);
        }
        return;
      }
      for (int a = 0; a <= left; ++a)
        for (int b = 0; a + b <= left; ++b) {
          auto next = cur;
          next.push_back({a, b});
          rec(i + 1, left - a - b, next);
        }
    };
    rec(0, w, {});
    EXPECT_EQ(tindices_of_weight(w).size(), orbits.size()) << w;
  }
}

TEST(Cherednik, LeadingSymbolsFormABasis) {
  Cherednik h(CherType::A, 3);
  for (int L = 1; L <= 3; ++L) {
    auto idx = tindices_of_weight(L);
    EchelonBasis<SphKey> span;
    for (const auto& m : idx) {
      std::map<SphKey, Rat> v;
      for (const auto& [key, c] : h.leading_symbol(m).terms) v[key] = c.to_rat();
      EXPECT_TRUE(span.insert(v));
    }
    // every symmetrized degree-L monomial lies in the span
    std::vector<std::uint8_t> a(3), b(3);
    a[0] = static_cast<std::uint8_t>(L);
    SphElement orbit;
    for (const auto& g : h.group()) {
      SphKey key;
      g.act(a, key.a);
      g.act(b, key.b);
      orbit.add(key, 1);
    }
    std::map<SphKey, Rat> v;
    for (const auto& [key, c] : orbit.terms) v[key] = c.to_rat();
    EXPECT_TRUE(span.contains(v));
  }
}

TEST(Cherednik, Decompose) {
  Cherednik h2(CherType::A, 2);
  EXPECT_EQ(h2.decompose(h2.T(1, 1)), (std::map<TIndex, ParamPoly>{{TIndex::single(1, 1), 1}}));
  EXPECT_EQ(h2.decompose(h2.sph_one()), (std::map<TIndex, ParamPoly>{{TIndex{}, 1}}));
  EXPECT_THROW(h2.decompose(h2.T(3, 0)), DegreeExceedsRank);
  for (int n : {3, 4}) {
    Cherednik h(CherType::A, n);
    auto c = h.decompose(h.sph_bracket(h.T(1, 1), h.T(2, 0)));
    EXPECT_EQ(c.at(TIndex::single(2, 0)), t * Rat(2));
    // reassembling gives back the element
    SphElement back;
    for (const auto& [m, x] : c) back += h.Tm(m) * x;
    EXPECT_EQ(back, h.sph_bracket(h.T(1, 1), h.T(2, 0)));
  }
}

TEST(Cherednik, GradedBracketLaw) {
  for (int n : {2, 3, 4}) {
    Cherednik h(CherType::A, n, 1);
    for (int L1 = 1; L1 <= 3; ++L1)
      for (int r1 = 0; r1 <= L1; ++r1)
        for (int L2 = 1; L2 <= 3; ++L2)
          for (int r2 = 0; r2 <= L2; ++r2) {
            int q1 = L1 - r1, q2 = L2 - r2;
            SphElement br = h.sph_bracket(h.T(r1, q1), h.T(r2, q2));
            int coef = q1 * r2 - q2 * r1;
            SphElement expect;
            if (coef) {
              int r = r1 + r2 - 1, q = q1 + q2 - 1;
              expect = (r + q == 0 ? h.sph_one() * ParamPoly(n) : power_sum(n, r, q)) * ParamPoly(coef);
            }
            ASSERT_LE(Cherednik::degree(br), L1 + L2 - 2);
            ASSERT_EQ(degree_part(br, L1 + L2 - 2), expect) << n << " " << r1 << q1 << " " << r2 << q2;
          }
  }
}

TEST(Cherednik, KZeroIsInvariantWeyl) {
  for (int n : {1, 2, 3}) {
    Cherednik h(CherType::A, n, 1, 0);
    std::vector<SphElement> xs{h.T(1, 0), h.T(0, 2), h.T(1, 1), h.T(2, 1), h.T(0, 3)};
    for (const auto& u : xs)
      for (const auto& v : xs) ASSERT_EQ(h.sph_product(u, v), weyl_n_product(u, v, n));
  }
  Cherednik b(CherType::B, 2, 1, 0, 0);
  std::vector<SphElement> xs{b.T(2, 0), b.T(1, 1), b.T(0, 2), b.T(3, 1)};
  for (const auto& u : xs)
    for (const auto& v : xs) ASSERT_EQ(b.sph_product(u, v), weyl_n_product(u, v, 2));
}

TEST(Cherednik, Omega) {
  Cherednik h3(CherType::A, 3);
  CherElement e = h3.symmetrizer();
  EXPECT_EQ(h3.product(h3.omega(), e), e * ParamPoly(3));
  Cherednik h4(CherType::A, 4);
  auto s = h4.g(GroupElem::transposition(4, 0, 1));
  EXPECT_EQ(h4.product(h4.omega(), s), h4.product(s, h4.omega()));
  Cherednik h2(CherType::A, 2);
  CherElement sign = (h2.one() - h2.g(GroupElem::transposition(2, 0, 1))) * ParamPoly(rat(1, 2));
  EXPECT_EQ(h2.product(h2.omega(), sign), sign * ParamPoly(-1));
}

TEST(Beta, TypeA) {
  for (int n : {2, 3, 4}) {
    auto cs = verify_beta_finite(CherType::A, n);
    EXPECT_EQ(cs.size(), relation_set(RelKind::a_s1s2).relations.size());
    for (const auto& c : cs) EXPECT_TRUE(c.ok) << n << " " << c.name << " " << c.residual;
  }
  EXPECT_TRUE(all_ok(verify_beta_finite(CherType::A, 3, 0)));
}

TEST(Beta, TypeAWaypoints) {
  Cherednik h = beta_algebra(CherType::A, 3);
  auto a = beta_images(h);
  EXPECT_EQ(h.sph_bracket(a["e"], a["f"]), h.T(1, 1));
  EXPECT_EQ(h.sph_bracket(h.T(0, 1), h.T(3, 0)), h.T(2, 0) * ParamPoly(3));
}

TEST(Beta, TypeAWrongParametersFail) {
  Cherednik h = beta_algebra(CherType::A, 3);
  SphericalModel m{h};
  auto cs = verify_relations_in_model(relation_set(RelKind::a_s1s2), m, beta_images(h),
                                      {{{Sym::s1, ParamPoly(1)}, {Sym::s2, k * (k + ParamPoly(1))}}});
  std::set<std::string> bad;
  for (const auto& c : cs)
    if (!c.ok) bad.insert(c.name);
  EXPECT_TRUE(bad.count("deg2"));
}

TEST(Beta, TypeB) {
  for (int n : {2, 3}) {
    auto cs = verify_beta_finite(CherType::B, n);
    for (const auto& c : cs) {
      bool psi2 = c.name.rfind("psi'2", 0) == 0;
      EXPECT_EQ(c.ok, !psi2) << n << " " << c.name;
    }
    EXPECT_TRUE(all_ok(verify_psi2_observed(n)));
  }
  auto s = beta_s_values(CherType::B);
  EXPECT_EQ(s[Sym::s1] - s[Sym::s2], Rat(5) * (s[Sym::s3] + ParamPoly(1)));
}
