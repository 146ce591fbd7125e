#include <gtest/gtest.h>

#include "ddca/galois.hpp"

using namespace ddca;

namespace {

RatFunc R(long a, long b = 1) { return RatFunc(ParamPoly(rat(a, b))); }
RatFunc k_() { return RatFunc(ParamPoly::var(Sym::k)); }

bool all_ok(const std::vector<IdentityCheck>& v) {
  for (const auto& c : v)
    if (!c.ok) return false;
  return true;
}

const IdentityCheck& find(const std::vector<IdentityCheck>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Galois, EssentialParamsA) {
  auto [s1, s2] = essential_params_A({R(2), R(1)});
  EXPECT_EQ(s1, R(1));
  EXPECT_EQ(s2, R(6));
  // independent evaluation at k = 1/3, nu = 2: q = 13/9, k(k+1) = 4/9
  auto [a, b] = essential_params_A({R(1, 3), R(2)});
  EXPECT_EQ(a, R(13 * 4, 9) - R(4 * 8, 9));
  EXPECT_EQ(b, R(32, 9));
}

TEST(Galois, SymmetryTypeA) {
  auto checks = verify_symmetry_group(CherType::A);
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
  EXPECT_EQ(symmetry_group_order(CherType::A), 6);
  // numeric orbit of (2, 1): all six points give (1, 6)
  ParamPoint p{R(2), R(1)};
  for (auto q : {g1(p), g2(p), g1(g2(p)), g2(g1(p)), g1(g2(g1(p)))}) {
    auto [s1, s2] = essential_params_A(q);
    EXPECT_EQ(s1, R(1));
    EXPECT_EQ(s2, R(6));
  }
}

TEST(Galois, SymmetryTypeB) {
  auto checks = verify_symmetry_group(CherType::B);
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
  EXPECT_EQ(symmetry_group_order(CherType::B), 12);
}

TEST(Galois, CubicSign) {
  // k = 1: zeta = 3, u = 27/4
  RatFunc z = R(3), u = R(27, 4);
  EXPECT_TRUE((z.pow(3) - u * z - u).is_zero());
  EXPECT_EQ(z.pow(3) - u * z + u, R(27, 2));
  auto [plus, minus] = cubic_variants(CherType::A);
  EXPECT_TRUE(minus.is_zero());
  EXPECT_FALSE(plus.is_zero());
  EXPECT_EQ(plus.subs({{Sym::k, R(1)}}), R(27, 2));
  auto checks = cubic_identity_check();
  EXPECT_FALSE(find(checks, "A: displayed zeta^3 - u zeta + u = 0").ok);
  EXPECT_TRUE(find(checks, "A: exactly one sign variant vanishes").ok);
  EXPECT_TRUE(find(checks, "B: exactly one sign variant vanishes").ok);
}

TEST(Galois, UDenominator) {
  auto checks = cubic_identity_check();
  EXPECT_TRUE(find(checks, "u = (s1*+s2*)^3/s2*^2 = (k^2+k+1)^3/(k^2(k+1)^2)").ok);
  const auto& shown = find(checks, "displayed u = (s1*+s2*)^3/s1*^2 is free of nu");
  EXPECT_FALSE(shown.ok);
  EXPECT_TRUE(shown.discrepancy);
  // nu = 1 and nu = 2 at k = 2
  auto [a1, b1] = essential_params_A({R(2), R(1)});
  auto [a2, b2] = essential_params_A({R(2), R(2)});
  EXPECT_EQ((a1 + b1).pow(3) / b1.pow(2), (a2 + b2).pow(3) / b2.pow(2));
  EXPECT_NE((a1 + b1).pow(3) / a1.pow(2), (a2 + b2).pow(3) / a2.pow(2));
}

TEST(Galois, TypeBIdentities) {
  auto checks = verify_typeB_param_identities();
  for (const auto& c : checks)
    if (!c.discrepancy) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
  EXPECT_FALSE(find(checks, "displayed reduction lam'^2 = lam^2 - 4k(k+1)nu keeps (s1, s2, s3)").ok);
  // numeric: k = 1, lam = 3, K = 0 gives s1 = -3, s2 = -18
  auto s = typeB_params(R(1), R(9), R(0));
  EXPECT_EQ(s.s1, R(-3));
  EXPECT_EQ(s.s2, R(-18));
  EXPECT_EQ(s.s3, R(2));
  EXPECT_EQ(R(9) * s.s1 - R(4) * s.s2, R(45));
}

TEST(Galois, DiscrepanciesFlagged) {
  int flagged = 0;
  for (const auto& c : cubic_identity_check())
    if (c.discrepancy && !c.ok) ++flagged;
  for (const auto& c : verify_typeB_param_identities())
    if (c.discrepancy && !c.ok) ++flagged;
  EXPECT_EQ(flagged, 4);  // u denominator, cubic sign in A and B, reduction sign
}
