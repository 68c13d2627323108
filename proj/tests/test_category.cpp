#include <gtest/gtest.h>

#include <cmath>

#include "bax/catalog.hpp"
#include "bax/json_io.hpp"
#include "oracles.hpp"

using namespace bax;

namespace {

const double kTol = 1e-12;

}  // namespace

TEST(Spin, ParseAndPhase) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_THROW(parse_rational("x/2"), DomainError);
  // exact reduction mod 2 keeps large spins on the unit circle
  EXPECT_LT(std::abs(phase_pi(Rational(2000001, 2)) - cplx(0, 1)), 1e-15);
  EXPECT_LT(std::abs(phase_pi(Rational(1)) + 1.0), 1e-15);
}

TEST(Su2Catalog, LabelsAndDuals) {
  auto cat = build_su2k(4);
  ASSERT_EQ(cat.size(), 5);
  EXPECT_EQ(cat.display(1), "1/2");
  EXPECT_EQ(cat.display(2), "1");
  EXPECT_EQ(cat.label("3/2"), 3);
  for (int a = 0; a < cat.size(); ++a) EXPECT_TRUE(cat.self_dual(a));
  EXPECT_THROW(cat.label("5/2"), DomainError);
  EXPECT_THROW(cat.check_label(5), DomainError);
}

TEST(Su2Catalog, TruncatedClebschGordan) {
  for (int k = 1; k <= 8; ++k) {
    auto cat = build_su2k(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) {
          bool ok = c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0 && a + b + c <= 2 * k;
          EXPECT_EQ((*cat.rules)(a, b, c), ok ? 1 : 0) << k << ":" << a << b << c;
        }
  }
}

TEST(Su2Catalog, PerronDimsMatchQuantumIntegers) {
  for (int k = 1; k <= 8; ++k) {
    auto cat = build_su2k(k);
    auto d = compute_quantum_dims(*cat.rules);
    for (int j = 0; j <= k; ++j) {
      EXPECT_NEAR(d.d[j], oracle::su2_dim(k, j), kTol);
      EXPECT_NEAR(cat.dims->d[j], oracle::su2_dim(k, j), kTol);
    }
  }
}

TEST(Su2Catalog, SpinHalfBlockIsIsingLike) {
  // [F^{1/2 1/2 1/2}_{1/2}] = [[1/d, s],[s, -1/d]] with s^2 = 1 - 1/d^2
  for (int k = 2; k <= 6; ++k) {
    auto cat = build_su2k(k);
    double d = oracle::su2_dim(k, 1);
    const auto& F = *cat.f;
    EXPECT_NEAR(std::abs(F(1, 1, 1, 1, 0, 0) - 1.0 / d), 0.0, kTol);
    EXPECT_NEAR(std::abs(F(1, 1, 1, 1, 2, 2) + 1.0 / d), 0.0, kTol);
    EXPECT_NEAR(std::abs(F(1, 1, 1, 1, 0, 2)), std::sqrt(1 - 1 / (d * d)), kTol);
    EXPECT_NEAR(std::abs(F(1, 1, 1, 1, 0, 2) - F(1, 1, 1, 1, 2, 0)), 0.0, kTol);
  }
}

TEST(Su2Catalog, Twists) {
  for (int k = 2; k <= 6; ++k) {
    auto cat = build_su2k(k);
    for (int m = 0; m <= k; ++m) EXPECT_EQ(*cat.twists.delta[m], Rational(m * (m + 2), 4 * (k + 2)));
    // nu_0^{1/2 1/2} = -1 carries the Frobenius-Schur sign
    EXPECT_EQ(cat.twists.nu.at({0, 1, 1}), -1);
    EXPECT_EQ(cat.twists.nu.at({2, 1, 1}), 1);
    EXPECT_TRUE(check_twist_data(cat).passed());
  }
}

TEST(Su2Catalog, TwistEdgeRatioIsRatioOfTwistFactors) {
  auto cat = build_su2k(5);
  for (int rho = 1; rho <= 3; ++rho) {
    auto ch = fusion_product(cat, rho, rho);
    for (Label a : ch)
      for (Label b : ch) {
        cplx expect = twist_factor(cat, rho, rho, b) / twist_factor(cat, rho, rho, a);
        EXPECT_LT(std::abs(twist_edge_ratio(cat, rho, a, b) - expect), kTol);
      }
  }
}

class FIdentities : public ::testing::TestWithParam<int> {};

TEST_P(FIdentities, Su2AndMinimal) {
  int k = GetParam();
  for (auto cat : {build_su2k(k), build_minimal_A(k)}) {
    auto rep = check_f_identities(cat);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << cat.name() << " " << c.name << " " << c.max_residual;
  }
}

INSTANTIATE_TEST_SUITE_P(Levels, FIdentities, ::testing::Range(1, 8));

TEST(TambaraYamagami, FusionAndF) {
  for (int M = 2; M <= 7; ++M) {
    auto cat = build_tambara_yamagami(M);
    Label X = cat.label("X");
    ASSERT_EQ(X, M);
    EXPECT_TRUE(check_fusion_ring(*cat.rules).passed());
    for (int a = 0; a < M; ++a) {
      EXPECT_EQ((*cat.rules)(X, a, X), 1);
      EXPECT_EQ((*cat.rules)(X, X, a), 1);
      EXPECT_EQ(cat.dual(a), (M - a) % M);
      EXPECT_EQ(*cat.twists.delta[a], Rational(a * (M - a), M));
    }
    EXPECT_NEAR(cat.dims->d[X], std::sqrt(double(M)), kTol);
    auto rep = check_f_identities(cat);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << cat.name() << " " << c.name << " " << c.max_residual;
  }
}

TEST(TambaraYamagami, PrintedFusionXaEqualsAIsNotAssociative) {
  auto cat = build_tambara_yamagami(3);
  FusionRules r = *cat.rules;
  const int X = 3;
  for (int a = 0; a < 3; ++a) {
    r.set(X, a, X, 0);
    r.set(a, X, X, 0);
    r.set(X, a, a, 1);
    r.set(a, X, a, 1);
  }
  EXPECT_FALSE(check_fusion_ring(r).passed());
}

TEST(FusionRing, FlippedCoefficientBreaksAssociativity) {
  auto cat = build_su2k(2);
  FusionRules r = *cat.rules;
  ASSERT_EQ(r(2, 2, 2), 0);
  r.set(2, 2, 2, 1);
  auto rep = check_fusion_ring(r);
  EXPECT_FALSE(rep.find("fusion.associativity")->pass);
  EXPECT_FALSE(rep.find("fusion.associativity")->detail.empty());
  EXPECT_THROW(compute_quantum_dims(r), AxiomError);
}

TEST(FIdentities, NegatedEntryBreaksPentagon) {
  auto cat = build_su2k(3);
  auto entries = cat.f->entries();
  // pick a nontrivial entry: all legs spin 1/2
  bool done = false;
  for (const auto& [key, v] : entries)
    if (key[0] == 1 && key[1] == 1 && key[2] == 1 && key[3] == 1 && key[4] == 2 && key[5] == 2) {
      cat.f->set(key[0], key[1], key[2], key[3], key[4], key[5], -v);
      done = true;
    }
  ASSERT_TRUE(done);
  auto rep = check_f_identities(cat);
  const Check* p = rep.find("f.pentagon");
  ASSERT_NE(p, nullptr);
  EXPECT_GT(p->max_residual, 0.1);
  EXPECT_FALSE(p->pass);
  EXPECT_NE(p->detail.find("a,b,c,d"), std::string::npos);
}

TEST(LieTwistOnly, DeclaredDataIsNotRepresentable) {
  FamilySpec s;
  s.family = Family::SO_N;
  s.n = 5;
  s.k = 2;
  auto cat = build(s);
  EXPECT_TRUE(cat.baxterisable());
  EXPECT_FALSE(cat.representable());
  EXPECT_FALSE(cat.has_fusion());
  ASSERT_TRUE(cat.declared.has_value());
  EXPECT_EQ(cat.declared->channels.size(), 3u);
  EXPECT_TRUE(check_twist_data(cat).passed());
}

TEST(Catalog, ValidationAndListing) {
  FamilySpec s;
  s.family = Family::SU2K;
  s.k = 0;
  EXPECT_THROW(s.validate(), DomainError);
  s.family = Family::TAMBARA_YAMAGAMI;
  s.M = 1;
  EXPECT_THROW(s.validate(), DomainError);
  EXPECT_THROW(parse_family("e8"), DomainError);
  EXPECT_EQ(parse_family("g2"), Family::G2);
  auto fams = list_families();
  EXPECT_EQ(fams.size(), 6u);
}

TEST(Json, RoundTripIsStable) {
  for (auto cat : {build_su2k(4), build_tambara_yamagami(5)}) {
    std::string j1 = category_to_json(cat);
    auto back = category_from_json(j1);
    EXPECT_EQ(category_to_json(back), j1);
    EXPECT_EQ(back.labels, cat.labels);
    auto e1 = cat.f->entries(), e2 = back.f->entries();
    ASSERT_EQ(e1.size(), e2.size());
    for (std::size_t i = 0; i < e1.size(); ++i) {
      EXPECT_EQ(e1[i].first, e2[i].first);
      EXPECT_EQ(e1[i].second, e2[i].second);  // bitwise
    }
    EXPECT_TRUE(check_f_identities(back).passed());
  }
}

TEST(Json, RejectsGarbage) {
  EXPECT_ANY_THROW(category_from_json("{not json"));
  EXPECT_ANY_THROW(category_from_json(R"({"labels": ["0"], "N": [[0, 0, 5]]})"));
}
