#include <gtest/gtest.h>

#include <numeric>

#include "bax/baxterizer.hpp"
#include "bax/catalog.hpp"
#include "bax/verifier.hpp"
#include "oracles.hpp"

using namespace bax;

namespace {

// scale one channel amplitude by (1 + eps): no longer a solution
AmplitudeSolution perturbed(AmplitudeSolution sol, Label chi, double eps) {
  int i = sol.index_of(chi);
  sol.amplitude[i] = sol.amplitude[i] * RationalFunction(Polynomial::constant(1.0 + eps), Polynomial::constant(1.0));
  return sol;
}

}  // namespace

TEST(Sampling, SeededAndAwayFromPoles) {
  std::vector<cplx> poles{cplx(1.0, 0.0), cplx(0.0, 2.0)};
  auto a = sample_mus(11, 200, poles);
  auto b = sample_mus(11, 200, poles);
  ASSERT_EQ(a.size(), 200u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_mus(12, 200, poles));
  for (cplx m : a) {
    EXPECT_GE(std::abs(m), 0.2 - 1e-12);
    EXPECT_LE(std::abs(m), 5.0 + 1e-12);
    for (cplx p : poles) EXPECT_GT(std::abs(m - p), 1e-3);
  }
}

TEST(CurrentVertex, ConservedForSolutions) {
  for (int k = 2; k <= 5; ++k) {
    auto cat = build_su2k(k);
    auto sol = solve_central(cat, 1, 2);
    auto rep = verify_current_vertex(cat, 1, 2, sol);
    EXPECT_TRUE(rep.passed()) << rep.to_table();
  }
  auto cat4 = build_su2k(4);
  auto rep = verify_current_vertex(cat4, 2, 2, solve_central(cat4, 2, 2));
  EXPECT_TRUE(rep.passed()) << rep.to_table();
  for (int M = 3; M <= 6; ++M) {
    auto ty = build_tambara_yamagami(M);
    Label X = ty.label("X");
    auto r = verify_current_vertex(ty, X, 1, solve_central(ty, X, 1));
    EXPECT_TRUE(r.passed()) << r.to_table();
  }
}

TEST(CurrentVertex, MutationFails) {
  auto cat = build_su2k(3);
  auto sol = perturbed(solve_central(cat, 1, 2), 2, 1e-3);
  auto rep = verify_current_vertex(cat, 1, 2, sol);
  EXPECT_GT(rep.residual("current.vertex"), 1e-4);
  EXPECT_FALSE(rep.passed());
}

TEST(Ybe, HoldsForSolutions) {
  for (int k = 2; k <= 4; ++k) {
    auto cat = build_su2k(k);
    EXPECT_LT(verify_ybe(cat, 1, solve_central(cat, 1, 2)).residual("ybe"), 1e-8);
  }
  auto cat4 = build_su2k(4);
  EXPECT_LT(verify_ybe(cat4, 2, solve_central(cat4, 2, 2)).residual("ybe"), 1e-8);
  for (int M : {3, 4}) {
    auto ty = build_tambara_yamagami(M);
    auto rep = verify_ybe(ty, M, solve_central(ty, M, 1));
    EXPECT_LT(rep.residual("ybe"), 1e-8);
    EXPECT_EQ(rep.find("ybe")->status, "conjecture check");
  }
}

TEST(Ybe, NegativeControlIsOrderOne) {
  auto cat = build_su2k(3);
  auto sol = perturbed(solve_central(cat, 1, 2), 0, 0.5);
  auto rep = verify_ybe(cat, 1, sol);
  EXPECT_GT(rep.residual("ybe"), 1e-2);
  EXPECT_FALSE(rep.passed());
}

TEST(Transfer, Commute) {
  auto cat = build_su2k(3);
  auto sol = solve_central(cat, 1, 2);
  for (int L : {4, 6}) {
    auto rep = verify_commuting_transfer(cat, 1, sol, L);
    EXPECT_TRUE(rep.passed()) << rep.to_table();
  }
  auto ty = build_tambara_yamagami(3);
  EXPECT_TRUE(verify_commuting_transfer(ty, 3, solve_central(ty, 3, 1), 4).passed());
}

TEST(Transfer, NegativeControl) {
  auto cat = build_su2k(4);
  auto sol = perturbed(solve_central(cat, 2, 2), 4, 0.3);
  EXPECT_GT(verify_commuting_transfer(cat, 2, sol, 4).residual("transfer.commute"), 1e-3);
}

TEST(Transfer, TwoChannelWeightsAlwaysCommute) {
  // x 1 + y e: every ratio lies on the Temperley-Lieb curve
  auto cat = build_su2k(3);
  auto sol = perturbed(solve_central(cat, 1, 2), 0, 0.3);
  EXPECT_LT(verify_commuting_transfer(cat, 1, sol, 4).residual("transfer.commute"), 1e-10);
}

TEST(Algebra, ProjectorsAndTemperleyLieb) {
  for (int k = 2; k <= 5; ++k) {
    auto cat = build_su2k(k);
    auto rep = verify_projector_algebra(cat, 1, 4);
    EXPECT_TRUE(rep.passed()) << rep.to_table();
    ASSERT_NE(rep.find("tl.e_squared"), nullptr);
  }
  auto ty = build_tambara_yamagami(4);
  EXPECT_TRUE(verify_projector_algebra(ty, 4, 3).passed());
}

TEST(Algebra, BraidRelations) {
  for (auto cat : {build_su2k(3), build_su2k(4), build_minimal_A(3), build_tambara_yamagami(3)}) {
    Label rho = cat.family == "ty" ? cat.label("X") : 1;
    auto rep = verify_braid_relations(cat, rho, 4);
    EXPECT_TRUE(rep.passed()) << cat.name() << "\n" << rep.to_table();
  }
}

TEST(BraidLimits, OwnBraidingAndOppositeSense) {
  auto su = build_su2k(3);
  auto rep = verify_braid_limits(su, 1, solve_central(su, 1, 2));
  EXPECT_TRUE(rep.passed()) << rep.to_table();
  EXPECT_NE(rep.find("braid_limit.large_mu")->detail.find("sense=over"), std::string::npos);
  EXPECT_NE(rep.find("braid_limit.small_mu")->detail.find("sense=under"), std::string::npos);

  auto mn = build_minimal_A(3);
  auto rep2 = verify_braid_limits(mn, 1, solve_central(mn, 1, 2), 3, &su);
  EXPECT_TRUE(rep2.passed()) << rep2.to_table();
  const Check* c = nullptr;
  for (const auto& ch : rep2.checks)
    if (ch.name.rfind("braid_limit.large_mu_vs_", 0) == 0) c = &ch;
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->detail.find("sense=under"), std::string::npos);
}

TEST(Report, JsonAndTableAreDeterministic) {
  auto cat = build_tambara_yamagami(4);
  auto sol = solve_central(cat, 4, 1);
  VerifyOptions o{6, 99, 1e-8};
  auto a = verify_ybe(cat, 4, sol, 3, o);
  auto b = verify_ybe(cat, 4, sol, 3, o);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_table(), b.to_table());
  EXPECT_NE(a.to_json().find("\"seed\": 99"), std::string::npos);
}

TEST(Verifier, RejectsBadSizes) {
  auto cat = build_su2k(3);
  auto sol = solve_central(cat, 1, 2);
  EXPECT_THROW(verify_ybe(cat, 1, sol, 2), DomainError);
  EXPECT_THROW(verify_commuting_transfer(cat, 1, sol, 1), DomainError);
}

// loop model

TEST(Loop, FunctionalEquation) {
  for (int k = 2; k <= 6; ++k) {
    cplx q = std::polar(1.0, oracle::kPi / (k + 2));
    auto rep = loop_functional_check(q);
    EXPECT_TRUE(rep.passed()) << rep.to_table();
    EXPECT_EQ(rep.find("loop.functional_equation")->samples, 50);
  }
}

TEST(Loop, PerturbedRatioFails) {
  cplx q = std::polar(1.0, oracle::kPi / 5);
  auto rep = loop_functional_check(q, 50, 20240611, 1e-10, 1e-3);
  EXPECT_GT(rep.residual("loop.functional_equation"), 1e-5);
}

TEST(Loop, OneByOneTorus) {
  LoopWeights w{cplx(1.7, 0.1), cplx(0.4, -0.2), cplx(-0.3, 0.9)};
  cplx expect = w.a1 * w.d + w.c * w.d;
  EXPECT_LT(std::abs(loop_partition_enumeration(w, 1, 1) - expect), 1e-14);
  EXPECT_LT(std::abs(loop_partition_transfer(w, 1, 1) - expect), 1e-14);
}

TEST(Loop, SingleResolutionCountsDiagonalLoops) {
  // all A_1 (or all e): loops are staircases, gcd(Lx, Ly) of them
  cplx d(1.3, 0.2);
  for (int Lx = 1; Lx <= 4; ++Lx)
    for (int Ly = 1; Ly <= 4; ++Ly) {
      int V = Lx * Ly;
      cplx expect = std::pow(d, std::gcd(Lx, Ly));
      EXPECT_LT(std::abs(loop_partition_enumeration(LoopWeights{d, 1.0, 0.0}, Lx, Ly) - expect), 1e-12);
      EXPECT_LT(std::abs(loop_partition_enumeration(LoopWeights{d, 0.0, 1.0}, Lx, Ly) - expect), 1e-12);
      EXPECT_LT(std::abs(loop_partition_transfer(LoopWeights{d, 1.0, 0.0}, Lx, Ly) - expect), 1e-12);
      EXPECT_LT(std::abs(loop_partition_transfer(LoopWeights{d, 0.0, 1.0}, Lx, Ly) - expect), 1e-12);
      (void)V;
    }
}

TEST(Loop, EnumerationMatchesTransfer) {
  cplx q = std::polar(1.0, oracle::kPi / 7);
  for (cplx mu : sample_mus(3, 4, {q * q}))
    for (auto [Lx, Ly] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
      auto w = loop_weights(q, mu);
      cplx a = loop_partition_enumeration(w, Lx, Ly);
      cplx b = loop_partition_transfer(w, Lx, Ly);
      EXPECT_LT(std::abs(a - b) / std::max(1.0, std::abs(a)), 1e-10) << Lx << "x" << Ly;
    }
}

TEST(Loop, Limits) {
  LoopWeights w{2.0, 1.0, 1.0};
  EXPECT_THROW(loop_partition_enumeration(w, 5, 4), DomainError);
  EXPECT_THROW(loop_partition_transfer(w, 7, 1), DomainError);
  EXPECT_THROW(loop_partition_enumeration(w, 0, 1), DomainError);
}
