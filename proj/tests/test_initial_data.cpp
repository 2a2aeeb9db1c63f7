#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "esgb/field_equations.hpp"
#include "esgb/initial_data.hpp"

using namespace esgb;
using std::numbers::sqrt3;

namespace {
bool has_reason(const DataClassification& c, const std::string& needle) {
  for (const auto& r : c.reasons) {
    if (r.find(needle) != std::string::npos) return true;
  }
  return false;
}
}  // namespace

TEST(SolvePhidot, Examples) {
  for (double beta : {0.05, 0.2, 1.0 / 3.0, 0.5}) {
    EXPECT_NEAR(solve_phidot(beta, 0.0, BranchSign::plus), sqrt3 * beta, 1e-14);
    EXPECT_NEAR(solve_phidot(beta, 0.0, BranchSign::minus), -sqrt3 * beta, 1e-14);
  }
  EXPECT_EQ(solve_phidot(0.0, 1.7, BranchSign::plus), 0.0);
  EXPECT_EQ(std::abs(solve_phidot(0.0, -3.0, BranchSign::minus)), 0.0);
  const double ref = -0.75 + std::sqrt(1.3125);
  EXPECT_NEAR(solve_phidot(0.5, 1.0, BranchSign::plus), ref, 1e-15);
  EXPECT_NEAR(ref, 0.395644, 1e-6);
  EXPECT_NEAR(constraint_residual({0, 1, 0.5, 1.0, ref}), 0.0, 1e-15);
}

TEST(Gamma, MatchesPlusBranch) {
  EXPECT_NEAR(gamma_of(0.3, 0.0), sqrt3 * 0.3, 1e-15);
  EXPECT_EQ(gamma_of(0.0, 2.0), 0.0);
  EXPECT_NEAR(gamma_of(0.5, 1.0), 0.395643924, 1e-9);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double b = u(rng), a = u(rng);
    EXPECT_EQ(gamma_of(b, a), solve_phidot(b, a, BranchSign::plus));
  }
}

TEST(Gamma, PositiveForNonzeroHubble) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const double b = u(rng);
    if (b == 0.0) continue;
    EXPECT_GT(gamma_of(b, u(rng)), 0.0);
  }
}

TEST(Kappa, Examples) {
  for (double beta : {0.1, 0.25, 1.0 / 3.0, 0.5}) {
    EXPECT_NEAR(kappa_of(beta, 0.0), 6 * std::pow(beta, 4) - 3 * beta * beta, 1e-13);
  }
  EXPECT_NEAR(kappa_of(1.0 / 3.0, 0.0), -7.0 / 27.0, 1e-15);
  // The closed form for (alpha, beta) = (1, 1/2) carries a minus sign.
  const double closed = -(5.0 * std::sqrt(21.0) + 24.0) / 68.0;
  EXPECT_NEAR(kappa_of(0.5, 1.0), closed, 1e-14);
  EXPECT_NEAR(kappa_of(0.5, 1.0), -0.6899, 5e-5);
  EXPECT_GT(kappa_of(0.5, 1.0), -1.25);
  EXPECT_LT(kappa_of(0.5, 1.0), -0.25);
}

TEST(Kappa, EqualsInitialHubbleRate) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ub(0.0, kBetaMax), ua(0.0, 2.0);
  int n = 0;
  while (n < 10000) {
    const double b = ub(rng), a = ua(rng);
    if (b == 0.0) continue;
    const double k = kappa_of(b, a);
    const double dH = rhs(make_initial_state({1.0, b, a, BranchSign::plus})).dH;
    EXPECT_NEAR(k, dH, 1e-12 * std::max(1.0, std::abs(k)));
    ++n;
  }
}

TEST(Kappa, DenominatorStaysPositiveForPlusBranchData) {
  for (double b = -2.0; b <= 2.0; b += 0.01) {
    for (double a = -20.0; a <= 20.0; a += 0.05) {
      EXPECT_NO_THROW((void)kappa_of(b, a)) << b << " " << a;
    }
  }
}

TEST(Classify, TheoremData) {
  const auto c = classify({1.0, 1.0 / 3.0, 0.0, BranchSign::plus});
  EXPECT_TRUE(c.theorem21_ok);
  EXPECT_TRUE(c.theorem12_ok);
  EXPECT_NEAR(c.kappa, -7.0 / 27.0, 1e-15);
  EXPECT_GT(c.kappa, -5.0 / 9.0);
  EXPECT_LT(c.kappa, -1.0 / 9.0);
}

TEST(Classify, ScalarizingData) {
  const auto c = classify({1.0, 0.5, 1.0, BranchSign::plus});
  EXPECT_FALSE(c.theorem21_ok);
  EXPECT_TRUE(c.theorem12_ok);
  EXPECT_TRUE(has_reason(c, "alpha = 0: violated"));
  const auto d = classify({1.0, 0.3, 0.5, BranchSign::plus});
  EXPECT_TRUE(d.theorem12_ok);
  EXPECT_NEAR(d.kappa, -0.28062525780956876, 1e-14);
}

TEST(Classify, NegativeBranchFails) {
  const auto c = classify({1.0, 1.0 / 3.0, 0.0, BranchSign::minus});
  EXPECT_FALSE(c.theorem21_ok);
  EXPECT_FALSE(c.theorem12_ok);
  EXPECT_LT(c.phidot0, 0.0);
  EXPECT_TRUE(has_reason(c, "phidot(0) > 0: violated"));
}

TEST(Classify, BoundaryIsReported) {
  const auto c = classify({1.0, kBetaMax, 0.0, BranchSign::plus});
  EXPECT_FALSE(c.theorem21_ok);
  EXPECT_TRUE(has_reason(c, "boundary"));
  const auto z = classify({1.0, 0.0, 0.0, BranchSign::plus});
  EXPECT_FALSE(z.theorem21_ok);
  const auto big = classify({1.0, 0.7, 0.0, BranchSign::plus});
  EXPECT_FALSE(big.theorem21_ok);
  EXPECT_FALSE(big.theorem12_ok);
  EXPECT_FALSE(classify({-1.0, 0.3, 0.0, BranchSign::plus}).theorem21_ok);
}

TEST(InitialState, Examples) {
  const CosmoState s = make_initial_state({1.0, 1.0 / 3.0, 0.0, BranchSign::plus});
  EXPECT_EQ(s.t, 0.0);
  EXPECT_EQ(s.a, 1.0);
  EXPECT_EQ(s.H, 1.0 / 3.0);
  EXPECT_EQ(s.phi, 0.0);
  EXPECT_NEAR(s.Phi, sqrt3 / 3.0, 1e-15);
  const CosmoState z = make_initial_state({1.0, 0.0, 0.0, BranchSign::plus});
  EXPECT_EQ(z, (CosmoState{0, 1, 0, 0, 0}));
  const CosmoState g = make_initial_state({1.0, 0.5, 1.0, BranchSign::plus});
  EXPECT_NEAR(g.Phi, 0.395644, 1e-6);
  EXPECT_THROW((void)make_initial_state({0.0, 0.3, 0.0, BranchSign::plus}), DomainError);
}

TEST(InitialState, BranchConsistencyOnTheoremDomain) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ub(0.0, kBetaMax), ua(0.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const double b = ub(rng);
    const FreeData d{1.0, b, ua(rng), i % 2 ? BranchSign::plus : BranchSign::minus};
    const CosmoState s = make_initial_state(d);
    EXPECT_LE(std::abs(constraint_residual(s)), 1e-13 * std::max(1.0, 3 * b * b))
        << b << " " << d.alpha;
  }
}

// On the wider box the largest constraint term reaches ~1e4, so rounding is
// measured against the term scale instead of max(1, 3 beta^2).
TEST(InitialState, BranchConsistencyOnWideBox) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const FreeData d{1.0, u(rng), u(rng), i % 2 ? BranchSign::plus : BranchSign::minus};
    const CosmoState s = make_initial_state(d);
    EXPECT_LE(normalized_constraint(s), 1e-13) << d.beta << " " << d.alpha;
  }
}

TEST(InitialState, TheoremDataInsideAdmissibleSet) {
  for (int i = 1; i <= 1000; ++i) {
    const double b = kBetaMax * i / 1001.0;
    const double k = 6 * std::pow(b, 4) - 3 * b * b;
    EXPECT_GT(k, -5 * b * b);
    EXPECT_LT(k, -b * b);
    EXPECT_TRUE(classify({1.0, b, 0.0, BranchSign::plus}).theorem12_ok) << b;
  }
}
