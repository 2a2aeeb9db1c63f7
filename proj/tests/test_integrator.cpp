#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "esgb/dormand_prince.hpp"
#include "esgb/envelopes.hpp"
#include "esgb/initial_data.hpp"
#include "esgb/integrator.hpp"
#include "esgb/monitor.hpp"

using namespace esgb;

namespace {

CosmoState theorem_data(double beta, BranchSign s = BranchSign::plus) {
  return make_initial_state({1.0, beta, 0.0, s});
}

double riccati_error(const ode::StepControl& ctl) {
  auto y = ode::solve_scalar([](double, double h) { return -h * h; }, 0.0, 1.0 / 3.0, 3.0, ctl);
  return std::abs(y.value() - 1.0 / 6.0);
}

}  // namespace

TEST(Stepper, RiccatiClosedForm) {
  EXPECT_NEAR(riccati_error({}), 0.0, 1e-8);
  auto back = ode::solve_scalar([](double, double h) { return -h * h; }, 3.0, 1.0 / 6.0, 0.0);
  EXPECT_NEAR(back.value(), 1.0 / 3.0, 1e-8);
}

TEST(Stepper, AdaptiveConvergence) {
  ode::StepControl loose;
  loose.rtol = 1e-6;
  loose.atol = 1e-8;
  ode::StepControl tight = loose;
  tight.rtol /= 32.0;
  tight.atol /= 32.0;
  EXPECT_GE(riccati_error(loose) / riccati_error(tight), 16.0);
}

TEST(Stepper, FixedStepOrderFive) {
  ode::StepControl a;
  a.fixed_step = true;
  a.h_init = 0.3;
  ode::StepControl b = a;
  b.h_init = 0.15;
  const double ratio = riccati_error(a) / riccati_error(b);
  EXPECT_GE(ratio, 16.0);
  EXPECT_LE(ratio, 64.0);
}

TEST(Stepper, FailedRhsEndsNearTheWall) {
  double last_t = 0.0;
  auto f = [](double t, const ode::Vec<1>&) -> std::optional<ode::Vec<1>> {
    if (t > 1.0) return std::nullopt;
    return ode::Vec<1>{1.0};
  };
  auto obs = [&](double t, const ode::Vec<1>&, const ode::Vec<1>&) {
    last_t = t;
    return true;
  };
  ode::StepControl ctl;
  EXPECT_EQ(ode::integrate<1>(f, 0.0, {0.0}, 2.0, ctl, obs), ode::Outcome::rhs_failure);
  EXPECT_LE(last_t, 1.0);
  EXPECT_GT(last_t, 1.0 - 1e-9);
}

TEST(Stepper, StepBudget) {
  ode::StepControl ctl;
  ctl.max_steps = 3;
  auto f = [](double, const ode::Vec<1>& y) -> std::optional<ode::Vec<1>> { return y; };
  auto obs = [](double, const ode::Vec<1>&, const ode::Vec<1>&) { return true; };
  EXPECT_EQ(ode::integrate<1>(f, 0.0, {1.0}, 50.0, ctl, obs), ode::Outcome::step_budget);
}

TEST(Integrate, ForwardHubbleEnvelopeAtHundred) {
  const Trajectory tr = integrate(theorem_data(1.0 / 3.0), 100.0);
  ASSERT_EQ(tr.terminal_status, TerminalStatus::reached_t_end);
  EXPECT_EQ(tr.samples.back().t, 100.0);
  const double H = tr.samples.back().H;
  EXPECT_GT(H, 1.0 / 503.0);
  EXPECT_LT(H, 1.0 / 103.0);
}

TEST(Integrate, SamplesAreMonotoneAndStartAtZero) {
  const Trajectory f = integrate(theorem_data(0.2), 30.0);
  const Trajectory b = integrate(theorem_data(0.2), -10.0);
  EXPECT_EQ(f.direction, Direction::forward);
  EXPECT_EQ(b.direction, Direction::backward);
  EXPECT_EQ(f.samples.front().t, 0.0);
  EXPECT_EQ(b.samples.front().t, 0.0);
  EXPECT_EQ(b.samples.back().t, -10.0);
  for (std::size_t i = 1; i < f.samples.size(); ++i) EXPECT_GT(f.samples[i].t, f.samples[i - 1].t);
  for (std::size_t i = 1; i < b.samples.size(); ++i) EXPECT_LT(b.samples[i].t, b.samples[i - 1].t);
  EXPECT_EQ(f.samples.size(), f.rates.size());
}

TEST(Integrate, FixedPointStaysPut) {
  const CosmoState s0{0, 1.5, 0, 0, 0};
  const Trajectory tr = integrate(s0, 5.0);
  ASSERT_EQ(tr.terminal_status, TerminalStatus::reached_t_end);
  for (const auto& s : tr.samples) {
    EXPECT_EQ(s.a, 1.5);
    EXPECT_EQ(s.H, 0.0);
    EXPECT_EQ(s.phi, 0.0);
    EXPECT_EQ(s.Phi, 0.0);
  }
  const MonitorReport rep = monitor(tr);
  EXPECT_EQ(rep.max_constraint, 0.0);
  EXPECT_EQ(rep.max_power, 0.0);
  EXPECT_EQ(rep.min_denominator, 2.0);
  const CosmoState mid = sample_at(tr, 0.5 * (tr.samples[1].t + tr.samples[2].t));
  EXPECT_EQ(mid.H, 0.0);
  EXPECT_EQ(mid.a, 1.5);
}

TEST(Integrate, RejectsBadArguments) {
  EXPECT_THROW((void)integrate(theorem_data(0.3), 0.0), DomainError);
  IntegratorConfig cfg;
  cfg.rtol = 0.0;
  EXPECT_THROW((void)integrate(theorem_data(0.3), 1.0, cfg), DomainError);
  cfg = {};
  cfg.h_init = 2.0;
  EXPECT_THROW((void)integrate(theorem_data(0.3), 1.0, cfg), DomainError);
}

TEST(Integrate, ConstraintResidualsAtDefaultTolerance) {
  const Trajectory tr = integrate(theorem_data(1.0 / 3.0), 100.0);
  const MonitorReport rep = monitor(tr, 1.0 / 3.0);
  EXPECT_LE(rep.max_constraint, 1e-8);
  EXPECT_LE(rep.max_power, 1e-8);
  EXPECT_EQ(rep.max_constraint, tr.max_constraint_residual);
  EXPECT_EQ(rep.b_signs.size(), 2u);
}

TEST(Integrate, OffConstraintLaunchStops) {
  CosmoState s = theorem_data(1.0 / 3.0);
  s.Phi += 1e-3;
  EXPECT_GT(normalized_constraint(s), 1e-4);
  const Trajectory tr = integrate(s, 10.0);
  EXPECT_EQ(tr.terminal_status, TerminalStatus::constraint_drift);
  EXPECT_EQ(tr.samples.size(), 1u);
}

TEST(Integrate, DriftDuringRunStops) {
  const CosmoState s = theorem_data(1.0 / 3.0);
  IntegratorConfig cfg;
  cfg.constraint_abort = 1e-12;
  cfg.rtol = 1e-3;
  cfg.atol = 1e-3;
  const Trajectory tr = integrate(s, 100.0, cfg);
  EXPECT_EQ(tr.terminal_status, TerminalStatus::constraint_drift);
  EXPECT_GT(tr.samples.size(), 1u);
  EXPECT_GT(tr.max_constraint_residual, 1e-12);
}

TEST(Integrate, DenominatorEventAtLaunch) {
  const Trajectory tr = integrate({0, 1, 1.0, 1.0, 3.25}, 1.0);
  EXPECT_EQ(tr.terminal_status, TerminalStatus::denominator_event);
  EXPECT_EQ(tr.samples.size(), 1u);
}

TEST(Integrate, StepBudgetStatus) {
  IntegratorConfig cfg;
  cfg.max_steps = 10;
  const Trajectory tr = integrate(theorem_data(0.3), 100.0, cfg);
  EXPECT_EQ(tr.terminal_status, TerminalStatus::step_budget_exhausted);
}

TEST(Integrate, ProjectionRemovesDrift) {
  IntegratorConfig loose;
  loose.rtol = 1e-5;
  loose.atol = 1e-7;
  IntegratorConfig proj = loose;
  proj.project_onto_constraint = true;
  const Trajectory a = integrate(theorem_data(0.45), 50.0, loose);
  const Trajectory b = integrate(theorem_data(0.45), 50.0, proj);
  ASSERT_EQ(b.terminal_status, TerminalStatus::reached_t_end);
  EXPECT_LT(b.max_constraint_residual, a.max_constraint_residual);
  EXPECT_LE(b.max_constraint_residual, 1e-13);
}

TEST(Integrate, TimeReversal) {
  const Trajectory fwd = integrate(theorem_data(1.0 / 3.0), 10.0);
  const Trajectory back = integrate(fwd.samples.back(), 0.0);
  ASSERT_EQ(back.terminal_status, TerminalStatus::reached_t_end);
  const CosmoState &s0 = fwd.samples.front(), &s1 = back.samples.back();
  EXPECT_EQ(s1.t, 0.0);
  EXPECT_NEAR(s1.a, s0.a, 1e-7);
  EXPECT_NEAR(s1.H, s0.H, 1e-7);
  EXPECT_NEAR(s1.phi, s0.phi, 1e-7);
  EXPECT_NEAR(s1.Phi, s0.Phi, 1e-7);
}

TEST(Integrate, GlobalExistenceOverBetaGrid) {
  for (double beta : {0.1, 0.2, 1.0 / 3.0, 0.45, 0.55}) {
    for (double T : {-20.0, 100.0}) {
      const Trajectory tr = integrate(theorem_data(beta), T);
      EXPECT_EQ(tr.terminal_status, TerminalStatus::reached_t_end) << beta << " " << T;
      EXPECT_GT(tr.min_denominator, 1.0) << beta << " " << T;
    }
  }
}

TEST(Integrate, MirrorTrajectory) {
  const CosmoState s0 = theorem_data(1.0 / 3.0);
  const CosmoState m0 = theorem_data(1.0 / 3.0, BranchSign::minus);
  EXPECT_EQ(m0.Phi, z2_mirror(s0).Phi);
  const Trajectory a = integrate(s0, 50.0);
  const Trajectory b = integrate(m0, 50.0);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_LE(std::abs(a.samples[i].phi + b.samples[i].phi), 1e-9);
    EXPECT_LE(std::abs(a.samples[i].H - b.samples[i].H), 1e-9);
  }
}

TEST(SampleAt, ExactAndInterpolated) {
  const Trajectory tr = integrate(theorem_data(1.0 / 3.0), 100.0);
  const CosmoState& k = tr.samples[7];
  EXPECT_EQ(sample_at(tr, k.t), k);
  const CosmoState s = sample_at(tr, 50.0);
  EXPECT_EQ(s.t, 50.0);
  const Bounds b = H_bounds(EnvelopeSet(1.0 / 3.0), 50.0);
  EXPECT_GT(s.H, b.lower);
  EXPECT_LT(s.H, b.upper);
  EXPECT_THROW((void)sample_at(tr, 100.5), OutOfRange);
  EXPECT_THROW((void)sample_at(tr, -0.1), OutOfRange);
}

TEST(SampleAt, HermiteAccuracy) {
  // Dense samples against a direct solve to the query point.
  const Trajectory tr = integrate(theorem_data(0.3), 20.0);
  for (double t : {0.37, 2.9, 11.1, 19.5}) {
    const CosmoState dense = sample_at(tr, t);
    const Trajectory direct = integrate(theorem_data(0.3), t);
    EXPECT_NEAR(dense.H, direct.samples.back().H, 1e-6);
    EXPECT_NEAR(dense.phi, direct.samples.back().phi, 1e-6);
  }
  const Trajectory bt = integrate(theorem_data(0.3), -5.0);
  EXPECT_NEAR(sample_at(bt, -2.2).H, integrate(theorem_data(0.3), -2.2).samples.back().H, 1e-6);
}
