#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "esgb/dormand_prince.hpp"
#include "esgb/errors.hpp"
#include "esgb/field_equations.hpp"

namespace esgb {

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-3;  // magnitude; sign follows the direction
  double h_max = 1.0;
  std::size_t max_steps = 10'000'000;
  double denom_floor = kDefaultDenomFloor;
  /// Abort once the normalized constraint residual exceeds this.
  double constraint_abort = 1e-6;
  /// Diagnostic only: re-solve Phi from the constraint after every step. Used
  /// to show that the residual drift comes from the stepper, not the model.
  bool project_onto_constraint = false;
  /// Diagnostic only: constant step h_init without error control.
  bool fixed_step = false;

  void validate() const {
    if (!(rtol > 0.0) || !(atol > 0.0)) throw DomainError("tolerances must be positive");
    if (!(h_init > 0.0) || !(h_init <= h_max)) throw DomainError("need 0 < h_init <= h_max");
    if (max_steps < 1) throw DomainError("max_steps must be at least 1");
  }
};

enum class Direction { forward, backward };

enum class TerminalStatus {
  reached_t_end,
  denominator_event,
  constraint_drift,
  step_budget_exhausted,
};

[[nodiscard]] constexpr std::string_view to_string(TerminalStatus s) noexcept {
  switch (s) {
    case TerminalStatus::reached_t_end: return "reached_t_end";
    case TerminalStatus::denominator_event: return "denominator_event";
    case TerminalStatus::constraint_drift: return "constraint_drift";
    case TerminalStatus::step_budget_exhausted: return "step_budget_exhausted";
  }
  return "unknown";
}

/// Accepted steps of one integration run. samples[i] and rates[i] belong
/// together; rates feed the Hermite dense output.
struct Trajectory {
  std::vector<CosmoState> samples;
  std::vector<RhsValue> rates;
  Direction direction = Direction::forward;
  TerminalStatus terminal_status = TerminalStatus::reached_t_end;
  double max_constraint_residual = 0.0;  // normalized, see normalized_constraint
  double max_power_residual = 0.0;       // normalized, see normalized_power
  double min_denominator = std::numeric_limits<double>::infinity();
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;

  [[nodiscard]] double t_begin() const { return samples.front().t; }
  [[nodiscard]] double t_end() const { return samples.back().t; }
};

namespace detail {

inline ode::Vec<4> pack(const CosmoState& s) { return {s.a, s.H, s.phi, s.Phi}; }

inline CosmoState unpack(double t, const ode::Vec<4>& y) { return {t, y[0], y[1], y[2], y[3]}; }

inline RhsValue unpack_rate(const ode::Vec<4>& d) { return {d[0], d[1], d[2], d[3]}; }

/// Root of the constraint quadratic on the same branch as the current Phi.
inline double reproject_phidot(const CosmoState& s) {
  const double c = 6.0 * s.phi * s.H * s.H * s.H;
  const double root = std::sqrt(c * c + 3.0 * s.H * s.H);
  return (s.Phi + c >= 0.0) ? -c + root : -c - root;
}

}  // namespace detail

/// Integrates the reduced field equations from state0 to t_end (either side of
/// state0.t). Physics events end the run through terminal_status, never by
/// throwing.
[[nodiscard]] inline Trajectory integrate(const CosmoState& state0, double t_end,
                                          const IntegratorConfig& cfg = {}) {
  cfg.validate();
  if (t_end == state0.t) throw DomainError("t_end must differ from the initial time");

  Trajectory traj;
  traj.direction = t_end > state0.t ? Direction::forward : Direction::backward;

  auto record = [&](const CosmoState& s, const RhsValue& r) {
    traj.samples.push_back(s);
    traj.rates.push_back(r);
    traj.max_constraint_residual = std::max(traj.max_constraint_residual, normalized_constraint(s));
    traj.max_power_residual = std::max(traj.max_power_residual, normalized_power(s, r.dH));
    traj.min_denominator = std::min(traj.min_denominator, gb_denominator(s));
  };

  const auto r0 = try_rhs(state0, cfg.denom_floor);
  if (!r0) {
    traj.samples.push_back(state0);
    traj.rates.push_back(RhsValue{});
    traj.min_denominator = gb_denominator(state0);
    traj.terminal_status = TerminalStatus::denominator_event;
    return traj;
  }
  record(state0, *r0);
  if (normalized_constraint(state0) > cfg.constraint_abort) {
    traj.terminal_status = TerminalStatus::constraint_drift;
    return traj;
  }

  auto f = [&](double t, const ode::Vec<4>& y) -> std::optional<ode::Vec<4>> {
    auto r = try_rhs(detail::unpack(t, y), cfg.denom_floor);
    if (!r) return std::nullopt;
    return ode::Vec<4>{r->da, r->dH, r->dphi, r->dPhi};
  };
  bool drifted = false;
  auto observer = [&](double t, const ode::Vec<4>& y, const ode::Vec<4>& dy) {
    const CosmoState s = detail::unpack(t, y);
    record(s, detail::unpack_rate(dy));
    if (normalized_constraint(s) > cfg.constraint_abort) {
      drifted = true;
      return false;
    }
    return true;
  };

  const ode::StepControl ctl{cfg.rtol, cfg.atol, cfg.h_init, cfg.h_max, cfg.max_steps, 1e-10,
                             cfg.fixed_step};
  ode::StepStats stats;
  ode::Outcome outcome;
  if (cfg.project_onto_constraint) {
    auto project = [](double t, const ode::Vec<4>& y) {
      CosmoState s = detail::unpack(t, y);
      s.Phi = detail::reproject_phidot(s);
      return detail::pack(s);
    };
    outcome = ode::integrate<4>(f, state0.t, detail::pack(state0), t_end, ctl, observer, &stats,
                                project);
  } else {
    outcome = ode::integrate<4>(f, state0.t, detail::pack(state0), t_end, ctl, observer, &stats);
  }
  traj.accepted_steps = stats.accepted;
  traj.rejected_steps = stats.rejected;

  switch (outcome) {
    case ode::Outcome::reached_end: traj.terminal_status = TerminalStatus::reached_t_end; break;
    case ode::Outcome::rhs_failure: traj.terminal_status = TerminalStatus::denominator_event; break;
    case ode::Outcome::stopped:
      traj.terminal_status =
          drifted ? TerminalStatus::constraint_drift : TerminalStatus::reached_t_end;
      break;
    case ode::Outcome::step_budget:
      traj.terminal_status = TerminalStatus::step_budget_exhausted;
      break;
  }
  return traj;
}

/// Cubic Hermite interpolation between the accepted samples bracketing t.
[[nodiscard]] inline CosmoState sample_at(const Trajectory& traj, double t) {
  const auto& S = traj.samples;
  if (S.empty()) throw OutOfRange("empty trajectory");
  const double lo = std::min(S.front().t, S.back().t);
  const double hi = std::max(S.front().t, S.back().t);
  if (!(t >= lo && t <= hi)) throw OutOfRange("t outside the trajectory's covered interval");

  // Index of the first sample at or beyond t in the direction of integration.
  const bool fwd = traj.direction == Direction::forward;
  auto it = std::lower_bound(S.begin(), S.end(), t, [fwd](const CosmoState& s, double x) {
    return fwd ? s.t < x : s.t > x;
  });
  const auto i1 = static_cast<std::size_t>(it - S.begin());
  if (i1 < S.size() && S[i1].t == t) return S[i1];
  if (i1 == 0) return S[0];
  const std::size_t i0 = i1 - 1;

  const CosmoState& p = S[i0];
  const CosmoState& q = S[i1];
  const RhsValue& dp = traj.rates[i0];
  const RhsValue& dq = traj.rates[i1];
  const double h = q.t - p.t;
  const double th = (t - p.t) / h;
  const double th2 = th * th;
  const double th3 = th2 * th;
  const double h00 = 2 * th3 - 3 * th2 + 1;
  const double h10 = th3 - 2 * th2 + th;
  const double h01 = -2 * th3 + 3 * th2;
  const double h11 = th3 - th2;
  auto mix = [&](double y0, double m0, double y1, double m1) {
    return h00 * y0 + h10 * h * m0 + h01 * y1 + h11 * h * m1;
  };
  return CosmoState{t, mix(p.a, dp.da, q.a, dq.da), mix(p.H, dp.dH, q.H, dq.dH),
                    mix(p.phi, dp.dphi, q.phi, dq.dphi), mix(p.Phi, dp.dPhi, q.Phi, dq.dPhi)};
}

}  // namespace esgb
