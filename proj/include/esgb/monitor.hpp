#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "esgb/integrator.hpp"
#include "esgb/oracles.hpp"

namespace esgb {

struct MonitorReport {
  double max_constraint = 0.0;  // |C| / constraint_scale
  double max_constraint_hubble_scaled = 0.0;  // |C| / max(1, 3H^2), informational
  double max_power = 0.0;  // |P| / max(1, |H| Phi^2)
  double min_denominator = std::numeric_limits<double>::infinity();
  std::vector<BSignVerdict> b_signs;  // empty unless a launch beta was given
};

/// Scans every stored sample of the trajectory. With a launch beta in
/// (0, sqrt(3)/3) the B-sign verdicts are filled as well.
[[nodiscard]] inline MonitorReport monitor(const Trajectory& traj,
                                           std::optional<double> beta = std::nullopt) {
  MonitorReport rep;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const CosmoState& s = traj.samples[i];
    const double C = std::abs(constraint_residual(s));
    rep.max_constraint = std::max(rep.max_constraint, C / constraint_scale(s));
    rep.max_constraint_hubble_scaled =
        std::max(rep.max_constraint_hubble_scaled, C / std::max(1.0, 3.0 * s.H * s.H));
    rep.max_power = std::max(rep.max_power, normalized_power(s, traj.rates[i].dH));
    rep.min_denominator = std::min(rep.min_denominator, gb_denominator(s));
  }
  if (beta) rep.b_signs = check_signs(traj, *beta);
  return rep;
}

}  // namespace esgb
