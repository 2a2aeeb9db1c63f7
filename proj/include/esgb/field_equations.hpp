#pragma once

// FLRW reduction of Einstein-scalar-Gauss-Bonnet gravity with V = 0,
// lambda = 1 and coupling f(phi) = phi^2 / 2. State vector is (a, H, phi, Phi)
// with Phi = dphi/dt.

#include <algorithm>
#include <cmath>
#include <optional>

#include "esgb/errors.hpp"

namespace esgb {

inline constexpr double kDefaultDenomFloor = 1e-10;

struct CosmoState {
  double t = 0.0;
  double a = 1.0;
  double H = 0.0;
  double phi = 0.0;
  double Phi = 0.0;

  friend bool operator==(const CosmoState&, const CosmoState&) = default;
};

/// Time derivatives of (a, H, phi, Phi).
struct RhsValue {
  double da = 0.0;
  double dH = 0.0;
  double dphi = 0.0;
  double dPhi = 0.0;

  friend bool operator==(const RhsValue&, const RhsValue&) = default;
};

/// D = 2 - 8 H phi Phi + 24 H^4 phi^2. Strictly positive on the constraint
/// surface; unrestricted elsewhere.
[[nodiscard]] inline double gb_denominator(const CosmoState& s) noexcept {
  const double H2 = s.H * s.H;
  return 2.0 - 8.0 * s.H * s.phi * s.Phi + 24.0 * H2 * H2 * s.phi * s.phi;
}

/// Hamiltonian constraint C = 3H^2 - Phi^2 - 12 H^3 phi Phi.
[[nodiscard]] inline double constraint_residual(const CosmoState& s) noexcept {
  const double H2 = s.H * s.H;
  return 3.0 * H2 - s.Phi * s.Phi - 12.0 * H2 * s.H * s.phi * s.Phi;
}

/// Magnitude of the largest term of C, floored at 1. Residuals are reported
/// relative to this so they stay meaningful when phi grows exponentially.
[[nodiscard]] inline double constraint_scale(const CosmoState& s) noexcept {
  const double H2 = s.H * s.H;
  return std::max({1.0, 3.0 * H2, s.Phi * s.Phi,
                   std::abs(12.0 * H2 * s.H * s.phi * s.Phi)});
}

[[nodiscard]] inline double normalized_constraint(const CosmoState& s) noexcept {
  return std::abs(constraint_residual(s)) / constraint_scale(s);
}

/// Returns nullopt instead of throwing when D <= denom_floor. The integrator
/// uses this to treat the event as a rejected trial step.
[[nodiscard]] inline std::optional<RhsValue> try_rhs(
    const CosmoState& s, double denom_floor = kDefaultDenomFloor) noexcept {
  const double D = gb_denominator(s);
  if (!(D > denom_floor)) return std::nullopt;
  const double H = s.H;
  const double H2 = H * H;
  const double H3 = H2 * H;
  const double phi = s.phi;
  const double Phi = s.Phi;
  const double F1 = (-4.0 * H3 * phi * Phi - Phi * Phi + 4.0 * H2 * Phi * Phi -
                     24.0 * H3 * H3 * phi * phi - 3.0 * H2) /
                    D;
  const double F2 = -3.0 * Phi * H - 6.0 * H2 * phi * (H2 + F1);
  return RhsValue{s.a * H, F1, Phi, F2};
}

[[nodiscard]] inline RhsValue rhs(const CosmoState& s,
                                  double denom_floor = kDefaultDenomFloor) {
  if (auto r = try_rhs(s, denom_floor)) return *r;
  throw DenominatorTooSmall("Gauss-Bonnet denominator " +
                            std::to_string(gb_denominator(s)) +
                            " is below the floor; state has left the constraint surface");
}

/// Power identity
///   P = H ((2H^2 - 1 - dH/(3H^2)) Phi^2 - 8 H^3 phi Phi
///          - 12 H^6 (1 + dH/H^2) phi^2),
/// which vanishes along every solution. dH is passed in so the check uses the
/// same dH/dt the integrator sees.
[[nodiscard]] inline double power_identity(const CosmoState& s, double dH) {
  const double H = s.H;
  if (H == 0.0) throw ZeroHubble("power identity is singular at H = 0");
  const double H2 = H * H;
  const double H3 = H2 * H;
  const double Phi2 = s.Phi * s.Phi;
  return H * ((2.0 * H2 - 1.0 - dH / (3.0 * H2)) * Phi2 -
              8.0 * H3 * s.phi * s.Phi -
              12.0 * H3 * H3 * (1.0 + dH / H2) * s.phi * s.phi);
}

[[nodiscard]] inline double power_scale(const CosmoState& s) noexcept {
  return std::max(1.0, std::abs(s.H) * s.Phi * s.Phi);
}

/// |P| / max(1, |H| Phi^2); zero at H = 0 where P is undefined.
[[nodiscard]] inline double normalized_power(const CosmoState& s, double dH) {
  if (s.H == 0.0) return 0.0;
  return std::abs(power_identity(s, dH)) / power_scale(s);
}

/// Z2 image (phi, Phi) -> (-phi, -Phi). Together with flipping the branch sign
/// this maps solutions to solutions.
[[nodiscard]] constexpr CosmoState z2_mirror(CosmoState s) noexcept {
  s.phi = -s.phi;
  s.Phi = -s.Phi;
  return s;
}

}  // namespace esgb
