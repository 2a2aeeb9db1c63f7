#pragma once

// Closed-form bounds for H, phi, dphi/dt and a along the global solutions.
// Every function here is an explicit formula; none solves an ODE.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

#include "esgb/errors.hpp"
#include "esgb/initial_data.hpp"

namespace esgb {

namespace detail {

/// Root of f(x) = y for increasing f, by Newton steps kept inside [lo, hi].
template <class F, class DF>
double invert_increasing(F f, DF df, double y, double lo, double hi, double x) {
  // Absolute 1e-12 unless y is so large that its ulp dominates.
  const double tol = std::max(1e-12, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(y));
  for (int iter = 0; iter < 100; ++iter) {
    const double r = f(x) - y;
    if (std::abs(r) <= tol) return x;
    if (r > 0) hi = x; else lo = x;
    const double d = df(x);
    double next = d > 0.0 ? x - r / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw NonConvergence("transcendental inverse did not converge");
}

}  // namespace detail

/// S(x) = x + arctan(x); strictly increasing with S'(x) in (1, 2].
[[nodiscard]] inline double S(double x) noexcept { return x + std::atan(x); }

/// Inverse of S. The bracket [y - pi/2, y + pi/2] always holds the root.
[[nodiscard]] inline double S_inv(double y) {
  if (y == 0.0) return 0.0;
  constexpr double half_pi = std::numbers::pi / 2.0;
  return detail::invert_increasing(
      S, [](double x) { return 1.0 + 1.0 / (1.0 + x * x); }, y, y - half_pi, y + half_pi,
      y - std::copysign(std::min(std::abs(y), half_pi), y));
}

/// R(x) = x - arctan(x), odd and increasing; R'(x) = x^2 / (1 + x^2).
[[nodiscard]] inline double R(double x) noexcept { return x - std::atan(x); }

[[nodiscard]] inline double R_inv(double y) {
  if (y == 0.0) return 0.0;
  if (y < 0.0) return -R_inv(-y);
  constexpr double half_pi = std::numbers::pi / 2.0;
  return detail::invert_increasing(
      R, [](double x) { return x * x / (1.0 + x * x); }, y, y, y + half_pi, y + 1.0);
}

enum class BetaRegime { low, high };

/// beta at which the backward-time bounds switch form; it belongs to low.
inline const double kRegimeSplit = std::sqrt(5.0 / 27.0);

[[nodiscard]] inline BetaRegime regime_of(double beta) {
  if (!(beta > 0.0 && beta < kBetaMax)) throw DomainError("beta must lie in (0, sqrt(3)/3)");
  return beta <= kRegimeSplit ? BetaRegime::low : BetaRegime::high;
}

enum class Mode { thm21, thm12 };

[[nodiscard]] constexpr std::string_view to_string(Mode m) noexcept {
  return m == Mode::thm21 ? "thm21" : "thm12";
}

struct Bounds {
  double lower;
  double upper;
};

// The individual closed forms. Shared with the comparison-ODE registry so the
// constants live in one place.
namespace closed_form {

using std::numbers::sqrt3;
inline constexpr double sqrt2 = std::numbers::sqrt2;

// t >= 0
inline double H_lower_fwd(double beta, double t) { return 1.0 / (5.0 * t + 1.0 / beta); }
inline double H_upper_fwd(double beta, double t) { return 1.0 / (t + 1.0 / beta); }

/// Solution of dphi/dt = sqrt3/(5t + 1/beta) / (1 + 4 sqrt3 beta^2 phi), phi(0) = 0,
/// with the radicand coefficient coeff * beta^2 (coeff = 24/5 from the ODE).
inline double phi_lower_fwd(double beta, double t, double coeff) {
  const double x = coeff * beta * beta * std::log1p(5.0 * beta * t);
  // -1 + sqrt(1 + x) without cancellation.
  return (x / (1.0 + std::sqrt(1.0 + x))) / (4.0 * sqrt3 * beta * beta);
}
inline double phi_upper_fwd(double beta, double alpha, double t) {
  return sqrt3 * std::log1p(beta * t) + alpha;
}
inline double phidot_upper_fwd(double beta, double t) { return sqrt3 / (t + 1.0 / beta); }
inline double a_lower_fwd(double beta, double t, double a0) {
  return a0 * std::pow(5.0 * beta * t + 1.0, 0.2);
}
inline double a_upper_fwd(double beta, double t, double a0) { return a0 * (beta * t + 1.0); }

// t <= 0
inline double H_upper_bwd(double beta, double t) {
  const double e = std::exp(3.0 * sqrt2 * t);
  return (2.0 * beta + sqrt2 - (sqrt2 - 2.0 * beta) * e) /
         (sqrt2 * (2.0 * beta + sqrt2 + (sqrt2 - 2.0 * beta) * e));
}
inline double H_lower_bwd_riccati(double beta, double t) { return 1.0 / (1.0 / beta - 6.0 * t); }
inline double H_lower_bwd_transcendental(double beta, double t) {
  return 1.0 / S_inv(S(1.0 / beta) - 6.0 * t);
}
/// Exact solution of dH/dt = 6H^4 + 6H^2, H(0) = beta.
inline double H_lower_bwd_b2(double beta, double t) { return 1.0 / R_inv(R(1.0 / beta) - 6.0 * t); }
inline double H_lower_bwd_improved(double beta, double t) {
  if (regime_of(beta) == BetaRegime::low) {
    return 227.0 * beta / (2.0 * std::exp(454.0 * beta * t / 45.0) + 225.0);
  }
  return 2.0 * beta / (5.0 * beta - (5.0 * beta - 2.0) * std::exp(4.0 * t));
}
inline double phi_lower_bwd(double t) { return sqrt3 / 12.0 * (1.0 - std::exp(-12.0 * t)); }
inline double phi_upper_bwd(double beta, double t) {
  if (regime_of(beta) == BetaRegime::low) {
    return sqrt3 / (6.0 * beta * beta) * -std::expm1(-6.0 * beta * beta * beta * t);
  }
  return 25.0 * sqrt3 / 24.0 * -std::expm1(-48.0 / 125.0 * t);
}
inline double phidot_lower_bwd(double beta, double t) {
  if (regime_of(beta) == BetaRegime::low) {
    return sqrt3 * beta * std::exp(-6.0 * beta * beta * beta * t);
  }
  return 2.0 * sqrt3 / 5.0 * std::exp(-48.0 / 125.0 * t);
}
inline double phidot_upper_bwd(double t) { return sqrt3 * std::exp(-12.0 * t); }
inline double a_lower_bwd(double beta, double t, double a0) {
  const double d = (sqrt2 * beta + 1.0) + (1.0 - sqrt2 * beta) * std::exp(3.0 * sqrt2 * t);
  return a0 * std::cbrt(2.0 / d) * std::exp(sqrt2 / 2.0 * t);
}
inline double a_upper_bwd(double beta, double t, double a0) {
  if (regime_of(beta) == BetaRegime::low) {
    return a0 * std::pow(227.0 / (225.0 * std::exp(-454.0 * beta * t / 45.0) + 2.0), 0.1);
  }
  return a0 * std::pow(2.0 / (5.0 * beta * std::exp(-4.0 * t) - (5.0 * beta - 2.0)), 0.1);
}

}  // namespace closed_form

/// Parameters of one family of bounds. thm21 needs alpha = 0; thm12 covers
/// alpha >= 0 but only forward time.
struct EnvelopeSet {
  double beta;
  double alpha;
  Mode mode;

  EnvelopeSet(double beta_, double alpha_ = 0.0, Mode mode_ = Mode::thm21)
      : beta(beta_), alpha(alpha_), mode(mode_) {
    (void)regime_of(beta);
    if (mode == Mode::thm21 && alpha != 0.0) throw DomainError("thm21 bounds need alpha = 0");
    if (mode == Mode::thm12 && !(alpha >= 0.0)) throw DomainError("thm12 bounds need alpha >= 0");
  }

  [[nodiscard]] BetaRegime regime() const { return regime_of(beta); }
};

/// Lower bound used for H on t < 0.
enum class HLowerBackward {
  improved,        // regime-dependent logistic bound, tends to a positive constant
  transcendental,  // 1 / S^-1(S(1/beta) - 6t), as displayed
  b2_comparison,   // 1 / R^-1(R(1/beta) - 6t), the solution of dH/dt = 6H^4 + 6H^2
  riccati,         // 1 / (1/beta - 6t)
};

/// Radicand coefficient of the forward phi lower bound: 24/5 follows from the
/// comparison ODE; 48/5 is the value printed with the scalarization bounds.
enum class PhiLowerForward { coeff_24_5, coeff_48_5 };

/// Forward dphi/dt lower bound: the printed 1/sqrt(1 + 12 beta^2 L) factor, or
/// the weaker 1/(1 + 12 beta^2 L) that the derivation chain delivers.
enum class PhidotLowerForward { displayed, proof_chain };

namespace detail {
inline void check_range(const EnvelopeSet& env, double t) {
  if (env.mode == Mode::thm12 && t < 0.0) {
    throw ModeRangeError("scalarization bounds only cover t >= 0");
  }
}
}  // namespace detail

[[nodiscard]] inline Bounds H_bounds(const EnvelopeSet& env, double t,
                                     HLowerBackward lower = HLowerBackward::improved) {
  detail::check_range(env, t);
  namespace cf = closed_form;
  const double b = env.beta;
  if (t >= 0.0) return {cf::H_lower_fwd(b, t), cf::H_upper_fwd(b, t)};
  double lo = 0.0;
  switch (lower) {
    case HLowerBackward::improved: lo = cf::H_lower_bwd_improved(b, t); break;
    case HLowerBackward::transcendental: lo = cf::H_lower_bwd_transcendental(b, t); break;
    case HLowerBackward::b2_comparison: lo = cf::H_lower_bwd_b2(b, t); break;
    case HLowerBackward::riccati: lo = cf::H_lower_bwd_riccati(b, t); break;
  }
  return {lo, cf::H_upper_bwd(b, t)};
}

[[nodiscard]] inline Bounds phi_bounds(const EnvelopeSet& env, double t,
                                       PhiLowerForward lower = PhiLowerForward::coeff_24_5) {
  detail::check_range(env, t);
  namespace cf = closed_form;
  const double b = env.beta;
  if (t >= 0.0) {
    const double coeff = lower == PhiLowerForward::coeff_24_5 ? 24.0 / 5.0 : 48.0 / 5.0;
    return {cf::phi_lower_fwd(b, t, coeff), cf::phi_upper_fwd(b, env.alpha, t)};
  }
  return {cf::phi_lower_bwd(t), cf::phi_upper_bwd(b, t)};
}

[[nodiscard]] inline Bounds phidot_bounds(
    const EnvelopeSet& env, double t,
    PhidotLowerForward lower = PhidotLowerForward::displayed) {
  detail::check_range(env, t);
  namespace cf = closed_form;
  const double b = env.beta;
  if (t >= 0.0) {
    const double L = std::log1p(b * t);
    const double base = cf::sqrt3 / (5.0 * t + 1.0 / b);
    double lo = 0.0;
    if (lower == PhidotLowerForward::displayed) {
      lo = base / std::sqrt(1.0 + 12.0 * b * b * (L + env.alpha));
    } else {
      lo = base / (1.0 + 12.0 * b * b * L + 4.0 * cf::sqrt3 * b * b * env.alpha);
    }
    return {lo, cf::phidot_upper_fwd(b, t)};
  }
  return {cf::phidot_lower_bwd(b, t), cf::phidot_upper_bwd(t)};
}

[[nodiscard]] inline Bounds a_bounds(const EnvelopeSet& env, double t, double a0) {
  if (!(a0 > 0.0)) throw DomainError("a0 must be positive");
  detail::check_range(env, t);
  namespace cf = closed_form;
  const double b = env.beta;
  if (t >= 0.0) return {cf::a_lower_fwd(b, t, a0), cf::a_upper_fwd(b, t, a0)};
  return {cf::a_lower_bwd(b, t, a0), cf::a_upper_bwd(b, t, a0)};
}

}  // namespace esgb
