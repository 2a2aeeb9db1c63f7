#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "esgb/errors.hpp"
#include "esgb/field_equations.hpp"

namespace esgb {

/// Selects the root of the constraint quadratic for Phi(0). plus is the
/// iota = 0 branch.
enum class BranchSign : int { plus = 1, minus = -1 };

[[nodiscard]] constexpr double sign_value(BranchSign s) noexcept {
  return s == BranchSign::plus ? 1.0 : -1.0;
}

[[nodiscard]] constexpr BranchSign flipped(BranchSign s) noexcept {
  return s == BranchSign::plus ? BranchSign::minus : BranchSign::plus;
}

/// Free initial data (a0, beta, alpha) = (a, H, phi) at t = 0, plus the branch.
/// The branch is stored rather than inferred from sign(Phi): both roots can be
/// positive when alpha < 0.
struct FreeData {
  double a0 = 1.0;
  double beta = 0.0;
  double alpha = 0.0;
  BranchSign s = BranchSign::plus;
};

/// Upper end of the beta interval (0, sqrt(3)/3).
inline constexpr double kBetaMax = std::numbers::sqrt3 / 3.0;

/// Phi(0) = -6 alpha beta^3 + s sqrt((6 alpha beta^3)^2 + 3 beta^2).
[[nodiscard]] inline double solve_phidot(double beta, double alpha, BranchSign s) noexcept {
  const double p = -6.0 * alpha * beta * beta * beta;
  const double q = sign_value(s) * std::sqrt(p * p + 3.0 * beta * beta);
  // When p and q have opposite signs the sum cancels; use the product of the
  // roots, -3 beta^2, instead.
  if (p * q < 0.0) return -3.0 * beta * beta / (p - q);
  return p + q;
}

/// gamma(alpha, beta): the plus-branch initial scalar velocity.
[[nodiscard]] inline double gamma_of(double beta, double alpha) noexcept {
  return solve_phidot(beta, alpha, BranchSign::plus);
}

/// kappa(alpha, beta) = dH/dt at t = 0 on the plus branch, evaluated from the
/// general closed form for every alpha (including alpha = 0).
[[nodiscard]] inline double kappa_of(double beta, double alpha) {
  const double g = gamma_of(beta, alpha);
  const double b2 = beta * beta;
  const double b3 = b2 * beta;
  const double num = -4.0 * b3 * alpha * g - g * g + 4.0 * b2 * g * g -
                     24.0 * b3 * b3 * alpha * alpha - 3.0 * b2;
  const double den = 2.0 - 8.0 * beta * alpha * g + 24.0 * b2 * b2 * alpha * alpha;
  if (den == 0.0 || !std::isfinite(den)) {
    throw DegenerateDenominator("kappa denominator vanishes");
  }
  return num / den;
}

[[nodiscard]] inline CosmoState make_initial_state(const FreeData& d) {
  if (!(d.a0 > 0.0)) throw DomainError("initial scale factor a0 must be positive");
  return CosmoState{0.0, d.a0, d.beta, d.alpha, solve_phidot(d.beta, d.alpha, d.s)};
}

struct DataClassification {
  double kappa = 0.0;
  double gamma = 0.0;
  double phidot0 = 0.0;
  bool theorem21_ok = false;  // global singularity-free data
  bool theorem12_ok = false;  // admissible set A (scalarization)
  std::vector<std::string> reasons;
};

namespace detail {

inline std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

/// Verdict for lo < x < hi with the open-interval boundary called out.
inline bool open_interval(double x, double lo, double hi, const std::string& what,
                          std::vector<std::string>& reasons) {
  const bool ok = lo < x && x < hi;
  std::string verdict = ok ? "ok" : (x == lo || x == hi ? "boundary" : "violated");
  reasons.push_back(what + " in (" + fmt_num(lo) + ", " + fmt_num(hi) + "): " + verdict +
                    " (value " + fmt_num(x) + ")");
  return ok;
}

}  // namespace detail

/// Checks the data against both hypothesis sets, all with strict
/// inequalities and no epsilon margin.
[[nodiscard]] inline DataClassification classify(const FreeData& d) {
  DataClassification c;
  c.gamma = gamma_of(d.beta, d.alpha);
  c.phidot0 = solve_phidot(d.beta, d.alpha, d.s);
  auto& r = c.reasons;

  const bool a0_ok = d.a0 > 0.0;
  r.push_back(std::string("a0 > 0: ") + (a0_ok ? "ok" : "violated"));
  const bool beta_ok = detail::open_interval(d.beta, 0.0, kBetaMax, "beta", r);
  const bool phidot_ok = c.phidot0 > 0.0;
  r.push_back("phidot(0) > 0: " + std::string(phidot_ok ? "ok" : "violated") + " (value " +
              detail::fmt_num(c.phidot0) + ")");
  const bool alpha_zero = d.alpha == 0.0;
  r.push_back(std::string("alpha = 0: ") + (alpha_zero ? "ok" : "violated"));
  const bool alpha_nonneg = d.alpha >= 0.0;
  r.push_back(std::string("alpha >= 0: ") + (alpha_nonneg ? "ok" : "violated"));

  bool kappa_ok = false;
  try {
    c.kappa = kappa_of(d.beta, d.alpha);
    const double b2 = d.beta * d.beta;
    kappa_ok = detail::open_interval(c.kappa, -5.0 * b2, -b2, "kappa", r);
  } catch (const DegenerateDenominator&) {
    c.kappa = std::nan("");
    r.push_back("kappa: degenerate denominator");
  }

  c.theorem21_ok = a0_ok && alpha_zero && beta_ok && phidot_ok;
  c.theorem12_ok = a0_ok && alpha_nonneg && beta_ok && kappa_ok && phidot_ok;
  return c;
}

}  // namespace esgb
