#pragma once

// Auxiliary combinations B1..B5 of H and dH/dt whose signs drive the bounds,
// and the registry of scalar comparison ODEs with their closed-form solutions.

#include <array>
#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

#include "esgb/envelopes.hpp"
#include "esgb/integrator.hpp"

namespace esgb {

enum class BName { B1, B2, B3, B4, B5 };
enum class ExpectedSign { positive, negative };
enum class SignInterval { t_pos, t_neg };

[[nodiscard]] constexpr std::string_view to_string(BName b) noexcept {
  constexpr std::array<std::string_view, 5> names{"B1", "B2", "B3", "B4", "B5"};
  return names[static_cast<int>(b)];
}

inline constexpr double kDefaultSignTol = 1e-9;

/// Sign check of one B over the samples of one time direction. min_margin is
/// signed: B for an expected-positive B, -B for an expected-negative one.
struct BSignVerdict {
  BName name;
  ExpectedSign expected_sign;
  SignInterval interval;
  double min_margin = std::numeric_limits<double>::infinity();
  bool violated = false;
  double worst_t = 0.0;
  std::size_t samples_checked = 0;
};

/// B5's linear coefficient depends on the launch beta, not on the running H.
[[nodiscard]] inline double b5_coefficient(double beta) {
  return regime_of(beta) == BetaRegime::low ? 454.0 * beta / 45.0 : 4.0;
}

[[nodiscard]] inline double eval_B(BName name, const CosmoState& s, double dH, double beta) {
  const double H = s.H;
  const double H2 = H * H;
  switch (name) {
    case BName::B1: return dH + 5.0 * H2;
    case BName::B2: return dH - 6.0 * H2 * H2 - 6.0 * H2;
    case BName::B3: return dH + H2;
    case BName::B4: return dH - 3.0 * H2 + 1.5;
    case BName::B5: return dH - 10.0 * H2 + b5_coefficient(beta) * H;
  }
  return std::nan("");
}

/// B1 > 0 and B3 < 0 on t > 0 samples; B2 < 0, B4 > 0 and B5 < 0 on t < 0
/// samples. Verdicts are only produced for directions the trajectory covers.
[[nodiscard]] inline std::vector<BSignVerdict> check_signs(const Trajectory& traj, double beta,
                                                           double tol_sign = kDefaultSignTol) {
  struct Rule {
    BName name;
    ExpectedSign sign;
    SignInterval interval;
  };
  constexpr std::array<Rule, 5> rules{{
      {BName::B1, ExpectedSign::positive, SignInterval::t_pos},
      {BName::B3, ExpectedSign::negative, SignInterval::t_pos},
      {BName::B2, ExpectedSign::negative, SignInterval::t_neg},
      {BName::B4, ExpectedSign::positive, SignInterval::t_neg},
      {BName::B5, ExpectedSign::negative, SignInterval::t_neg},
  }};

  std::vector<BSignVerdict> out;
  for (const Rule& rule : rules) {
    BSignVerdict v{rule.name, rule.sign, rule.interval};
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
      const CosmoState& s = traj.samples[i];
      const bool in = rule.interval == SignInterval::t_pos ? s.t > 0.0 : s.t < 0.0;
      if (!in) continue;
      const double b = eval_B(rule.name, s, traj.rates[i].dH, beta);
      const double margin = rule.sign == ExpectedSign::positive ? b : -b;
      ++v.samples_checked;
      if (margin < v.min_margin) {
        v.min_margin = margin;
        v.worst_t = s.t;
      }
    }
    if (v.samples_checked == 0) continue;
    v.violated = v.min_margin < -tol_sign;
    out.push_back(v);
  }
  return out;
}

/// Scalar comparison problems whose closed-form solutions are the bounds.
enum class ComparisonKind {
  H_lower_fwd,                 // dH/dt = -5H^2
  H_upper_fwd,                 // dH/dt = -H^2
  H_upper_bwd,                 // dH/dt = 3H^2 - 3/2
  H_lower_bwd_transcendental,  // dH/dt = 6H^2 (1 + H^2) / (1 + 2H^2)
  H_lower_bwd_b2,              // dH/dt = 6H^4 + 6H^2
  H_lower_bwd_improved,        // dH/dt = 10H^2 - b H
  phi_lower_fwd,
  phi_upper_fwd,
  phi_lower_bwd,  // dphi/dt = -12 phi + sqrt3
  phi_upper_bwd,
  a_lower_fwd,  // da/dt = a * H_lower_fwd(t), a(0) = 1
  a_upper_fwd,
  a_lower_bwd,  // da/dt = a * H_upper_bwd(t)
  a_upper_bwd,  // da/dt = a * H_lower_bwd_improved(t)
};

struct ComparisonSpec {
  ComparisonKind kind;
  std::string_view name;
  bool forward;  // valid on t >= 0 (true) or t <= 0 (false)
  double (*ode)(double t, double y, double beta, double alpha);
  double (*initial)(double beta, double alpha);
  double test_t_end;  // interval used to check the closed form against the ODE
};

namespace detail {
namespace cf = closed_form;
inline double init_beta(double beta, double) { return beta; }
inline double init_zero(double, double) { return 0.0; }
inline double init_alpha(double, double alpha) { return alpha; }
inline double init_one(double, double) { return 1.0; }
}  // namespace detail

[[nodiscard]] inline const std::array<ComparisonSpec, 14>& comparison_registry() {
  using namespace detail;
  static const std::array<ComparisonSpec, 14> registry{{
      {ComparisonKind::H_lower_fwd, "H_lower_fwd", true,
       [](double, double y, double, double) { return -5.0 * y * y; }, init_beta, 100.0},
      {ComparisonKind::H_upper_fwd, "H_upper_fwd", true,
       [](double, double y, double, double) { return -y * y; }, init_beta, 100.0},
      {ComparisonKind::H_upper_bwd, "H_upper_bwd", false,
       [](double, double y, double, double) { return 3.0 * y * y - 1.5; }, init_beta, -10.0},
      {ComparisonKind::H_lower_bwd_transcendental, "H_lower_bwd_transcendental", false,
       [](double, double y, double, double) {
         return 6.0 * y * y * (1.0 + y * y) / (1.0 + 2.0 * y * y);
       },
       init_beta, -10.0},
      {ComparisonKind::H_lower_bwd_b2, "H_lower_bwd_b2", false,
       [](double, double y, double, double) { return 6.0 * y * y * y * y + 6.0 * y * y; },
       init_beta, -10.0},
      {ComparisonKind::H_lower_bwd_improved, "H_lower_bwd_improved", false,
       [](double, double y, double beta, double) {
         return 10.0 * y * y - b5_coefficient(beta) * y;
       },
       init_beta, -10.0},
      {ComparisonKind::phi_lower_fwd, "phi_lower_fwd", true,
       [](double t, double y, double beta, double) {
         return cf::sqrt3 / (5.0 * t + 1.0 / beta) / (1.0 + 4.0 * cf::sqrt3 * beta * beta * y);
       },
       init_zero, 100.0},
      {ComparisonKind::phi_upper_fwd, "phi_upper_fwd", true,
       [](double t, double, double beta, double) { return cf::sqrt3 / (t + 1.0 / beta); },
       init_alpha, 100.0},
      {ComparisonKind::phi_lower_bwd, "phi_lower_bwd", false,
       [](double, double y, double, double) { return -12.0 * y + cf::sqrt3; }, init_zero, -2.0},
      {ComparisonKind::phi_upper_bwd, "phi_upper_bwd", false,
       [](double, double y, double beta, double) {
         if (regime_of(beta) == BetaRegime::low) {
           return cf::sqrt3 * beta - 6.0 * beta * beta * beta * y;
         }
         return 2.0 * cf::sqrt3 / 5.0 - 48.0 / 125.0 * y;
       },
       init_zero, -10.0},
      {ComparisonKind::a_lower_fwd, "a_lower_fwd", true,
       [](double t, double y, double beta, double) { return y * cf::H_lower_fwd(beta, t); },
       init_one, 100.0},
      {ComparisonKind::a_upper_fwd, "a_upper_fwd", true,
       [](double t, double y, double beta, double) { return y * cf::H_upper_fwd(beta, t); },
       init_one, 100.0},
      {ComparisonKind::a_lower_bwd, "a_lower_bwd", false,
       [](double t, double y, double beta, double) { return y * cf::H_upper_bwd(beta, t); },
       init_one, -10.0},
      {ComparisonKind::a_upper_bwd, "a_upper_bwd", false,
       [](double t, double y, double beta, double) {
         return y * cf::H_lower_bwd_improved(beta, t);
       },
       init_one, -10.0},
  }};
  return registry;
}

[[nodiscard]] inline const ComparisonSpec& comparison_spec(ComparisonKind kind) {
  return comparison_registry()[static_cast<std::size_t>(kind)];
}

/// Closed-form solution of the named comparison problem at time t.
[[nodiscard]] inline double comparison_solution(ComparisonKind kind, double beta, double t,
                                                double alpha = 0.0) {
  const ComparisonSpec& spec = comparison_spec(kind);
  if (!(beta > 0.0)) throw DomainError("comparison solutions need beta > 0");
  if (spec.forward ? t < 0.0 : t > 0.0) {
    throw DomainError(std::string(spec.name) + " is only defined on one side of t = 0");
  }
  namespace cf = closed_form;
  switch (kind) {
    case ComparisonKind::H_lower_fwd: return cf::H_lower_fwd(beta, t);
    case ComparisonKind::H_upper_fwd: return cf::H_upper_fwd(beta, t);
    case ComparisonKind::H_upper_bwd: return cf::H_upper_bwd(beta, t);
    case ComparisonKind::H_lower_bwd_transcendental:
      return cf::H_lower_bwd_transcendental(beta, t);
    case ComparisonKind::H_lower_bwd_b2: return cf::H_lower_bwd_b2(beta, t);
    case ComparisonKind::H_lower_bwd_improved: return cf::H_lower_bwd_improved(beta, t);
    case ComparisonKind::phi_lower_fwd: return cf::phi_lower_fwd(beta, t, 24.0 / 5.0);
    case ComparisonKind::phi_upper_fwd: return cf::phi_upper_fwd(beta, alpha, t);
    case ComparisonKind::phi_lower_bwd: return cf::phi_lower_bwd(t);
    case ComparisonKind::phi_upper_bwd: return cf::phi_upper_bwd(beta, t);
    case ComparisonKind::a_lower_fwd: return cf::a_lower_fwd(beta, t, 1.0);
    case ComparisonKind::a_upper_fwd: return cf::a_upper_fwd(beta, t, 1.0);
    case ComparisonKind::a_lower_bwd: return cf::a_lower_bwd(beta, t, 1.0);
    case ComparisonKind::a_upper_bwd: return cf::a_upper_bwd(beta, t, 1.0);
  }
  throw DomainError("unknown comparison kind");
}

}  // namespace esgb
