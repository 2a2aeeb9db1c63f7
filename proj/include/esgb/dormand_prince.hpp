#pragma once

// Explicit Dormand-Prince 5(4) pair with FSAL and a PI step-size controller
// (Hairer, Norsett & Wanner, Solving ODEs I, sec. II.4). Generic over the state
// dimension so the same stepper drives the cosmology system and the scalar
// comparison ODEs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <type_traits>
#include <utility>

namespace esgb::ode {

template <std::size_t N>
using Vec = std::array<double, N>;

struct StepControl {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-3;
  double h_max = 1.0;
  std::size_t max_steps = 10'000'000;
  /// Steps shrink by halving after a failed right-hand side; below this size
  /// the run is abandoned.
  double h_min = 1e-10;
  /// Test mode: constant step h_init, no error control.
  bool fixed_step = false;
};

enum class Outcome { reached_end, rhs_failure, stopped, step_budget };

struct StepStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Placeholder for "no post-step projection".
struct NoProjection {};

namespace detail {

// Butcher tableau.
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                        a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// Difference between the 5th-order weights and the embedded 4th-order ones.
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// PI controller constants.
inline constexpr double kSafety = 0.9;
inline constexpr double kBeta = 0.04;
inline constexpr double kExpo1 = 0.2 - kBeta * 0.75;
// Per-step change of h is limited to [h / 5, 10 h].
inline constexpr double kFacMin = 0.2;
inline constexpr double kFacMax = 10.0;

template <std::size_t N>
Vec<N> axpy(const Vec<N>& y, double h, std::initializer_list<std::pair<double, const Vec<N>*>> terms) {
  Vec<N> out = y;
  for (std::size_t i = 0; i < N; ++i) {
    double acc = 0.0;
    for (const auto& [w, k] : terms) acc += w * (*k)[i];
    out[i] += h * acc;
  }
  return out;
}

}  // namespace detail

/// Integrates dy/dt = f(t, y) from t0 to t_end > t0.
///
/// f returns std::optional<Vec<N>>; nullopt marks a point where the right-hand
/// side is undefined and causes the trial step to be retried at half size.
/// observer(t, y, dy) is called after every accepted step and returns false to
/// stop the run. project(t, y), if supplied, maps each accepted state before
/// the derivative at the new point is recomputed.
template <std::size_t N, class Rhs, class Observer, class Project = NoProjection>
Outcome integrate_forward(Rhs&& f, double t0, Vec<N> y, double t_end, const StepControl& ctl,
                          Observer&& observer, StepStats* stats = nullptr,
                          Project project = {}) {
  using namespace detail;
  StepStats local;
  StepStats& st = stats ? *stats : local;

  auto k1o = f(t0, y);
  if (!k1o) return Outcome::rhs_failure;
  Vec<N> k1 = *k1o;

  double t = t0;
  double h = std::min(ctl.h_init, ctl.h_max);
  double facold = 1e-4;
  bool last_rejected = false;
  std::size_t attempts = 0;

  while (t < t_end) {
    if (attempts >= ctl.max_steps) return Outcome::step_budget;
    ++attempts;

    bool last = false;
    if (t + h >= t_end || (!ctl.fixed_step && t + 1.01 * h >= t_end)) {
      h = t_end - t;
      last = true;
    }

    bool failed = false;
    auto stage = [&](double tt, const Vec<N>& yy) -> Vec<N> {
      if (failed) return Vec<N>{};
      auto r = f(tt, yy);
      if (!r) {
        failed = true;
        return Vec<N>{};
      }
      return *r;
    };

    const Vec<N> k2 = stage(t + c2 * h, axpy<N>(y, h, {{a21, &k1}}));
    const Vec<N> k3 = stage(t + c3 * h, axpy<N>(y, h, {{a31, &k1}, {a32, &k2}}));
    const Vec<N> k4 = stage(t + c4 * h, axpy<N>(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const Vec<N> k5 =
        stage(t + c5 * h, axpy<N>(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const Vec<N> k6 = stage(
        t + h, axpy<N>(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const Vec<N> y_new = axpy<N>(
        y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    const double t_new = last ? t_end : t + h;
    const Vec<N> k7 = stage(t_new, y_new);

    if (failed) {
      ++st.rejected;
      h *= 0.5;
      last_rejected = true;
      if (h < ctl.h_min) return Outcome::rhs_failure;
      continue;
    }

    double err = 0.0;
    if (!ctl.fixed_step) {
      for (std::size_t i = 0; i < N; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                              e7 * k7[i]);
        const double sk = ctl.atol + ctl.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        err += (e / sk) * (e / sk);
      }
      err = std::sqrt(err / static_cast<double>(N));
      if (!std::isfinite(err)) err = 1e10;
    }

    const double fac11 = std::pow(std::max(err, 1e-300), kExpo1);
    if (err <= 1.0) {
      ++st.accepted;
      t = t_new;
      y = y_new;
      k1 = k7;
      if constexpr (!std::is_same_v<Project, NoProjection>) {
        y = project(t, y);
        auto r = f(t, y);
        if (!r) return Outcome::rhs_failure;
        k1 = *r;
      }
      if (!observer(t, y, k1)) return Outcome::stopped;
      if (ctl.fixed_step) continue;

      double fac = fac11 / std::pow(facold, kBeta);
      fac = std::clamp(fac / kSafety, 1.0 / kFacMax, 1.0 / kFacMin);
      double h_new = h / fac;
      if (last_rejected) h_new = std::min(h_new, h);
      facold = std::max(err, 1e-4);
      h = std::min(h_new, ctl.h_max);
      last_rejected = false;
    } else {
      ++st.rejected;
      h = h / std::min(1.0 / kFacMin, fac11 / kSafety);
      last_rejected = true;
      if (h < ctl.h_min) return Outcome::rhs_failure;
    }
  }
  return Outcome::reached_end;
}

/// Integrates from t0 to t1 in either direction. Backward runs (t1 < t0) use
/// the reflected time tau = -t with right-hand side -f(-tau, y), so there is a
/// single stepper path. The observer always sees physical time and the
/// physical derivative dy/dt.
template <std::size_t N, class Rhs, class Observer, class Project = NoProjection>
Outcome integrate(Rhs&& f, double t0, const Vec<N>& y0, double t1, const StepControl& ctl,
                  Observer&& observer, StepStats* stats = nullptr, Project project = {}) {
  const double sigma = t1 >= t0 ? 1.0 : -1.0;
  auto g = [&](double tau, const Vec<N>& y) -> std::optional<Vec<N>> {
    auto r = f(sigma * tau, y);
    if (!r) return std::nullopt;
    if (sigma < 0) {
      for (auto& v : *r) v = -v;
    }
    return r;
  };
  auto obs = [&](double tau, const Vec<N>& y, const Vec<N>& k) {
    Vec<N> dy = k;
    if (sigma < 0) {
      for (auto& v : dy) v = -v;
    }
    return observer(sigma * tau, y, dy);
  };
  if constexpr (std::is_same_v<Project, NoProjection>) {
    return integrate_forward<N>(g, sigma * t0, y0, sigma * t1, ctl, obs, stats);
  } else {
    auto proj = [&](double tau, const Vec<N>& y) { return project(sigma * tau, y); };
    return integrate_forward<N>(g, sigma * t0, y0, sigma * t1, ctl, obs, stats, proj);
  }
}

/// Value of a scalar ODE solution at t1.
template <class Rhs>
std::optional<double> solve_scalar(Rhs&& f, double t0, double y0, double t1,
                                   const StepControl& ctl = {}) {
  if (t1 == t0) return y0;
  double last = y0;
  auto fv = [&](double t, const Vec<1>& y) -> std::optional<Vec<1>> {
    const double v = f(t, y[0]);
    if (!std::isfinite(v)) return std::nullopt;
    return Vec<1>{v};
  };
  auto obs = [&](double, const Vec<1>& y, const Vec<1>&) {
    last = y[0];
    return true;
  };
  if (integrate<1>(fv, t0, Vec<1>{y0}, t1, ctl, obs) != Outcome::reached_end) {
    return std::nullopt;
  }
  return last;
}

}  // namespace esgb::ode
