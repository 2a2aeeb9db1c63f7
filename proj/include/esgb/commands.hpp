#pragma once

// Subcommand implementations. Each takes its inputs as plain structs, writes
// human-readable output to the given streams and returns a process exit code,
// so tests can drive them without spawning processes.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "esgb/envelopes.hpp"
#include "esgb/errors.hpp"
#include "esgb/initial_data.hpp"
#include "esgb/integrator.hpp"
#include "esgb/monitor.hpp"
#include "esgb/oracles.hpp"
#include "esgb/svg_plot.hpp"
#include "esgb/trajectory_csv.hpp"

namespace esgb {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int bound_violated = 1;
inline constexpr int constraint_drift = 2;
inline constexpr int denominator_event = 3;
inline constexpr int step_budget = 4;
inline constexpr int refused = 5;
inline constexpr int bad_input = 6;
}  // namespace exit_code

[[nodiscard]] constexpr int exit_code_for(TerminalStatus s) noexcept {
  switch (s) {
    case TerminalStatus::reached_t_end: return exit_code::ok;
    case TerminalStatus::constraint_drift: return exit_code::constraint_drift;
    case TerminalStatus::denominator_event: return exit_code::denominator_event;
    case TerminalStatus::step_budget_exhausted: return exit_code::step_budget;
  }
  return exit_code::bad_input;
}

struct RunManifest {
  FreeData data{1.0, 1.0 / 3.0, 0.0, BranchSign::plus};
  IntegratorConfig cfg;
  double t_min = 0.0;
  double t_max = 100.0;
  Mode mode = Mode::thm21;
  std::string output = "trajectory.csv";  // "-" writes the CSV to the output stream

  /// Returns a note when thm12 mode clipped t_min to 0.
  std::optional<std::string> apply_mode_rules() {
    if (mode == Mode::thm12 && t_min < 0.0) {
      t_min = 0.0;
      return "note: thm12 mode covers t >= 0 only; t_min set to 0";
    }
    return std::nullopt;
  }

  void validate() const {
    if (!(t_min <= 0.0 && 0.0 <= t_max)) throw DomainError("need t_min <= 0 <= t_max");
    if (t_min == 0.0 && t_max == 0.0) throw DomainError("empty time interval");
    if (!(data.a0 > 0.0)) throw DomainError("a0 must be positive");
    cfg.validate();
  }
};

struct SimulationResult {
  std::optional<Trajectory> backward;
  std::optional<Trajectory> forward;
  DataClassification classification;

  [[nodiscard]] int exit_code() const {
    for (const auto* tr : {backward ? &*backward : nullptr, forward ? &*forward : nullptr}) {
      if (tr && tr->terminal_status != TerminalStatus::reached_t_end) {
        return exit_code_for(tr->terminal_status);
      }
    }
    return exit_code::ok;
  }
};

[[nodiscard]] inline SimulationResult run_simulation(const RunManifest& m) {
  m.validate();
  SimulationResult r;
  r.classification = classify(m.data);
  const CosmoState s0 = make_initial_state(m.data);
  if (m.t_min < 0.0) r.backward = integrate(s0, m.t_min, m.cfg);
  if (m.t_max > 0.0) r.forward = integrate(s0, m.t_max, m.cfg);
  return r;
}

namespace detail {

inline std::string sci(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

inline void print_classification(const DataClassification& c, Mode mode, std::ostream& os) {
  os << "kappa = " << fmt_num(c.kappa) << "  gamma = " << fmt_num(c.gamma)
     << "  phidot(0) = " << fmt_num(c.phidot0) << '\n';
  os << "global singularity-free hypotheses (thm21): " << (c.theorem21_ok ? "satisfied" : "not satisfied")
     << '\n';
  os << "admissible set (thm12): " << (c.theorem12_ok ? "satisfied" : "not satisfied") << '\n';
  const bool ok = mode == Mode::thm21 ? c.theorem21_ok : c.theorem12_ok;
  if (!ok) {
    for (const auto& reason : c.reasons) {
      if (reason.find(": ok") == std::string::npos) os << "warning: " << reason << '\n';
    }
  }
}

inline void print_run(std::string_view label, const Trajectory& tr, std::ostream& os) {
  const MonitorReport rep = monitor(tr);
  os << label << ": " << to_string(tr.terminal_status) << " at t = " << sci(tr.t_end())
     << ", samples " << tr.samples.size() << ", steps " << tr.accepted_steps << " accepted / "
     << tr.rejected_steps << " rejected\n";
  os << "  max normalized |C| " << sci(rep.max_constraint) << ", max normalized |P| "
     << sci(rep.max_power) << ", min D " << sci(rep.min_denominator) << '\n';
}

}  // namespace detail

[[nodiscard]] inline int cmd_simulate(RunManifest m, std::ostream& out, std::ostream& err) {
  const bool csv_to_stream = m.output == "-";
  std::ostream& log = csv_to_stream ? err : out;
  if (auto note = m.apply_mode_rules()) log << *note << '\n';
  SimulationResult r;
  try {
    r = run_simulation(m);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::bad_input;
  }
  detail::print_classification(r.classification, m.mode, log);
  if (r.backward) detail::print_run("backward", *r.backward, log);
  if (r.forward) detail::print_run("forward", *r.forward, log);

  const auto rows = stitch(r.backward ? &*r.backward : nullptr, r.forward ? &*r.forward : nullptr);
  if (csv_to_stream) {
    write_trajectory_csv(out, rows);
  } else if (!m.output.empty()) {
    std::ofstream f(m.output, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << m.output << " for writing\n";
      return exit_code::bad_input;
    }
    write_trajectory_csv(f, rows);
    log << "wrote " << rows.size() << " rows to " << m.output << '\n';
  }
  return r.exit_code();
}

// ---------------------------------------------------------------- verify

inline constexpr double kVerifyMarginTol = 1e-9;
inline constexpr std::size_t kVerifyPoints = 400;

struct BoundCheck {
  std::string name;  // e.g. "H lower (t>0)"
  bool gating = true;
  double worst_margin = std::numeric_limits<double>::infinity();  // relative to |value|
  double worst_t = 0.0;
  std::size_t samples = 0;

  [[nodiscard]] bool passed() const { return samples == 0 || worst_margin > kVerifyMarginTol; }
};

struct VerifyReport {
  SimulationResult sim;
  std::vector<BoundCheck> bounds;
  std::vector<BSignVerdict> signs;
  int exit_code = exit_code::ok;
  std::string first_violation;  // empty when everything held
};

/// n times per direction, log-spaced in |t| from 1e-3 to |T|; T itself is last.
[[nodiscard]] inline std::vector<double> verification_times(double T, std::size_t n) {
  std::vector<double> ts;
  if (T == 0.0 || n == 0) return ts;
  const double sign = T > 0.0 ? 1.0 : -1.0;
  const double hi = std::abs(T);
  const double lo = std::min(1e-3, hi);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = n == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    double v = lo == hi ? hi * (i + 1.0) / static_cast<double>(n)
                        : std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)));
    if (i + 1 == n) v = hi;
    ts.push_back(sign * v);
  }
  return ts;
}

namespace detail {

struct BoundRule {
  std::string quantity;
  bool gating;
  std::string variant;  // appended in brackets to the name when non-empty
  std::function<Bounds(const EnvelopeSet&, double, double)> eval;  // (env, t, a0)
  std::function<double(const CosmoState&)> value;
};

inline std::vector<BoundRule> bound_rules(Mode mode, bool forward) {
  auto H = [](const CosmoState& s) { return s.H; };
  auto phi = [](const CosmoState& s) { return s.phi; };
  auto phidot = [](const CosmoState& s) { return s.Phi; };
  auto a = [](const CosmoState& s) { return s.a; };
  std::vector<BoundRule> rules{
      {"H", true, "", [](const EnvelopeSet& e, double t, double) { return H_bounds(e, t); }, H},
      {"phi", true, "", [](const EnvelopeSet& e, double t, double) { return phi_bounds(e, t); }, phi},
      {"phidot", true, "",
       [](const EnvelopeSet& e, double t, double) { return phidot_bounds(e, t); }, phidot},
      {"a", true, "", [](const EnvelopeSet& e, double t, double a0) { return a_bounds(e, t, a0); }, a},
  };
  if (!forward) {
    rules.push_back({"H", false, "transcendental",
                     [](const EnvelopeSet& e, double t, double) {
                       return H_bounds(e, t, HLowerBackward::transcendental);
                     },
                     H});
    rules.push_back({"H", false, "B2 comparison",
                     [](const EnvelopeSet& e, double t, double) {
                       return H_bounds(e, t, HLowerBackward::b2_comparison);
                     },
                     H});
  }
  if (forward && mode == Mode::thm12) {
    rules.push_back({"phi", false, "48/5",
                     [](const EnvelopeSet& e, double t, double) {
                       return phi_bounds(e, t, PhiLowerForward::coeff_48_5);
                     },
                     phi});
    rules.push_back({"phidot", false, "proof chain",
                     [](const EnvelopeSet& e, double t, double) {
                       return phidot_bounds(e, t, PhidotLowerForward::proof_chain);
                     },
                     phidot});
  }
  return rules;
}

inline void record(BoundCheck& c, double margin, double t) {
  ++c.samples;
  if (margin < c.worst_margin) {
    c.worst_margin = margin;
    c.worst_t = t;
  }
}

inline void check_direction(const Trajectory& tr, const EnvelopeSet& env, double a0,
                            std::size_t n_points, std::vector<BoundCheck>& out) {
  const bool fwd = tr.direction == Direction::forward;
  const std::string side = fwd ? " (t>0)" : " (t<0)";
  const auto rules = bound_rules(env.mode, fwd);
  const auto times = verification_times(tr.t_end(), n_points);
  std::vector<CosmoState> states;
  states.reserve(times.size());
  for (double t : times) states.push_back(sample_at(tr, t));

  for (const auto& rule : rules) {
    const std::string suffix = rule.variant.empty() ? "" : " [" + rule.variant + "]";
    BoundCheck lower{rule.quantity + " lower" + suffix + side, rule.gating};
    BoundCheck upper{rule.quantity + " upper" + suffix + side, rule.gating};
    for (const auto& s : states) {
      const Bounds b = rule.eval(env, s.t, a0);
      const double v = rule.value(s);
      const double scale = v != 0.0 ? std::abs(v) : std::max({std::abs(b.lower), std::abs(b.upper),
                                                              std::numeric_limits<double>::min()});
      record(lower, (v - b.lower) / scale, s.t);
      record(upper, (b.upper - v) / scale, s.t);
    }
    // Variants only differ in the lower bound.
    out.push_back(lower);
    if (rule.variant.empty()) out.push_back(upper);
  }
}

}  // namespace detail

/// Integrates and checks every envelope and B-sign. Does not gate on the
/// classification; cmd_verify does that.
[[nodiscard]] inline VerifyReport run_verification(const RunManifest& m,
                                                   std::size_t n_points = kVerifyPoints) {
  VerifyReport rep;
  rep.sim = run_simulation(m);
  if (const int code = rep.sim.exit_code(); code != exit_code::ok) {
    rep.exit_code = code;
    rep.first_violation = "integration ended early";
    return rep;
  }
  const EnvelopeSet env(m.data.beta, m.data.alpha, m.mode);
  for (const auto* tr : {rep.sim.backward ? &*rep.sim.backward : nullptr,
                         rep.sim.forward ? &*rep.sim.forward : nullptr}) {
    if (!tr) continue;
    detail::check_direction(*tr, env, m.data.a0, n_points, rep.bounds);
    auto signs = check_signs(*tr, m.data.beta);
    rep.signs.insert(rep.signs.end(), signs.begin(), signs.end());
  }
  for (const auto& b : rep.bounds) {
    if (b.gating && !b.passed()) {
      rep.exit_code = exit_code::bound_violated;
      rep.first_violation = b.name;
      return rep;
    }
  }
  for (const auto& v : rep.signs) {
    if (v.violated) {
      rep.exit_code = exit_code::bound_violated;
      rep.first_violation = std::string(to_string(v.name)) +
                            (v.expected_sign == ExpectedSign::positive ? " > 0" : " < 0");
      return rep;
    }
  }
  return rep;
}

namespace detail {

inline void print_verify_report(const RunManifest& m, const VerifyReport& rep, std::ostream& os) {
  os << "verify beta = " << fmt_num(m.data.beta) << ", alpha = " << fmt_num(m.data.alpha)
     << ", mode " << to_string(m.mode) << ", t in [" << fmt_num(m.t_min) << ", " << fmt_num(m.t_max)
     << "]\n";
  if (rep.sim.backward) print_run("backward", *rep.sim.backward, os);
  if (rep.sim.forward) print_run("forward", *rep.sim.forward, os);
  for (const auto& b : rep.bounds) {
    os << "  " << b.name << ": worst relative margin " << sci(b.worst_margin) << " at t = "
       << sci(b.worst_t) << "  " << (b.passed() ? "ok" : "VIOLATED")
       << (b.gating ? "" : " (informational)") << '\n';
  }
  for (const auto& v : rep.signs) {
    os << "  " << to_string(v.name) << (v.expected_sign == ExpectedSign::positive ? " > 0" : " < 0")
       << (v.interval == SignInterval::t_pos ? " (t>0)" : " (t<0)") << ": min margin "
       << sci(v.min_margin) << " at t = " << sci(v.worst_t) << "  "
       << (v.violated ? "VIOLATED" : "ok") << '\n';
  }
  if (rep.exit_code == exit_code::ok) {
    os << "result: all bounds hold\n";
  } else {
    os << "result: FAILED, first violated: " << rep.first_violation << '\n';
  }
}

/// Exit code and text for one verify run, including the classification gate.
inline int verify_one(RunManifest m, std::size_t n_points, std::ostream& os) {
  if (auto note = m.apply_mode_rules()) os << *note << '\n';
  try {
    m.validate();
    const DataClassification c = classify(m.data);
    const bool ok = m.mode == Mode::thm21 ? c.theorem21_ok : c.theorem12_ok;
    if (!ok) {
      os << "refused: data does not satisfy the " << to_string(m.mode) << " hypotheses\n";
      for (const auto& reason : c.reasons) os << "  " << reason << '\n';
      return exit_code::refused;
    }
    const VerifyReport rep = run_verification(m, n_points);
    print_verify_report(m, rep, os);
    return rep.exit_code;
  } catch (const Error& e) {
    os << "error: " << e.what() << '\n';
    return exit_code::bad_input;
  }
}

}  // namespace detail

[[nodiscard]] inline int cmd_verify(const RunManifest& m, std::ostream& out,
                                    std::size_t n_points = kVerifyPoints) {
  return detail::verify_one(m, n_points, out);
}

/// Parses "a:b:n" into n evenly spaced values from a to b inclusive.
[[nodiscard]] inline std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw DomainError("grid must look like a:b:n");
  double lo = 0, hi = 0;
  long n = 0;
  try {
    std::size_t used = 0;
    lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw DomainError("bad grid start");
    hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw DomainError("bad grid end");
    n = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw DomainError("bad grid count");
  } catch (const std::logic_error&) {
    throw DomainError("grid must look like a:b:n");
  }
  if (n < 1) throw DomainError("grid count must be at least 1");
  std::vector<double> v;
  for (long i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / double(n - 1));
  if (n > 1) v.back() = hi;
  return v;
}

/// One verify run per beta, fanned out concurrently; reports are printed in
/// grid order. The exit code is the first nonzero one in grid order.
[[nodiscard]] inline int cmd_verify_grid(const RunManifest& m, const std::vector<double>& betas,
                                         std::ostream& out, std::size_t n_points = kVerifyPoints) {
  std::vector<std::future<std::pair<int, std::string>>> jobs;
  for (double b : betas) {
    RunManifest mb = m;
    mb.data.beta = b;
    jobs.push_back(std::async(std::launch::async, [mb, n_points] {
      std::ostringstream os;
      const int code = detail::verify_one(mb, n_points, os);
      return std::pair{code, os.str()};
    }));
  }
  int first = exit_code::ok;
  std::ostringstream summary;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [code, text] = jobs[i].get();
    out << text << '\n';
    summary << "beta " << detail::fmt_num(betas[i]) << ": exit " << code << '\n';
    if (first == exit_code::ok) first = code;
  }
  out << summary.str();
  return first;
}

// ------------------------------------------------------------ admissible

struct AdmissibleRequest {
  double alpha_lo = 0.0, alpha_hi = 1.0;
  double beta_lo = 0.05, beta_hi = 0.55;
  std::size_t n_alpha = 11, n_beta = 11;
};

struct AdmissibleRow {
  double alpha, beta, kappa;
  bool in_A;
  std::string reason;
};

/// Membership in the admissible set with a0 = 1 and the + branch.
[[nodiscard]] inline AdmissibleRow admissible_point(double alpha, double beta) {
  AdmissibleRow r{alpha, beta, std::nan(""), false, "ok"};
  try {
    r.kappa = kappa_of(beta, alpha);
  } catch (const DegenerateDenominator&) {
    r.reason = "kappa_degenerate";
    return r;
  }
  const double b2 = beta * beta;
  if (!(beta > 0.0 && beta < kBetaMax)) {
    r.reason = "beta_out_of_range";
  } else if (!(alpha >= 0.0)) {
    r.reason = "alpha_negative";
  } else if (r.kappa == -5.0 * b2 || r.kappa == -b2) {
    r.reason = "kappa_on_boundary";
  } else if (!(-5.0 * b2 < r.kappa && r.kappa < -b2)) {
    r.reason = "kappa_out_of_range";
  } else if (!(gamma_of(beta, alpha) > 0.0)) {
    r.reason = "phidot0_nonpositive";
  } else {
    r.in_A = true;
  }
  return r;
}

namespace detail {
inline std::vector<double> axis(double lo, double hi, std::size_t n) {
  if (lo == hi) return {lo};
  std::vector<double> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / double(n - 1));
  v.back() = hi;
  return v;
}
}  // namespace detail

[[nodiscard]] inline std::vector<AdmissibleRow> scan_admissible(const AdmissibleRequest& req) {
  if (req.n_alpha < 2 || req.n_beta < 2) throw DomainError("grid needs at least 2 points per axis");
  const auto alphas = detail::axis(req.alpha_lo, req.alpha_hi, req.n_alpha);
  const auto betas = detail::axis(req.beta_lo, req.beta_hi, req.n_beta);
  std::vector<AdmissibleRow> rows(alphas.size() * betas.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, alphas.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < alphas.size(); i += workers) {
        for (std::size_t j = 0; j < betas.size(); ++j) {
          rows[i * betas.size() + j] = admissible_point(alphas[i], betas[j]);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

inline void write_admissible_csv(std::ostream& os, const std::vector<AdmissibleRow>& rows) {
  os << "alpha,beta,kappa,in_A,reason\n";
  std::string line;
  for (const auto& r : rows) {
    line.clear();
    detail::append_double(line, r.alpha);
    line += ',';
    detail::append_double(line, r.beta);
    line += ',';
    detail::append_double(line, r.kappa);
    line += r.in_A ? ",1," : ",0,";
    line += r.reason;
    os << line << '\n';
  }
}

[[nodiscard]] inline int cmd_admissible(const AdmissibleRequest& req, const std::string& output,
                                        std::ostream& out, std::ostream& err) {
  std::vector<AdmissibleRow> rows;
  try {
    rows = scan_admissible(req);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::bad_input;
  }
  if (output.empty() || output == "-") {
    write_admissible_csv(out, rows);
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << output << " for writing\n";
      return exit_code::bad_input;
    }
    write_admissible_csv(f, rows);
    const auto inside = std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.in_A; });
    out << "wrote " << rows.size() << " points (" << inside << " in A) to " << output << '\n';
  }
  return exit_code::ok;
}

// ------------------------------------------------------------------ plot

struct PlotRequest {
  std::string input;
  std::string output;  // default: <column>.svg
  std::string column = "H";
  bool overlay_bounds = false;
  bool log_t = false;
  Mode mode = Mode::thm21;
  // Taken from the t = 0 row of the input when unset.
  std::optional<double> beta;
  std::optional<double> alpha;
  std::optional<double> a0;
};

/// Builds the series for a plot: the column itself, then lower and upper
/// envelopes when requested. Envelope points are omitted where a bound is
/// undefined (thm12 on t < 0).
[[nodiscard]] inline std::vector<Series> plot_series(const std::vector<TrajectoryRow>& rows,
                                                     const PlotRequest& req) {
  const auto ts = column(rows, "t");
  std::vector<Series> out;
  out.push_back({req.column, ts, column(rows, req.column), "#1f77b4", false});
  if (!req.overlay_bounds) return out;

  std::function<Bounds(const EnvelopeSet&, double, double)> eval;
  if (req.column == "H") {
    eval = [](const EnvelopeSet& e, double t, double) { return H_bounds(e, t); };
  } else if (req.column == "phi") {
    eval = [](const EnvelopeSet& e, double t, double) { return phi_bounds(e, t); };
  } else if (req.column == "phidot") {
    eval = [](const EnvelopeSet& e, double t, double) { return phidot_bounds(e, t); };
  } else if (req.column == "a") {
    eval = [](const EnvelopeSet& e, double t, double a0) { return a_bounds(e, t, a0); };
  } else {
    throw DomainError("no envelope exists for column " + req.column);
  }

  const TrajectoryRow* origin = nullptr;
  for (const auto& r : rows) {
    if (r.t == 0.0) origin = &r;
  }
  auto pick = [&](const std::optional<double>& given, double TrajectoryRow::*field,
                  const char* what) {
    if (given) return *given;
    if (!origin) throw DomainError(std::string("no t = 0 row to read ") + what + " from");
    return origin->*field;
  };
  const double beta = pick(req.beta, &TrajectoryRow::H, "beta");
  const double alpha = pick(req.alpha, &TrajectoryRow::phi, "alpha");
  const double a0 = pick(req.a0, &TrajectoryRow::a, "a0");
  const EnvelopeSet env(beta, alpha, req.mode);

  Series lower{req.column + " lower bound", {}, {}, "#2ca02c", true};
  Series upper{req.column + " upper bound", {}, {}, "#d62728", true};
  for (double t : ts) {
    if (req.mode == Mode::thm12 && t < 0.0) continue;
    const Bounds b = eval(env, t, a0);
    lower.x.push_back(t);
    lower.y.push_back(b.lower);
    upper.x.push_back(t);
    upper.y.push_back(b.upper);
  }
  out.push_back(std::move(lower));
  out.push_back(std::move(upper));
  return out;
}

[[nodiscard]] inline int cmd_plot(const PlotRequest& req, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(req.input, std::ios::binary);
    if (!in) {
      err << "error: cannot open " << req.input << '\n';
      return exit_code::bad_input;
    }
    const auto rows = read_trajectory_csv(in);
    const auto series = plot_series(rows, req);
    PlotOptions opt;
    opt.title = req.column + " vs t";
    opt.y_label = req.column;
    opt.log_x = req.log_t;
    const std::string path = req.output.empty() ? req.column + ".svg" : req.output;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << path << " for writing\n";
      return exit_code::bad_input;
    }
    f << render_svg(series, opt);
    out << "wrote " << path << " (" << series.size() << " series, " << rows.size() << " rows)\n";
    return exit_code::ok;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::bad_input;
  }
}

}  // namespace esgb
