// esgb: simulate, verify, scan and plot the reduced cosmology system.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "esgb/esgb.hpp"

namespace {

void add_run_options(CLI::App& cmd, esgb::RunManifest& m, std::string& sign, std::string& mode) {
  cmd.add_option("--beta", m.data.beta, "initial Hubble parameter")->envname("ESGB_BETA");
  cmd.add_option("--alpha", m.data.alpha, "initial scalar field")->envname("ESGB_ALPHA");
  cmd.add_option("--a0", m.data.a0, "initial scale factor")->envname("ESGB_A0");
  cmd.add_option("--s", sign, "constraint branch, +1 or -1")
      ->envname("ESGB_S")
      ->check(CLI::IsMember({"+1", "1", "-1"}));
  cmd.add_option("--t-min", m.t_min, "start of the backward run (<= 0)")->envname("ESGB_T_MIN");
  cmd.add_option("--t-max", m.t_max, "end of the forward run (>= 0)")->envname("ESGB_T_MAX");
  cmd.add_option("--rtol", m.cfg.rtol, "relative tolerance")->envname("ESGB_RTOL");
  cmd.add_option("--atol", m.cfg.atol, "absolute tolerance")->envname("ESGB_ATOL");
  cmd.add_option("--mode", mode, "bound family: thm21 or thm12")
      ->envname("ESGB_MODE")
      ->check(CLI::IsMember({"thm21", "thm12"}));
}

void finish_manifest(esgb::RunManifest& m, const std::string& sign, const std::string& mode) {
  m.data.s = sign == "-1" ? esgb::BranchSign::minus : esgb::BranchSign::plus;
  m.mode = mode == "thm12" ? esgb::Mode::thm12 : esgb::Mode::thm21;
}

bool parse_range(const std::string& text, double& lo, double& hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) return false;
    const std::string rest = text.substr(colon + 1);
    hi = std::stod(rest, &used);
    return used == rest.size();
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and bound checker for FLRW scalar Gauss-Bonnet cosmology"};
  app.require_subcommand(1);

  esgb::RunManifest sim;
  std::string sim_sign = "+1", sim_mode = "thm21";
  auto* simulate = app.add_subcommand("simulate", "integrate and write a trajectory CSV");
  add_run_options(*simulate, sim, sim_sign, sim_mode);
  simulate->add_option("--output", sim.output, "CSV path, - for stdout")->envname("ESGB_OUTPUT");

  esgb::RunManifest ver;
  std::string ver_sign = "+1", ver_mode = "thm21", beta_grid;
  std::size_t points = esgb::kVerifyPoints;
  ver.t_min = -20.0;
  auto* verify = app.add_subcommand("verify", "check a trajectory against every bound");
  add_run_options(*verify, ver, ver_sign, ver_mode);
  verify->add_option("--beta-grid", beta_grid, "a:b:n, one run per beta")->envname("ESGB_BETA_GRID");
  verify->add_option("--points", points, "sample times per direction")
      ->envname("ESGB_POINTS")
      ->check(CLI::PositiveNumber);

  esgb::AdmissibleRequest adm;
  std::string alpha_range = "0:1", beta_range = "0.05:0.55", adm_output = "-";
  std::size_t grid = 11;
  auto* admissible = app.add_subcommand("admissible", "scan an (alpha, beta) grid for membership");
  admissible->add_option("--alpha-range", alpha_range, "a:b")->envname("ESGB_ALPHA_RANGE");
  admissible->add_option("--beta-range", beta_range, "a:b")->envname("ESGB_BETA_RANGE");
  admissible->add_option("--grid", grid, "points per axis (>= 2)")->envname("ESGB_GRID");
  admissible->add_option("--output", adm_output, "CSV path, - for stdout")->envname("ESGB_OUTPUT");

  esgb::PlotRequest plot;
  std::string plot_mode = "thm21";
  auto* plotcmd = app.add_subcommand("plot", "render one trajectory column as SVG");
  plotcmd->add_option("input", plot.input, "trajectory CSV")->required();
  plotcmd->add_option("--column", plot.column, "column to plot")->envname("ESGB_COLUMN");
  plotcmd->add_option("--output", plot.output, "SVG path")->envname("ESGB_OUTPUT");
  plotcmd->add_flag("--overlay-bounds", plot.overlay_bounds, "draw the envelopes")
      ->envname("ESGB_OVERLAY_BOUNDS");
  plotcmd->add_flag("--log-t", plot.log_t, "logarithmic time axis (t > 0 only)")
      ->envname("ESGB_LOG_T");
  plotcmd->add_option("--mode", plot_mode, "bound family: thm21 or thm12")
      ->envname("ESGB_MODE")
      ->check(CLI::IsMember({"thm21", "thm12"}));
  auto* plot_beta = plotcmd->add_option("--beta", "envelope beta (default: H at t = 0)");
  auto* plot_alpha = plotcmd->add_option("--alpha", "envelope alpha (default: phi at t = 0)");
  auto* plot_a0 = plotcmd->add_option("--a0", "envelope a0 (default: a at t = 0)");
  plot_beta->envname("ESGB_BETA");
  plot_alpha->envname("ESGB_ALPHA");
  plot_a0->envname("ESGB_A0");

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) {
    finish_manifest(sim, sim_sign, sim_mode);
    return esgb::cmd_simulate(sim, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    finish_manifest(ver, ver_sign, ver_mode);
    if (beta_grid.empty()) return esgb::cmd_verify(ver, std::cout, points);
    try {
      return esgb::cmd_verify_grid(ver, esgb::parse_grid(beta_grid), std::cout, points);
    } catch (const esgb::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return esgb::exit_code::bad_input;
    }
  }
  if (admissible->parsed()) {
    if (!parse_range(alpha_range, adm.alpha_lo, adm.alpha_hi) ||
        !parse_range(beta_range, adm.beta_lo, adm.beta_hi)) {
      std::cerr << "error: ranges must look like a:b\n";
      return esgb::exit_code::bad_input;
    }
    adm.n_alpha = adm.n_beta = grid;
    return esgb::cmd_admissible(adm, adm_output, std::cout, std::cerr);
  }
  plot.mode = plot_mode == "thm12" ? esgb::Mode::thm12 : esgb::Mode::thm21;
  if (*plot_beta) plot.beta = plot_beta->as<double>();
  if (*plot_alpha) plot.alpha = plot_alpha->as<double>();
  if (*plot_a0) plot.a0 = plot_a0->as<double>();
  return esgb::cmd_plot(plot, std::cout, std::cerr);
}
