#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "fdde/errors.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out;
  double h = 0.0;
  double T = 0.0;
  double alpha = 0.0;
  std::string op;
  std::string h_list;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required = true) {
  cmd->set_help_flag("--help", "print help");  // frees -h / --h for the step size
  auto* opt = cmd->add_option("--config", f.config_path, "experiment config (JSON)");
  if (config_required) opt->required();
  cmd->add_option("--out", f.out, "output CSV path");
  cmd->add_option("--h", f.h, "step size override");
  cmd->add_option("--T", f.T, "horizon override");
  cmd->add_option("--alpha", f.alpha, "fractional order override");
  cmd->add_option("--operator", f.op, "operator override: caputo | phitau | both");
}

fdde_cli::ExperimentConfig resolve(const CommonFlags& f) {
  fdde_cli::ExperimentConfig cfg = fdde_cli::load_config(f.config_path);
  if (!f.out.empty()) cfg.out = f.out;
  if (f.h > 0.0) cfg.h = f.h;
  if (f.T > 0.0) cfg.T = f.T;
  if (f.alpha > 0.0) cfg.alpha = f.alpha;
  if (!f.op.empty()) cfg.op = f.op;
  if (!f.h_list.empty()) {
    cfg.h_list.clear();
    std::size_t pos = 0;
    while (pos <= f.h_list.size()) {
      const auto comma = f.h_list.find(',', pos);
      const std::string tok =
          f.h_list.substr(pos, comma == std::string::npos ? comma : comma - pos);
      try {
        cfg.h_list.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw fdde_cli::ConfigError("bad --h-list entry '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  // re-validate overrides
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw fdde_cli::ConfigError("alpha must lie in (0,1)");
  if (cfg.op != "caputo" && cfg.op != "phitau" && cfg.op != "both")
    throw fdde_cli::ConfigError("operator must be 'caputo', 'phitau' or 'both'");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solutions and first-order solvers for fractional delay "
               "differential equations under the standard and history-aware "
               "Caputo-type operators"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  CommonFlags fe, fs, fc, fv;
  auto* exact = app.add_subcommand("exact", "evaluate a closed-form solution onto CSV");
  add_common(exact, fe);
  auto* solve = app.add_subcommand("solve", "run a time-stepping scheme onto CSV");
  add_common(solve, fs);
  auto* compare = app.add_subcommand(
      "compare", "history-aware vs standard exact solution and the corrective integral");
  add_common(compare, fc);
  auto* converge = app.add_subcommand("converge", "step-size convergence table");
  add_common(converge, fv);
  converge->add_option("--h-list", fv.h_list, "comma-separated step sizes");

  int figure_id = 0;
  std::string figure_dir = ".";
  auto* figure = app.add_subcommand("figure", "write the preset CSVs for figure 1..5");
  figure->set_help_flag("--help", "print help");
  figure->add_option("id", figure_id, "figure number (1..5)")->required();
  figure->add_option("--out", figure_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (exact->parsed()) {
      fdde_cli::cmd_exact(resolve(fe));
    } else if (solve->parsed()) {
      fdde_cli::cmd_solve(resolve(fs));
    } else if (compare->parsed()) {
      fdde_cli::cmd_compare(resolve(fc));
    } else if (converge->parsed()) {
      fdde_cli::cmd_converge(resolve(fv));
    } else if (figure->parsed()) {
      for (const auto& f : fdde_cli::run_figure(figure_id, figure_dir))
        std::printf("wrote %s\n", f.c_str());
    }
  } catch (const fdde::solver_error& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 3;
  } catch (const fdde_cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const fdde::capability_error& e) {
    std::fprintf(stderr, "config error (outside supported envelope): %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
