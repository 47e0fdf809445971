#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>

#include "fdde/csv.hpp"
#include "presets.hpp"

namespace fdde_cli {

namespace {

std::size_t grid_steps(double T, double h) {
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(T / h - 1e-12)));
}

std::vector<double> grid_times(double T, double h) {
  if (T == 0.0) return {0.0};  // single-point grid, exact evaluation only
  const std::size_t n = grid_steps(T, h);
  std::vector<double> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = h * static_cast<double>(i);
  return t;
}

void require_out(const ExperimentConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("no output path ('out' or --out)");
}

void write_csv(const std::string& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& cols) {
  const std::filesystem::path p(out);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  fdde::csv::write(p, header, cols);
}

// Closed-form evaluator for the operator/history combination; constant
// histories give the same solution under both operators.
std::function<double(double)> exact_evaluator(const ExperimentConfig& cfg) {
  const auto p = make_linear_problem(cfg);
  const bool constant = p.history.kind() == fdde::History::Kind::constant;
  const bool ramp = p.history.kind() == fdde::History::Kind::ramp;
  if (!constant && !ramp)
    throw ConfigError("closed forms exist for 'constant' and 'ramp' histories only");
  if (cfg.op == "caputo" || constant)
    return [p, constant](double t) {
      return constant ? fdde::exact_caputo_constant_history(p, t)
                      : fdde::exact_caputo_ramp_history(p, t);
    };
  if (cfg.op == "phitau")
    return [p](double t) { return fdde::exact_phitau_ramp_history(p, t); };
  throw ConfigError("exact evaluation needs operator 'caputo' or 'phitau'");
}

fdde::Trajectory run_solver(const ExperimentConfig& cfg, const std::string& op) {
  const auto p = make_nonlinear_problem(cfg);
  if (op == "caputo")
    return fdde::solve_pi_rect(p, make_solver_config(cfg, fdde::Scheme::pi_rect));
  return fdde::solve_gl_phitau(p, make_solver_config(cfg, fdde::Scheme::gl_phitau));
}

}  // namespace

void cmd_exact(const ExperimentConfig& cfg) {
  require_out(cfg);
  const auto eval = exact_evaluator(cfg);
  const auto t = grid_times(cfg.T, cfg.h);
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) y[i] = eval(t[i]);
  write_csv(cfg.out, {"t", "y"}, {t, y});
}

void cmd_solve(const ExperimentConfig& cfg) {
  require_out(cfg);
  if (cfg.op == "both") {
    const auto ca = run_solver(cfg, "caputo");
    const auto ph = run_solver(cfg, "phitau");
    std::vector<double> t(ca.size()), diff(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
      t[i] = ca.time(i);
      diff[i] = ph[i] - ca[i];
    }
    write_csv(cfg.out, {"t", "y_caputo", "y_phitau", "diff"},
              {t, ca.values(), ph.values(), diff});
    return;
  }
  const auto tr = run_solver(cfg, cfg.op);
  std::vector<double> t(tr.size());
  for (std::size_t i = 0; i < tr.size(); ++i) t[i] = tr.time(i);
  write_csv(cfg.out, {"t", "y"}, {t, tr.values()});
}

double cmd_compare(const ExperimentConfig& cfg) {
  require_out(cfg);
  const auto p = make_linear_problem(cfg);
  if (p.history.kind() != fdde::History::Kind::ramp)
    throw ConfigError("compare needs the 'ramp' history");

  const auto corrective = fdde::Forcing::custom([p](double r) {
    return p.history.corrective_term(p.alpha, std::max(r, 1e-300));
  });

  const auto t = grid_times(cfg.T, cfg.h);
  std::vector<double> y(t.size()), yh(t.size()), diff(t.size()), jcorr(t.size());
  double max_gap = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    y[i] = fdde::exact_caputo_ramp_history(p, t[i]);
    yh[i] = fdde::exact_phitau_ramp_history(p, t[i]);
    diff[i] = yh[i] - y[i];
    jcorr[i] = t[i] > 0.0
                   ? fdde::gen_integral(corrective, p.alpha, p.lambda, p.tau(), t[i])
                   : 0.0;
    max_gap = std::max(max_gap, std::fabs(diff[i] - jcorr[i]));
  }
  write_csv(cfg.out, {"t", "y_caputo", "y_phitau", "diff", "j_corrective"},
            {t, y, yh, diff, jcorr});
  std::printf("max |(y_phitau - y_caputo) - J_corrective| = %.3e\n", max_gap);
  return max_gap;
}

void cmd_converge(const ExperimentConfig& cfg) {
  require_out(cfg);
  if (cfg.h_list.size() < 2)
    throw ConfigError("converge needs at least two step sizes in 'h_list'");
  for (double h : cfg.h_list)
    if (!(h > 0.0)) throw ConfigError("step sizes must be positive");

  std::vector<double> errs;
  for (double h : cfg.h_list) {
    ExperimentConfig run = cfg;
    run.h = h;
    if (cfg.method == "exact") {
      // reference against itself: the zero-error harness sanity mode
      errs.push_back(0.0);
      continue;
    }
    const auto tr = run_solver(run, cfg.op == "both" ? "caputo" : cfg.op);
    double e = 0.0;
    if (cfg.reference == "self") {
      ExperimentConfig fine = run;
      fine.h = h / 4.0;
      const auto tf = run_solver(fine, cfg.op == "both" ? "caputo" : cfg.op);
      for (std::size_t i = 0; i < tr.size(); ++i)
        e = std::max(e, std::fabs(tr[i] - tf[4 * i]));
    } else {
      const auto eval = exact_evaluator(run);
      for (std::size_t i = 0; i < tr.size(); ++i)
        e = std::max(e, std::fabs(tr[i] - eval(tr.time(i))));
    }
    errs.push_back(e);
  }

  std::vector<double> order(errs.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i < errs.size(); ++i)
    order[i] = std::log(errs[i - 1] / errs[i]) /
               std::log(cfg.h_list[i - 1] / cfg.h_list[i]);
  write_csv(cfg.out, {"h", "max_error", "observed_order"},
            {cfg.h_list, errs, order});
}

std::vector<std::string> run_figure(int figure, const std::string& out_dir) {
  const char* preset = figure_preset_json(figure);
  if (!preset) throw ConfigError("figure id must be 1..5");
  const auto runs = nlohmann::json::parse(preset);

  std::vector<std::string> written;
  for (const auto& run : runs) {
    ExperimentConfig cfg = parse_config(run.at("config"));
    cfg.out = (std::filesystem::path(out_dir) / run.at("name").get<std::string>())
                  .string();
    const std::string command = run.at("command").get<std::string>();
    if (command == "exact")
      cmd_exact(cfg);
    else if (command == "solve")
      cmd_solve(cfg);
    else if (command == "compare")
      cmd_compare(cfg);
    else
      throw ConfigError("unknown preset command '" + command + "'");
    written.push_back(cfg.out);
  }
  return written;
}

}  // namespace fdde_cli
