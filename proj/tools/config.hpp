#ifndef FDDE_TOOLS_CONFIG_HPP
#define FDDE_TOOLS_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdde/exact.hpp"
#include "fdde/solvers.hpp"

namespace fdde_cli {

// Anything wrong with an experiment description (schema, value ranges,
// unsupported combinations). Maps to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// One experiment, as described by a strict JSON object:
//   alpha, tau, y0, h, T   required numbers
//   lambda                 number, required when rhs = "linear"
//   history                "constant" | "ramp" | <path>.csv
//   forcing                "zero" | "cos(A,w)" | "sin(A,w)" | <path>.csv
//   rhs                    "linear" | "logistic(a,b)"
//   operator               "caputo" | "phitau" | "both" (solve only)
//   mode                   "explicit" | "fixedpoint"
//   out                    output path
//   h_list                 number array (converge)
//   reference              "exact" | "self" (converge)
//   method                 "solver" | "exact" (converge)
// Unknown keys are rejected.
struct ExperimentConfig {
  double alpha = 0.0;
  std::optional<double> lambda;
  double tau = 0.0;
  double y0 = 0.0;
  std::string history = "constant";
  std::string forcing = "zero";
  std::string rhs = "linear";
  std::string op = "caputo";
  std::string mode = "explicit";
  double h = 1.0 / 256.0;
  double T = 1.0;
  std::string out;
  std::vector<double> h_list;
  std::string reference = "exact";
  std::string method = "solver";
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

fdde::History make_history(const ExperimentConfig& c);
fdde::Forcing make_forcing(const ExperimentConfig& c);

// rhs = "linear" only; throws ConfigError otherwise.
fdde::LinearProblem make_linear_problem(const ExperimentConfig& c);

// any rhs; linear becomes lambda*y_delayed + f(t), logistic(a,b) becomes
// -a*y*(b - y_delayed).
fdde::NonlinearProblem make_nonlinear_problem(const ExperimentConfig& c);

fdde::SolverConfig make_solver_config(const ExperimentConfig& c, fdde::Scheme scheme);

}  // namespace fdde_cli

#endif
