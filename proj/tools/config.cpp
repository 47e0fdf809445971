#include "config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

namespace fdde_cli {

namespace {

bool ends_with_csv(const std::string& s) {
  return s.size() > 4 && s.compare(s.size() - 4, 4, ".csv") == 0;
}

// parses "name(x,y)" -> {x, y}
std::pair<double, double> parse_two_args(const std::string& spec,
                                         const std::string& name) {
  const std::string prefix = name + "(";
  if (spec.compare(0, prefix.size(), prefix) != 0 || spec.back() != ')')
    throw ConfigError("malformed '" + spec + "', expected " + name + "(a,b)");
  const std::string body = spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
  const auto comma = body.find(',');
  if (comma == std::string::npos)
    throw ConfigError("malformed '" + spec + "', expected " + name + "(a,b)");
  try {
    std::size_t n1 = 0, n2 = 0;
    const std::string a = body.substr(0, comma), b = body.substr(comma + 1);
    const double x = std::stod(a, &n1);
    const double y = std::stod(b, &n2);
    if (n1 != a.size() || n2 != b.size()) throw std::invalid_argument(spec);
    return {x, y};
  } catch (const std::exception&) {
    throw ConfigError("malformed numeric arguments in '" + spec + "'");
  }
}

double require_number(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing required key '" + key + "'");
  if (!j[key].is_number()) throw ConfigError("key '" + key + "' must be a number");
  return j[key].get<double>();
}

std::string optional_string(const nlohmann::json& j, const std::string& key,
                            std::string fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) throw ConfigError("key '" + key + "' must be a string");
  return j[key].get<std::string>();
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {
      "alpha", "lambda", "tau",  "y0",     "history", "forcing",   "rhs",
      "operator", "mode", "h",   "T",      "out",     "h_list",    "reference",
      "method"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");

  ExperimentConfig c;
  c.alpha = require_number(j, "alpha");
  c.tau = require_number(j, "tau");
  c.y0 = require_number(j, "y0");
  c.h = require_number(j, "h");
  c.T = require_number(j, "T");
  if (j.contains("lambda")) {
    if (!j["lambda"].is_number()) throw ConfigError("key 'lambda' must be a number");
    c.lambda = j["lambda"].get<double>();
  }
  c.history = optional_string(j, "history", "constant");
  c.forcing = optional_string(j, "forcing", "zero");
  c.rhs = optional_string(j, "rhs", "linear");
  c.op = optional_string(j, "operator", "caputo");
  c.mode = optional_string(j, "mode", "explicit");
  c.out = optional_string(j, "out", "");
  c.reference = optional_string(j, "reference", "exact");
  c.method = optional_string(j, "method", "solver");
  if (j.contains("h_list")) {
    if (!j["h_list"].is_array()) throw ConfigError("key 'h_list' must be an array");
    for (const auto& v : j["h_list"]) {
      if (!v.is_number()) throw ConfigError("'h_list' entries must be numbers");
      c.h_list.push_back(v.get<double>());
    }
  }

  if (!(c.alpha > 0.0 && c.alpha < 1.0))
    throw ConfigError("alpha must lie in (0,1)");
  if (!(c.tau > 0.0)) throw ConfigError("tau must be positive");
  if (!(c.h > 0.0)) throw ConfigError("h must be positive");
  if (c.T < 0.0) throw ConfigError("T must be non-negative");
  if (c.rhs == "linear" && !c.lambda)
    throw ConfigError("rhs 'linear' requires 'lambda'");
  if (c.op != "caputo" && c.op != "phitau" && c.op != "both")
    throw ConfigError("operator must be 'caputo', 'phitau' or 'both'");
  if (c.mode != "explicit" && c.mode != "fixedpoint")
    throw ConfigError("mode must be 'explicit' or 'fixedpoint'");
  if (c.history != "constant" && c.history != "ramp" && !ends_with_csv(c.history))
    throw ConfigError("history must be 'constant', 'ramp' or a .csv path");
  if (c.forcing != "zero" && !ends_with_csv(c.forcing) &&
      c.forcing.compare(0, 4, "cos(") != 0 && c.forcing.compare(0, 4, "sin(") != 0)
    throw ConfigError("forcing must be 'zero', 'cos(A,w)', 'sin(A,w)' or a .csv path");
  if (c.rhs != "linear" && c.rhs.compare(0, 9, "logistic(") != 0)
    throw ConfigError("rhs must be 'linear' or 'logistic(a,b)'");
  if (c.reference != "exact" && c.reference != "self")
    throw ConfigError("reference must be 'exact' or 'self'");
  if (c.method != "solver" && c.method != "exact")
    throw ConfigError("method must be 'solver' or 'exact'");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_config(j);
}

fdde::History make_history(const ExperimentConfig& c) {
  if (c.history == "constant") return fdde::History::constant(c.y0, c.tau);
  if (c.history == "ramp") return fdde::History::ramp(c.y0, c.tau);
  if (!std::filesystem::exists(c.history))
    throw ConfigError("history file not found: " + c.history);
  auto h = fdde::History::sampled_from_csv(c.history);
  if (std::fabs(h.tau() - c.tau) > 1e-12 * std::max(1.0, c.tau))
    throw ConfigError("history file spans [-" + std::to_string(h.tau()) +
                      ", 0] but tau = " + std::to_string(c.tau));
  if (std::fabs(h.y0() - c.y0) > 1e-12 * std::max(1.0, std::fabs(c.y0)))
    throw ConfigError("history file value at 0 disagrees with y0");
  return h;
}

fdde::Forcing make_forcing(const ExperimentConfig& c) {
  if (c.forcing == "zero") return fdde::Forcing::zero();
  if (c.forcing.compare(0, 4, "cos(") == 0) {
    const auto [a, w] = parse_two_args(c.forcing, "cos");
    return fdde::Forcing::cosine(a, w);
  }
  if (c.forcing.compare(0, 4, "sin(") == 0) {
    const auto [a, w] = parse_two_args(c.forcing, "sin");
    return fdde::Forcing::sine(a, w);
  }
  if (!std::filesystem::exists(c.forcing))
    throw ConfigError("forcing file not found: " + c.forcing);
  return fdde::Forcing::sampled_from_csv(c.forcing);
}

fdde::LinearProblem make_linear_problem(const ExperimentConfig& c) {
  if (c.rhs != "linear")
    throw ConfigError("this command needs rhs = 'linear'");
  return fdde::LinearProblem(fdde::Order(c.alpha), *c.lambda, make_history(c),
                             make_forcing(c));
}

fdde::NonlinearProblem make_nonlinear_problem(const ExperimentConfig& c) {
  if (c.rhs == "linear") return fdde::as_nonlinear(make_linear_problem(c));
  const auto [a, b] = parse_two_args(c.rhs, "logistic");
  return fdde::NonlinearProblem(
      fdde::Order(c.alpha), make_history(c),
      [a, b](double, double y, double yd) { return -a * y * (b - yd); });
}

fdde::SolverConfig make_solver_config(const ExperimentConfig& c, fdde::Scheme scheme) {
  fdde::SolverConfig cfg;
  cfg.scheme = scheme;
  cfg.mode = c.mode == "fixedpoint" ? fdde::StepMode::fixed_point
                                    : fdde::StepMode::explicit_step;
  if (scheme == fdde::Scheme::pi_rect) cfg.mode = fdde::StepMode::explicit_step;
  cfg.h = c.h;
  cfg.T = c.T;
  return cfg;
}

}  // namespace fdde_cli
