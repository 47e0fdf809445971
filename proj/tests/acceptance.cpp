// Acceptance suite: one line per criterion, each at its stated tolerance.
// Exit code is the number of failed criteria.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fdde/exact.hpp"
#include "fdde/operators.hpp"
#include "fdde/solvers.hpp"
#include "fdde/specfun.hpp"
#include "oracles.hpp"

using namespace fdde;
namespace fs = std::filesystem;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

void note(Result& r, bool ok, const std::string& msg) {
  if (!ok) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += msg;
  }
}

std::string fmt(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.3e", x);
  return b;
}

bool close_mixed(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

double ls_order(const std::vector<double>& hs, const std::vector<double>& es) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double x = std::log2(hs[i]), y = std::log2(es[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<std::vector<double>> read_csv_columns(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> cols;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(std::strtod(cell.c_str(), nullptr));
      ++c;
    }
  }
  return cols;
}

// ---------------------------------------------------------------- criterion 1
Result criterion_first_interval() {
  Result r;
  std::mt19937 rng(1001);
  std::uniform_real_distribution<double> ua(0.05, 0.95), ul(-2.0, 2.0),
      ut(0.3, 3.0), uy(-2.0, 2.0), u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double a = ua(rng), l = ul(rng), tau = ut(rng), y0 = uy(rng);
    LinearProblem p(Order(a), l, History::constant(y0, tau));
    const double t = 0.999 * tau * u01(rng);
    const double expect = y0 * (1.0 + l * std::pow(t, a) / specfun::gamma(a + 1.0));
    const double got = exact_caputo_constant_history(p, t);
    worst = std::max(worst, std::fabs(got - expect) /
                                std::max({1.0, std::fabs(got), std::fabs(expect)}));
  }
  note(r, worst <= 1e-12, "worst mixed error " + fmt(worst));
  r.detail = "worst mixed error " + fmt(worst) + " over 500 samples";
  return r;
}

// ---------------------------------------------------------------- criterion 2
Result criterion_cross_form() {
  Result r;
  std::mt19937 rng(1002);
  std::uniform_real_distribution<double> ua(0.05, 0.95), ul(-2.0, 2.0),
      ut(0.3, 3.0), uy(-2.0, 2.0), uf(-1.5, 1.5), u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = ua(rng), l = ul(rng), tau = ut(rng), y0 = uy(rng);
    const Forcing f = (i % 2 == 0) ? Forcing::zero() : Forcing::constant(uf(rng));
    LinearProblem p(Order(a), l, History::constant(y0, tau), f);
    const double t = 5.0 * tau * u01(rng);
    const double v1 = exact_caputo_constant_history(p, t);
    const double v2 = exact_stepfunction_form(p, t);
    worst = std::max(worst, std::fabs(v1 - v2) /
                                std::max({1.0, std::fabs(v1), std::fabs(v2)}));
  }
  note(r, worst <= 1e-12, "worst mixed error " + fmt(worst));
  r.detail = "worst mixed error " + fmt(worst) + " over 1000 fuzzed inputs";
  return r;
}

// ---------------------------------------------------------------- criterion 3
Result criterion_difference_identity() {
  Result r;
  double worst = 0.0;
  for (int which = 0; which < 2; ++which) {
    const Forcing f = which == 0 ? Forcing::zero() : Forcing::sine(1.0, 1.0);
    LinearProblem p(Order(0.8), -1.0, History::ramp(1.0, 1.0), f);
    const auto corr = Forcing::custom([&p](double s) {
      return p.history.corrective_term(p.alpha, std::max(s, 1e-300));
    });
    for (int j = 1; j <= 100; ++j) {
      const double t = 0.05 * j;
      const double lhs =
          exact_phitau_ramp_history(p, t) - exact_caputo_ramp_history(p, t);
      const double rhs = gen_integral(corr, p.alpha, p.lambda, p.tau(), t);
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
  }
  note(r, worst <= 1e-6, "max discrepancy " + fmt(worst));
  r.detail = "max |(yh - y) - J(corrective)| = " + fmt(worst) +
             " on (0,5], f in {0, sin t}";
  return r;
}

// ---------------------------------------------------------------- criterion 4
Result criterion_operator_coincidence() {
  Result r;
  const double h = 1.0 / 64;
  const std::size_t n_max = 192;
  SampledFunction y{0.0, h, {}};
  y.values.resize(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) {
    const double t = h * double(i);
    y.values[i] = std::exp(-t) + 0.1 * t;
  }
  const auto hist = History::constant(y.values[0], 0.85);
  double worst = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n)
    worst = std::max(worst, std::fabs(phitau_apply(y, hist, Order(0.8), n) -
                                      gl_caputo_apply(y, Order(0.8), n)));
  note(r, worst <= 1e-12, "operator gap " + fmt(worst));

  // exact solutions coincide: the corrective term of a constant history is
  // identically zero, so the modified-equation route adds J(0) = 0
  LinearProblem p(Order(0.8), -1.0, History::constant(1.0, 1.0));
  const auto corr = Forcing::custom(
      [&p](double s) { return p.history.corrective_term(p.alpha, std::max(s, 1e-300)); });
  double worst2 = 0.0;
  for (double t : {0.5, 1.7, 3.0, 4.9}) {
    const double j = gen_integral(corr, p.alpha, p.lambda, p.tau(), t);
    worst2 = std::max(worst2, std::fabs(j));
  }
  note(r, worst2 == 0.0, "J(corrective) not exactly zero: " + fmt(worst2));
  if (r.pass)
    r.detail = "per-node operator gap " + fmt(worst) + "; J(corrective) = 0 exactly";
  return r;
}

// ---------------------------------------------------------------- criterion 5
Result criterion_operator_residual() {
  Result r;
  // Residual of the operator relationship (history-aware = standard Caputo
  // minus the corrective term; verified against quadrature and first-order
  // convergent) on y = t^2 + y0 with the endpoint-matched ramp history.
  const double t = 2.5, a = 0.8, y0 = 1.0, tau = 1.0;
  const auto hist = History::ramp(y0, tau);
  const double corr = hist.corrective_term(Order(a), t);
  std::vector<double> hs, res;
  for (int k = 6; k <= 8; ++k) {
    const double h = std::pow(2.0, -k);
    const std::size_t n = std::size_t(std::llround(t / h));
    SampledFunction y{0.0, h, {}};
    y.values.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double ti = h * double(i);
      y.values[i] = ti * ti + y0;
    }
    hs.push_back(h);
    res.push_back(std::fabs(phitau_apply(y, hist, Order(a), n) -
                            gl_caputo_apply(y, Order(a), n) + corr));
  }
  const double order = ls_order(hs, res);
  note(r, order > 0.8 && order < 1.2, "observed order " + fmt(order));
  note(r, res[2] < res[1] && res[1] < res[0], "residuals not decreasing");
  r.detail = "residuals " + fmt(res[0]) + " -> " + fmt(res[1]) + " -> " +
             fmt(res[2]) + ", observed order " + fmt(order);
  return r;
}

// ---------------------------------------------------------------- criterion 6
Result criterion_solver_convergence() {
  Result r;
  LinearProblem lp(Order(0.8), -1.0, History::ramp(1.0, 1.0));
  const auto p = as_nonlinear(lp);
  const double T = 5.0;

  std::vector<double> hs, e_pi, e_gl;
  for (int k = 5; k <= 9; ++k) {
    const double h = std::pow(2.0, -k);
    hs.push_back(h);
    SolverConfig c1{Scheme::pi_rect, StepMode::explicit_step, {}, h, T};
    const auto t1 = solve_pi_rect(p, c1);
    double e1 = 0.0;
    for (std::size_t i = 0; i < t1.size(); ++i)
      e1 = std::max(e1, std::fabs(t1[i] - exact_caputo_ramp_history(lp, t1.time(i))));
    e_pi.push_back(e1);

    SolverConfig c2{Scheme::gl_phitau, StepMode::explicit_step, {}, h, T};
    const auto t2 = solve_gl_phitau(p, c2);
    double e2 = 0.0;
    for (std::size_t i = 0; i < t2.size(); ++i) {
      const double ti = t2.time(i);
      const double ref = ti > 0.0 ? exact_phitau_ramp_history(lp, ti) : lp.history(ti);
      e2 = std::max(e2, std::fabs(t2[i] - ref));
    }
    e_gl.push_back(e2);
  }
  const double o_pi = ls_order(hs, e_pi);
  const double o_gl = ls_order(hs, e_gl);
  note(r, o_pi > 0.8 && o_pi < 1.2, "PI order " + fmt(o_pi));
  note(r, o_gl > 0.8 && o_gl < 1.2, "GL order " + fmt(o_gl));
  note(r, e_pi[3] < 5e-2, "PI error at h=2^-8 is " + fmt(e_pi[3]));
  note(r, e_gl[3] < 5e-2, "GL error at h=2^-8 is " + fmt(e_gl[3]));
  if (r.pass)
    r.detail = "orders PI " + fmt(o_pi) + ", GL " + fmt(o_gl) +
               "; errors at h=2^-8: " + fmt(e_pi[3]) + ", " + fmt(e_gl[3]);
  return r;
}

// ---------------------------------------------------------------- criterion 7
Result criterion_alpha_to_one() {
  Result r;
  const auto logistic = [](double, double y, double yd) {
    return -2.0 * y * (1.2 - yd);
  };
  const double h = std::pow(2.0, -8), T = 10.0;
  std::vector<double> gaps;
  Trajectory pi98(h, T, History::constant(0, 1), {0.0});
  Trajectory gl98(h, T, History::constant(0, 1), {0.0});
  for (double a : {0.8, 0.9, 0.98}) {
    NonlinearProblem p(Order(a), History::ramp(1.0, 1.0), logistic);
    SolverConfig c1{Scheme::pi_rect, StepMode::explicit_step, {}, h, T};
    SolverConfig c2{Scheme::gl_phitau, StepMode::explicit_step, {}, h, T};
    const auto t1 = solve_pi_rect(p, c1);
    const auto t2 = solve_gl_phitau(p, c2);
    double g = 0.0;
    for (std::size_t i = 0; i < t1.size(); ++i)
      g = std::max(g, std::fabs(t1[i] - t2[i]));
    gaps.push_back(g);
    if (a == 0.98) {
      pi98 = t1;
      gl98 = t2;
    }
  }
  note(r, gaps[2] < gaps[1] && gaps[1] < gaps[0],
       "gaps not strictly decreasing: " + fmt(gaps[0]) + ", " + fmt(gaps[1]) +
           ", " + fmt(gaps[2]));

  NonlinearProblem pref(Order(0.98), History::ramp(1.0, 1.0), logistic);
  const auto te = solve_dde_euler_ref(pref, h, T);
  double d_pi = 0.0, d_gl = 0.0;
  for (std::size_t i = 0; i < te.size(); ++i) {
    d_pi = std::max(d_pi, std::fabs(pi98[i] - te[i]));
    d_gl = std::max(d_gl, std::fabs(gl98[i] - te[i]));
  }
  note(r, d_pi <= 0.1, "PI vs Euler reference " + fmt(d_pi));
  note(r, d_gl <= 0.1, "GL vs Euler reference " + fmt(d_gl));
  if (r.pass)
    r.detail = "gaps " + fmt(gaps[0]) + " > " + fmt(gaps[1]) + " > " + fmt(gaps[2]) +
               "; alpha=0.98 vs Euler: " + fmt(d_pi) + ", " + fmt(d_gl);
  return r;
}

// ---------------------------------------------------------------- criterion 8
Result criterion_special_functions() {
  Result r;
  std::mt19937 rng(1008);
  std::uniform_real_distribution<double> ux(0.01, 0.99), uab(0.2, 8.0),
      u01(0.0, 1.0);
  double w_beta = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = ux(rng), a = uab(rng), b = uab(rng);
    w_beta = std::max(w_beta, std::fabs(specfun::reg_inc_beta(x, a, b) -
                                        oracle::inc_beta_integral(x, a, b)));
  }
  note(r, w_beta <= 1e-10, "inc-beta vs quadrature " + fmt(w_beta));

  double w_sym = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double x = u01(rng), a = uab(rng), b = uab(rng);
    w_sym = std::max(w_sym, std::fabs(specfun::reg_inc_beta(x, a, b) +
                                      specfun::reg_inc_beta(1.0 - x, b, a) - 1.0));
  }
  note(r, w_sym <= 1e-12, "symmetry identity " + fmt(w_sym));

  double w_exp = 0.0;
  for (double z = -20.0; z <= 20.0; z += 0.625)
    w_exp = std::max(w_exp, std::fabs(specfun::mittag_leffler(1.0, 1.0, z) -
                                      std::exp(z)) / std::exp(z));
  note(r, w_exp <= 1e-10, "ML exp identity " + fmt(w_exp));

  double w_cos = 0.0;
  for (double t = 0.25; t <= 7.0; t += 0.25)
    w_cos = std::max(w_cos, std::fabs(specfun::mittag_leffler(2.0, 1.0, -t * t) -
                                      std::cos(t)));
  note(r, w_cos <= 1e-10, "ML cos identity " + fmt(w_cos));

  double w_rg = 0.0;
  for (double beta : {0.3, 1.0, 1.7, 2.5, 4.0})
    w_rg = std::max(w_rg, std::fabs(specfun::mittag_leffler(0.7, beta, 0.0) -
                                    1.0 / specfun::gamma(beta)));
  note(r, w_rg <= 1e-10, "ML 1/Gamma identity " + fmt(w_rg));

  double w_gl = 0.0;
  for (double a : {0.2, 0.5, 0.8, 0.95}) {
    const auto w = specfun::gl_weights(a, 1000);
    double partial = 0.0;
    for (std::size_t n = 0; n <= 1000; ++n) {
      partial += w.coeffs[n];
      const double closed = std::exp(specfun::log_gamma(double(n) + 1.0 - a) -
                                     specfun::log_gamma(1.0 - a) -
                                     specfun::log_gamma(double(n) + 1.0));
      w_gl = std::max(w_gl, std::fabs(partial - closed));
    }
  }
  note(r, w_gl <= 1e-12, "GL partial-sum identity " + fmt(w_gl));

  if (r.pass)
    r.detail = "inc-beta " + fmt(w_beta) + ", symmetry " + fmt(w_sym) + ", exp " +
               fmt(w_exp) + ", cos " + fmt(w_cos) + ", 1/Gamma " + fmt(w_rg) +
               ", GL sums " + fmt(w_gl);
  return r;
}

// ---------------------------------------------------------------- criterion 9
Result criterion_figures() {
  Result r;
  const fs::path dir = fs::temp_directory_path() / "fdde_acceptance_figs";
  fs::remove_all(dir);
  for (int fig = 1; fig <= 5; ++fig) fdde_cli::run_figure(fig, dir.string());

  // fig1, f = 0 panel: asserted as specified -- positive and decreasing after
  // the first local extremum. The exact solution of this problem is already
  // negative before t = tau (y(tau) = y0 (1 - 1/Gamma(1.8)) < 0) and rebounds
  // after its first minimum, so this check documents a contradiction rather
  // than a regression; see the failure detail for the measured shape.
  {
    const auto cols = read_csv_columns(dir / "fig1_f0.csv");
    const auto& t = cols[0];
    const auto& y = cols[1];
    std::size_t ext = 0;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
      const bool is_min = y[i] <= y[i - 1] && y[i] <= y[i + 1];
      const bool is_max = y[i] >= y[i - 1] && y[i] >= y[i + 1];
      if (is_min || is_max) {
        ext = i;
        break;
      }
    }
    std::size_t negatives = 0, rises = 0;
    double min_after = y[ext];
    for (std::size_t i = ext + 1; i < y.size(); ++i) {
      if (!(y[i] > 0.0)) ++negatives;
      if (y[i] > y[i - 1]) ++rises;
      min_after = std::min(min_after, y[i]);
    }
    note(r, negatives == 0 && rises == 0,
         "fig1 f=0: first local extremum is a minimum y(" + fmt(t[ext]) + ") = " +
             fmt(y[ext]) + " < 0; after it the curve rises " +
             std::to_string(rises) + " times and is non-positive at " +
             std::to_string(negatives) + " nodes (decaying oscillation, not a "
             "monotone positive tail)");
  }

  // fig3, f = 0: difference column non-positive for y0 > 0 and shrinking
  // between t = 1 and t = 10
  {
    const auto cols = read_csv_columns(dir / "fig3_f0.csv");
    const auto& t = cols[0];
    const auto& diff = cols[3];
    double max_diff = -1.0, d1 = 0.0, d10 = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      max_diff = std::max(max_diff, diff[i]);
      if (std::fabs(t[i] - 1.0) < 1e-12) d1 = diff[i];
      if (std::fabs(t[i] - 10.0) < 1e-12) d10 = diff[i];
    }
    note(r, max_diff <= 1e-12, "fig3 diff has positive entries, max " + fmt(max_diff));
    note(r, std::fabs(d10) < std::fabs(d1),
         "fig3 |diff(10)| = " + fmt(std::fabs(d10)) + " not below |diff(1)| = " +
             fmt(std::fabs(d1)));
  }

  // fig4/fig5: operator gap shrinks as alpha -> 1
  {
    const auto g = [&](const std::string& name) {
      const auto cols = read_csv_columns(dir / name);
      double m = 0.0;
      for (double d : cols[3]) m = std::max(m, std::fabs(d));
      return m;
    };
    const double g80 = g("fig4.csv"), g90 = g("fig5_a090.csv"),
                 g98 = g("fig5_a098.csv");
    note(r, g98 < g90 && g90 < g80,
         "fig5 gap ordering violated: " + fmt(g80) + ", " + fmt(g90) + ", " +
             fmt(g98));
    if (r.pass)
      r.detail = "fig gaps " + fmt(g80) + " > " + fmt(g90) + " > " + fmt(g98) +
                 "; fig3 diff <= 0 and |diff(10)| < |diff(1)|";
  }
  fs::remove_all(dir);
  return r;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<Result()> run;
  };
  const std::vector<Entry> entries = {
      {1, "first-interval closed form (constant history)", criterion_first_interval},
      {2, "step-function form vs truncated series, 1000 fuzzed inputs",
       criterion_cross_form},
      {3, "difference identity (yh - y) = J(corrective) at 1e-6",
       criterion_difference_identity},
      {4, "operator and solution coincidence for constant histories",
       criterion_operator_coincidence},
      {5, "operator-relationship residual decays at first order",
       criterion_operator_residual},
      {6, "solver convergence to exact references, order in [0.8, 1.2]",
       criterion_solver_convergence},
      {7, "operator gap shrinks as alpha -> 1; Euler proximity at 0.98",
       criterion_alpha_to_one},
      {8, "special-function suite", criterion_special_functions},
      {9, "figure presets: coarse features", criterion_figures},
  };

  int failed = 0;
  for (const auto& e : entries) {
    Result r;
    try {
      r = e.run();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", r.pass ? "PASS" : "FAIL", e.id,
                e.label, r.detail.empty() ? "" : " -- ", r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", int(entries.size()) - failed,
              entries.size());
  return failed;
}
