#ifndef FDDE_TOOLS_COMMANDS_HPP
#define FDDE_TOOLS_COMMANDS_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace fdde_cli {

// Grid evaluation of the closed-form solution selected by operator/history.
// Writes CSV t,y to cfg.out.
void cmd_exact(const ExperimentConfig& cfg);

// Runs the solver selected by `operator` ("both" writes the pair CSV
// t,y_caputo,y_phitau,diff). Writes to cfg.out.
void cmd_solve(const ExperimentConfig& cfg);

// Exact history-aware vs standard solution on a grid (linear rhs, ramp
// history): columns t,y_caputo,y_phitau,diff,j_corrective; prints and
// returns max |diff - j_corrective|.
double cmd_compare(const ExperimentConfig& cfg);

// Step-size study: rows h,max_error,observed_order against the exact
// reference or the h/4 self-reference. Needs >= 2 step sizes.
void cmd_converge(const ExperimentConfig& cfg);

// Figure presets (pure data, see presets.cpp); returns the files written.
std::vector<std::string> run_figure(int figure, const std::string& out_dir);

}  // namespace fdde_cli

#endif
