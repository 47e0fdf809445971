#include "presets.hpp"

namespace fdde_cli {

namespace {

// Linear problem, constant history, with and without the cosine source.
const char* kFig1 = R"json([
  {"name": "fig1_f0.csv", "command": "exact", "config": {
    "alpha": 0.8, "lambda": -1.0, "tau": 1.0, "y0": 1.0,
    "history": "constant", "forcing": "zero", "rhs": "linear",
    "operator": "caputo", "h": 0.015625, "T": 10.0}},
  {"name": "fig1_cos.csv", "command": "exact", "config": {
    "alpha": 0.8, "lambda": -1.0, "tau": 1.0, "y0": 1.0,
    "history": "constant", "forcing": "cos(0.5,3)", "rhs": "linear",
    "operator": "caputo", "h": 0.015625, "T": 10.0}}
])json";

// Same problem with the ramp history.
const char* kFig2 = R"json([
  {"name": "fig2_f0.csv", "command": "exact", "config": {
    "alpha": 0.8, "lambda": -1.0, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "forcing": "zero", "rhs": "linear",
    "operator": "caputo", "h": 0.015625, "T": 10.0}},
  {"name": "fig2_cos.csv", "command": "exact", "config": {
    "alpha": 0.8, "lambda": -1.0, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "forcing": "cos(0.5,3)", "rhs": "linear",
    "operator": "caputo", "h": 0.015625, "T": 10.0}}
])json";

// History-aware vs standard exact solutions and the corrective-term
// integral, forcing off and on.
const char* kFig3 = R"json([
  {"name": "fig3_f0.csv", "command": "compare", "config": {
    "alpha": 0.8, "lambda": -1.0, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "forcing": "zero", "rhs": "linear",
    "h": 0.03125, "T": 10.0}},
  {"name": "fig3_sin.csv", "command": "compare", "config": {
    "alpha": 0.8, "lambda": -1.0, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "forcing": "sin(1,1)", "rhs": "linear",
    "h": 0.03125, "T": 10.0}}
])json";

// Nonlinear logistic-type problem under both operators.
const char* kFig4 = R"json([
  {"name": "fig4.csv", "command": "solve", "config": {
    "alpha": 0.8, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "rhs": "logistic(2,1.2)",
    "operator": "both", "h": 0.00390625, "T": 10.0}}
])json";

// The same problem as the order approaches 1.
const char* kFig5 = R"json([
  {"name": "fig5_a090.csv", "command": "solve", "config": {
    "alpha": 0.9, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "rhs": "logistic(2,1.2)",
    "operator": "both", "h": 0.00390625, "T": 10.0}},
  {"name": "fig5_a098.csv", "command": "solve", "config": {
    "alpha": 0.98, "tau": 1.0, "y0": 1.0,
    "history": "ramp", "rhs": "logistic(2,1.2)",
    "operator": "both", "h": 0.00390625, "T": 10.0}}
])json";

}  // namespace

const char* figure_preset_json(int figure) {
  switch (figure) {
    case 1: return kFig1;
    case 2: return kFig2;
    case 3: return kFig3;
    case 4: return kFig4;
    case 5: return kFig5;
  }
  return nullptr;
}

}  // namespace fdde_cli
