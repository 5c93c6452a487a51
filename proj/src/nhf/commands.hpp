#pragma once

#include <string>

#include "nhf/common.hpp"
#include "nhf/grid.hpp"

namespace nhf {

struct CommandOutcome {
  Status status = Status::ok;
  json report;
};

// Experiment runners behind the CLI subcommands. Each takes the merged
// config (file values overridden by flags), validates it against module
// preconditions, and returns the machine-readable report. Failures that are
// findings (a failed check, a tripped gate) come back as a nonzero status
// with a full report; malformed configs and inadmissible data throw.
CommandOutcome run_validate(const json& cfg);
CommandOutcome run_diagnose(const json& cfg);
CommandOutcome run_solve(const json& cfg);
CommandOutcome run_normalform(const json& cfg);
CommandOutcome run_transform(const json& cfg);
CommandOutcome run_command(const std::string& name, const json& cfg);

// Deterministic probe with known finite smoothness: a tensor square of the
// degree-5 periodized Bernoulli polynomial, scaled so the leading Fourier
// amplitude is 1 (|coefficient_k| = |k|^{-5}). Its resolution-convergence
// rate separates discretization error from roundoff floors.
GridField finite_smoothness_probe(GridSpec spec);

}  // namespace nhf
