#pragma once

#include <string>

#include "nsv/core/problem.hpp"

namespace nsv {

enum class SigmaPreset { unit, multiscale };

struct ProblemOptions {
  double pyramid_s = 100.0;
  SigmaPreset sigma_preset = SigmaPreset::unit;
};

// Names: "pyramid-<d>", "eggbox", "loggamma-<d>".
// Throws std::invalid_argument for anything else.
Problem make_problem(const std::string& name, const ProblemOptions& options = {});

}  // namespace nsv
