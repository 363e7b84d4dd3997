#pragma once

#include <stdexcept>
#include <string>

namespace ppnet {

// Problems with input data or files (bad rows, out-of-window points, ...).
struct data_error : std::runtime_error {
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures (non-convergence, degenerate estimates, ...).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ppnet
