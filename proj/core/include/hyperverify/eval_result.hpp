#pragma once

#include <cstddef>

namespace hyperverify {

struct EvalResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t terms_used = 0;
  bool converged = true;
};

// Series tolerances are relative to the magnitude of the result.
struct SeriesOptions {
  double tol = 1e-15;
  std::size_t max_terms = 1'000'000;
};

}  // namespace hyperverify
