#pragma once

#include <functional>
#include <string>

#include "xisf/core.hpp"

namespace xisf::approx {

struct GradCheckReport {
  double rel_error = 0.0;  // ||analytic - numeric|| / max(norms)
  double max_component_rel = 0.0;
  bool pass = false;
};

// Compares an analytic gradient against central finite differences of
// `loss` (h = 1e-5 by default). The relative error is norm-based so that
// near-zero components do not dominate.
GradCheckReport gradcheck(const std::function<double(const Vec&)>& loss,
                          const Vec& params, const Vec& analytic_grad,
                          double tolerance, double h = 1e-5);

// Recovers the gradient implied by one SGD step: g = (before - after) / alpha.
// Checks the exact update path an approximator executes.
Vec gradient_from_step(Vec params_before, const Vec& params_after,
                       double alpha);

}  // namespace xisf::approx
