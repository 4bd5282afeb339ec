#include "xisf/approx/gradcheck.hpp"

#include <cmath>

namespace xisf::approx {

GradCheckReport gradcheck(const std::function<double(const Vec&)>& loss,
                          const Vec& params, const Vec& analytic_grad,
                          double tolerance, double h) {
  Vec numeric(params.size());
  Vec p = params;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double keep = p[i];
    p[i] = keep + h;
    const double up = loss(p);
    p[i] = keep - h;
    const double down = loss(p);
    p[i] = keep;
    numeric[i] = (up - down) / (2.0 * h);
  }

  double diff2 = 0.0, a2 = 0.0, n2 = 0.0, max_comp = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = analytic_grad[i] - numeric[i];
    diff2 += d * d;
    a2 += analytic_grad[i] * analytic_grad[i];
    n2 += numeric[i] * numeric[i];
    const double denom =
        std::max({std::abs(analytic_grad[i]), std::abs(numeric[i]), 1.0});
    max_comp = std::max(max_comp, std::abs(d) / denom);
  }
  GradCheckReport rep;
  const double denom = std::max({std::sqrt(a2), std::sqrt(n2), 1e-12});
  rep.rel_error = std::sqrt(diff2) / denom;
  rep.max_component_rel = max_comp;
  rep.pass = rep.rel_error <= tolerance;
  return rep;
}

Vec gradient_from_step(Vec params_before, const Vec& params_after,
                       double alpha) {
  for (std::size_t i = 0; i < params_before.size(); ++i)
    params_before[i] = (params_before[i] - params_after[i]) / alpha;
  return params_before;
}

}  // namespace xisf::approx
