#include "xisf/envs/encoding.hpp"

#include <cmath>

namespace xisf::envs {

double torus_distance(double px, double py, double qx, double qy) {
  double dx = std::abs(px - qx);
  double dy = std::abs(py - qy);
  dx = std::min(dx, 1.0 - dx);
  dy = std::min(dy, 1.0 - dy);
  return std::sqrt(dx * dx + dy * dy);
}

void rbf_encode_position(double x, double y, double sigma, Metric metric,
                         Vec& out) {
  out.resize(kPositionCells);
  int j = 0;
  for (int gy = 0; gy < 10; ++gy) {
    const double cy = gy / 9.0;
    for (int gx = 0; gx < 10; ++gx, ++j) {
      const double cx = gx / 9.0;
      double dx = x - cx, dy = y - cy;
      if (metric == Metric::kTorus) {
        dx = std::abs(dx);
        dy = std::abs(dy);
        dx = std::min(dx, 1.0 - dx);
        dy = std::min(dy, 1.0 - dy);
      }
      out[j] = std::exp(-(dx * dx + dy * dy) / sigma);
    }
  }
}

double angular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
  return std::min(d, 2.0 * M_PI - d);
}

void rbf_encode_orientation(double theta, Vec& out) {
  out.resize(kOrientationCells);
  const double sigma = M_PI / 5.0;
  for (int j = 0; j < kOrientationCells; ++j) {
    const double c = -M_PI + j * (M_PI / 10.0);
    const double d = angular_distance(theta, c);
    out[j] = std::exp(-d * d / sigma);
  }
}

}  // namespace xisf::envs
