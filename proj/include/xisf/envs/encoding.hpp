#pragma once

#include "xisf/core.hpp"

namespace xisf::envs {

enum class Metric { kEuclidean, kTorus };

// Wrap-around Euclidean distance on [0,1]^2: per-coordinate
// delta = min(|d|, 1 - |d|).
double torus_distance(double px, double py, double qx, double qy);

// Position encoding over a regular 10x10 grid of Gaussian bumps,
// component j = exp(-((x-c_x)^2 + (y-c_y)^2) / sigma). Grid centers at
// {0, 1/9, ..., 1}^2, x-major within each row (j = gy*10 + gx).
void rbf_encode_position(double x, double y, double sigma, Metric metric,
                         Vec& out);

// Orientation encoding: 20 Gaussian bumps equally spaced on the circle
// (centers -pi + j*pi/10), sigma = pi/5, angular distance identifies
// pi and -pi.
void rbf_encode_orientation(double theta, Vec& out);

double angular_distance(double a, double b);

inline constexpr int kPositionCells = 100;
inline constexpr int kOrientationCells = 20;
// Squared grid spacing; a neighboring center activates at 1/e.
inline constexpr double kDefaultPositionSigma = (1.0 / 9.0) * (1.0 / 9.0);

}  // namespace xisf::envs
