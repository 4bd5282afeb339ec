#pragma once

#include <map>

#include "xisf/harness/run.hpp"

namespace xisf::harness {

// Per-parameter candidate values; only parameters the configured agent and
// reward mode actually use enter the Cartesian product (a QL sweep over
// {alpha} x {alpha_w} would evaluate identical cells).
struct SweepGrid {
  std::vector<double> alpha;
  std::vector<double> alpha_w;
  std::vector<double> alpha_r;
  std::vector<double> beta;
};

struct SweepCell {
  Hyperparams hp;
  std::vector<RunRecord> records;  // one per seed, seed order
  double mean_total_return = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // grid order
  int best_cell = 0;
};

SweepGrid load_grid_file(const std::string& path);
SweepGrid parse_grid_json(const std::string& text);

// Which grid dimensions apply to this config.
bool uses_alpha_w(const RunConfig& config);
bool uses_alpha_r(const RunConfig& config);
bool uses_beta(const RunConfig& config);

// Runs every applicable grid cell for each seed in `seeds`, in a worker
// pool of `workers` threads (<= 0 picks the hardware count). The winner
// maximizes mean total return over seeds; cell evaluation order does not
// affect the result.
SweepResult sweep(const RunConfig& base, const SweepGrid& grid,
                  const std::vector<std::uint64_t>& seeds, int workers = 0);

}  // namespace xisf::harness
