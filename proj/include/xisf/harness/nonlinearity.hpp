#pragma once

#include "xisf/harness/run.hpp"

namespace xisf::harness {

struct NonlinearityBucket {
  double lo = 0.0, hi = 0.25;
  double mean_error() const { return 0.5 * (lo + hi); }
};

struct NonlinearityRow {
  NonlinearityBucket bucket;
  double xi_total = 0.0;    // mean over seeds
  double sfql_total = 0.0;
  double ql_total = 0.0;
  double sfql_over_xi = 0.0;
  double ql_over_xi = 0.0;
};

struct NonlinearityResult {
  std::vector<NonlinearityRow> rows;
};

// Trains SFQL and Xi (plus QL for reference) on general-reward tasks
// rejection-sampled so that each bucket's tasks have a best linear-fit MAE
// inside its range; emits total-return ratios keyed by the bucket mean.
// Base config: object env; its agent field is ignored.
NonlinearityResult nonlinearity_study(
    const RunConfig& base, const std::vector<NonlinearityBucket>& buckets,
    const std::vector<std::uint64_t>& seeds, int workers = 0);

void write_nonlinearity_csv(const NonlinearityResult& result,
                            std::ostream& os);

// The seven ranges of the full study: [0, 0.25], ..., [1.5, 1.75].
std::vector<NonlinearityBucket> default_buckets();

}  // namespace xisf::harness
