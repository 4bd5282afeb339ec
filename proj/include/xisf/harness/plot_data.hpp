#pragma once

#include <map>

#include "xisf/harness/run.hpp"

namespace xisf::harness {

// Per-agent mean and standard error of the mean over seeds, per task
// index, of the average-reward-per-step metric. Columns:
// task_index, then <agent>_mean, <agent>_sem per agent (name order).
// A moving average of width `smoothing_window` is applied to each seed's
// series first (1 = none). SEM is the n-1 sample deviation over sqrt(n);
// a single seed reports 0.
struct PlotData {
  std::vector<std::string> agents;
  std::vector<int> task_index;
  std::vector<Vec> mean;  // [agent][task]
  std::vector<Vec> sem;
};

PlotData make_plot_data(const std::vector<RunRecord>& records,
                        int smoothing_window = 1);

void write_plot_csv(const PlotData& data, std::ostream& os);

// Reads record.csv files (written by run_to_dir) back into RunRecords;
// the agent name is taken from the directory layout <agent>/seed_<n>.
RunRecord read_record_csv(const std::string& path, const std::string& agent);

}  // namespace xisf::harness
