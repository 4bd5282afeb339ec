#pragma once

#include <iosfwd>

#include "xisf/harness/config.hpp"

namespace xisf::harness {

struct TaskRow {
  std::uint64_t seed = 0;
  int task_index = 0;
  double avg_reward_per_step = 0.0;
  double total_task_return = 0.0;
  double cumulative_return = 0.0;
  double wall_time_sec = 0.0;  // kept out of the deterministic CSV
};

struct RunRecord {
  std::string agent;
  std::uint64_t seed = 0;
  std::vector<TaskRow> rows;

  double total_return() const {
    return rows.empty() ? 0.0 : rows.back().cumulative_return;
  }
};

// Pieces shared with the sweep and study drivers.
std::unique_ptr<Environment> make_environment(const RunConfig& config);
std::vector<TaskSpec> sample_task_sequence(const RunConfig& config,
                                           const Environment& env);
std::unique_ptr<agents::Agent> make_agent(
    const RunConfig& config, const Environment& env,
    const learnfeat::FeatureMap* learned_features);

// Executes the sequential-task protocol. Deterministic for a fixed config:
// streams for task sampling, env noise, agent init and exploration are
// derived independently from the master seed, so every agent kind sees the
// identical task sequence.
RunRecord run(const RunConfig& config);

// Same protocol with an externally supplied task sequence (the
// nonlinearity study samples its own tasks).
RunRecord run_with_tasks(const RunConfig& config,
                         const std::vector<TaskSpec>& tasks);

// run() plus record.csv / timing.csv (and optional policy snapshots)
// under config.output_dir.
RunRecord run_to_dir(const RunConfig& config);

// Deterministic CSV: header + one row per task, floats with 9 significant
// digits. Wall times go to the separate timing CSV.
void write_record_csv(const RunRecord& record, std::ostream& os);
void write_timing_csv(const RunRecord& record, std::ostream& os);

}  // namespace xisf::harness
