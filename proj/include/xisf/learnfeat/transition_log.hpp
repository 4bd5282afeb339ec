#pragma once

#include <string>
#include <vector>

#include "xisf/core.hpp"

namespace xisf::learnfeat {

struct LoggedTransition {
  int task_id = 0;
  Vec s;
  int action = 0;
  Vec s_next;
  Vec phi;
  double reward = 0.0;
  bool terminal = false;
};

// Append-only store of transitions tagged with their task index.
// File format: binary, little-endian doubles; header
// {magic "XLOG", version u32, state_dim u32, feature_dim u32, count u64},
// then per record: task_id u32, action u32, terminal u32, reward f64,
// s[state_dim], s_next[state_dim], phi[feature_dim].
class TransitionLog {
 public:
  void append(int task_id, const Transition& tr);

  std::size_t size() const { return records_.size(); }
  const LoggedTransition& operator[](std::size_t i) const {
    return records_[i];
  }

  int state_dim() const { return state_dim_; }
  int feature_dim() const { return feature_dim_; }
  int max_task_id() const { return max_task_id_; }

  void save(const std::string& path) const;
  static TransitionLog load(const std::string& path);

  // Keeps every nonzero-reward record and each zero-reward record with
  // probability `keep_fraction` (the object-env protocol filters 75% of
  // zero-reward transitions out).
  TransitionLog filtered_zero_rewards(double keep_fraction,
                                      RandomStream& rng) const;

 private:
  std::vector<LoggedTransition> records_;
  int state_dim_ = -1;
  int feature_dim_ = -1;
  int max_task_id_ = -1;
};

}  // namespace xisf::learnfeat
