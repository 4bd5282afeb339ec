#pragma once

#include <vector>

#include "xisf/agents/reward_model.hpp"
#include "xisf/approx/value_approx.hpp"

namespace xisf::agents {

// One completed-or-active task's learned knowledge: its value parameters
// (one object for psi/xi, one per feature dimension for CXi) and its own
// reward model. Entry i is frozen once task i+1 begins, except for the
// GPI off-policy updates of the entry selected as c.
struct PolicyEntry {
  std::vector<std::unique_ptr<approx::ValueApprox>> value;
  std::unique_ptr<RewardModel> reward;

  PolicyEntry clone() const {
    PolicyEntry e;
    e.value.reserve(value.size());
    for (const auto& v : value) e.value.push_back(v->clone());
    if (reward) e.reward = reward->clone();
    return e;
  }
};

class PolicyLibrary {
 public:
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  PolicyEntry& entry(int i) { return entries_[i]; }
  const PolicyEntry& entry(int i) const { return entries_[i]; }
  PolicyEntry& back() { return entries_.back(); }
  const PolicyEntry& back() const { return entries_.back(); }

  void append(PolicyEntry e) { entries_.push_back(std::move(e)); }

  // Writes entry_###_dim#.params files plus a manifest.txt index.
  void save(const std::string& dir) const;

 private:
  std::vector<PolicyEntry> entries_;
};

}  // namespace xisf::agents
