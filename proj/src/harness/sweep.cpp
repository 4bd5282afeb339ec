#include "xisf/harness/sweep.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace xisf::harness {

using nlohmann::json;

SweepGrid parse_grid_json(const std::string& text) {
  const json j = json::parse(text);
  SweepGrid g;
  auto read = [&j](const char* key, std::vector<double>& out) {
    if (j.contains(key)) out = j.at(key).get<std::vector<double>>();
  };
  read("alpha", g.alpha);
  read("alpha_w", g.alpha_w);
  read("alpha_r", g.alpha_r);
  read("beta", g.beta);
  return g;
}

SweepGrid load_grid_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("grid: cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_grid_json(ss.str());
}

bool uses_alpha_w(const RunConfig& config) {
  if (config.reward_mode != RewardMode::kOnline) return false;
  return config.agent == AgentKind::kSFQL || config.agent == AgentKind::kCXi;
}

bool uses_alpha_r(const RunConfig& config) {
  if (config.reward_mode != RewardMode::kOnline) return false;
  return config.agent == AgentKind::kXi || config.agent == AgentKind::kMBXi;
}

bool uses_beta(const RunConfig& config) {
  return config.agent == AgentKind::kMBXi;
}

SweepResult sweep(const RunConfig& base, const SweepGrid& grid,
                  const std::vector<std::uint64_t>& seeds, int workers) {
  auto values_or_base = [](const std::vector<double>& v, double fallback) {
    return v.empty() ? std::vector<double>{fallback} : v;
  };
  const auto alphas = values_or_base(grid.alpha, base.hp.alpha);
  const auto alpha_ws = uses_alpha_w(base)
                            ? values_or_base(grid.alpha_w, base.hp.alpha_w)
                            : std::vector<double>{base.hp.alpha_w};
  const auto alpha_rs = uses_alpha_r(base)
                            ? values_or_base(grid.alpha_r, base.hp.alpha_r)
                            : std::vector<double>{base.hp.alpha_r};
  const auto betas = uses_beta(base) ? values_or_base(grid.beta, base.hp.beta)
                                     : std::vector<double>{base.hp.beta};

  SweepResult result;
  for (double a : alphas)
    for (double aw : alpha_ws)
      for (double ar : alpha_rs)
        for (double b : betas) {
          SweepCell cell;
          cell.hp = base.hp;
          cell.hp.alpha = a;
          cell.hp.alpha_w = aw;
          cell.hp.alpha_r = ar;
          cell.hp.beta = b;
          cell.records.resize(seeds.size());
          result.cells.push_back(std::move(cell));
        }

  // Flat job list over (cell, seed); records land in preassigned slots so
  // the merge is deterministic regardless of scheduling.
  struct Job {
    int cell;
    int seed_index;
  };
  std::vector<Job> jobs;
  for (int c = 0; c < static_cast<int>(result.cells.size()); ++c)
    for (int s = 0; s < static_cast<int>(seeds.size()); ++s)
      jobs.push_back({c, s});

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      RunConfig config = base;
      config.hp = result.cells[jobs[j].cell].hp;
      config.seed = seeds[jobs[j].seed_index];
      config.output_dir.clear();
      result.cells[jobs[j].cell].records[jobs[j].seed_index] = run(config);
    }
  };
  int n_workers = workers > 0
                      ? workers
                      : static_cast<int>(std::thread::hardware_concurrency());
  n_workers = std::max(1, std::min<int>(n_workers,
                                        static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (auto& cell : result.cells) {
    double total = 0.0;
    for (const RunRecord& r : cell.records) total += r.total_return();
    cell.mean_total_return = total / cell.records.size();
  }
  for (int c = 0; c < static_cast<int>(result.cells.size()); ++c)
    if (result.cells[c].mean_total_return >
        result.cells[result.best_cell].mean_total_return)
      result.best_cell = c;
  return result;
}

}  // namespace xisf::harness
