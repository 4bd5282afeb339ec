#include "xisf/harness/nonlinearity.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

namespace xisf::harness {

std::vector<NonlinearityBucket> default_buckets() {
  std::vector<NonlinearityBucket> buckets;
  for (int i = 0; i < 7; ++i)
    buckets.push_back({0.25 * i, 0.25 * (i + 1)});
  return buckets;
}

NonlinearityResult nonlinearity_study(
    const RunConfig& base, const std::vector<NonlinearityBucket>& buckets,
    const std::vector<std::uint64_t>& seeds, int workers) {
  RunConfig proto = base;
  proto.reward_kind = envs::RewardKind::kGeneral;
  proto.validate();

  auto env = make_environment(proto);
  auto atoms = std::make_shared<DiscreteFeatureSet>(*env->feature_atoms());

  // Task sequences per (bucket, seed), sampled from the task stream so
  // both agents train on identical tasks.
  const int nb = static_cast<int>(buckets.size());
  const int ns = static_cast<int>(seeds.size());
  std::vector<std::vector<std::vector<TaskSpec>>> tasks(
      nb, std::vector<std::vector<TaskSpec>>(ns));
  for (int b = 0; b < nb; ++b)
    for (int s = 0; s < ns; ++s) {
      RandomStream rng(seeds[s], "tasks-nonlinearity", b);
      auto& list = tasks[b][s];
      list.reserve(proto.num_tasks);
      for (int i = 0; i < proto.num_tasks; ++i)
        list.push_back(envs::sample_task_at_nonlinearity(
            buckets[b].lo, buckets[b].hi, rng, atoms));
    }

  struct Job {
    int bucket, seed_index;
    AgentKind agent;
    double total = 0.0;
  };
  std::vector<Job> jobs;
  for (int b = 0; b < nb; ++b)
    for (int s = 0; s < ns; ++s)
      for (AgentKind agent :
           {AgentKind::kXi, AgentKind::kSFQL, AgentKind::kQL})
        jobs.push_back({b, s, agent});

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      Job& job = jobs[j];
      RunConfig config = proto;
      config.agent = job.agent;
      config.seed = seeds[job.seed_index];
      config.output_dir.clear();
      job.total =
          run_with_tasks(config, tasks[job.bucket][job.seed_index])
              .total_return();
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

  NonlinearityResult result;
  for (int b = 0; b < nb; ++b) {
    NonlinearityRow row;
    row.bucket = buckets[b];
    int count = 0;
    for (const Job& job : jobs) {
      if (job.bucket != b) continue;
      switch (job.agent) {
        case AgentKind::kXi: row.xi_total += job.total; break;
        case AgentKind::kSFQL: row.sfql_total += job.total; break;
        case AgentKind::kQL: row.ql_total += job.total; break;
        default: break;
      }
      ++count;
    }
    row.xi_total /= ns;
    row.sfql_total /= ns;
    row.ql_total /= ns;
    row.sfql_over_xi = row.sfql_total / row.xi_total;
    row.ql_over_xi = row.ql_total / row.xi_total;
    result.rows.push_back(row);
  }
  return result;
}

void write_nonlinearity_csv(const NonlinearityResult& result,
                            std::ostream& os) {
  os << "bucket_mean_error,xi_total,sfql_total,ql_total,sfql_over_xi,"
        "ql_over_xi\n";
  char buf[256];
  for (const NonlinearityRow& r : result.rows) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  r.bucket.mean_error(), r.xi_total, r.sfql_total, r.ql_total,
                  r.sfql_over_xi, r.ql_over_xi);
    os << buf;
  }
}

}  // namespace xisf::harness
