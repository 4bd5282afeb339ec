// Command-line front end: run experiments, sweeps, oracle check suites,
// the nonlinearity study, and plot-data emission.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "xisf/harness/nonlinearity.hpp"
#include "xisf/harness/oracle_suites.hpp"
#include "xisf/harness/plot_data.hpp"
#include "xisf/harness/sweep.hpp"

namespace fs = std::filesystem;
using namespace xisf;

int main(int argc, char** argv) {
  CLI::App app{"xisf: successor-feature transfer learning experiments"};
  app.require_subcommand(1);

  std::string config_path, grid_path, suite, in_dir, out_dir;
  int instances = 50;
  int workers = 0;
  int smoothing = 1;
  std::uint64_t suite_seed = 1234;
  std::vector<std::uint64_t> seeds;

  auto* run_cmd = app.add_subcommand("run", "execute one configured run");
  run_cmd->add_option("--config", config_path, "JSON run config")->required();

  auto* sweep_cmd =
      app.add_subcommand("sweep", "grid sweep over learning rates");
  sweep_cmd->add_option("--config", config_path, "JSON run config")
      ->required();
  sweep_cmd->add_option("--grid", grid_path, "JSON grid file")->required();
  sweep_cmd->add_option("--seeds", seeds, "seeds (default: 5 from config)");
  sweep_cmd->add_option("--workers", workers, "worker threads");

  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "tabular verification suites");
  oracle_cmd
      ->add_option("--suite", suite,
                   "contraction|normalization|equivalence|indicator|"
                   "gpi-bound|all")
      ->required();
  oracle_cmd->add_option("--instances", instances, "instances per suite");
  oracle_cmd->add_option("--seed", suite_seed, "base instance seed");

  auto* nl_cmd =
      app.add_subcommand("nonlinearity", "reward nonlinearity study");
  nl_cmd->add_option("--config", config_path, "JSON run config")->required();
  nl_cmd->add_option("--seeds", seeds, "seeds");
  nl_cmd->add_option("--workers", workers, "worker threads");

  auto* plot_cmd =
      app.add_subcommand("plot-data", "aggregate records into plot curves");
  plot_cmd->add_option("--in", in_dir, "directory of <agent>/<run>/record.csv")
      ->required();
  plot_cmd->add_option("--out", out_dir, "output directory")->required();
  plot_cmd->add_option("--smoothing", smoothing, "moving-average window");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      harness::RunConfig config = harness::load_config_file(config_path);
      if (config.output_dir.empty())
        throw std::runtime_error("run: config needs output_dir");
      const harness::RunRecord record = harness::run_to_dir(config);
      std::cout << "agent " << record.agent << " seed " << record.seed
                << " total_return " << record.total_return() << "\n";
    } else if (*sweep_cmd) {
      harness::RunConfig config = harness::load_config_file(config_path);
      const harness::SweepGrid grid = harness::load_grid_file(grid_path);
      if (seeds.empty())
        for (std::uint64_t s = 0; s < 5; ++s) seeds.push_back(config.seed + s);
      const harness::SweepResult result =
          harness::sweep(config, grid, seeds, workers);
      for (std::size_t c = 0; c < result.cells.size(); ++c) {
        const auto& cell = result.cells[c];
        std::cout << (static_cast<int>(c) == result.best_cell ? "* " : "  ")
                  << "alpha " << cell.hp.alpha << " alpha_w " << cell.hp.alpha_w
                  << " alpha_r " << cell.hp.alpha_r << " beta " << cell.hp.beta
                  << " mean_total_return " << cell.mean_total_return << "\n";
      }
      if (!config.output_dir.empty()) {
        fs::create_directories(config.output_dir);
        const auto& best = result.cells[result.best_cell];
        std::ofstream os(config.output_dir + "/sweep_best.csv");
        os << "alpha,alpha_w,alpha_r,beta,mean_total_return\n"
           << best.hp.alpha << "," << best.hp.alpha_w << ","
           << best.hp.alpha_r << "," << best.hp.beta << ","
           << best.mean_total_return << "\n";
      }
    } else if (*oracle_cmd) {
      const std::vector<std::string> names =
          suite == "all"
              ? std::vector<std::string>{"contraction", "normalization",
                                         "equivalence", "indicator",
                                         "gpi-bound"}
              : std::vector<std::string>{suite};
      bool all_pass = true;
      for (const std::string& name : names) {
        const auto reports =
            harness::run_oracle_suite(name, instances, suite_seed);
        for (const auto& r : reports) {
          std::cout << r.to_json() << "\n";
          all_pass = all_pass && r.pass;
        }
      }
      return all_pass ? 0 : 1;
    } else if (*nl_cmd) {
      harness::RunConfig config = harness::load_config_file(config_path);
      if (seeds.empty())
        for (std::uint64_t s = 0; s < 5; ++s) seeds.push_back(config.seed + s);
      const auto result = harness::nonlinearity_study(
          config, harness::default_buckets(), seeds, workers);
      harness::write_nonlinearity_csv(result, std::cout);
      if (!config.output_dir.empty()) {
        fs::create_directories(config.output_dir);
        std::ofstream os(config.output_dir + "/nonlinearity.csv");
        harness::write_nonlinearity_csv(result, os);
      }
    } else if (*plot_cmd) {
      std::vector<harness::RunRecord> records;
      for (const auto& agent_dir : fs::directory_iterator(in_dir)) {
        if (!agent_dir.is_directory()) continue;
        const std::string agent = agent_dir.path().filename().string();
        for (const auto& run_dir : fs::directory_iterator(agent_dir.path())) {
          const fs::path csv = run_dir.path() / "record.csv";
          if (fs::exists(csv))
            records.push_back(
                harness::read_record_csv(csv.string(), agent));
        }
      }
      const harness::PlotData data =
          harness::make_plot_data(records, smoothing);
      fs::create_directories(out_dir);
      std::ofstream os(out_dir + "/avg_reward_per_task.csv");
      harness::write_plot_csv(data, os);
      std::cout << "wrote " << out_dir << "/avg_reward_per_task.csv ("
                << records.size() << " records)\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
