#include "xisf/harness/plot_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace xisf::harness {

PlotData make_plot_data(const std::vector<RunRecord>& records,
                        int smoothing_window) {
  if (records.empty()) throw std::invalid_argument("plot data: no records");
  const std::size_t tasks = records.front().rows.size();
  for (const RunRecord& r : records)
    if (r.rows.size() != tasks)
      throw std::invalid_argument("plot data: mismatched task counts");

  PlotData data;
  for (const RunRecord& r : records)
    if (std::find(data.agents.begin(), data.agents.end(), r.agent) ==
        data.agents.end())
      data.agents.push_back(r.agent);
  for (std::size_t t = 0; t < tasks; ++t)
    data.task_index.push_back(static_cast<int>(t));

  auto smooth = [smoothing_window](const Vec& series) {
    if (smoothing_window <= 1) return series;
    Vec out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
      const std::size_t lo =
          i + 1 >= static_cast<std::size_t>(smoothing_window)
              ? i + 1 - smoothing_window
              : 0;
      double sum = 0.0;
      for (std::size_t j = lo; j <= i; ++j) sum += series[j];
      out[i] = sum / (i - lo + 1);
    }
    return out;
  };

  data.mean.assign(data.agents.size(), Vec(tasks, 0.0));
  data.sem.assign(data.agents.size(), Vec(tasks, 0.0));
  for (std::size_t ai = 0; ai < data.agents.size(); ++ai) {
    std::vector<Vec> series;
    for (const RunRecord& r : records) {
      if (r.agent != data.agents[ai]) continue;
      Vec s(tasks);
      for (std::size_t t = 0; t < tasks; ++t)
        s[t] = r.rows[t].avg_reward_per_step;
      series.push_back(smooth(s));
    }
    const double n = static_cast<double>(series.size());
    for (std::size_t t = 0; t < tasks; ++t) {
      double mean = 0.0;
      for (const Vec& s : series) mean += s[t];
      mean /= n;
      data.mean[ai][t] = mean;
      if (series.size() > 1) {
        double var = 0.0;
        for (const Vec& s : series) var += (s[t] - mean) * (s[t] - mean);
        var /= (n - 1.0);
        data.sem[ai][t] = std::sqrt(var / n);
      }
    }
  }
  return data;
}

void write_plot_csv(const PlotData& data, std::ostream& os) {
  os << "task_index";
  for (const std::string& a : data.agents)
    os << "," << a << "_mean," << a << "_sem";
  os << "\n";
  char buf[64];
  for (std::size_t t = 0; t < data.task_index.size(); ++t) {
    os << data.task_index[t];
    for (std::size_t ai = 0; ai < data.agents.size(); ++ai) {
      std::snprintf(buf, sizeof(buf), ",%.9g,%.9g", data.mean[ai][t],
                    data.sem[ai][t]);
      os << buf;
    }
    os << "\n";
  }
}

RunRecord read_record_csv(const std::string& path, const std::string& agent) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("record csv: cannot open " + path);
  RunRecord record;
  record.agent = agent;
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    TaskRow row;
    unsigned long long seed = 0;
    if (std::sscanf(line.c_str(), "%llu,%d,%lf,%lf,%lf", &seed,
                    &row.task_index, &row.avg_reward_per_step,
                    &row.total_task_return, &row.cumulative_return) != 5)
      throw std::runtime_error("record csv: bad row: " + line);
    row.seed = seed;
    record.seed = seed;
    record.rows.push_back(row);
  }
  return record;
}

}  // namespace xisf::harness
