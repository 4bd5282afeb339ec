#include "xisf/learnfeat/transition_log.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace xisf::learnfeat {

void TransitionLog::append(int task_id, const Transition& tr) {
  if (state_dim_ < 0) {
    state_dim_ = tr.s.dim();
    feature_dim_ = tr.phi.dim();
  } else if (tr.s.dim() != state_dim_ || tr.phi.dim() != feature_dim_) {
    throw std::invalid_argument("TransitionLog: dim mismatch");
  }
  LoggedTransition rec;
  rec.task_id = task_id;
  rec.s = tr.s.values;
  rec.action = tr.a.index;
  rec.s_next = tr.s_next.values;
  rec.phi = tr.phi.values;
  rec.reward = tr.reward;
  rec.terminal = tr.terminal;
  max_task_id_ = std::max(max_task_id_, task_id);
  records_.push_back(std::move(rec));
}

namespace {

void write_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_u64(std::ostream& os, std::uint64_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
std::uint32_t read_u32(std::istream& is) {
  std::uint32_t v;
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}
std::uint64_t read_u64(std::istream& is) {
  std::uint64_t v;
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}
double read_f64(std::istream& is) {
  double v;
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}

}  // namespace

void TransitionLog::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("TransitionLog: cannot open " + path);
  os.write("XLOG", 4);
  write_u32(os, 1);
  write_u32(os, static_cast<std::uint32_t>(std::max(state_dim_, 0)));
  write_u32(os, static_cast<std::uint32_t>(std::max(feature_dim_, 0)));
  write_u64(os, records_.size());
  for (const auto& r : records_) {
    write_u32(os, static_cast<std::uint32_t>(r.task_id));
    write_u32(os, static_cast<std::uint32_t>(r.action));
    write_u32(os, r.terminal ? 1 : 0);
    write_f64(os, r.reward);
    for (double v : r.s) write_f64(os, v);
    for (double v : r.s_next) write_f64(os, v);
    for (double v : r.phi) write_f64(os, v);
  }
}

TransitionLog TransitionLog::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("TransitionLog: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (std::memcmp(magic, "XLOG", 4) != 0)
    throw std::runtime_error("TransitionLog: bad magic");
  if (read_u32(is) != 1) throw std::runtime_error("TransitionLog: version");
  TransitionLog log;
  log.state_dim_ = static_cast<int>(read_u32(is));
  log.feature_dim_ = static_cast<int>(read_u32(is));
  const std::uint64_t count = read_u64(is);
  log.records_.resize(count);
  for (auto& r : log.records_) {
    r.task_id = static_cast<int>(read_u32(is));
    r.action = static_cast<int>(read_u32(is));
    r.terminal = read_u32(is) != 0;
    r.reward = read_f64(is);
    r.s.resize(log.state_dim_);
    for (double& v : r.s) v = read_f64(is);
    r.s_next.resize(log.state_dim_);
    for (double& v : r.s_next) v = read_f64(is);
    r.phi.resize(log.feature_dim_);
    for (double& v : r.phi) v = read_f64(is);
    log.max_task_id_ = std::max(log.max_task_id_, r.task_id);
    if (!is) throw std::runtime_error("TransitionLog: truncated file");
  }
  return log;
}

TransitionLog TransitionLog::filtered_zero_rewards(double keep_fraction,
                                                   RandomStream& rng) const {
  TransitionLog out;
  out.state_dim_ = state_dim_;
  out.feature_dim_ = feature_dim_;
  for (const auto& r : records_) {
    if (r.reward == 0.0 && !rng.bernoulli(keep_fraction)) continue;
    out.max_task_id_ = std::max(out.max_task_id_, r.task_id);
    out.records_.push_back(r);
  }
  return out;
}

}  // namespace xisf::learnfeat
