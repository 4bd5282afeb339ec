#include "xisf/approx/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xisf::approx {

void write_snapshot(std::ostream& os, const ParamSnapshot& snap) {
  os << "xisf-params 1\n"
     << snap.descriptor << "\n"
     << "init " << snap.init_scheme << " seed " << snap.rng_seed << "\n"
     << "n " << snap.values.size() << "\n";
  os.precision(17);
  for (double v : snap.values) os << v << "\n";
}

ParamSnapshot read_snapshot(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "xisf-params 1")
    throw std::runtime_error("snapshot: bad magic");
  ParamSnapshot snap;
  if (!std::getline(is, snap.descriptor))
    throw std::runtime_error("snapshot: missing descriptor");
  std::string tag;
  is >> tag >> snap.init_scheme >> tag >> snap.rng_seed;
  std::size_t n = 0;
  is >> tag >> n;
  snap.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!(is >> snap.values[i]))
      throw std::runtime_error("snapshot: truncated values");
  return snap;
}

void save_snapshot_file(const std::string& path, const ParamSnapshot& snap) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("snapshot: cannot open " + path);
  write_snapshot(os, snap);
}

ParamSnapshot load_snapshot_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("snapshot: cannot open " + path);
  return read_snapshot(is);
}

}  // namespace xisf::approx
