#pragma once

#include <iosfwd>
#include <string>

#include "xisf/core.hpp"

namespace xisf::approx {

// Parameter snapshot: a short header plus one value per line, written with
// enough digits to round-trip exactly.
//
//   xisf-params 1
//   <descriptor>
//   init <scheme> seed <u64>
//   n <count>
//   <values...>
struct ParamSnapshot {
  std::string descriptor;
  std::string init_scheme = "none";
  std::uint64_t rng_seed = 0;
  Vec values;
};

void write_snapshot(std::ostream& os, const ParamSnapshot& snap);
ParamSnapshot read_snapshot(std::istream& is);

void save_snapshot_file(const std::string& path, const ParamSnapshot& snap);
ParamSnapshot load_snapshot_file(const std::string& path);

}  // namespace xisf::approx
