#pragma once

#include <string>
#include <vector>

#include "xisf/oracle/checks.hpp"

namespace xisf::harness {

// Named bundles of tabular oracle checks over random instances; each
// returns one report line per instance. Suites: "contraction",
// "normalization", "equivalence", "indicator", "gpi-bound".
std::vector<oracle::CheckReport> run_oracle_suite(const std::string& name,
                                                  int instances,
                                                  std::uint64_t seed);

}  // namespace xisf::harness
