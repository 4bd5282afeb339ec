#include "xisf/agents/policy_library.hpp"

#include <cstdio>
#include <fstream>

#include "xisf/approx/serialize.hpp"

namespace xisf::agents {

void PolicyLibrary::save(const std::string& dir) const {
  std::ofstream manifest(dir + "/manifest.txt");
  if (!manifest)
    throw std::runtime_error("PolicyLibrary: cannot open " + dir);
  manifest << "entries " << entries_.size() << "\n";
  for (int i = 0; i < size(); ++i) {
    const PolicyEntry& e = entries_[i];
    manifest << "entry " << i << " dims " << e.value.size() << " reward "
             << (e.reward ? e.reward->descriptor() : "none") << "\n";
    for (std::size_t k = 0; k < e.value.size(); ++k) {
      char name[64];
      std::snprintf(name, sizeof(name), "entry_%03d_dim%zu.params", i, k);
      approx::ParamSnapshot snap;
      snap.descriptor = e.value[k]->descriptor();
      snap.values = e.value[k]->params_copy();
      approx::save_snapshot_file(dir + "/" + name, snap);
      manifest << "  " << name << "\n";
    }
  }
}

}  // namespace xisf::agents
