#include "rubin/search.hpp"

#include <algorithm>

#include "rubin/errors.hpp"

namespace rubin {

BinaryWord find_cylinder(const ClopenSet& region, const std::function<bool(const BinaryWord&)>& pred,
                         const std::string& what, std::size_t cap) {
  for (std::size_t d = 1; d <= cap; ++d) {
    std::vector<BinaryWord> candidates;
    for (const auto& p : region.prefixes()) {
      if (p.size() > d) continue;
      for (const auto& ext : words_of_length(d - p.size())) candidates.push_back(p + ext);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& w : candidates)
      if (pred(w)) return w;
  }
  throw search_exhausted("no cylinder found for " + what + " up to depth " + std::to_string(cap), "depth_cap",
                         static_cast<long long>(cap));
}

}  // namespace rubin
