#pragma once

// Exact verification of the first-digit flip being algebraically disjoint
// from itself, one h at a time.

#include <string>
#include <vector>

#include "rubin/check.hpp"
#include "rubin/homeo.hpp"
#include "rubin/search.hpp"

namespace rubin {

struct AppendixReport {
  PrefixMap f;  // first-digit flip
  PrefixMap h;
  /// {s1^-1 s2 : s1, s2 ∈ {1, f, h, hf, fh, h^f}}, deduplicated.
  std::vector<PrefixMap> s_prime;
  BinaryWord u;
  PrefixMap k;   // child swap of [u]
  PrefixMap f2;  // k k^f
  PrefixMap commutator;  // [f,[f2,h]]
  PrefixMap eight_conjugates;
  PrefixMap four_conjugates;
  std::vector<Check> checks;

  bool passed() const { return all_pass(checks); }
};

/// Throws hypothesis_error if [f,h] = 1 and search_exhausted if no suitable
/// cylinder U is found by the depth cap.
AppendixReport appendix_verify(const PrefixMap& h, std::size_t depth_cap = kSearchDepthCap);

}  // namespace rubin
