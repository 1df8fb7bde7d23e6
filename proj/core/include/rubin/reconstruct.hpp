#pragma once

// Reconstruction of the space as ⇘-equivalence classes of ultrafilters on
// R_d, together with the induced generator action.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rubin/check.hpp"
#include "rubin/generators.hpp"
#include "rubin/poset.hpp"

namespace rubin {

struct ReconstructedSpace {
  std::size_t depth = 0;
  std::vector<SearrowProfile> classes;
  /// One representative per depth-d cylinder (the point w·0^∞), in
  /// lexicographic order of w.
  std::vector<CanonicalPoint> representatives;
  /// representative index -> class index.
  std::vector<std::size_t> point_map;
  /// Per generator: class i -> class of g(representative of class i).
  std::vector<std::vector<std::size_t>> action_table;
  std::vector<std::string> generator_names;
  std::vector<Check> checks;

  bool passed() const { return all_pass(checks); }
};

/// Groups the representatives by searrow profile and builds the generator
/// action. Checks: class count and bijection with depth-d cylinders, upward
/// closure of every profile, equivariance of ⇘ (the profile of g(p) equals
/// the image of the profile of p, computed from the refined ultrafilter
/// chain of p and image_clopen), and that each generator permutes classes.
ReconstructedSpace reconstruct(std::size_t depth, const GeneratorSet& gens);

}  // namespace rubin
