#pragma once

// Seeded random objects. Every generator takes the engine by reference so
// callers control reproducibility; nothing here reads OS entropy.

#include <cstddef>
#include <random>
#include <vector>

#include "rubin/clopen.hpp"
#include "rubin/homeo.hpp"

namespace rubin {

using Rng = std::mt19937_64;

/// A complete prefix code under root with `leaves` words, grown by splitting
/// uniformly chosen leaves. Sorted shortlex.
std::vector<BinaryWord> random_complete_code(Rng& rng, const BinaryWord& root, std::size_t leaves);

/// A random element supported in a random cylinder of u (extended by up to
/// `extra_depth` bits), built from two random codes of 2..max_leaves words
/// matched by a random bijection. May reduce to the identity.
PrefixMap random_element_in(Rng& rng, const ClopenSet& u, std::size_t max_leaves = 5, std::size_t extra_depth = 2);

/// random_element_in over the whole space.
PrefixMap random_element(Rng& rng, std::size_t max_leaves = 5);

/// Random nonempty clopen set whose canonical prefixes have length <= depth.
ClopenSet random_clopen(Rng& rng, std::size_t depth);

/// Random eventually periodic point with bounded preperiod and period lengths.
CanonicalPoint random_point(Rng& rng, std::size_t max_preperiod = 4, std::size_t max_period = 3);

}  // namespace rubin
