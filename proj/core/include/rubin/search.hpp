#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "rubin/clopen.hpp"

namespace rubin {

inline constexpr std::size_t kSearchDepthCap = 16;

/// Deepens uniformly through depths 1..cap and returns the shortlex-first
/// word w with [w] ⊆ region and pred(w). Throws search_exhausted (naming
/// `what`) at the cap.
BinaryWord find_cylinder(const ClopenSet& region, const std::function<bool(const BinaryWord&)>& pred,
                         const std::string& what, std::size_t cap = kSearchDepthCap);

}  // namespace rubin
