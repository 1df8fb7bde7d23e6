#pragma once

// The truncated poset R_d of nonempty clopen sets of depth <= d, ultrafilters
// on it represented by their limit points, the ⇘ relation, and the orbit
// coverage search that recovers ⇘ from group elements.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rubin/clopen.hpp"
#include "rubin/generators.hpp"
#include "rubin/homeo.hpp"

namespace rubin {

inline constexpr std::size_t kMaxPosetDepth = 8;
/// Largest depth at which R_d is listed element by element (2^16 - 1 sets).
inline constexpr std::size_t kMaxEnumeratedDepth = 4;

class PosetRd {
 public:
  /// Throws std::invalid_argument unless 1 <= depth <= kMaxPosetDepth.
  explicit PosetRd(std::size_t depth);

  std::size_t depth() const noexcept { return depth_; }
  bool enumerable() const noexcept { return depth_ <= kMaxEnumeratedDepth; }

  /// Nonempty and every canonical prefix has length <= depth.
  bool contains(const ClopenSet& u) const;
  bool leq(const ClopenSet& u, const ClopenSet& v) const { return includes(v, u); }

  /// Number of elements, 2^(2^d) - 1; only for enumerable depths.
  std::uint64_t size() const;
  /// All elements, sorted; throws std::length_error past kMaxEnumeratedDepth.
  const std::vector<ClopenSet>& elements() const;
  /// R_{<=v}: elements contained in v, sorted. Same size limit as elements().
  std::vector<ClopenSet> below(const ClopenSet& v) const;

  /// An element g with rsupp(g) = u: the child swap of every prefix of u.
  PrefixMap realizer(const ClopenSet& u) const;

 private:
  std::size_t depth_;
  std::vector<ClopenSet> elements_;
};

PosetRd build_poset(std::size_t depth);

/// The chain of cylinders [p_0..p_i] of a point for i = 0..depth. It generates
/// the ultrafilter of all basis sets containing the point.
struct UltrafilterChain {
  CanonicalPoint limit;
  std::size_t depth;
  std::vector<BinaryWord> chain;

  /// Membership of a basis set in the generated ultrafilter. Needs
  /// u.depth() <= depth.
  bool contains(const ClopenSet& u) const;
};

UltrafilterChain ultrafilter_chain(const CanonicalPoint& p, std::size_t depth);

/// The ultrafilter of basis sets containing p converges inside u iff p ∈ u.
bool converges_in(const CanonicalPoint& p, const ClopenSet& u);

struct SearrowProfile {
  std::size_t depth = 0;
  /// Hits are restricted to cylinders when depth exceeds kMaxEnumeratedDepth.
  bool cylinders_only = false;
  /// Sorted.
  std::vector<ClopenSet> hits;

  bool operator==(const SearrowProfile&) const = default;
};

/// {u ∈ R_d : F_p ⇘ u}.
SearrowProfile searrow_profile(const CanonicalPoint& p, std::size_t depth);
/// Every superset in R_d of a hit is a hit.
bool is_upward_closed(const SearrowProfile& profile);

struct CoverageWitness {
  /// Depth-d cylinder inside V reached by the point.
  BinaryWord cell;
  /// Localized generator names, applied left to right.
  std::vector<std::string> word;
  PrefixMap h;
  CanonicalPoint image;
};

struct CoverageResult {
  bool covered = false;
  /// The shortlex-first cylinder V ⊆ U whose R_{<=V} is covered.
  std::optional<BinaryWord> v;
  /// One witness per depth-d cylinder of V; every W in R_{<=V} contains one.
  std::vector<CoverageWitness> witnesses;
  std::size_t radius = 0;
  std::size_t depth = 0;
  std::size_t points_visited = 0;
  bool node_cap_hit = false;
};

/// Localized copies of every generator and inverse inside each canonical
/// cylinder of u; these generate a subgroup of G_u.
std::vector<NamedMap> localized_generators(const GeneratorSet& gens, const ClopenSet& u);

/// Searches the radius-bounded orbit of p under the localized generators for
/// a cylinder V ⊆ U (|V| <= d) such that every W ∈ R_{<=V} receives some h
/// in G_U with h(p) ∈ W. Each recorded h is recomposed and re-verified.
CoverageResult orbit_coverage(const CanonicalPoint& p, const ClopenSet& u, const GeneratorSet& gens,
                              std::size_t radius, std::size_t depth, std::size_t node_cap = 1'000'000);

}  // namespace rubin
