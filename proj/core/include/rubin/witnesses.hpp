#pragma once

// Constructive witnesses for algebraic disjointness, the S_f description of
// G_U, infinite exponent of G_U and the inclusion criterion for G_U.
//
// Every construction re-checks its own postcondition with exact PrefixMap
// arithmetic before returning. Precondition failures raise hypothesis_error;
// a search that runs to its depth cap raises search_exhausted.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rubin/clopen.hpp"
#include "rubin/homeo.hpp"
#include "rubin/search.hpp"

namespace rubin {

/// supp(f) ∩ supp(g) = ∅. A nonempty clopen intersection always contains
/// points other than the finitely many exceptional fixed points, so this is
/// decided by the regular supports alone.
bool disjoint_supports(const PrefixMap& f, const PrefixMap& g);

struct F1F2Witness {
  PrefixMap f1;
  PrefixMap f2;
  ClopenSet v;  // ⊆ rsupp(f), h(v) ∩ v = ∅, rsupp(f2) ⊆ v
  ClopenSet w;  // ⊆ v, f2(w) ∩ w = ∅, rsupp(f1) ⊆ w
  PrefixMap result;  // [f1,[f2,h]]
};

/// For f, g with disjoint supports and h with [f,h] != 1, builds f1, f2
/// commuting with g such that [f1,[f2,h]] is nontrivial and commutes with g.
F1F2Witness construct_f1_f2(const PrefixMap& f, const PrefixMap& g, const PrefixMap& h,
                            std::size_t depth_cap = kSearchDepthCap);

struct RefuterCandidate {
  PrefixMap h;
  ClopenSet v;
  /// rsupp(f) ∩ hull(g^12).
  ClopenSet overlap;
  /// g^0(v), ..., g^4(v).
  std::vector<ClopenSet> translates;
};

/// For f, g with rsupp(f) ∩ supp(g^12) != ∅, returns h supported in a
/// cylinder V inside that overlap with f(V) ∩ V = ∅ and g^0(V)..g^4(V)
/// pairwise disjoint. This h is the element no f1, f2 can answer; the
/// impossibility itself is not decided here.
RefuterCandidate construct_refuter(const PrefixMap& f, const PrefixMap& g,
                                   std::size_t depth_cap = kSearchDepthCap);

struct MapPair {
  PrefixMap f1;
  PrefixMap f2;
};

struct ProbeEntry {
  PrefixMap h;
  std::optional<MapPair> witness;
  /// "pool", "construct_f1_f2", "flip_construction" or "none".
  std::string source;
};

struct ProbeReport {
  /// One entry per h in the pool with [f,h] != 1, in pool order.
  std::vector<ProbeEntry> entries;
  std::size_t commuting_skipped = 0;
  bool all_witnessed() const;
};

/// Bounded evidence for "g is algebraically disjoint from f": for each h in
/// h_pool with [f,h] != 1, looks for f1, f2 in witness_pool ∩ C(g) with
/// [f1,[f2,h]] nontrivial in C(g). When the pool has none and
/// use_constructors is set, falls back to construct_f1_f2 (disjoint
/// supports) or the first-digit-flip construction (f = g = flip).
ProbeReport bounded_alg_disjoint_probe(const PrefixMap& g, const PrefixMap& f, const std::vector<PrefixMap>& h_pool,
                                       const std::vector<PrefixMap>& witness_pool, bool use_constructors = true);

struct SfSample {
  PrefixMap g;
  PrefixMap g12;
};

/// `count` nontrivial twelfth powers g^12 with g supported off rsupp(f).
std::vector<SfSample> sample_Sf(const PrefixMap& f, std::size_t count, std::uint64_t seed);

struct SfMembership {
  /// h commutes with every sample.
  bool consistent = true;
  /// First sample whose g^12 does not commute with h.
  std::optional<SfSample> certificate;
  /// is_in_GU(h, rsupp(f)), computed directly.
  bool exact_in_GU = false;
};

SfMembership gU_membership_via_Sf(const PrefixMap& h, const PrefixMap& f, const std::vector<SfSample>& samples);

struct NoncommutingPower {
  PrefixMap g;
  PrefixMap g12;
  ClopenSet w;
};

/// For h outside G_{rsupp(f)}: g of order 5 supported in a cylinder W off
/// rsupp(f) with h(W) ∩ W = ∅, so g^12 is in S_f and does not commute with h.
NoncommutingPower construct_noncommuting_g12(const PrefixMap& h, const PrefixMap& f,
                                             std::size_t depth_cap = kSearchDepthCap);

/// An (n+1)-cycle of disjoint sub-cylinders of the shortlex-first prefix of u.
PrefixMap order_witness(const ClopenSet& u, unsigned n);

/// nullopt when u ⊆ v; otherwise a nontrivial element of G_u outside G_v.
std::optional<PrefixMap> gu_inclusion_witness(const ClopenSet& u, const ClopenSet& v);

}  // namespace rubin
