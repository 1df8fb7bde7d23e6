#include "rubin/poset.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "rubin/errors.hpp"

namespace rubin {

namespace {

// Plain lexicographic order; agrees with shortlex on words of equal length.
bool lex_less(const BinaryWord& a, const BinaryWord& b) { return a.bits() < b.bits(); }

const std::vector<ClopenSet>& enumerate_rd(std::size_t depth) {
  static std::array<std::vector<ClopenSet>, kMaxEnumeratedDepth + 1> cache;
  static std::array<std::once_flag, kMaxEnumeratedDepth + 1> once;
  std::call_once(once[depth], [depth] {
    const auto cells = words_of_length(depth);
    const std::uint64_t n = cells.size();
    auto& out = cache[depth];
    out.reserve((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<BinaryWord> chosen;
      for (std::uint64_t i = 0; i < n; ++i)
        if (mask >> i & 1U) chosen.push_back(cells[i]);
      out.emplace_back(std::move(chosen));
    }
    std::sort(out.begin(), out.end());
  });
  return cache[depth];
}

}  // namespace

PosetRd::PosetRd(std::size_t depth) : depth_(depth) {
  if (depth < 1 || depth > kMaxPosetDepth)
    throw std::invalid_argument("poset depth must be in 1.." + std::to_string(kMaxPosetDepth) + ", got " +
                                std::to_string(depth));
}

bool PosetRd::contains(const ClopenSet& u) const { return !u.is_empty() && u.depth() <= depth_; }

std::uint64_t PosetRd::size() const {
  if (!enumerable()) throw std::length_error("R_d is only counted up to depth " + std::to_string(kMaxEnumeratedDepth));
  return (std::uint64_t{1} << (std::uint64_t{1} << depth_)) - 1;
}

const std::vector<ClopenSet>& PosetRd::elements() const {
  if (!enumerable())
    throw std::length_error("R_d is only enumerated up to depth " + std::to_string(kMaxEnumeratedDepth));
  return enumerate_rd(depth_);
}

std::vector<ClopenSet> PosetRd::below(const ClopenSet& v) const {
  std::vector<ClopenSet> out;
  for (const auto& x : elements())
    if (includes(v, x)) out.push_back(x);
  return out;
}

PrefixMap PosetRd::realizer(const ClopenSet& u) const {
  if (!contains(u)) throw std::invalid_argument(u.to_string() + " is not an element of R_" + std::to_string(depth_));
  std::vector<Cell> cells;
  for (const auto& w : u.prefixes()) {
    cells.push_back({w.child('0'), w.child('1')});
    cells.push_back({w.child('1'), w.child('0')});
  }
  const ClopenSet others = set_complement(u);
  for (const auto& rest : others.prefixes()) cells.push_back({rest, rest});
  return PrefixMap(std::move(cells));
}

PosetRd build_poset(std::size_t depth) { return PosetRd(depth); }

bool UltrafilterChain::contains(const ClopenSet& u) const {
  if (u.depth() > depth)
    throw std::invalid_argument("chain of depth " + std::to_string(depth) + " cannot decide " + u.to_string());
  return includes(u, ClopenSet::cylinder(chain[u.depth()]));
}

UltrafilterChain ultrafilter_chain(const CanonicalPoint& p, std::size_t depth) {
  UltrafilterChain c{p, depth, {}};
  for (std::size_t i = 0; i <= depth; ++i) c.chain.push_back(p.expand(i));
  return c;
}

bool converges_in(const CanonicalPoint& p, const ClopenSet& u) { return point_in(p, u); }

SearrowProfile searrow_profile(const CanonicalPoint& p, std::size_t depth) {
  const PosetRd poset(depth);
  SearrowProfile prof;
  prof.depth = depth;
  if (poset.enumerable()) {
    for (const auto& u : poset.elements())
      if (converges_in(p, u)) prof.hits.push_back(u);
  } else {
    prof.cylinders_only = true;
    for (std::size_t i = 0; i <= depth; ++i) prof.hits.push_back(ClopenSet::cylinder(p.expand(i)));
    std::sort(prof.hits.begin(), prof.hits.end());
  }
  return prof;
}

bool is_upward_closed(const SearrowProfile& profile) {
  if (profile.hits.empty()) return false;
  const std::set<ClopenSet> hits(profile.hits.begin(), profile.hits.end());
  if (profile.cylinders_only) {
    for (const auto& u : profile.hits) {
      const BinaryWord& w = u.prefixes().front();
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!hits.contains(ClopenSet::cylinder(w.prefix(i)))) return false;
    }
    return true;
  }
  // In a finite Boolean lattice every superset is reached by adding one
  // atom at a time. Sets are encoded as bit masks over the depth-d cells.
  const auto cells = words_of_length(profile.depth);
  auto mask_of = [&](const ClopenSet& u) {
    std::uint64_t m = 0;
    for (const auto& w : cylinders_at_depth(u, profile.depth))
      m |= std::uint64_t{1} << (std::lower_bound(cells.begin(), cells.end(), w, lex_less) - cells.begin());
    return m;
  };
  std::vector<bool> present(std::size_t{1} << cells.size(), false);
  std::vector<std::uint64_t> masks;
  masks.reserve(profile.hits.size());
  for (const auto& u : profile.hits) {
    masks.push_back(mask_of(u));
    present[masks.back()] = true;
  }
  for (std::uint64_t m : masks)
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!present[m | std::uint64_t{1} << i]) return false;
  return true;
}

std::vector<NamedMap> localized_generators(const GeneratorSet& gens, const ClopenSet& u) {
  std::vector<NamedMap> out;
  const auto symbols = gens.symmetric();
  for (const auto& c : u.prefixes())
    for (const auto& s : symbols) out.push_back({s.name + "@" + c.to_string(), localize(s.map, c)});
  return out;
}

CoverageResult orbit_coverage(const CanonicalPoint& p, const ClopenSet& u, const GeneratorSet& gens,
                              std::size_t radius, std::size_t depth, std::size_t node_cap) {
  if (u.is_empty() || u.depth() > depth)
    throw std::invalid_argument(u.to_string() + " is not an element of R_" + std::to_string(depth));

  const auto local = localized_generators(gens, u);
  const auto cells = cylinders_at_depth(u, depth);

  std::vector<BinaryWord> candidates;
  for (const auto& pre : u.prefixes())
    for (std::size_t extra = 0; pre.size() + extra <= depth; ++extra)
      for (const auto& ext : words_of_length(extra)) candidates.push_back(pre + ext);
  std::sort(candidates.begin(), candidates.end());

  std::optional<BinaryWord> target;
  for (const auto& pre : u.prefixes())
    if (p.has_prefix(pre)) target = pre;

  struct Node {
    CanonicalPoint point;
    std::size_t parent;
    std::size_t symbol;
  };
  std::vector<Node> nodes{{p, 0, 0}};
  std::set<CanonicalPoint> visited{p};
  std::map<BinaryWord, std::size_t> reached;  // depth-d cell -> node index

  auto record = [&](std::size_t idx) {
    const BinaryWord cell = nodes[idx].point.expand(depth);
    if (point_in(nodes[idx].point, u)) reached.emplace(cell, idx);
  };
  auto covered = [&](const BinaryWord& v) {
    for (const auto& c : cells)
      if (v.is_prefix_of(c) && !reached.contains(c)) return false;
    return true;
  };

  CoverageResult result;
  result.radius = radius;
  result.depth = depth;
  record(0);

  std::size_t layer_begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    if (target && covered(*target)) break;
    const std::size_t layer_end = nodes.size();
    if (layer_begin == layer_end) break;
    for (std::size_t i = layer_begin; i < layer_end && !result.node_cap_hit; ++i) {
      for (std::size_t s = 0; s < local.size(); ++s) {
        CanonicalPoint q = apply(local[s].map, nodes[i].point);
        if (!visited.insert(q).second) continue;
        nodes.push_back({std::move(q), i, s});
        record(nodes.size() - 1);
        if (nodes.size() >= node_cap) {
          result.node_cap_hit = true;
          break;
        }
      }
    }
    layer_begin = layer_end;
    if (result.node_cap_hit) break;
  }
  result.points_visited = nodes.size();

  for (const auto& v : candidates) {
    if (!covered(v)) continue;
    result.covered = true;
    result.v = v;
    for (const auto& c : cells) {
      if (!v.is_prefix_of(c)) continue;
      std::vector<std::size_t> path;
      for (std::size_t idx = reached.at(c); idx != 0; idx = nodes[idx].parent) path.push_back(nodes[idx].symbol);
      std::reverse(path.begin(), path.end());
      CoverageWitness w{c, {}, PrefixMap::identity(), p};
      for (std::size_t s : path) {
        w.word.push_back(local[s].name);
        w.h = compose(local[s].map, w.h);
      }
      w.image = apply(w.h, p);
      if (!is_in_GU(w.h, u) || !w.image.has_prefix(c) || w.image != nodes[reached.at(c)].point)
        throw std::logic_error("orbit_coverage recomposed an invalid witness for cell " + c.to_string());
      result.witnesses.push_back(std::move(w));
    }
    break;
  }
  return result;
}

}  // namespace rubin
