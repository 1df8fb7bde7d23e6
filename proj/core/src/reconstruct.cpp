#include "rubin/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rubin {

namespace {

// The image of F_p under g, restricted to R_d: {V : g^-1(V) ∈ F_p}, decided
// on the refined chain of p rather than by evaluating g(p).
std::vector<ClopenSet> pushed_profile(const PrefixMap& g_inv, const UltrafilterChain& chain,
                                      const SearrowProfile& shape) {
  std::vector<ClopenSet> family;
  if (shape.cylinders_only) {
    for (std::size_t len = 0; len <= shape.depth; ++len)
      for (const auto& w : words_of_length(len)) family.push_back(ClopenSet::cylinder(w));
  } else {
    family = PosetRd(shape.depth).elements();
  }
  std::vector<ClopenSet> hits;
  for (const auto& v : family)
    if (chain.contains(image_clopen(g_inv, v))) hits.push_back(v);
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace

ReconstructedSpace reconstruct(std::size_t depth, const GeneratorSet& gens) {
  const PosetRd poset(depth);
  ReconstructedSpace x;
  x.depth = depth;

  std::map<std::vector<ClopenSet>, std::size_t> class_of;
  bool upward = true;
  for (const auto& w : words_of_length(depth)) {
    CanonicalPoint rep(w, BinaryWord("0"));
    SearrowProfile prof = searrow_profile(rep, depth);
    upward = upward && is_upward_closed(prof);
    auto [it, fresh] = class_of.emplace(prof.hits, x.classes.size());
    if (fresh) x.classes.push_back(std::move(prof));
    x.point_map.push_back(it->second);
    x.representatives.push_back(std::move(rep));
  }

  const std::size_t cells = std::size_t{1} << depth;
  x.checks.push_back({"class_count", x.classes.size() == cells,
                      std::to_string(x.classes.size()) + " classes for " + std::to_string(cells) + " cylinders"});
  const std::set<std::size_t> distinct(x.point_map.begin(), x.point_map.end());
  x.checks.push_back({"point_map_bijective", distinct.size() == x.representatives.size() && distinct.size() == x.classes.size(),
                      "representatives map to pairwise distinct classes"});
  x.checks.push_back({"profiles_upward_closed", upward, "every profile is upward closed in R_d"});

  for (const auto& gen : gens.gens()) {
    x.generator_names.push_back(gen.name);
    const PrefixMap g_inv = inverse(gen.map);
    const std::size_t refined = depth + gen.map.max_cell_length();
    std::vector<std::size_t> table(x.classes.size(), 0);
    bool equivariant = true;
    bool resolved = true;
    for (std::size_t i = 0; i < x.representatives.size(); ++i) {
      const CanonicalPoint image = apply(gen.map, x.representatives[i]);
      const SearrowProfile direct = searrow_profile(image, depth);
      const auto pushed = pushed_profile(g_inv, ultrafilter_chain(x.representatives[i], refined), direct);
      equivariant = equivariant && pushed == direct.hits;
      auto it = class_of.find(direct.hits);
      if (it == class_of.end()) {
        resolved = false;
        continue;
      }
      table[x.point_map[i]] = it->second;
    }
    x.checks.push_back({"searrow_equivariance:" + gen.name, equivariant && resolved,
                        "profile of g(p) equals g applied to the profile of p (refined depth " +
                            std::to_string(refined) + ")"});
    std::vector<std::size_t> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    const bool perm = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    std::string detail = "class images:";
    for (std::size_t c : table) detail += " " + std::to_string(c);
    x.checks.push_back({"action_is_permutation:" + gen.name, perm, detail});
    x.action_table.push_back(std::move(table));
  }
  return x;
}

}  // namespace rubin
