#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rubin/homeo.hpp"

namespace rubin {

/// A named finite list of non-identity prefix maps.
class GeneratorSet {
 public:
  /// Throws std::invalid_argument if a generator is the identity or a name repeats.
  GeneratorSet(std::string name, std::vector<NamedMap> gens);

  /// Generators A, B, C, pi0 of Thompson's group V.
  static GeneratorSet v_standard();
  /// Parses an element-definition file.
  static GeneratorSet from_definitions(std::string name, std::string_view text);
  /// "v-standard" or a path to an element-definition file.
  static GeneratorSet load(const std::string& spec);

  const std::string& name() const noexcept { return name_; }
  const std::vector<NamedMap>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  /// Each generator followed by its inverse (inverses named "<g>^-1";
  /// involutions appear once).
  std::vector<NamedMap> symmetric() const;

 private:
  std::string name_;
  std::vector<NamedMap> gens_;
};

/// Text of the bundled element-definition file for v_standard().
std::string_view v_standard_definitions();

struct BallElement {
  PrefixMap element;
  /// Symbol names (from GeneratorSet::symmetric()), applied left to right:
  /// word {a, b} is the element b*a.
  std::vector<std::string> word;
};

/// Breadth-first word ball of the given radius over the symmetric generating
/// set, deduplicated by reduced table. The identity (empty word) comes first.
std::vector<BallElement> word_ball(const GeneratorSet& gens, unsigned radius,
                                   std::size_t max_elements = 200000,
                                   std::size_t budget = default_table_budget());

}  // namespace rubin
