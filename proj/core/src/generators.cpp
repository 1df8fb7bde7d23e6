#include "rubin/generators.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "rubin/errors.hpp"

namespace rubin {

namespace {

constexpr std::string_view kVStandard =
    "# Generators of Thompson's group V (Cannon, Floyd and Parry).\n"
    "map A\n"
    "0 -> 00\n"
    "10 -> 01\n"
    "11 -> 1\n"
    "\n"
    "map B\n"
    "0 -> 0\n"
    "10 -> 100\n"
    "110 -> 101\n"
    "111 -> 11\n"
    "\n"
    "map C\n"
    "0 -> 11\n"
    "10 -> 0\n"
    "11 -> 10\n"
    "\n"
    "map pi0\n"
    "0 -> 10\n"
    "10 -> 0\n"
    "11 -> 11\n"
    "\n";

}  // namespace

std::string_view v_standard_definitions() { return kVStandard; }

GeneratorSet::GeneratorSet(std::string name, std::vector<NamedMap> gens)
    : name_(std::move(name)), gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].map.is_identity())
      throw std::invalid_argument("generator '" + gens_[i].name + "' is the identity");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].name == gens_[i].name)
        throw std::invalid_argument("duplicate generator name '" + gens_[i].name + "'");
  }
}

GeneratorSet GeneratorSet::v_standard() { return from_definitions("v-standard", kVStandard); }

GeneratorSet GeneratorSet::from_definitions(std::string name, std::string_view text) {
  return GeneratorSet(std::move(name), parse_definitions(text));
}

GeneratorSet GeneratorSet::load(const std::string& spec) {
  if (spec == "v-standard") return v_standard();
  std::ifstream in(spec);
  if (!in) throw parse_error("cannot open generator file '" + spec + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_definitions(spec, ss.str());
}

std::vector<NamedMap> GeneratorSet::symmetric() const {
  std::vector<NamedMap> out;
  for (const auto& g : gens_) {
    out.push_back(g);
    PrefixMap inv = inverse(g.map);
    if (inv != g.map) out.push_back({g.name + "^-1", std::move(inv)});
  }
  return out;
}

std::vector<BallElement> word_ball(const GeneratorSet& gens, unsigned radius, std::size_t max_elements,
                                   std::size_t budget) {
  const auto symbols = gens.symmetric();
  std::vector<BallElement> ball{{PrefixMap::identity(), {}}};
  std::unordered_set<PrefixMap> seen{PrefixMap::identity()};
  std::size_t layer_begin = 0;
  for (unsigned r = 0; r < radius; ++r) {
    const std::size_t layer_end = ball.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : symbols) {
        PrefixMap next = compose(s.map, ball[i].element, budget);
        if (!seen.insert(next).second) continue;
        if (ball.size() >= max_elements)
          throw search_exhausted("word ball exceeded " + std::to_string(max_elements) + " elements", "max_elements",
                                 static_cast<long long>(max_elements));
        auto word = ball[i].word;
        word.push_back(s.name);
        ball.push_back({std::move(next), std::move(word)});
      }
    }
    layer_begin = layer_end;
  }
  return ball;
}

}  // namespace rubin
