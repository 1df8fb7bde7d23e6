#include "rubin/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace rubin {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

BinaryWord random_word(Rng& rng, std::size_t len) {
  std::string s(len, '0');
  for (auto& c : s) c = uniform(rng, 0, 1) ? '1' : '0';
  return BinaryWord(s);
}

}  // namespace

std::vector<BinaryWord> random_complete_code(Rng& rng, const BinaryWord& root, std::size_t leaves) {
  if (leaves == 0) throw std::invalid_argument("a complete code has at least one word");
  std::vector<BinaryWord> code{root};
  while (code.size() < leaves) {
    const std::size_t i = uniform(rng, 0, code.size() - 1);
    BinaryWord w = code[i];
    code[i] = w.child('0');
    code.push_back(w.child('1'));
  }
  std::sort(code.begin(), code.end());
  return code;
}

PrefixMap random_element_in(Rng& rng, const ClopenSet& u, std::size_t max_leaves, std::size_t extra_depth) {
  if (u.is_empty()) throw std::invalid_argument("cannot sample an element supported in the empty set");
  if (max_leaves < 2) throw std::invalid_argument("max_leaves must be at least 2");
  const auto& prefixes = u.prefixes();
  const BinaryWord root = prefixes[uniform(rng, 0, prefixes.size() - 1)] + random_word(rng, uniform(rng, 0, extra_depth));
  const std::size_t m = uniform(rng, 2, max_leaves);
  const auto sources = random_complete_code(rng, root, m);
  auto targets = random_complete_code(rng, root, m);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < m; ++i) cells.push_back({sources[i], targets[i]});
  const ClopenSet others = set_complement(ClopenSet::cylinder(root));
  for (const auto& rest : others.prefixes()) cells.push_back({rest, rest});
  return PrefixMap(std::move(cells));
}

PrefixMap random_element(Rng& rng, std::size_t max_leaves) {
  return random_element_in(rng, ClopenSet::whole(), max_leaves, 0);
}

ClopenSet random_clopen(Rng& rng, std::size_t depth) {
  const auto cells = words_of_length(depth);
  while (true) {
    std::vector<BinaryWord> chosen;
    for (const auto& w : cells)
      if (uniform(rng, 0, 1)) chosen.push_back(w);
    if (!chosen.empty()) return ClopenSet(std::move(chosen));
  }
}

CanonicalPoint random_point(Rng& rng, std::size_t max_preperiod, std::size_t max_period) {
  const BinaryWord pre = random_word(rng, uniform(rng, 0, max_preperiod));
  const BinaryWord per = random_word(rng, uniform(rng, 1, std::max<std::size_t>(1, max_period)));
  return CanonicalPoint(pre, per);
}

}  // namespace rubin
