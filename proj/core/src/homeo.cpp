#include "rubin/homeo.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "rubin/errors.hpp"

namespace rubin {

namespace {
thread_local std::size_t tl_budget = kDefaultTableBudget;
}  // namespace

std::size_t default_table_budget() noexcept { return tl_budget; }

ScopedTableBudget::ScopedTableBudget(std::size_t budget) : saved_(tl_budget) { tl_budget = budget; }
ScopedTableBudget::~ScopedTableBudget() { tl_budget = saved_; }

namespace {

// Checks that the words are pairwise incomparable and cover the space.
void check_complete_code(std::vector<BinaryWord> words, const char* column) {
  std::sort(words.begin(), words.end(),
            [](const BinaryWord& a, const BinaryWord& b) { return a.bits() < b.bits(); });
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i - 1] == words[i])
      throw std::invalid_argument(std::string("duplicate ") + column + " " + words[i].to_string());
    if (words[i - 1].is_prefix_of(words[i]))
      throw std::invalid_argument(std::string(column) + " " + words[i - 1].to_string() + " is a prefix of " +
                                  words[i].to_string());
  }
  if (!ClopenSet(std::move(words)).is_whole())
    throw std::invalid_argument(std::string(column) + "s do not form a complete prefix code");
}

std::vector<Cell> reduce(const std::vector<Cell>& cells) {
  std::map<std::string, std::string> table;
  for (const auto& c : cells) table.emplace(c.source.bits(), c.target.bits());

  std::vector<std::string> work;
  work.reserve(table.size());
  for (const auto& [s, t] : table) work.push_back(s);
  while (!work.empty()) {
    std::string s = std::move(work.back());
    work.pop_back();
    if (s.empty()) continue;
    auto it = table.find(s);
    if (it == table.end()) continue;
    std::string sib = s;
    sib.back() = sib.back() == '0' ? '1' : '0';
    auto jt = table.find(sib);
    if (jt == table.end()) continue;
    const std::string& t = it->second;
    const std::string& u = jt->second;
    if (t.empty() || u.size() != t.size() || t.back() != s.back()) continue;
    if (u.compare(0, u.size() - 1, t, 0, t.size() - 1) != 0 || u.back() != sib.back()) continue;
    std::string parent_source = s.substr(0, s.size() - 1);
    std::string parent_target = t.substr(0, t.size() - 1);
    table.erase(it);
    table.erase(jt);
    table.emplace(parent_source, parent_target);
    work.push_back(std::move(parent_source));
  }

  std::vector<Cell> out;
  out.reserve(table.size());
  for (const auto& [s, t] : table) out.push_back({BinaryWord(s), BinaryWord(t)});
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.source < b.source; });
  return out;
}

// Source-indexed view of a table for prefix lookups.
class CellIndex {
 public:
  explicit CellIndex(const PrefixMap& g) {
    for (std::size_t i = 0; i < g.cells().size(); ++i) {
      by_source_.emplace(g.cells()[i].source.bits(), i);
      max_len_ = std::max(max_len_, g.cells()[i].source.size());
    }
    lex_ = g.cells();
    std::sort(lex_.begin(), lex_.end(),
              [](const Cell& a, const Cell& b) { return a.source.bits() < b.source.bits(); });
  }

  /// The cell whose source is a prefix of w, if any.
  const Cell* covering(const BinaryWord& w, const PrefixMap& g) const {
    const std::size_t limit = std::min(max_len_, w.size());
    for (std::size_t n = 0; n <= limit; ++n) {
      auto it = by_source_.find(w.bits().substr(0, n));
      if (it != by_source_.end()) return &g.cells()[it->second];
    }
    return nullptr;
  }

  /// Cells whose sources properly extend w (contiguous in lexicographic order).
  std::vector<const Cell*> below(const BinaryWord& w) const {
    std::vector<const Cell*> out;
    auto it = std::lower_bound(lex_.begin(), lex_.end(), w.bits(),
                               [](const Cell& c, const std::string& s) { return c.source.bits() < s; });
    for (; it != lex_.end() && w.is_prefix_of(it->source); ++it) out.push_back(&*it);
    return out;
  }

 private:
  std::unordered_map<std::string, std::size_t> by_source_;
  std::vector<Cell> lex_;
  std::size_t max_len_ = 0;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

Cell parse_cell(const std::string& line, int lineno) {
  const auto arrow = line.find("->");
  if (arrow == std::string::npos) throw parse_error("expected '<source> -> <target>', got '" + line + "'", lineno);
  const std::string src = trim(std::string_view(line).substr(0, arrow));
  const std::string dst = trim(std::string_view(line).substr(arrow + 2));
  if (src.empty() || dst.empty()) throw parse_error("missing word in '" + line + "'; use 'e' for the empty word", lineno);
  try {
    return {BinaryWord(src), BinaryWord(dst)};
  } catch (const parse_error& e) {
    throw parse_error(e.what(), lineno);
  }
}

}  // namespace

PrefixMap::PrefixMap() : cells_{{BinaryWord(), BinaryWord()}} {}

PrefixMap::PrefixMap(std::vector<Cell> cells) {
  if (cells.empty()) throw std::invalid_argument("a prefix map needs at least one cell");
  std::vector<BinaryWord> sources, targets;
  for (const auto& c : cells) {
    sources.push_back(c.source);
    targets.push_back(c.target);
  }
  check_complete_code(std::move(sources), "source");
  check_complete_code(std::move(targets), "target");
  cells_ = reduce(cells);
}

bool PrefixMap::is_identity() const noexcept {
  return cells_.size() == 1 && cells_[0].source.empty() && cells_[0].target.empty();
}

std::size_t PrefixMap::max_cell_length() const noexcept {
  std::size_t m = 0;
  for (const auto& c : cells_) m = std::max({m, c.source.size(), c.target.size()});
  return m;
}

std::string PrefixMap::to_string() const {
  if (is_identity()) return "id";
  std::string s;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) s += ',';
    s += cells_[i].source.to_string() + "->" + cells_[i].target.to_string();
  }
  return s;
}

PrefixMap PrefixMap::parse_inline(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';' || c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  std::erase_if(lines, [](const std::string& l) { return trim(l).empty(); });
  return parse_table(lines);
}

PrefixMap parse_table(const std::vector<std::string>& lines, int first_line) {
  if (lines.empty()) throw parse_error("empty table", first_line);
  if (lines.size() == 1 && trim(lines[0]) == "id") return PrefixMap::identity();
  std::vector<Cell> cells;
  std::map<std::string, int> seen_sources;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = first_line + static_cast<int>(i);
    const std::string line = trim(lines[i]);
    if (line == "id") throw parse_error("'id' must be the only line of a table", lineno);
    Cell c = parse_cell(line, lineno);
    if (auto [it, fresh] = seen_sources.emplace(c.source.bits(), lineno); !fresh)
      throw parse_error("duplicate source " + c.source.to_string() + " (first at line " + std::to_string(it->second) + ")",
                        lineno);
    cells.push_back(std::move(c));
  }
  try {
    return PrefixMap(std::move(cells));
  } catch (const parse_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), first_line);
  }
}

std::vector<NamedMap> parse_definitions(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  std::vector<NamedMap> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line.front() == '#') {
      ++i;
      continue;
    }
    const int header_line = static_cast<int>(i) + 1;
    if (!line.starts_with("map ") && !line.starts_with("map\t"))
      throw parse_error("expected 'map <name>', got '" + line + "'", header_line);
    const std::string name = trim(std::string_view(line).substr(4));
    if (name.empty() || name.find_first_of(" \t") != std::string::npos)
      throw parse_error("bad element name '" + name + "'", header_line);
    for (const auto& m : out)
      if (m.name == name) throw parse_error("duplicate element name '" + name + "'", header_line);
    ++i;
    std::vector<std::string> body;
    const int body_line = static_cast<int>(i) + 1;
    while (i < lines.size() && !trim(lines[i]).empty()) {
      if (trim(lines[i]).front() != '#') body.push_back(lines[i]);
      ++i;
    }
    if (body.empty()) throw parse_error("element '" + name + "' has no table", header_line);
    out.push_back({name, parse_table(body, body_line)});
  }
  return out;
}

std::string format_definition(const NamedMap& m) {
  std::string s = "map " + m.name + "\n";
  if (m.map.is_identity()) {
    s += "id\n";
  } else {
    for (const auto& c : m.map.cells()) s += c.source.to_string() + " -> " + c.target.to_string() + "\n";
  }
  return s + "\n";
}

std::ostream& operator<<(std::ostream& os, const PrefixMap& g) { return os << g.to_string(); }

PrefixMap compose(const PrefixMap& a, const PrefixMap& b, std::size_t budget) {
  const CellIndex index(a);
  std::vector<Cell> out;
  for (const auto& cb : b.cells()) {
    if (const Cell* ca = index.covering(cb.target, a)) {
      out.push_back({cb.source, ca->target + cb.target.suffix_from(ca->source.size())});
    } else {
      for (const Cell* ca : index.below(cb.target))
        out.push_back({cb.source + ca->source.suffix_from(cb.target.size()), ca->target});
    }
    if (out.size() > 4 * budget)
      throw budget_exceeded("composition exceeded the table budget of " + std::to_string(budget) + " cells",
                            static_cast<long long>(budget));
  }
  PrefixMap result(std::move(out));
  if (result.size() > budget)
    throw budget_exceeded("composition exceeded the table budget of " + std::to_string(budget) + " cells",
                          static_cast<long long>(budget));
  return result;
}

PrefixMap operator*(const PrefixMap& a, const PrefixMap& b) { return compose(a, b); }

PrefixMap inverse(const PrefixMap& a) {
  std::vector<Cell> cells;
  cells.reserve(a.size());
  for (const auto& c : a.cells()) cells.push_back({c.target, c.source});
  return PrefixMap(std::move(cells));
}

PrefixMap commutator(const PrefixMap& a, const PrefixMap& b, std::size_t budget) {
  const PrefixMap ab = compose(a, b, budget);
  const PrefixMap ba = compose(b, a, budget);
  return compose(ab, inverse(ba), budget);
}

PrefixMap conjugate(const PrefixMap& a, const PrefixMap& b, std::size_t budget) {
  return compose(inverse(b), compose(a, b, budget), budget);
}

PrefixMap power(const PrefixMap& a, long long k, std::size_t budget) {
  PrefixMap base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  PrefixMap result;
  while (e) {
    if (e & 1U) result = compose(result, base, budget);
    e >>= 1U;
    if (e) base = compose(base, base, budget);
  }
  return result;
}

bool commutes(const PrefixMap& a, const PrefixMap& b, std::size_t budget) {
  return compose(a, b, budget) == compose(b, a, budget);
}

CanonicalPoint apply(const PrefixMap& g, const CanonicalPoint& p) {
  for (const auto& c : g.cells())
    if (p.has_prefix(c.source)) return p.shift(c.source.size()).prepend(c.target);
  throw std::logic_error("prefix map sources are not a complete code");
}

ClopenSet image_clopen(const PrefixMap& g, const ClopenSet& c) {
  std::vector<BinaryWord> out;
  for (const auto& w : c.prefixes())
    for (const auto& cell : g.cells()) {
      if (cell.source.is_prefix_of(w))
        out.push_back(cell.target + w.suffix_from(cell.source.size()));
      else if (w.is_prefix_of(cell.source))
        out.push_back(cell.target);
    }
  return ClopenSet(std::move(out));
}

bool is_identity_on(const PrefixMap& g, const ClopenSet& c) {
  for (const auto& w : c.prefixes())
    for (const auto& cell : g.cells())
      if (cell.source.comparable(w) && cell.source != cell.target) return false;
  return true;
}

SupportDescription support(const PrefixMap& g) {
  std::vector<BinaryWord> moved;
  std::vector<CanonicalPoint> fixed;
  for (const auto& c : g.cells()) {
    if (c.source == c.target) continue;
    moved.push_back(c.source);
    // u·x -> u·s·x fixes exactly x = s^∞; likewise for u = v·s.
    if (c.source.is_prefix_of(c.target))
      fixed.emplace_back(c.source, c.target.suffix_from(c.source.size()));
    else if (c.target.is_prefix_of(c.source))
      fixed.emplace_back(c.source, c.source.suffix_from(c.target.size()));
  }
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  return {ClopenSet(std::move(moved)), std::move(fixed)};
}

ClopenSet rsupp(const PrefixMap& g) { return support(g).hull; }

bool is_in_GU(const PrefixMap& g, const ClopenSet& u) { return includes(u, rsupp(g)); }

std::optional<unsigned> order_bounded(const PrefixMap& g, unsigned bound, std::size_t budget) {
  if (bound < 1) throw std::invalid_argument("order bound must be at least 1");
  PrefixMap p = g;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    if (k < bound) p = compose(p, g, budget);
  }
  return std::nullopt;
}

PrefixMap first_digit_flip() {
  return PrefixMap({{BinaryWord("0"), BinaryWord("1")}, {BinaryWord("1"), BinaryWord("0")}});
}

PrefixMap child_swap(const BinaryWord& w) {
  std::vector<Cell> cells{{w.child('0'), w.child('1')}, {w.child('1'), w.child('0')}};
  const ClopenSet others = set_complement(ClopenSet::cylinder(w));
  for (const auto& rest : others.prefixes()) cells.push_back({rest, rest});
  return PrefixMap(std::move(cells));
}

PrefixMap cylinder_cycle(const std::vector<BinaryWord>& cylinders) {
  for (std::size_t i = 0; i < cylinders.size(); ++i)
    for (std::size_t j = i + 1; j < cylinders.size(); ++j)
      if (cylinders[i].comparable(cylinders[j]))
        throw std::invalid_argument("cycle cylinders " + cylinders[i].to_string() + " and " +
                                    cylinders[j].to_string() + " overlap");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < cylinders.size(); ++i)
    cells.push_back({cylinders[i], cylinders[(i + 1) % cylinders.size()]});
  const ClopenSet others = set_complement(ClopenSet(cylinders));
  for (const auto& rest : others.prefixes()) cells.push_back({rest, rest});
  return PrefixMap(std::move(cells));
}

PrefixMap localize(const PrefixMap& g, const BinaryWord& c) {
  std::vector<Cell> cells;
  for (const auto& cell : g.cells()) cells.push_back({c + cell.source, c + cell.target});
  const ClopenSet others = set_complement(ClopenSet::cylinder(c));
  for (const auto& rest : others.prefixes()) cells.push_back({rest, rest});
  return PrefixMap(std::move(cells));
}

}  // namespace rubin

std::size_t std::hash<rubin::PrefixMap>::operator()(const rubin::PrefixMap& g) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& c : g.cells()) {
    h ^= std::hash<std::string>{}(c.source.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.target.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
