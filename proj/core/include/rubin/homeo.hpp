#pragma once

// Prefix-exchange homeomorphisms of {0,1}^ω.
//
// A PrefixMap is a table of cells (u_i -> v_i) whose sources and targets are
// both complete prefix codes; it sends u_i·w to v_i·w. Tables are always kept
// reduced (no pair of cells (u0->v0),(u1->v1) left unmerged) and sorted by
// source in shortlex order. The reduced table of a homeomorphism is unique,
// so equality is structural.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rubin/clopen.hpp"

namespace rubin {

inline constexpr std::size_t kDefaultTableBudget = 4096;

/// Budget used by table operations when none is passed explicitly. It is
/// per thread and starts at kDefaultTableBudget.
std::size_t default_table_budget() noexcept;

/// Sets the calling thread's default budget for its lifetime.
class ScopedTableBudget {
 public:
  explicit ScopedTableBudget(std::size_t budget);
  ~ScopedTableBudget();
  ScopedTableBudget(const ScopedTableBudget&) = delete;
  ScopedTableBudget& operator=(const ScopedTableBudget&) = delete;

 private:
  std::size_t saved_;
};

struct Cell {
  BinaryWord source;
  BinaryWord target;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

class PrefixMap {
 public:
  /// The identity map {e -> e}.
  PrefixMap();
  /// Validates and reduces. Throws std::invalid_argument if either column is
  /// not a complete prefix code or a source repeats.
  explicit PrefixMap(std::vector<Cell> cells);

  static PrefixMap identity() { return {}; }

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool is_identity() const noexcept;
  /// Longest source or target word in the table.
  std::size_t max_cell_length() const noexcept;

  /// Compact single-line form "00->0,01->10,1->11" ("id" for the identity).
  std::string to_string() const;
  /// Inverse of to_string(); also accepts whitespace and ';' separators.
  static PrefixMap parse_inline(std::string_view text);

  bool operator==(const PrefixMap&) const = default;
  auto operator<=>(const PrefixMap&) const = default;

 private:
  std::vector<Cell> cells_;
};

/// Builds a PrefixMap from table lines "<source> -> <target>" or a single
/// "id". Errors carry 1-based line numbers relative to first_line.
PrefixMap parse_table(const std::vector<std::string>& lines, int first_line = 1);

struct NamedMap {
  std::string name;
  PrefixMap map;
};

/// Element-definition file: blocks "map <name>" followed by table lines,
/// terminated by a blank line or end of input. '#' starts a comment line.
std::vector<NamedMap> parse_definitions(std::string_view text);
/// One block in reduced sorted form, terminated by a blank line.
std::string format_definition(const NamedMap& m);

std::ostream& operator<<(std::ostream& os, const PrefixMap& g);

/// a after b: (a*b)(x) = a(b(x)).
PrefixMap compose(const PrefixMap& a, const PrefixMap& b, std::size_t budget = default_table_budget());
PrefixMap operator*(const PrefixMap& a, const PrefixMap& b);
PrefixMap inverse(const PrefixMap& a);
/// [a,b] = a b a^-1 b^-1.
PrefixMap commutator(const PrefixMap& a, const PrefixMap& b, std::size_t budget = default_table_budget());
/// a^b = b^-1 a b.
PrefixMap conjugate(const PrefixMap& a, const PrefixMap& b, std::size_t budget = default_table_budget());
/// Repeated squaring; negative exponents use the inverse.
PrefixMap power(const PrefixMap& a, long long k, std::size_t budget = default_table_budget());
bool commutes(const PrefixMap& a, const PrefixMap& b, std::size_t budget = default_table_budget());

CanonicalPoint apply(const PrefixMap& g, const CanonicalPoint& p);
ClopenSet image_clopen(const PrefixMap& g, const ClopenSet& c);
/// True iff g fixes every point of c.
bool is_identity_on(const PrefixMap& g, const ClopenSet& c);

struct SupportDescription {
  /// Union of the sources of non-identity cells.
  ClopenSet hull;
  /// Fixed points inside hull, one per cell whose source and target are
  /// comparable and distinct; sorted.
  std::vector<CanonicalPoint> exceptional_fixed_points;
};

SupportDescription support(const PrefixMap& g);
/// Interior of the closure of the support; equals support(g).hull.
ClopenSet rsupp(const PrefixMap& g);
/// True iff supp(g) ⊆ u.
bool is_in_GU(const PrefixMap& g, const ClopenSet& u);

/// Smallest k <= bound with g^k = 1, or nullopt.
std::optional<unsigned> order_bounded(const PrefixMap& g, unsigned bound,
                                      std::size_t budget = default_table_budget());

// Basic elements.

/// Switches the first digit: {0->1, 1->0}.
PrefixMap first_digit_flip();
/// Swaps the two children of [w]: w0·x <-> w1·x, identity elsewhere.
PrefixMap child_swap(const BinaryWord& w);
/// Cycles pairwise disjoint cylinders c0 -> c1 -> ... -> c0 by prefix
/// replacement, identity elsewhere. Throws if the cylinders overlap.
PrefixMap cylinder_cycle(const std::vector<BinaryWord>& cylinders);
/// The copy of g acting inside [c]: c·x -> c·g(x), identity off [c].
PrefixMap localize(const PrefixMap& g, const BinaryWord& c);

}  // namespace rubin

template <>
struct std::hash<rubin::PrefixMap> {
  std::size_t operator()(const rubin::PrefixMap& g) const noexcept;
};
