#pragma once

// Exact combinatorics of the binary Cantor space {0,1}^ω.
//
// A finite binary word names the cylinder of all infinite sequences extending
// it. Clopen sets are finite unions of cylinders, kept in a canonical form
// (shortlex-sorted antichain with no sibling pair), so equality of clopen sets
// is equality of their prefix lists. Points are eventually periodic words u·v^∞.

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rubin {

class BinaryWord {
 public:
  BinaryWord() = default;
  /// Accepts "e" or "" for the empty word; throws parse_error on other symbols.
  explicit BinaryWord(std::string_view bits);

  static BinaryWord parse(std::string_view text) { return BinaryWord(text); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }
  const std::string& bits() const noexcept { return bits_; }

  bool is_prefix_of(const BinaryWord& other) const noexcept;
  bool comparable(const BinaryWord& other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  BinaryWord child(char bit) const;
  BinaryWord parent() const;
  BinaryWord sibling() const;
  BinaryWord prefix(std::size_t n) const;
  BinaryWord suffix_from(std::size_t n) const;

  BinaryWord operator+(const BinaryWord& rhs) const;

  /// "e" for the empty word, otherwise the bit string.
  std::string to_string() const { return bits_.empty() ? "e" : bits_; }

  bool operator==(const BinaryWord&) const = default;
  /// Shortlex: shorter words first, then lexicographic.
  std::strong_ordering operator<=>(const BinaryWord& rhs) const;

 private:
  std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

/// All 2^d words of length d in lexicographic order.
std::vector<BinaryWord> words_of_length(std::size_t d);

/// The eventually periodic point preperiod·period^∞ in canonical form.
class CanonicalPoint {
 public:
  /// Canonicalizes; throws std::invalid_argument on an empty period.
  CanonicalPoint(BinaryWord preperiod, BinaryWord period);

  const BinaryWord& preperiod() const noexcept { return preperiod_; }
  const BinaryWord& period() const noexcept { return period_; }

  /// Symbol at position i of the infinite expansion.
  char at(std::size_t i) const;
  /// First n symbols of the expansion.
  BinaryWord expand(std::size_t n) const;
  /// The point obtained by deleting the first n symbols.
  CanonicalPoint shift(std::size_t n) const;
  /// w·p.
  CanonicalPoint prepend(const BinaryWord& w) const;

  bool has_prefix(const BinaryWord& w) const;

  /// "u(v)" syntax, e.g. "01(10)" or "(0)".
  std::string to_string() const;
  static CanonicalPoint parse(std::string_view text);

  bool operator==(const CanonicalPoint&) const = default;
  auto operator<=>(const CanonicalPoint& rhs) const {
    if (auto c = preperiod_ <=> rhs.preperiod_; c != 0) return c;
    return period_ <=> rhs.period_;
  }

 private:
  BinaryWord preperiod_;
  BinaryWord period_;
};

CanonicalPoint canonicalize_point(const BinaryWord& preperiod, const BinaryWord& period);

std::ostream& operator<<(std::ostream& os, const CanonicalPoint& p);

class ClopenSet {
 public:
  /// The empty set.
  ClopenSet() = default;
  /// Normalizes an arbitrary finite family of cylinders to canonical form.
  explicit ClopenSet(std::vector<BinaryWord> prefixes);

  static ClopenSet empty_set() { return {}; }
  static ClopenSet whole() { return ClopenSet({BinaryWord()}); }
  static ClopenSet cylinder(const BinaryWord& w) { return ClopenSet({w}); }

  const std::vector<BinaryWord>& prefixes() const noexcept { return prefixes_; }
  bool is_empty() const noexcept { return prefixes_.empty(); }
  bool is_whole() const noexcept { return prefixes_.size() == 1 && prefixes_[0].empty(); }
  /// Length of the longest canonical prefix; 0 for ∅ and the whole space.
  std::size_t depth() const noexcept;

  /// "{00,1}", "{}" or "{e}".
  std::string to_string() const;
  static ClopenSet parse(std::string_view text);

  bool operator==(const ClopenSet&) const = default;
  auto operator<=>(const ClopenSet& rhs) const { return prefixes_ <=> rhs.prefixes_; }

 private:
  std::vector<BinaryWord> prefixes_;
};

std::ostream& operator<<(std::ostream& os, const ClopenSet& c);

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_complement(const ClopenSet& a);
ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b);
/// True iff b ⊆ a.
bool includes(const ClopenSet& a, const ClopenSet& b);
bool disjoint(const ClopenSet& a, const ClopenSet& b);

bool point_in(const CanonicalPoint& p, const ClopenSet& c);

/// Length-d words whose cylinders lie inside c. Throws std::invalid_argument
/// if c has a prefix longer than d.
std::vector<BinaryWord> cylinders_at_depth(const ClopenSet& c, std::size_t d);

}  // namespace rubin
