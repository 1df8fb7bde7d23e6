#pragma once

// Finite symmetric groups and the exhaustive algebraic-disjointness decision.
//
// Products compose right to left: (a*b)(x) = a(b(x)). The commutator is
// [a,b] = a b a^-1 b^-1 and conjugation is a^b = b^-1 a b, the same
// conventions as PrefixMap.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rubin {

class Perm {
 public:
  /// Identity of degree n.
  explicit Perm(std::size_t n = 1);
  /// From 0-based images; throws std::invalid_argument unless a bijection.
  static Perm from_images(std::vector<unsigned> images);
  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "id".
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  /// 0-based image of 0-based point x.
  unsigned operator()(unsigned x) const { return images_[x]; }
  const std::vector<unsigned>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// Cycle notation with 1-based points; "id" for the identity.
  std::string to_string() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<unsigned> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

Perm compose(const Perm& a, const Perm& b);
Perm operator*(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm commutator(const Perm& a, const Perm& b);
Perm conjugate(const Perm& a, const Perm& b);
Perm power(const Perm& a, long long k);
bool commutes(const Perm& a, const Perm& b);

/// 1-based moved points, ascending.
std::vector<unsigned> support(const Perm& g);

struct SymmetricGroup {
  std::size_t n;

  explicit SymmetricGroup(std::size_t degree);
  /// "S4" -> SymmetricGroup(4).
  static SymmetricGroup parse(std::string_view text);

  std::string name() const { return "S" + std::to_string(n); }
  /// All n! elements in lexicographic order of their image sequences.
  std::vector<Perm> elements() const;
};

/// Every x in G with x g = g x, in lexicographic order.
std::vector<Perm> centralizer(const Perm& g, const SymmetricGroup& group);

struct WitnessPair {
  Perm f1;
  Perm f2;
};

struct AlgDisjointReport {
  bool verdict = false;
  std::optional<Perm> counterexample_h;
  /// Ordered by h in lexicographic order; one entry per h with [f,h] != 1
  /// examined before the verdict was reached.
  std::vector<std::pair<Perm, WitnessPair>> witness_table;
};

/// Largest degree accepted by is_alg_disjoint.
inline constexpr std::size_t kMaxExhaustiveDegree = 7;

/// Decides whether g is algebraically disjoint from f in S_n: for every h with
/// [f,h] != 1 there are f1, f2 in C(g) with [f1,[f2,h]] nontrivial and in C(g).
/// Stops at the first h without a witness.
AlgDisjointReport is_alg_disjoint(const Perm& g, const Perm& f, const SymmetricGroup& group);

}  // namespace rubin
