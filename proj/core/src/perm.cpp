#include "rubin/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "rubin/errors.hpp"

namespace rubin {

Perm::Perm(std::size_t n) : images_(n) {
  if (n == 0) throw std::invalid_argument("permutation degree must be at least 1");
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<unsigned>(i);
}

Perm Perm::from_images(std::vector<unsigned> images) {
  if (images.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  for (unsigned x : images) {
    if (x >= images.size() || seen[x]) throw std::invalid_argument("images do not form a bijection");
    seen[x] = true;
  }
  Perm p(images.size());
  p.images_ = std::move(images);
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  Perm p(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  skip_ws();
  if (text.substr(i) == "id") return p;
  if (i == text.size()) throw parse_error("empty permutation; write 'id' for the identity");

  // Cycles are applied right to left: (1 2)(2 3) = (1 2) after (2 3).
  std::vector<std::vector<unsigned>> cycles;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation: '" + std::string(text) + "'");
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw parse_error("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("unexpected character '" + std::string(1, text[i]) + "' in cycle notation");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1'000'000) throw parse_error("point out of range");
        ++i;
      }
      if (v < 1 || v > degree)
        throw parse_error("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end())
        throw parse_error("repeated point " + std::to_string(v) + " in a cycle");
      cycle.push_back(static_cast<unsigned>(v - 1));
    }
    cycles.push_back(std::move(cycle));
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Perm c(degree);
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) c.images_[cyc[k]] = cyc[(k + 1) % cyc.size()];
    p = compose(c, p);
  }
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    unsigned x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x + 1);
      done[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

namespace {

void check_degree(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

}  // namespace

Perm compose(const Perm& a, const Perm& b) {
  check_degree(a, b);
  std::vector<unsigned> img(a.degree());
  for (unsigned x = 0; x < img.size(); ++x) img[x] = a(b(x));
  return Perm::from_images(std::move(img));
}

Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

Perm inverse(const Perm& a) {
  std::vector<unsigned> img(a.degree());
  for (unsigned x = 0; x < img.size(); ++x) img[a(x)] = x;
  return Perm::from_images(std::move(img));
}

Perm commutator(const Perm& a, const Perm& b) { return a * b * inverse(a) * inverse(b); }

Perm conjugate(const Perm& a, const Perm& b) { return inverse(b) * a * b; }

Perm power(const Perm& a, long long k) {
  Perm base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Perm result(a.degree());
  while (e) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool commutes(const Perm& a, const Perm& b) { return a * b == b * a; }

std::vector<unsigned> support(const Perm& g) {
  std::vector<unsigned> moved;
  for (unsigned x = 0; x < g.degree(); ++x)
    if (g(x) != x) moved.push_back(x + 1);
  return moved;
}

SymmetricGroup::SymmetricGroup(std::size_t degree) : n(degree) {
  if (n < 1) throw std::invalid_argument("symmetric group degree must be at least 1");
}

SymmetricGroup SymmetricGroup::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'S' && text[0] != 's'))
    throw parse_error("group must be named S<n>, got '" + std::string(text) + "'");
  std::size_t n = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw parse_error("bad group name '" + std::string(text) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > 64) throw parse_error("group degree too large in '" + std::string(text) + "'");
  }
  if (n < 1) throw parse_error("group degree must be at least 1");
  return SymmetricGroup(n);
}

std::vector<Perm> SymmetricGroup::elements() const {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Perm> centralizer(const Perm& g, const SymmetricGroup& group) {
  if (g.degree() != group.n) throw std::invalid_argument("element degree does not match group " + group.name());
  std::vector<Perm> out;
  for (auto& x : group.elements())
    if (commutes(x, g)) out.push_back(std::move(x));
  return out;
}

AlgDisjointReport is_alg_disjoint(const Perm& g, const Perm& f, const SymmetricGroup& group) {
  if (g.degree() != group.n || f.degree() != group.n)
    throw std::invalid_argument("element degree does not match group " + group.name());
  if (group.n > kMaxExhaustiveDegree)
    throw std::invalid_argument("exhaustive decision is capped at degree " + std::to_string(kMaxExhaustiveDegree));

  const auto cent = centralizer(g, group);
  AlgDisjointReport report;
  for (const auto& h : group.elements()) {
    if (commutator(f, h).is_identity()) continue;
    std::optional<WitnessPair> found;
    for (const auto& f2 : cent) {
      const Perm k = commutator(f2, h);
      for (const auto& f1 : cent) {
        const Perm c = commutator(f1, k);
        if (!c.is_identity() && commutes(c, g)) {
          found = WitnessPair{f1, f2};
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      report.verdict = false;
      report.counterexample_h = h;
      return report;
    }
    report.witness_table.emplace_back(h, *found);
  }
  report.verdict = true;
  return report;
}

}  // namespace rubin
