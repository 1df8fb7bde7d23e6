#include "rubin/clopen.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rubin/errors.hpp"

namespace rubin {

BinaryWord::BinaryWord(std::string_view bits) {
  if (bits == "e") return;
  for (char c : bits) {
    if (c != '0' && c != '1') throw parse_error("non-binary symbol '" + std::string(1, c) + "' in word");
  }
  bits_.assign(bits);
}

bool BinaryWord::is_prefix_of(const BinaryWord& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

BinaryWord BinaryWord::child(char bit) const {
  BinaryWord w = *this;
  w.bits_.push_back(bit);
  return w;
}

BinaryWord BinaryWord::parent() const {
  if (bits_.empty()) throw std::logic_error("the empty word has no parent");
  BinaryWord w = *this;
  w.bits_.pop_back();
  return w;
}

BinaryWord BinaryWord::sibling() const {
  if (bits_.empty()) throw std::logic_error("the empty word has no sibling");
  BinaryWord w = *this;
  w.bits_.back() = w.bits_.back() == '0' ? '1' : '0';
  return w;
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  BinaryWord w;
  w.bits_ = bits_.substr(0, n);
  return w;
}

BinaryWord BinaryWord::suffix_from(std::size_t n) const {
  BinaryWord w;
  if (n < bits_.size()) w.bits_ = bits_.substr(n);
  return w;
}

BinaryWord BinaryWord::operator+(const BinaryWord& rhs) const {
  BinaryWord w = *this;
  w.bits_ += rhs.bits_;
  return w;
}

std::strong_ordering BinaryWord::operator<=>(const BinaryWord& rhs) const {
  if (auto c = bits_.size() <=> rhs.bits_.size(); c != 0) return c;
  return bits_.compare(rhs.bits_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.to_string(); }

std::vector<BinaryWord> words_of_length(std::size_t d) {
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t m = 0; m < (std::size_t{1} << d); ++m) {
    std::string s(d, '0');
    for (std::size_t i = 0; i < d; ++i)
      if (m >> (d - 1 - i) & 1U) s[i] = '1';
    out.emplace_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CanonicalPoint

namespace {

std::string primitive_root(const std::string& v) {
  const std::size_t n = v.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    bool ok = true;
    for (std::size_t i = k; i < n && ok; ++i) ok = v[i] == v[i - k];
    if (ok) return v.substr(0, k);
  }
  return v;
}

}  // namespace

CanonicalPoint::CanonicalPoint(BinaryWord preperiod, BinaryWord period) {
  if (period.empty()) throw std::invalid_argument("period of an eventually periodic point must be nonempty");
  std::string u = preperiod.bits();
  std::string v = primitive_root(period.bits());
  // u·v^∞ with u = u'a and v = v'a equals u'·(a v')^∞.
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    v = v.back() + v.substr(0, v.size() - 1);
  }
  preperiod_ = BinaryWord(u);
  period_ = BinaryWord(v);
}

CanonicalPoint canonicalize_point(const BinaryWord& preperiod, const BinaryWord& period) {
  return CanonicalPoint(preperiod, period);
}

char CanonicalPoint::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

BinaryWord CanonicalPoint::expand(std::size_t n) const {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) s[i] = at(i);
  return BinaryWord(s);
}

CanonicalPoint CanonicalPoint::shift(std::size_t n) const {
  if (n <= preperiod_.size()) return CanonicalPoint(preperiod_.suffix_from(n), period_);
  const std::size_t k = (n - preperiod_.size()) % period_.size();
  const std::string& v = period_.bits();
  return CanonicalPoint(BinaryWord(), BinaryWord(v.substr(k) + v.substr(0, k)));
}

CanonicalPoint CanonicalPoint::prepend(const BinaryWord& w) const {
  return CanonicalPoint(w + preperiod_, period_);
}

bool CanonicalPoint::has_prefix(const BinaryWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (at(i) != w[i]) return false;
  return true;
}

std::string CanonicalPoint::to_string() const {
  return preperiod_.bits() + "(" + period_.bits() + ")";
}

CanonicalPoint CanonicalPoint::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw parse_error("point must have the form u(v), got '" + std::string(text) + "'");
  const auto pre = text.substr(0, open);
  const auto per = text.substr(open + 1, text.size() - open - 2);
  if (per.empty() || per == "e") throw parse_error("point period must be nonempty");
  return CanonicalPoint(pre.empty() ? BinaryWord() : BinaryWord(pre), BinaryWord(per));
}

std::ostream& operator<<(std::ostream& os, const CanonicalPoint& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// ClopenSet

namespace {

std::vector<BinaryWord> normalize(std::vector<BinaryWord> words) {
  // Drop words with a proper prefix in the family: in plain lexicographic
  // order the extensions of a word follow it contiguously.
  std::sort(words.begin(), words.end(),
            [](const BinaryWord& a, const BinaryWord& b) { return a.bits() < b.bits(); });
  std::vector<BinaryWord> antichain;
  for (auto& w : words) {
    if (!antichain.empty() && antichain.back().is_prefix_of(w)) continue;
    antichain.push_back(std::move(w));
  }

  std::set<std::string> present;
  for (const auto& w : antichain) present.insert(w.bits());
  std::vector<std::string> work(present.begin(), present.end());
  while (!work.empty()) {
    std::string w = std::move(work.back());
    work.pop_back();
    if (w.empty() || !present.contains(w)) continue;
    std::string sib = w;
    sib.back() = sib.back() == '0' ? '1' : '0';
    if (!present.contains(sib)) continue;
    present.erase(w);
    present.erase(sib);
    w.pop_back();
    present.insert(w);
    work.push_back(std::move(w));
  }

  std::vector<BinaryWord> out;
  out.reserve(present.size());
  for (const auto& s : present) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

void complement_below(const std::vector<BinaryWord>& a, const BinaryWord& node, std::vector<BinaryWord>& out) {
  bool has_descendant = false;
  for (const auto& w : a) {
    if (w.is_prefix_of(node)) return;
    if (node.is_prefix_of(w)) has_descendant = true;
  }
  if (!has_descendant) {
    out.push_back(node);
    return;
  }
  complement_below(a, node.child('0'), out);
  complement_below(a, node.child('1'), out);
}

}  // namespace

ClopenSet::ClopenSet(std::vector<BinaryWord> prefixes) : prefixes_(normalize(std::move(prefixes))) {}

std::size_t ClopenSet::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& w : prefixes_) d = std::max(d, w.size());
  return d;
}

std::string ClopenSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < prefixes_.size(); ++i) {
    if (i) s += ',';
    s += prefixes_[i].to_string();
  }
  return s + "}";
}

ClopenSet ClopenSet::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw parse_error("clopen set must be written as {w1,w2,...}, got '" + std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<BinaryWord> words;
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = trim(text.substr(start, comma - start));
    if (item.empty()) throw parse_error("empty word in clopen set; use 'e' for the empty word");
    words.emplace_back(item);
    start = comma + 1;
  }
  return ClopenSet(std::move(words));
}

std::ostream& operator<<(std::ostream& os, const ClopenSet& c) { return os << c.to_string(); }

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinaryWord> all = a.prefixes();
  all.insert(all.end(), b.prefixes().begin(), b.prefixes().end());
  return ClopenSet(std::move(all));
}

ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinaryWord> out;
  for (const auto& x : a.prefixes())
    for (const auto& y : b.prefixes()) {
      if (x.is_prefix_of(y))
        out.push_back(y);
      else if (y.is_prefix_of(x))
        out.push_back(x);
    }
  return ClopenSet(std::move(out));
}

ClopenSet set_complement(const ClopenSet& a) {
  std::vector<BinaryWord> out;
  complement_below(a.prefixes(), BinaryWord(), out);
  return ClopenSet(std::move(out));
}

ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b) {
  return set_intersection(a, set_complement(b));
}

bool includes(const ClopenSet& a, const ClopenSet& b) { return set_intersection(a, b) == b; }

bool disjoint(const ClopenSet& a, const ClopenSet& b) {
  for (const auto& x : a.prefixes())
    for (const auto& y : b.prefixes())
      if (x.comparable(y)) return false;
  return true;
}

bool point_in(const CanonicalPoint& p, const ClopenSet& c) {
  return std::any_of(c.prefixes().begin(), c.prefixes().end(),
                     [&](const BinaryWord& w) { return p.has_prefix(w); });
}

std::vector<BinaryWord> cylinders_at_depth(const ClopenSet& c, std::size_t d) {
  if (c.depth() > d)
    throw std::invalid_argument("depth " + std::to_string(d) + " is smaller than prefix length " +
                                std::to_string(c.depth()) + " of " + c.to_string());
  std::vector<BinaryWord> out;
  for (const auto& w : c.prefixes())
    for (const auto& ext : words_of_length(d - w.size())) out.push_back(w + ext);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rubin
