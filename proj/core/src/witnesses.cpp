#include "rubin/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rubin/appendix.hpp"
#include "rubin/errors.hpp"
#include "rubin/sampling.hpp"

namespace rubin {

namespace {

bool moved_off_itself(const PrefixMap& g, const BinaryWord& w) {
  const auto c = ClopenSet::cylinder(w);
  return disjoint(image_clopen(g, c), c);
}

}  // namespace

bool disjoint_supports(const PrefixMap& f, const PrefixMap& g) { return disjoint(rsupp(f), rsupp(g)); }

F1F2Witness construct_f1_f2(const PrefixMap& f, const PrefixMap& g, const PrefixMap& h, std::size_t depth_cap) {
  if (!disjoint_supports(f, g)) throw hypothesis_error("supp(f) and supp(g) intersect");
  if (commutator(f, h).is_identity()) throw hypothesis_error("[f,h] = 1");

  const BinaryWord v = find_cylinder(
      rsupp(f), [&](const BinaryWord& w) { return moved_off_itself(h, w); }, "V inside rsupp(f) with h(V) ∩ V = ∅",
      depth_cap);
  const PrefixMap f2 = child_swap(v);
  const BinaryWord w = find_cylinder(
      ClopenSet::cylinder(v), [&](const BinaryWord& x) { return moved_off_itself(f2, x); },
      "W inside V with f2(W) ∩ W = ∅", depth_cap);
  const PrefixMap f1 = child_swap(w);

  PrefixMap result = commutator(f1, commutator(f2, h));
  if (result.is_identity() || !commutes(result, g))
    throw std::logic_error("construct_f1_f2 produced an invalid witness for h = " + h.to_string());
  return {f1, f2, ClopenSet::cylinder(v), ClopenSet::cylinder(w), std::move(result)};
}

RefuterCandidate construct_refuter(const PrefixMap& f, const PrefixMap& g, std::size_t depth_cap) {
  const PrefixMap g12 = power(g, 12);
  const SupportDescription s12 = support(g12);
  const ClopenSet overlap = set_intersection(rsupp(f), s12.hull);
  if (overlap.is_empty()) throw hypothesis_error("rsupp(f) ∩ supp(g^12) is empty");

  std::vector<PrefixMap> powers{PrefixMap::identity()};
  for (int i = 1; i <= 4; ++i) powers.push_back(compose(g, powers.back()));

  auto translates_of = [&](const ClopenSet& c) {
    std::vector<ClopenSet> t;
    for (const auto& p : powers) t.push_back(image_clopen(p, c));
    return t;
  };

  const BinaryWord v = find_cylinder(
      overlap,
      [&](const BinaryWord& w) {
        const auto c = ClopenSet::cylinder(w);
        for (const auto& q : s12.exceptional_fixed_points)
          if (q.has_prefix(w)) return false;
        if (!disjoint(image_clopen(f, c), c)) return false;
        const auto t = translates_of(c);
        for (std::size_t i = 0; i < t.size(); ++i)
          for (std::size_t j = i + 1; j < t.size(); ++j)
            if (!disjoint(t[i], t[j])) return false;
        return true;
      },
      "V inside rsupp(f) ∩ supp(g^12) with f(V) ∩ V = ∅ and g^0..g^4 translates disjoint", depth_cap);

  PrefixMap h = child_swap(v);
  if (commutator(f, h).is_identity()) throw std::logic_error("refuter candidate commutes with f");
  const auto c = ClopenSet::cylinder(v);
  return {std::move(h), c, overlap, translates_of(c)};
}

bool ProbeReport::all_witnessed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ProbeEntry& e) { return e.witness.has_value(); });
}

ProbeReport bounded_alg_disjoint_probe(const PrefixMap& g, const PrefixMap& f, const std::vector<PrefixMap>& h_pool,
                                       const std::vector<PrefixMap>& witness_pool, bool use_constructors) {
  std::vector<const PrefixMap*> centralizing;
  for (const auto& x : witness_pool)
    if (commutes(x, g)) centralizing.push_back(&x);

  const bool supports_disjoint = disjoint_supports(f, g);
  const bool flip_self = f == first_digit_flip() && g == f;

  ProbeReport report;
  for (const auto& h : h_pool) {
    if (commutator(f, h).is_identity()) {
      ++report.commuting_skipped;
      continue;
    }
    ProbeEntry entry{h, std::nullopt, "none"};
    for (const PrefixMap* f2 : centralizing) {
      const PrefixMap k = commutator(*f2, h);
      for (const PrefixMap* f1 : centralizing) {
        const PrefixMap c = commutator(*f1, k);
        if (!c.is_identity() && commutes(c, g)) {
          entry.witness = MapPair{*f1, *f2};
          entry.source = "pool";
          break;
        }
      }
      if (entry.witness) break;
    }
    if (!entry.witness && use_constructors) {
      if (supports_disjoint) {
        auto w = construct_f1_f2(f, g, h);
        entry.witness = MapPair{std::move(w.f1), std::move(w.f2)};
        entry.source = "construct_f1_f2";
      } else if (flip_self) {
        auto a = appendix_verify(h);
        if (a.passed()) {
          entry.witness = MapPair{f, a.f2};
          entry.source = "flip_construction";
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<SfSample> sample_Sf(const PrefixMap& f, std::size_t count, std::uint64_t seed) {
  const ClopenSet outside = set_complement(rsupp(f));
  if (outside.is_empty()) throw hypothesis_error("rsupp(f) is the whole space; S_f sampling needs room outside it");

  Rng rng(seed);
  std::vector<SfSample> out;
  out.reserve(count);
  while (out.size() < count) {
    PrefixMap g = random_element_in(rng, outside, 4);
    PrefixMap g12 = power(g, 12);
    if (g12.is_identity()) {
      // Orders 1, 2, 3, 4, 6, 12 are killed; a 5-cycle never is.
      const auto& prefixes = outside.prefixes();
      const BinaryWord c = prefixes[std::uniform_int_distribution<std::size_t>(0, prefixes.size() - 1)(rng)];
      g = order_witness(ClopenSet::cylinder(c), 4);
      g12 = power(g, 12);
    }
    out.push_back({std::move(g), std::move(g12)});
  }
  return out;
}

SfMembership gU_membership_via_Sf(const PrefixMap& h, const PrefixMap& f, const std::vector<SfSample>& samples) {
  SfMembership m;
  m.exact_in_GU = is_in_GU(h, rsupp(f));
  for (const auto& s : samples) {
    if (!commutes(h, s.g12)) {
      m.consistent = false;
      m.certificate = s;
      if (m.exact_in_GU)
        throw std::logic_error("element of G_rsupp(f) fails to commute with an S_f sample: " + h.to_string());
      break;
    }
  }
  return m;
}

NoncommutingPower construct_noncommuting_g12(const PrefixMap& h, const PrefixMap& f, std::size_t depth_cap) {
  const ClopenSet u = rsupp(f);
  if (is_in_GU(h, u)) throw hypothesis_error("h lies in G_rsupp(f)");
  const ClopenSet outside = set_difference(rsupp(h), u);
  const BinaryWord w = find_cylinder(
      outside, [&](const BinaryWord& x) { return moved_off_itself(h, x); },
      "W inside supp(h) minus rsupp(f) with h(W) ∩ W = ∅", depth_cap);
  const auto wc = ClopenSet::cylinder(w);
  PrefixMap g = order_witness(wc, 4);
  PrefixMap g12 = power(g, 12);
  if (g12.is_identity() || !disjoint_supports(g, f) || commutes(h, g12))
    throw std::logic_error("construct_noncommuting_g12 produced an invalid certificate");
  return {std::move(g), std::move(g12), wc};
}

PrefixMap order_witness(const ClopenSet& u, unsigned n) {
  if (u.is_empty()) throw hypothesis_error("order_witness needs a nonempty set");
  if (n < 1) throw hypothesis_error("order_witness needs n >= 1");
  const BinaryWord& c = u.prefixes().front();
  const unsigned m = n + 1;
  const auto depth = static_cast<std::size_t>(std::bit_width(m - 1));
  auto words = words_of_length(depth);
  std::vector<BinaryWord> cycle;
  for (unsigned i = 0; i < m; ++i) cycle.push_back(c + words[i]);
  PrefixMap g = cylinder_cycle(cycle);
  if (order_bounded(g, m) != m) throw std::logic_error("order_witness built an element of the wrong order");
  return g;
}

std::optional<PrefixMap> gu_inclusion_witness(const ClopenSet& u, const ClopenSet& v) {
  if (u.is_empty()) throw hypothesis_error("gu_inclusion_witness needs a nonempty U");
  if (includes(v, u)) return std::nullopt;
  const ClopenSet diff = set_difference(u, v);
  PrefixMap g = child_swap(diff.prefixes().front());
  if (!is_in_GU(g, u) || is_in_GU(g, v)) throw std::logic_error("gu_inclusion_witness built an invalid separator");
  return g;
}

}  // namespace rubin
