#include "rubin/appendix.hpp"

#include <algorithm>

#include "rubin/errors.hpp"

namespace rubin {

AppendixReport appendix_verify(const PrefixMap& h, std::size_t depth_cap) {
  const PrefixMap f = first_digit_flip();
  if (commutator(f, h).is_identity()) throw hypothesis_error("[f,h] = 1 for the first-digit flip f");

  const PrefixMap one = PrefixMap::identity();
  const PrefixMap h_inv = inverse(h);
  const PrefixMap h_f = conjugate(h, f);
  const std::vector<PrefixMap> s = {one, f, h, h * f, f * h, h_f};

  AppendixReport r{f, h, {}, BinaryWord(), one, one, one, one, one, {}};
  for (const auto& s1 : s)
    for (const auto& s2 : s) {
      PrefixMap x = inverse(s1) * s2;
      if (std::find(r.s_prime.begin(), r.s_prime.end(), x) == r.s_prime.end()) r.s_prime.push_back(std::move(x));
    }
  const PrefixMap key = commutator(h_inv, f);  // = h^-1 · h^f, an element of S'

  r.u = find_cylinder(
      ClopenSet::whole(),
      [&](const BinaryWord& w) {
        const auto c = ClopenSet::cylinder(w);
        if (!disjoint(image_clopen(key, c), c)) return false;
        return std::all_of(r.s_prime.begin(), r.s_prime.end(), [&](const PrefixMap& x) {
          return is_identity_on(x, c) || disjoint(image_clopen(x, c), c);
        });
      },
      "U with [h^-1,f](U) ∩ U = ∅ and every s in S' trivial on U or moving U off itself", depth_cap);

  const PrefixMap& k = r.k = child_swap(r.u);
  auto kc = [&](const PrefixMap& b) { return conjugate(k, b); };
  const PrefixMap k_f = kc(f);
  const PrefixMap k_hi = kc(h_inv);
  const PrefixMap k_hif = kc(h_inv * f);
  const PrefixMap k_fhi = kc(f * h_inv);
  const PrefixMap k_fhif = kc(f * h_inv * f);

  r.f2 = k * k_f;
  r.commutator = commutator(f, commutator(r.f2, h));
  r.eight_conjugates = k_f * k * k_hif * k_fhif * k_fhi * k_hi * k_f * k;
  r.four_conjugates = k_hi * k_hif * k_fhi * k_fhif;

  r.checks.push_back({"eight_conjugate_identity", r.commutator == r.eight_conjugates,
                      "[f,[f2,h]] = k^f k k^{h^-1 f} k^{f h^-1 f} k^{f h^-1} k^{h^-1} k^f k"});
  r.checks.push_back({"four_conjugate_simplification", r.commutator == r.four_conjugates,
                      "[f,[f2,h]] = k^{h^-1} k^{h^-1 f} k^{f h^-1} k^{f h^-1 f}"});
  r.checks.push_back({"nontrivial", !r.commutator.is_identity(), "[f,[f2,h]] != 1"});
  r.checks.push_back({"commutes_with_f", commutes(r.commutator, f), "[f,[f2,h]] f = f [f,[f2,h]]"});

  // The six conjugates k^{s^-1}, s ∈ S, pairwise commute.
  const std::vector<PrefixMap> conj = {k, k_f, k_hi, k_fhi, k_hif, k_fhif};
  bool all_commute = true;
  for (std::size_t i = 0; i < conj.size() && all_commute; ++i)
    for (std::size_t j = i + 1; j < conj.size() && all_commute; ++j) all_commute = commutes(conj[i], conj[j]);
  r.checks.push_back({"conjugates_commute", all_commute, "k^{s1^-1} k^{s2^-1} = k^{s2^-1} k^{s1^-1} for s1, s2 in S"});

  const auto uc = ClopenSet::cylinder(r.u);
  const ClopenSet hu = image_clopen(h, uc);
  const bool fh_ok = disjoint(image_clopen(f * h, uc), hu);
  const bool hf_ok = disjoint(image_clopen(h * f, uc), hu);
  const bool hf_conj_ok = disjoint(image_clopen(h_f, uc), hu);
  r.checks.push_back({"translates_disjoint", fh_ok && hf_ok && hf_conj_ok,
                      std::string("fh(U), hf(U), h^f(U) each disjoint from h(U): ") + (fh_ok ? "1" : "0") +
                          (hf_ok ? "1" : "0") + (hf_conj_ok ? "1" : "0")});
  return r;
}

}  // namespace rubin
