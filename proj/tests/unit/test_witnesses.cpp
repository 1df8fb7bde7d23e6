#include "cases.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "rubin/errors.hpp"
#include "rubin/generators.hpp"
#include "rubin/witnesses.hpp"

using namespace rubin;

namespace {

PrefixMap M(const char* s) { return PrefixMap::parse_inline(s); }
ClopenSet C(const char* s) { return ClopenSet::parse(s); }
BinaryWord W(const char* s) { return BinaryWord(s); }

const PrefixMap& kSwap0() {
  static const PrefixMap m = child_swap(BinaryWord("0"));
  return m;
}
const PrefixMap& kSwap1() {
  static const PrefixMap m = child_swap(BinaryWord("1"));
  return m;
}

// [f1,[f2,h]] recomposed pointwise on samples, checked against the table product.
void check_f1f2(const PrefixMap& g, const PrefixMap& h, const PrefixMap& f1, const PrefixMap& f2) {
  const PrefixMap f1i = inverse(f1), f2i = inverse(f2), hi = inverse(h);
  const PrefixMap inner = compose(compose(f2, h), compose(f2i, hi));
  const PrefixMap outer = compose(compose(f1, inner), compose(f1i, inverse(inner)));
  CHECK_FALSE(outer.is_identity());
  CHECK(compose(outer, g) == compose(g, outer));
  CHECK(commutes(f1, g));
  CHECK(commutes(f2, g));
  for (const auto& p : oracle::sample_points(4)) {
    const auto lhs = oracle::eval({&f2, &h, &f2i, &hi}, p);
    CHECK(apply(inner, p) == lhs);
  }
}

}  // namespace

TEST_CASE("disjoint_supports examples") {
  CHECK(disjoint_supports(kSwap0(), kSwap1()));
  CHECK_FALSE(disjoint_supports(first_digit_flip(), first_digit_flip()));
  CHECK(disjoint_supports(child_swap(W("00")), child_swap(W("01"))));
  CHECK(disjoint_supports(PrefixMap::identity(), first_digit_flip()));
}

TEST_CASE("construct_f1_f2 examples") {
  const auto a = GeneratorSet::v_standard().gens()[0].map;
  CHECK_THROWS_AS(construct_f1_f2(kSwap0(), kSwap1(), kSwap0()), hypothesis_error);
  CHECK_THROWS_AS(construct_f1_f2(kSwap0(), kSwap1(), child_swap(W("1"))), hypothesis_error);
  CHECK_THROWS_AS(construct_f1_f2(kSwap0(), first_digit_flip(), a), hypothesis_error);

  const auto wa = construct_f1_f2(kSwap0(), kSwap1(), a);
  CHECK(includes(C("{0}"), wa.v));
  CHECK(disjoint(image_clopen(a, wa.v), wa.v));
  CHECK(includes(wa.v, wa.w));
  CHECK(includes(wa.v, rsupp(wa.f2)));
  CHECK(includes(wa.w, rsupp(wa.f1)));
  CHECK(disjoint(image_clopen(wa.f2, wa.w), wa.w));
  check_f1f2(kSwap1(), a, wa.f1, wa.f2);

  const auto wf = construct_f1_f2(kSwap0(), kSwap1(), first_digit_flip());
  CHECK(wf.v == C("{0}"));
  CHECK(image_clopen(first_digit_flip(), wf.v) == C("{1}"));
  check_f1f2(kSwap1(), first_digit_flip(), wf.f1, wf.f2);
}

TEST_CASE("construct_f1_f2 on random triples") {
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto t = cases::disjoint_triple(rng);
    const auto w = construct_f1_f2(t.f, t.g, t.h);
    check_f1f2(t.g, t.h, w.f1, w.f2);
    CHECK(w.result == commutator(w.f1, commutator(w.f2, t.h)));
  }
}

TEST_CASE("construct_refuter examples") {
  const auto f = first_digit_flip();
  CHECK_THROWS_AS(construct_refuter(f, f), hypothesis_error);
  CHECK_THROWS_AS(construct_refuter(kSwap0(), kSwap1()), hypothesis_error);

  // Order 15: a 3-cycle on [00],[01],[10] and a 5-cycle inside [11].
  const auto g = compose(cylinder_cycle({W("00"), W("01"), W("10")}),
                         cylinder_cycle({W("11000"), W("11001"), W("11010"), W("11011"), W("11100")}));
  CHECK(order_bounded(g, 64) == 15U);
  const auto r = construct_refuter(g, g);
  CHECK(includes(C("{11}"), r.v));
  CHECK_FALSE(commutes(g, r.h));
  REQUIRE(r.translates.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(disjoint(r.translates[i], r.translates[j]));
}

TEST_CASE("construct_refuter geometry on random pairs") {
  Rng rng(202);
  for (int i = 0; i < 25; ++i) {
    const auto [f, g] = cases::refuter_pair(rng);
    const auto r = construct_refuter(f, g);
    const auto g12 = power(g, 12);
    CHECK(includes(set_intersection(rsupp(f), rsupp(g12)), r.v));
    // V avoids the exceptional fixed points of g^12, so V ⊆ supp(g^12).
    for (const auto& p : support(g12).exceptional_fixed_points) CHECK_FALSE(point_in(p, r.v));
    CHECK(disjoint(image_clopen(f, r.v), r.v));
    PrefixMap gi = PrefixMap::identity();
    std::vector<ClopenSet> t;
    for (int k = 0; k <= 4; ++k, gi = compose(g, gi)) t.push_back(image_clopen(gi, r.v));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) CHECK(disjoint(t[a], t[b]));
    CHECK(is_in_GU(r.h, r.v));
    CHECK_FALSE(r.h.is_identity());
    CHECK_FALSE(commutator(f, r.h).is_identity());
  }
}

TEST_CASE("bounded_alg_disjoint_probe") {
  const auto f = first_digit_flip();
  const auto ball = word_ball(GeneratorSet::v_standard(), 2);
  std::vector<PrefixMap> pool;
  for (const auto& b : ball) pool.push_back(b.element);

  const auto empty = bounded_alg_disjoint_probe(f, f, {}, pool);
  CHECK(empty.entries.empty());
  CHECK(empty.all_witnessed());

  const auto self = bounded_alg_disjoint_probe(f, f, pool, pool);
  CHECK(self.all_witnessed());
  CHECK(self.entries.size() + self.commuting_skipped == pool.size());
  for (const auto& e : self.entries) {
    REQUIRE(e.witness);
    const auto c = commutator(e.witness->f1, commutator(e.witness->f2, e.h));
    CHECK_FALSE(c.is_identity());
    CHECK(commutes(c, f));
  }

  const auto dis = bounded_alg_disjoint_probe(kSwap1(), kSwap0(), pool, {});
  CHECK(dis.all_witnessed());
  for (const auto& e : dis.entries) CHECK(e.source == "construct_f1_f2");

  const auto none = bounded_alg_disjoint_probe(kSwap1(), kSwap0(), pool, {}, false);
  CHECK_FALSE(none.entries.empty());
  CHECK_FALSE(none.all_witnessed());
}

TEST_CASE("sample_Sf and gU_membership_via_Sf") {
  CHECK_THROWS_AS(sample_Sf(first_digit_flip(), 3, 1), hypothesis_error);
  CHECK(sample_Sf(kSwap0(), 0, 1).empty());

  const auto samples = sample_Sf(kSwap0(), 30, 7);
  REQUIRE(samples.size() == 30);
  for (const auto& s : samples) {
    CHECK(is_in_GU(s.g, C("{1}")));
    CHECK(s.g12 == power(s.g, 12));
    CHECK_FALSE(s.g12.is_identity());
  }
  CHECK(sample_Sf(kSwap0(), 30, 7).front().g == samples.front().g);

  const auto in = gU_membership_via_Sf(child_swap(W("01")), kSwap0(), samples);
  CHECK(in.consistent);
  CHECK(in.exact_in_GU);
  CHECK(gU_membership_via_Sf(first_digit_flip(), kSwap0(), {}).consistent);

  // A sample straddled by the flip: a 5-cycle inside [1].
  const std::vector<SfSample> straddled{{order_witness(C("{1}"), 4), power(order_witness(C("{1}"), 4), 12)}};
  const auto out = gU_membership_via_Sf(first_digit_flip(), kSwap0(), straddled);
  CHECK_FALSE(out.consistent);
  CHECK(out.certificate);
  CHECK_FALSE(out.exact_in_GU);
}

TEST_CASE("construct_noncommuting_g12") {
  const auto r = construct_noncommuting_g12(first_digit_flip(), child_swap(W("00")));
  CHECK(disjoint(r.w, C("{00}")));
  CHECK_FALSE(r.g12.is_identity());
  CHECK(disjoint_supports(r.g, child_swap(W("00"))));
  CHECK_FALSE(commutes(first_digit_flip(), r.g12));

  CHECK_THROWS_AS(construct_noncommuting_g12(child_swap(W("00")), kSwap0()), hypothesis_error);
  CHECK_THROWS_AS(construct_noncommuting_g12(kSwap0(), kSwap0()), hypothesis_error);
}

TEST_CASE("S_f cross-validation on random f") {
  Rng rng(303);
  for (int round = 0; round < 3; ++round) {
    const auto f = cases::nontrivial_in(rng, cases::proper_clopen(rng, 3));
    const auto u = rsupp(f);
    const auto samples = sample_Sf(f, 20, 100 + round);
    for (int i = 0; i < 10; ++i) {
      const auto h = cases::nontrivial_in(rng, u);
      const auto m = gU_membership_via_Sf(h, f, samples);
      CHECK(m.consistent);
      CHECK(m.exact_in_GU);
    }
    for (int i = 0; i < 10; ++i) {
      const auto h = cases::outside_of(rng, u);
      const auto r = construct_noncommuting_g12(h, f);
      CHECK(disjoint(r.w, u));
      CHECK(is_in_GU(r.g, r.w));
      CHECK(r.g12 == power(r.g, 12));
      CHECK_FALSE(commutes(h, r.g12));
    }
  }
}

TEST_CASE("order_witness") {
  CHECK(order_bounded(order_witness(C("{e}"), 2), 256) == 3U);
  CHECK(order_witness(C("{0}"), 1) == kSwap0());
  const auto g13 = order_witness(C("{110}"), 12);
  CHECK(order_bounded(g13, 256) == 13U);
  CHECK(is_in_GU(g13, C("{110}")));
  CHECK_THROWS_AS(order_witness(ClopenSet(), 2), hypothesis_error);

  Rng rng(404);
  for (int i = 0; i < 3; ++i) {
    const auto u = random_clopen(rng, 4);
    for (unsigned n = 1; n <= 64; n += 7) {
      const auto g = order_witness(u, n);
      CHECK(order_bounded(g, 256) == n + 1);
      CHECK(is_in_GU(g, u));
    }
  }
}

TEST_CASE("gu_inclusion_witness") {
  CHECK_FALSE(gu_inclusion_witness(C("{0}"), C("{e}")));
  const auto a = gu_inclusion_witness(C("{e}"), C("{0}"));
  REQUIRE(a);
  CHECK(includes(C("{1}"), rsupp(*a)));
  const auto b = gu_inclusion_witness(C("{00,1}"), C("{0}"));
  REQUIRE(b);
  CHECK(includes(C("{1}"), rsupp(*b)));

  Rng rng(505);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_clopen(rng, 3), v = random_clopen(rng, 3);
    const auto w = gu_inclusion_witness(u, v);
    if (includes(v, u)) {
      CHECK_FALSE(w);
      for (int k = 0; k < 10; ++k) CHECK(is_in_GU(random_element_in(rng, u), v));
    } else {
      REQUIRE(w);
      CHECK_FALSE(w->is_identity());
      CHECK(is_in_GU(*w, u));
      CHECK_FALSE(is_in_GU(*w, v));
    }
  }
}
