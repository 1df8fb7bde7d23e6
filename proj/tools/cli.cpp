#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "rubin/appendix.hpp"
#include "rubin/errors.hpp"
#include "rubin/generators.hpp"
#include "rubin/perm.hpp"
#include "rubin/poset.hpp"
#include "rubin/reconstruct.hpp"
#include "rubin/witnesses.hpp"

namespace rubin::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kRefuterNote = "refutation candidate (evidence)";

struct Knobs {
  std::vector<std::string> defs;
  std::string group, f, g, h, u, v, point;
  std::size_t depth = 3;
  unsigned radius = 8;
  std::size_t count = 50;
  std::uint64_t seed = 0;
  bool has_seed = false;
  unsigned order_bound = 256;
  std::size_t table_budget = kDefaultTableBudget;
  std::string gens = "v-standard";
  unsigned n = 1;
  std::string output;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json verdict = nullptr;
  Json witnesses = Json::object();
  Json checks = Json::array();
  Json bounds = Json::object();
  std::string note;
  Json error = nullptr;

  void check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(Json{{"name", name}, {"pass", pass}, {"detail", detail}});
  }
  void add_checks(const std::vector<Check>& cs) {
    for (const auto& c : cs) check(c.name, c.pass, c.detail);
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    if (!note.empty()) j["note"] = note;
    j["witnesses"] = witnesses;
    j["checks"] = checks;
    j["bounds"] = bounds;
    if (!error.is_null()) j["error"] = error;
    return j;
  }
};

Json bounds_of(const Knobs& k) {
  Json b;
  b["depth"] = k.depth;
  b["radius"] = k.radius;
  b["count"] = k.count;
  b["seed"] = k.has_seed ? Json(k.seed) : Json(nullptr);
  b["order_bound"] = k.order_bound;
  b["table_budget"] = k.table_budget;
  b["search_depth_cap"] = kSearchDepthCap;
  return b;
}

Json strings(const std::vector<ClopenSet>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(c.to_string());
  return a;
}

// A parse error inside a definition file; keeps the line and adds the path.
struct file_parse_error : parse_error {
  file_parse_error(const parse_error& e, std::string path) : parse_error(e), file(std::move(path)) {}
  std::string file;
};

// Element lookup: inline tables, names from --defs files, then built-ins
// ("flip", "id" and the default generator names).
class Elements {
 public:
  explicit Elements(const std::vector<std::string>& files) {
    for (const auto& path : files) {
      std::ifstream in(path);
      if (!in) throw parse_error("cannot open definition file '" + path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        for (auto& m : parse_definitions(ss.str())) add(m.name, std::move(m.map), path);
      } catch (const parse_error& e) {
        throw file_parse_error(e, path);
      }
    }
  }

  PrefixMap resolve(const std::string& text) const {
    if (text.find("->") != std::string::npos || text == "id") return PrefixMap::parse_inline(text);
    if (auto it = named_.find(text); it != named_.end()) return it->second;
    if (text == "flip") return first_digit_flip();
    const GeneratorSet builtin = GeneratorSet::v_standard();
    for (const auto& m : builtin.gens())
      if (m.name == text) return m.map;
    throw parse_error("unknown element '" + text + "' (not an inline table, a --defs name, flip, or a generator)");
  }

 private:
  void add(const std::string& name, PrefixMap map, const std::string& path) {
    if (!named_.emplace(name, std::move(map)).second)
      throw parse_error(path + ": element '" + name + "' is already defined by an earlier --defs file");
  }
  std::map<std::string, PrefixMap> named_;
};

GeneratorSet load_gens(const Knobs& k) { return GeneratorSet::load(k.gens); }

// Parses an element option into the report inputs in canonical form.
PrefixMap element(const Elements& els, Report& r, const char* key, const std::string& text) {
  r.inputs[key] = text;
  PrefixMap m = els.resolve(text);
  r.inputs[key] = m.to_string();
  return m;
}

ClopenSet clopen(Report& r, const char* key, const std::string& text) {
  r.inputs[key] = text;
  ClopenSet c = ClopenSet::parse(text);
  r.inputs[key] = c.to_string();
  return c;
}

void require_seed(const Knobs& k) {
  if (!k.has_seed) throw parse_error("--seed is required for sampling commands");
}

// Each handler fills the report and returns the exit status.
using Handler = std::function<int(const Knobs&, Report&)>;

int perm_algdisj(const Knobs& k, Report& r) {
  r.inputs["group"] = k.group;
  const auto group = SymmetricGroup::parse(k.group);
  r.inputs["group"] = group.name();
  r.inputs["f"] = k.f;
  const Perm f = Perm::parse(k.f, group.n);
  r.inputs["f"] = f.to_string();
  r.inputs["g"] = k.g;
  const Perm g = Perm::parse(k.g, group.n);
  r.inputs["g"] = g.to_string();
  r.bounds["max_exhaustive_degree"] = kMaxExhaustiveDegree;

  const auto rep = is_alg_disjoint(g, f, group);
  r.verdict = rep.verdict;
  r.witnesses["counterexample_h"] = rep.counterexample_h ? Json(rep.counterexample_h->to_string()) : Json(nullptr);
  Json table = Json::array();
  bool sound = true;
  for (const auto& [h, w] : rep.witness_table) {
    table.push_back(Json{{"h", h.to_string()}, {"f1", w.f1.to_string()}, {"f2", w.f2.to_string()}});
    const Perm c = commutator(w.f1, commutator(w.f2, h));
    sound = sound && !commutes(f, h) && commutes(w.f1, g) && commutes(w.f2, g) && !c.is_identity() && commutes(c, g);
  }
  r.witnesses["witness_table"] = std::move(table);
  r.check("witness_soundness", sound, "every listed (f1, f2) gives [f1,[f2,h]] != 1 commuting with g");
  if (rep.counterexample_h) {
    const Perm& h = *rep.counterexample_h;
    const auto cg = centralizer(g, group);
    bool none = !commutes(f, h);
    for (const auto& f1 : cg)
      for (const auto& f2 : cg) {
        const Perm c = commutator(f1, commutator(f2, h));
        if (!c.is_identity() && commutes(c, g)) none = false;
      }
    r.check("counterexample_rechecked", none, "no f1, f2 in C(g) answers h = " + h.to_string());
  } else {
    r.check("disjoint_implies_commuting", commutes(f, g), "[f,g] = 1 whenever g is algebraically disjoint from f");
  }
  return rep.verdict ? 0 : 1;
}

int perm_centralizer(const Knobs& k, Report& r) {
  r.inputs["group"] = k.group;
  const auto group = SymmetricGroup::parse(k.group);
  r.inputs["group"] = group.name();
  r.inputs["g"] = k.g;
  const Perm g = Perm::parse(k.g, group.n);
  r.inputs["g"] = g.to_string();
  const auto c = centralizer(g, group);
  Json list = Json::array();
  bool ok = true;
  for (const auto& x : c) {
    list.push_back(x.to_string());
    ok = ok && x * g == g * x;
  }
  r.verdict = true;
  r.witnesses["size"] = c.size();
  r.witnesses["centralizer"] = std::move(list);
  r.check("commutes_with_g", ok, "x g = g x for every listed x");
  return 0;
}

int homeo_rsupp(const Knobs& k, Report& r) {
  const Elements els(k.defs);
  const PrefixMap f = element(els, r, "f", k.f);
  const auto s = support(f);
  r.witnesses["rsupp"] = rsupp(f).to_string();
  Json pts = Json::array();
  bool fixed = true;
  for (const auto& p : s.exceptional_fixed_points) {
    pts.push_back(p.to_string());
    fixed = fixed && apply(f, p) == p && point_in(p, s.hull);
  }
  r.witnesses["exceptional_fixed_points"] = std::move(pts);
  r.check("exceptional_points_fixed", fixed, "each listed point lies in rsupp and is fixed");
  if (k.u.empty()) {
    r.verdict = true;
    return 0;
  }
  const ClopenSet u = clopen(r, "u", k.u);
  const bool in = is_in_GU(f, u);
  r.witnesses["in_G_U"] = in;
  r.verdict = in;
  return in ? 0 : 1;
}

int homeo_order(const Knobs& k, Report& r) {
  const Elements els(k.defs);
  const PrefixMap f = element(els, r, "f", k.f);
  const auto ord = order_bounded(f, k.order_bound);
  r.verdict = ord.has_value();
  r.witnesses["order"] = ord ? Json(*ord) : Json(nullptr);
  if (ord) {
    bool proper = true;
    for (unsigned d = 1; d < *ord; ++d)
      if (*ord % d == 0 && power(f, d).is_identity()) proper = false;
    r.check("order_exact", power(f, *ord).is_identity() && proper, "f^n = 1 and f^d != 1 for proper divisors d");
  } else {
    r.check("order_exceeds_bound", true, "f^k != 1 for k = 1.." + std::to_string(k.order_bound));
  }
  return ord ? 0 : 1;
}

int witness_f1f2(const Knobs& k, Report& r) {
  const Elements els(k.defs);
  const PrefixMap f = element(els, r, "f", k.f);
  const PrefixMap g = element(els, r, "g", k.g);
  const PrefixMap h = element(els, r, "h", k.h);
  const auto w = construct_f1_f2(f, g, h);
  r.verdict = true;
  r.witnesses["V"] = w.v.to_string();
  r.witnesses["W"] = w.w.to_string();
  r.witnesses["f1"] = w.f1.to_string();
  r.witnesses["f2"] = w.f2.to_string();
  r.witnesses["commutator"] = w.result.to_string();
  // Recomposed from the four factors rather than through commutator().
  const PrefixMap inner = compose(compose(w.f2, h), compose(inverse(w.f2), inverse(h)));
  const PrefixMap outer = compose(compose(w.f1, inner), compose(inverse(w.f1), inverse(inner)));
  r.check("nontrivial", !outer.is_identity(), "[f1,[f2,h]] != 1");
  r.check("commutes_with_g", compose(outer, g) == compose(g, outer), "[f1,[f2,h]] g = g [f1,[f2,h]]");
  r.check("f1_f2_centralize_g", commutes(w.f1, g) && commutes(w.f2, g), "f1 and f2 commute with g");
  r.check("geometry",
          includes(rsupp(f), w.v) && disjoint(image_clopen(h, w.v), w.v) && includes(w.v, rsupp(w.f2)) &&
              includes(w.v, w.w) && disjoint(image_clopen(w.f2, w.w), w.w) && includes(w.w, rsupp(w.f1)),
          "V ⊆ rsupp(f), h(V) ∩ V = ∅, rsupp(f2) ⊆ V, W ⊆ V, f2(W) ∩ W = ∅, rsupp(f1) ⊆ W");
  return 0;
}

int refuter(const Knobs& k, Report& r) {
  const Elements els(k.defs);
  const PrefixMap f = element(els, r, "f", k.f);
  const PrefixMap g = element(els, r, "g", k.g);
  r.note = kRefuterNote;
  const auto c = construct_refuter(f, g);
  r.verdict = true;
  r.witnesses["h"] = c.h.to_string();
  r.witnesses["V"] = c.v.to_string();
  r.witnesses["overlap"] = c.overlap.to_string();
  r.witnesses["translates"] = strings(c.translates);

  const PrefixMap g12 = power(g, 12);
  bool off_exceptional = true;
  for (const auto& p : support(g12).exceptional_fixed_points) off_exceptional = off_exceptional && !point_in(p, c.v);
  r.check("inside_overlap", includes(set_intersection(rsupp(f), rsupp(g12)), c.v) && off_exceptional,
          "V ⊆ rsupp(f) ∩ supp(g^12)");
  r.check("f_moves_V_off_itself", disjoint(image_clopen(f, c.v), c.v), "f(V) ∩ V = ∅");
  PrefixMap gi = PrefixMap::identity();
  std::vector<ClopenSet> t;
  for (int i = 0; i <= 4; ++i, gi = compose(g, gi)) t.push_back(image_clopen(gi, c.v));
  bool pairwise = true;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) pairwise = pairwise && disjoint(t[i], t[j]);
  r.check("translates_disjoint", pairwise, "g^0(V), ..., g^4(V) pairwise disjoint");
  r.check("h_supported_in_V", !c.h.is_identity() && is_in_GU(c.h, c.v), "1 != h with supp(h) ⊆ V");
  r.check("h_noncommuting", !commutator(f, c.h).is_identity(), "[f,h] != 1");
  return 0;
}

int sf_sample(const Knobs& k, Report& r) {
  require_seed(k);
  const Elements els(k.defs);
  const PrefixMap f = element(els, r, "f", k.f);
  const auto samples = sample_Sf(f, k.count, k.seed);
  const ClopenSet u = rsupp(f);
  r.verdict = true;
  r.witnesses["rsupp_f"] = u.to_string();
  Json list = Json::array();
  bool nontrivial = true, outside = true, powers = true;
  for (const auto& s : samples) {
    list.push_back(Json{{"g", s.g.to_string()}, {"g12", s.g12.to_string()}});
    nontrivial = nontrivial && !s.g12.is_identity();
    outside = outside && disjoint_supports(s.g, f);
    powers = powers && power(s.g, 12) == s.g12;
  }
  r.witnesses["samples"] = std::move(list);
  r.check("nontrivial_powers", nontrivial, "every g^12 != 1");
  r.check("supported_off_rsupp_f", outside, "supp(g) ∩ supp(f) = ∅ for every sample");
  r.check("powers_recomputed", powers, "g12 equals g^12 recomputed");
  return 0;
}

int gu_test(const Knobs& k, Report& r) {
  require_seed(k);
  const Elements els(k.defs);
  const PrefixMap h = element(els, r, "h", k.h);
  const PrefixMap f = element(els, r, "f", k.f);
  const auto samples = sample_Sf(f, k.count, k.seed);
  const auto m = gU_membership_via_Sf(h, f, samples);
  r.witnesses["rsupp_f"] = rsupp(f).to_string();
  r.witnesses["samples_tested"] = samples.size();
  r.witnesses["commutes_with_all_samples"] = m.consistent;
  r.witnesses["exact_in_G_U"] = m.exact_in_GU;
  Json cert = nullptr;
  if (m.certificate) {
    cert = Json{{"g", m.certificate->g.to_string()}, {"g12", m.certificate->g12.to_string()}, {"source", "sample"}};
  } else if (!m.exact_in_GU) {
    const auto c = construct_noncommuting_g12(h, f);
    cert = Json{{"g", c.g.to_string()}, {"g12", c.g12.to_string()}, {"source", "construct_noncommuting_g12"}};
  }
  r.witnesses["certificate"] = cert;
  const bool verdict = m.consistent && m.exact_in_GU;
  r.verdict = verdict;
  r.check("samples_agree_with_exact", m.consistent == m.exact_in_GU,
          "commuting with the S_f samples matches supp(h) ⊆ rsupp(f)");
  if (!cert.is_null()) {
    const PrefixMap g12 = PrefixMap::parse_inline(cert["g12"].get<std::string>());
    r.check("certificate_verified", !commutes(h, g12) && disjoint_supports(PrefixMap::parse_inline(cert["g"].get<std::string>()), f),
            "[h, g^12] != 1 with g supported off rsupp(f)");
  }
  return verdict ? 0 : 1;
}

int order_witness_cmd(const Knobs& k, Report& r) {
  const ClopenSet u = clopen(r, "u", k.u);
  r.inputs["n"] = k.n;
  const PrefixMap g = order_witness(u, k.n);
  const auto ord = order_bounded(g, k.n + 1);
  r.verdict = true;
  r.witnesses["g"] = g.to_string();
  r.witnesses["order"] = ord ? Json(*ord) : Json(nullptr);
  r.check("order_exact", ord == k.n + 1, "order of g is n + 1");
  r.check("in_G_U", is_in_GU(g, u), "supp(g) ⊆ U");
  return 0;
}

int gu_inclusion(const Knobs& k, Report& r) {
  const ClopenSet u = clopen(r, "u", k.u);
  const ClopenSet v = clopen(r, "v", k.v);
  const auto w = gu_inclusion_witness(u, v);
  r.verdict = !w.has_value();
  r.witnesses["included"] = !w.has_value();
  r.witnesses["separator"] = w ? Json(w->to_string()) : Json(nullptr);
  if (w) {
    r.check("separator_valid", !w->is_identity() && is_in_GU(*w, u) && !is_in_GU(*w, v), "1 != g ∈ G_U \\ G_V");
  } else {
    // The child swaps on the pieces of U generate elements with regular support U.
    const PrefixMap real = build_poset(std::max<std::size_t>(1, u.depth())).realizer(u);
    r.check("realizer_in_G_V", is_in_GU(real, v), "an element with rsupp = U lies in G_V");
  }
  return 0;
}

int poset(const Knobs& k, Report& r) {
  r.inputs["depth"] = k.depth;
  const PosetRd rd = build_poset(k.depth);
  r.verdict = true;
  r.witnesses["size"] = rd.enumerable() ? Json(rd.size()) : Json(nullptr);
  if (k.depth <= 3) {
    const auto& elems = rd.elements();
    r.witnesses["elements"] = strings(elems);
    bool realized = true;
    for (const auto& u : elems) realized = realized && rsupp(rd.realizer(u)) == u;
    r.check("realizers", realized, "rsupp(realizer(U)) = U for every element");
    bool closed = true;
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const auto x = set_intersection(a, b);
        closed = closed && (x.is_empty() || rd.contains(x));
      }
    r.check("intersection_closed", closed, "nonempty intersections stay in R_d");
  } else {
    bool realized = true;
    for (const auto& w : words_of_length(k.depth))
      realized = realized && rsupp(rd.realizer(ClopenSet::cylinder(w))) == ClopenSet::cylinder(w);
    r.check("realizers", realized, "rsupp(realizer([w])) = [w] for every depth-d cylinder");
  }
  if (!k.u.empty()) {
    const ClopenSet u = clopen(r, "u", k.u);
    r.witnesses["contains_u"] = rd.contains(u);
    if (rd.enumerable() && rd.contains(u)) r.witnesses["below_u"] = strings(rd.below(u));
  }
  return 0;
}

int coverage(const Knobs& k, Report& r) {
  r.inputs["point"] = k.point;
  const CanonicalPoint p = CanonicalPoint::parse(k.point);
  r.inputs["point"] = p.to_string();
  const ClopenSet u = clopen(r, "u", k.u);
  r.inputs["gens"] = k.gens;
  const auto gens = load_gens(k);
  const auto res = orbit_coverage(p, u, gens, k.radius, k.depth);
  r.verdict = res.covered;
  r.witnesses["V"] = res.v ? Json(ClopenSet::cylinder(*res.v).to_string()) : Json(nullptr);
  Json map = Json::array();
  bool verified = true;
  for (const auto& w : res.witnesses) {
    map.push_back(Json{{"cell", w.cell.to_string()}, {"word", w.word}, {"h", w.h.to_string()},
                       {"image", w.image.to_string()}});
    verified = verified && is_in_GU(w.h, u) && apply(w.h, p).has_prefix(w.cell);
  }
  r.witnesses["witness_map"] = std::move(map);
  r.witnesses["points_visited"] = res.points_visited;
  r.witnesses["node_cap_hit"] = res.node_cap_hit;
  r.check("witnesses_verified", verified, "each h lies in G_U and h(p) lands in its cell");
  r.check("agrees_with_convergence", res.covered == converges_in(p, u), "coverage found iff p ∈ U");
  return res.covered ? 0 : 1;
}

int reconstruct_cmd(const Knobs& k, Report& r) {
  r.inputs["depth"] = k.depth;
  r.inputs["gens"] = k.gens;
  const auto gens = load_gens(k);
  const auto x = reconstruct(k.depth, gens);
  r.verdict = x.passed();
  Json classes = Json::array();
  for (std::size_t i = 0; i < x.representatives.size(); ++i) {
    classes.push_back(Json{{"class", x.point_map[i]},
                           {"cell", x.representatives[i].expand(k.depth).to_string()},
                           {"representative", x.representatives[i].to_string()},
                           {"profile_size", x.classes[x.point_map[i]].hits.size()}});
  }
  r.witnesses["class_count"] = x.classes.size();
  r.witnesses["classes"] = std::move(classes);
  Json action = Json::object();
  for (std::size_t i = 0; i < x.generator_names.size(); ++i) action[x.generator_names[i]] = x.action_table[i];
  r.witnesses["action_table"] = std::move(action);
  r.add_checks(x.checks);
  return x.passed() ? 0 : 1;
}

int appendix_cmd(const Knobs& k, Report& r) {
  const Elements els(k.defs);
  const PrefixMap h = element(els, r, "h", k.h);
  r.inputs["f"] = first_digit_flip().to_string();
  const auto a = appendix_verify(h);
  r.verdict = a.passed();
  r.witnesses["U"] = ClopenSet::cylinder(a.u).to_string();
  r.witnesses["k"] = a.k.to_string();
  r.witnesses["f2"] = a.f2.to_string();
  r.witnesses["commutator"] = a.commutator.to_string();
  r.witnesses["eight_conjugates"] = a.eight_conjugates.to_string();
  r.witnesses["four_conjugates"] = a.four_conjugates.to_string();
  Json sp = Json::array();
  for (const auto& s : a.s_prime) sp.push_back(s.to_string());
  r.witnesses["s_prime"] = std::move(sp);
  r.add_checks(a.checks);
  return a.passed() ? 0 : 1;
}

struct Command {
  const char* name;
  const char* help;
  Handler run;
  // Options beyond the shared --output/--table-budget.
  std::vector<std::string> options;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> cmds = {
      {"perm-algdisj", "Decide algebraic disjointness of g from f in S_n by exhaustive search", perm_algdisj,
       {"group", "f", "g"}},
      {"perm-centralizer", "List the centralizer of g in S_n", perm_centralizer, {"group", "g"}},
      {"homeo-rsupp", "Support description and regular support of a prefix map", homeo_rsupp, {"defs", "f", "u?"}},
      {"homeo-order", "Order of a prefix map up to --order-bound", homeo_order, {"defs", "f", "order-bound"}},
      {"witness-f1f2", "Build f1, f2 in C(g) with [f1,[f2,h]] nontrivial in C(g) (disjoint supports)", witness_f1f2,
       {"defs", "f", "g", "h"}},
      {"refuter", "Build the h that no f1, f2 can answer when rsupp(f) meets supp(g^12)", refuter, {"defs", "f", "g"}},
      {"sf-sample", "Sample twelfth powers of elements supported off rsupp(f)", sf_sample,
       {"defs", "f", "count", "seed"}},
      {"gu-test", "Test h ∈ G_rsupp(f) through the centralizer of S_f samples", gu_test,
       {"defs", "h", "f", "count", "seed"}},
      {"order-witness", "An element of G_U of order exactly n+1", order_witness_cmd, {"u", "n"}},
      {"gu-inclusion", "Decide U ⊆ V or build an element of G_U outside G_V", gu_inclusion, {"u", "v"}},
      {"poset", "The truncated poset R_d with realizers", poset, {"depth", "u?"}},
      {"coverage", "Orbit coverage of R_{<=V} for a point inside U", coverage,
       {"defs", "point", "u", "depth", "radius", "gens"}},
      {"reconstruct", "Rebuild the space from searrow classes and the generator action", reconstruct_cmd,
       {"defs", "depth", "gens", "radius"}},
      {"appendix-verify", "Check the first-digit flip construction for one h", appendix_cmd, {"defs", "h"}},
  };
  return cmds;
}

void add_options(CLI::App* s, const Command& c, Knobs& k) {
  for (std::string opt : c.options) {
    const bool optional = !opt.empty() && opt.back() == '?';
    if (optional) opt.pop_back();
    CLI::Option* o = nullptr;
    if (opt == "group") o = s->add_option("--group", k.group, "Symmetric group S<n>");
    else if (opt == "f") o = s->add_option("--f", k.f, "Element f (cycle notation, inline table, or name)");
    else if (opt == "g") o = s->add_option("--g", k.g, "Element g");
    else if (opt == "h") o = s->add_option("--h", k.h, "Element h");
    else if (opt == "u") o = s->add_option("--u,--clopen", k.u, "Clopen set U, e.g. {00,1}");
    else if (opt == "v") o = s->add_option("--v", k.v, "Clopen set V");
    else if (opt == "point") o = s->add_option("--point", k.point, "Point u(v) meaning u·v^∞");
    else if (opt == "n") {
      s->add_option("--n", k.n, "Order parameter; the witness has order n+1")->capture_default_str()->check(
          CLI::Range(1U, 4096U));
    } else if (opt == "defs") {
      s->add_option("--defs", k.defs, "Element-definition file (repeatable)")->check(CLI::ExistingFile);
    } else if (opt == "depth") {
      s->add_option("--depth", k.depth, "Depth bound d of R_d")->capture_default_str()->check(
          CLI::Range(std::size_t{1}, kMaxPosetDepth));
    } else if (opt == "radius") {
      s->add_option("--radius", k.radius, "Word-ball radius")->capture_default_str()->check(CLI::Range(0U, 64U));
    } else if (opt == "count") {
      s->add_option("--count", k.count, "Number of samples")->capture_default_str()->check(
          CLI::Range(std::size_t{0}, std::size_t{100000}));
    } else if (opt == "seed") {
      s->add_option("--seed", k.seed, "Random seed (required)");
    } else if (opt == "order-bound") {
      s->add_option("--order-bound", k.order_bound, "Largest order tried")->capture_default_str()->check(
          CLI::Range(1U, 1U << 20));
    } else if (opt == "gens") {
      s->add_option("--gens", k.gens, "Generator set: v-standard or a definition file")->capture_default_str();
    }
    if (o != nullptr && !optional) o->required();
  }
  s->add_option("--table-budget", k.table_budget, "Largest prefix-map table allowed")->capture_default_str()->check(
      CLI::Range(std::size_t{1}, std::size_t{1} << 24));
  s->add_option("--output,-o", k.output, "Write the report here instead of standard output");
}

std::string guess_command(const std::vector<std::string>& args) {
  for (const auto& a : args)
    for (const auto& c : commands())
      if (a == c.name) return a;
  return "";
}

int emit(const Report& r, const Knobs& k, std::ostream& out, std::ostream& err) {
  const std::string text = r.to_json().dump(2) + "\n";
  if (k.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(k.output, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write report to '" << k.output << "'\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Knobs k;
  CLI::App app{"Exact reconstruction toolkit for S_n and prefix-exchange homeomorphisms of the Cantor set.\n"
               "Defaults: depth 3, radius 8, count 50, order-bound 256, table-budget 4096.",
               "rubin"};
  app.require_subcommand(1, 1);
  // -h is left free: --h names an element.
  app.set_help_flag("--help", "Print this help and exit");
  app.set_help_all_flag("--help-all", "Help for every command");
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands()) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    add_options(s, c, k);
    by_app[s] = &c;
  }

  Report r;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    r.command = guess_command(args);
    r.bounds = bounds_of(k);
    r.error = Json{{"kind", "usage_error"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
    emit(r, k, out, err);
    return 2;
  }

  const Command* cmd = by_app.at(app.get_subcommands().front());
  for (const auto* sub : app.get_subcommands()) {
    const CLI::Option* seed = sub->get_option_no_throw("--seed");
    k.has_seed = seed != nullptr && seed->count() > 0;
  }
  r.command = cmd->name;
  r.bounds = bounds_of(k);

  int status = 0;
  auto fail = [&](const char* kind, const std::string& msg, int code) {
    r.verdict = nullptr;
    r.error = Json{{"kind", kind}, {"message", msg}};
    err << "error: " << msg << "\n";
    status = code;
  };
  try {
    ScopedTableBudget budget(k.table_budget);
    status = cmd->run(k, r);
  } catch (const parse_error& e) {
    fail("parse_error", e.what(), 2);
    if (e.line() > 0) r.error["line"] = e.line();
    if (const auto* fe = dynamic_cast<const file_parse_error*>(&e)) r.error["file"] = fe->file;
  } catch (const hypothesis_error& e) {
    fail("hypothesis_error", e.what(), 2);
  } catch (const search_exhausted& e) {
    fail("search_exhausted", e.what(), 1);
    r.error["bound"] = e.bound_name();
    r.error["bound_value"] = e.bound();
  } catch (const budget_exceeded& e) {
    fail("budget_exceeded", e.what(), 1);
    r.error["bound"] = "table_budget";
    r.error["bound_value"] = e.budget();
  } catch (const std::invalid_argument& e) {
    fail("invalid_input", e.what(), 2);
  } catch (const std::length_error& e) {
    fail("invalid_input", e.what(), 2);
  } catch (const std::exception& e) {
    fail("internal_error", e.what(), 2);
  }
  if (emit(r, k, out, err) != 0) return 2;
  return status;
}

}  // namespace rubin::cli
