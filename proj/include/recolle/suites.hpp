#pragma once

// Report-producing drivers behind the command-line tool: verify, mv,
// counterexample, derived, ext and classify.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "comparison.hpp"
#include "examples.hpp"
#include "functor.hpp"
#include "homological.hpp"
#include "mv.hpp"
#include "recollement.hpp"
#include "report.hpp"
#include "rep.hpp"

namespace recolle::suites {

using examples::RepMV;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string example = "quad-free";
  std::vector<std::size_t> max_dim{2, 2};
  std::size_t max_dim_aa = 3;
  std::uint64_t seed = 0xF2F2;
  std::size_t budget = kDefaultIsoBudget;
  // derived
  std::string functor = "i^*";
  std::optional<nlohmann::json> object;
  std::optional<std::size_t> degree;
  bool right = false;
};

inline nlohmann::json budget_json(const SuiteConfig& c) {
  return {{"max_dim", c.max_dim}, {"max_dim_aa", c.max_dim_aa}, {"iso", c.budget}};
}

inline Report start(const std::string& suite, const SuiteConfig& c) {
  Report r;
  r.suite = suite;
  r.seed = c.seed;
  r.budget = budget_json(c);
  return r;
}

inline RepRecollement rep_example(const std::string& name) {
  if (const auto r = examples::by_example_name(name)) return *r;
  if (name == "product") return examples::rec_product();
  throw ConfigError("unknown example: " + name);
}

inline std::size_t dim_bound(const SuiteConfig& c, std::size_t i) { return i < c.max_dim.size() ? c.max_dim[i] : 0; }

using RepSamples = Samples<RepCategory, RepCategory, RepCategory>;
using MVSamples = Samples<RepCategory, RepMV, RepCategory>;

inline RepSamples rep_samples(const RepRecollement& rec, const SuiteConfig& c) {
  RepSamples s;
  s.a1 = rec.a1->enumerate_up_to({dim_bound(c, 0)});
  s.a = rec.a->enumerate_up_to({dim_bound(c, 0), dim_bound(c, 1)});
  s.a2 = rec.a2->enumerate_up_to({c.max_dim_aa});
  return s;
}

/// Objects (X, V) with dim V <= max_dim[0] and dim X <= max_dim[1], up to isomorphism.
inline MVSamples mv_samples(const std::shared_ptr<const RepMV>& mv, const SuiteConfig& c) {
  MVSamples s;
  s.a1 = mv->a1().enumerate_up_to({dim_bound(c, 0)});
  s.a = iso_class_representatives(*mv, mv->enumerate_up_to({dim_bound(c, 1), dim_bound(c, 0)}), c.budget)
            .representatives;
  s.a2 = mv->a2().enumerate_up_to({c.max_dim_aa});
  return s;
}

inline std::vector<Rep> small(const std::vector<Rep>& xs, std::size_t max_total) {
  std::vector<Rep> out;
  for (const auto& x : xs) {
    std::size_t t = 0;
    for (const auto d : x.dims()) t += d;
    if (t <= max_total) out.push_back(x);
  }
  return out;
}

inline Check verdict_check(const std::string& id, Verdict v, bool want_yes, const std::string& what,
                           const std::optional<nlohmann::json>& witness = std::nullopt) {
  Tally t(id);
  if (v == Verdict::undecided) t.undecided(what + ": undecided", witness.value_or(nullptr));
  else t.expect((v == Verdict::yes) == want_yes, what, witness.value_or(nullptr));
  return t.finish();
}

// ---------------------------------------------------------------------------
// verify

inline Report verify(const SuiteConfig& c) {
  const auto rec = rep_example(c.example);
  Report rep = start("verify " + c.example, c);
  const auto s = rep_samples(rec, c);
  const auto reps = iso_class_representatives(*rec.a, s.a, c.budget).representatives;
  const auto r1 = r1_i_upper_shriek(rec);

  rep.merge(verify_axioms(rec, s, 40, c.seed));
  rep.merge(check_norm(rec, s.a2, s.a));
  rep.merge(check_unit_sequences(rec, s.a));
  rep.add(check_snake_sequence(rec, sample_short_exact(*rec.a2, s.a2, 3, 2, c.seed + 10)));
  rep.add(check_epsilon_kernel(rec, s.a, c.budget));
  rep.add(check_eta_cokernel(rec, s.a, r1, c.budget));
  rep.merge(check_plain_vanishing(rec, s.a2));
  rep.merge(check_left_derived_vanishing(rec, s, 3));
  rep.merge(check_right_derived_vanishing(rec, s, 3));
  rep.merge(check_intermediate_derived(rec, s.a2, r1));
  rep.add(check_essential_images(rec, reps, c.budget));
  rep.merge(check_mt_round_trips(rec, reps, rec.a2->enumerate_up_to({std::min<std::size_t>(c.max_dim_aa, 2)}),
                                 s.a1, c.budget));
  rep.add(check_linear_extension_fibers(rec, reps));
  rep.add(check_ext1_restriction(rec, reps, c.budget));

  if (rec.retraction) {
    const auto& r = *rec.retraction;
    Tally sec(rec.name + ".retraction_after_i_lower_star_is_identity");
    for (const auto& v : s.a1) {
      const auto back = r.mor(rec.a->identity(rec.i_lower_star.obj(v)));
      sec.expect(rec.a1->same_object(r.obj(rec.i_lower_star.obj(v)), v) && rec.a1->equal(back, rec.a1->identity(v)),
                 "r i_* V differs from V", rec.a1->to_json(v));
    }
    rep.add(sec);
    auto ex = audit_exactness(r, sample_short_exact(*rec.a, reps, 3, 2, c.seed + 20));
    ex.id = rec.name + ".retraction_exact";
    rep.add(ex);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// mv

inline Report mv_for_diagram(const SuiteConfig& c) {
  const auto rec = rep_example(c.example);
  Report rep = start("mv " + c.example, c);
  const auto mv = examples::mv_of_example(rec);
  const auto mrec = mv_recollement(mv);
  const auto ms = mv_samples(mv, c);
  const auto s = rep_samples(rec, c);
  const auto reps = iso_class_representatives(*rec.a, s.a, c.budget).representatives;

  rep.merge(verify_axioms(mrec, ms, 30, c.seed));
  rep.merge(check_norm(mrec, ms.a2, ms.a));
  rep.merge(check_unit_sequences(mrec, ms.a));

  const std::vector<Rep> projectives{examples::vect_space(1)};
  const auto pre = prehereditary_check(rec, projectives, s.a1, s.a2);
  const auto pre_mv = prehereditary_check(mrec, projectives, ms.a1, ms.a2);
  rep.merge(pre.checks);
  rep.merge(pre_mv.checks);
  Tally mv_pre(mv->name() + ".mv_form_is_prehereditary");
  mv_pre.expect(pre_mv.prehereditary, "L_2 i^* i_* does not vanish on the diagram category");
  rep.add(mv_pre);

  const auto e = mv_comparison_functor(rec, *rec.retraction, mv);
  const auto cmp = comparison_check(rec.name + ".E", e, rec, mrec, reps, ms.a, s.a1,
                                    rec.a2->enumerate_up_to({std::min<std::size_t>(c.max_dim_aa, 2)}), c.seed,
                                    c.budget);
  rep.merge(cmp.checks);
  Tally iff(rec.name + ".mv_equivalence_iff_prehereditary");
  const auto eq = cmp.equivalence.overall();
  if (eq == Verdict::undecided) iff.undecided("equivalence undecided at budget");
  else iff.expect((eq == Verdict::yes) == pre.prehereditary, "equivalence verdict disagrees with pre-hereditary",
                  cmp.equivalence.witness.value_or(nullptr));
  iff.set_note(std::string("equivalence: ") + to_string(eq) + ", pre-hereditary: " +
               (pre.prehereditary ? "yes" : "no"));
  if (cmp.equivalence.witness) iff.set_dims({{"witness", *cmp.equivalence.witness}});
  rep.add(iff);

  // i^! j_! of the trivial line.
  const auto trivial = Rep(quivers::sigma2(), {1}, {gf2::LinearMap::zero(1, 1)});
  rep.add(verdict_check(rec.name + ".i_upper_shriek_j_lower_shriek_trivial_line_is_line",
                        is_isomorphic(*rec.a1, rec.i_upper_shriek.obj(rec.j_lower_shriek.obj(trivial)),
                                      examples::vect_space(1), c.budget),
                        true, "i^! j_! of the trivial line is not F2"));
  rep.merge(semidirect_profile(rec, RepSamples{s.a1, reps, s.a2}, c.seed + 5).checks);
  return rep;
}

inline Report mv_for_semidirect(const SuiteConfig& c) {
  Report rep = start("mv semidirect", c);
  {
    const auto mv = examples::semidirect_coinvariants();
    const auto mrec = mv_recollement(mv);
    const auto ms = mv_samples(mv, c);
    rep.merge(verify_axioms(mrec, ms, 30, c.seed));
    const auto p = semidirect_profile(mrec, ms, c.seed + 1);
    rep.merge(p.checks);
    Tally dual(mv->name() + ".i_upper_star_j_lower_star_zero_and_i_upper_shriek_exact");
    dual.expect(p.i_upper_star_j_lower_star_zero && p.i_upper_shriek_exact, "expected i^* j_* = 0 and i^! exact");
    rep.add(dual);
    Tally nz(mv->name() + ".i_upper_shriek_j_lower_shriek_is_F");
    for (const auto& x : ms.a2)
      nz.expect(mv->a1().same_object(mrec.i_upper_shriek.obj(mrec.j_lower_shriek.obj(x)), mv->F().obj(x)),
                "i^! j_! X differs from F X", mv->a2().to_json(x));
    rep.add(nz);

    // Its own MV form, through the exact retraction i^!.
    const auto r = mrec.i_upper_shriek;
    const auto g = compose(r, mrec.j_lower_star);
    const auto own = mv_of(mrec, r,
                           std::optional{zero_left_adjoint<RepCategory, RepCategory>(
                               examples::vect_category(), examples::sigma2_category(), g)},
                           examples::sigma2_audit_objects(), mv->name() + "_mv", c.seed);
    const auto orec = mv_recollement(own);
    const auto e = mv_comparison_functor(mrec, r, own);
    const auto cmp = comparison_check(mv->name() + ".E", e, mrec, orec, ms.a, mv_samples(own, c).a, ms.a1,
                                      mv->a2().enumerate_up_to({std::min<std::size_t>(c.max_dim_aa, 2)}), c.seed,
                                      c.budget);
    rep.merge(cmp.checks);
    rep.add(verdict_check(mv->name() + ".equivalent_to_own_mv_form", cmp.equivalence.overall(), true,
                          "not equivalent to its own diagram form", cmp.equivalence.witness));
  }
  {
    const auto mv = examples::semidirect_invariants();
    const auto mrec = mv_recollement(mv);
    const auto ms = mv_samples(mv, c);
    rep.merge(verify_axioms(mrec, ms, 30, c.seed));
    const auto p = semidirect_profile(mrec, ms, c.seed + 2);
    rep.merge(p.checks);
    Tally t(mv->name() + ".i_upper_shriek_j_lower_shriek_zero_and_i_upper_star_exact");
    t.expect(p.i_upper_shriek_j_lower_shriek_zero && p.i_upper_star_exact, "expected i^! j_! = 0 and i^* exact");
    rep.add(t);
  }
  return rep;
}

inline Report mv_for_product(const SuiteConfig& c) {
  Report rep = start("mv product", c);
  const auto rec = examples::rec_product();
  const auto s = rep_samples(rec, c);
  const auto reps = iso_class_representatives(*rec.a, s.a, c.budget).representatives;
  rep.merge(verify_axioms(rec, s, 30, c.seed));
  const auto p = semidirect_profile(rec, RepSamples{s.a1, reps, s.a2}, c.seed + 1);
  rep.merge(p.checks);
  Tally inv(rec.name + ".norm_invertible");
  inv.expect(p.norm_invertible, "norm not invertible");
  rep.add(inv);

  const auto& r = *rec.retraction;
  const auto g = compose(r, rec.j_lower_star);
  const auto mv = mv_of(rec, r,
                        std::optional{zero_left_adjoint<RepCategory, RepCategory>(examples::vect_category(),
                                                                                  examples::sigma2_category(), g)},
                        examples::sigma2_audit_objects(), rec.name + "_mv", c.seed);
  Tally zero(rec.name + ".diagram_form_has_zero_functors");
  for (const auto& x : s.a2)
    zero.expect(mv->a1().is_zero_object(mv->F().obj(x)) && mv->a1().is_zero_object(mv->G().obj(x)),
                "F or G is not zero", mv->a2().to_json(x));
  rep.add(zero);
  const auto mrec = mv_recollement(mv);
  const auto e = mv_comparison_functor(rec, r, mv);
  const auto cmp = comparison_check(rec.name + ".E", e, rec, mrec, reps, mv_samples(mv, c).a, s.a1,
                                    rec.a2->enumerate_up_to({std::min<std::size_t>(c.max_dim_aa, 2)}), c.seed,
                                    c.budget);
  rep.merge(cmp.checks);
  rep.add(verdict_check(rec.name + ".equivalent_to_product", cmp.equivalence.overall(), true,
                        "not equivalent to the product", cmp.equivalence.witness));
  return rep;
}

inline Report mv(const SuiteConfig& c) {
  if (c.example == "semidirect") return mv_for_semidirect(c);
  if (c.example == "product") return mv_for_product(c);
  return mv_for_diagram(c);
}

// ---------------------------------------------------------------------------
// counterexample

inline Report counterexample(const SuiteConfig& c) {
  Report rep = start("counterexample", c);
  const auto cert = examples::certify_witness(c.budget);
  const auto w = rep_to_json(examples::counterexample_witness());
  Tally rel("witness.satisfies_quad_free_relations");
  rel.expect(cert.satisfies_free_relations, "relations fail", w);
  rel.set_dims({{"witness", w}});
  rep.add(rel);
  Tally ph("witness.ph_nonzero");
  ph.expect(cert.ph_nonzero, "PH vanishes", w);
  ph.set_dims({{"PH", gf2::to_json(cert.ph)}});
  rep.add(ph);
  auto scan = verdict_check("witness.not_isomorphic_to_any_quad_vect_object", cert.isomorphic_to_some_candidate, false,
                            "witness is isomorphic to a PH = 0 object", w);
  scan.cases = cert.candidates_scanned;
  scan.note = std::to_string(cert.candidates_scanned) + " candidates of the same dimensions scanned";
  rep.add(scan);

  const auto free_rec = examples::rec_quad_free();
  const auto vect_rec = examples::rec_quad_vect();
  const auto src = iso_class_representatives(*vect_rec.a, rep_samples(vect_rec, c).a, c.budget).representatives;
  const auto tgt = iso_class_representatives(*free_rec.a, rep_samples(free_rec, c).a, c.budget).representatives;
  const auto cmp = comparison_check("E_incl", examples::inclusion_functor(), vect_rec, free_rec, src, tgt,
                                    vect_rec.a1->enumerate_up_to({dim_bound(c, 0)}),
                                    vect_rec.a2->enumerate_up_to({std::min<std::size_t>(c.max_dim_aa, 2)}), c.seed,
                                    c.budget);
  rep.merge(cmp.checks);
  rep.add(verdict_check("E_incl.not_an_equivalence", cmp.equivalence.overall(), false,
                        "inclusion is an equivalence at budget", cmp.equivalence.witness));

  const auto free_counts = examples::classify_iso_classes(*free_rec.a, c.max_dim);
  const auto vect_counts = examples::classify_iso_classes(*vect_rec.a, c.max_dim);
  Tally gap("classify.iso_class_gap");
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [d, n] : free_counts) {
    const auto m = vect_counts.at(d);
    table.push_back({{"dims", d}, {"quad_free", n}, {"quad_vect", m}});
    gap.expect(m <= n, "more classes with PH = 0 than without", {{"dims", d}});
    if (d == std::vector<std::size_t>{2, 1}) gap.expect(n > m, "no gap at dims (2,1)");
  }
  gap.set_dims(table);
  rep.add(gap);
  return rep;
}

// ---------------------------------------------------------------------------
// derived

inline std::string functor_slug(const std::string& name) {
  static const std::map<std::string, std::string> slugs{{"i^*", "i_upper_star"},    {"i^!", "i_upper_shriek"},
                                                        {"i_*", "i_lower_star"},    {"j_!", "j_lower_shriek"},
                                                        {"j^*", "j_upper_star"},    {"j_*", "j_lower_star"},
                                                        {"r", "r"}};
  const auto it = slugs.find(name);
  if (it == slugs.end()) throw ConfigError("unknown functor: " + name);
  return it->second;
}

inline Functor<RepCategory, RepCategory> functor_by_name(const RepRecollement& rec, const std::string& name) {
  functor_slug(name);
  if (name == "i^*") return rec.i_upper_star;
  if (name == "i^!") return rec.i_upper_shriek;
  if (name == "i_*") return rec.i_lower_star;
  if (name == "j_!") return rec.j_lower_shriek;
  if (name == "j^*") return rec.j_upper_star;
  if (name == "j_*") return rec.j_lower_star;
  if (!rec.retraction) throw ConfigError("example has no retraction");
  return *rec.retraction;
}

inline Report derived(const SuiteConfig& c) {
  Report rep = start("derived", c);
  const char side = c.right ? 'R' : 'L';
  if (c.object) {
    const auto rec = rep_example(c.example);
    const auto f = functor_by_name(rec, c.functor);
    Rep m;
    try {
      m = rep_from_json(*c.object, f.src->quiver_ptr());
    } catch (const std::exception& e) {
      throw ConfigError(std::string("cannot parse object: ") + e.what());
    }
    if (!check_relations(m)) throw ConfigError("object violates the relations of the source category");
    const std::size_t n = c.degree.value_or(0);
    const auto v = c.right ? derived_right(f, m, n) : derived_left(f, m, n);
    Tally t(rec.name + "." + side + std::to_string(n) + "_" + functor_slug(c.functor));
    t.ok();
    t.set_dims({{"object", rep_to_json(m)}, {"value", rep_to_json(v)}, {"dims", v.dims()}});
    rep.add(t);
    return rep;
  }
  // Default: L_n i^* (i_* F2) in both diagram examples.
  const std::size_t top = c.degree.value_or(2);
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto m = rec.i_lower_star.obj(examples::vect_space(1));
    for (std::size_t n = 0; n <= top; ++n) {
      const auto v = derived_left(rec.i_upper_star, m, n);
      Tally t(rec.name + ".L" + std::to_string(n) + "_i_upper_star_i_lower_star_F2");
      if (n == 0) t.expect(v.dims() == std::vector<std::size_t>{1}, "L_0 i^* i_* F2 is not F2");
      else if (n == 1) t.expect(v.is_zero(), "L_1 i^* i_* F2 does not vanish");
      else t.ok();
      t.set_dims(v.dims());
      rep.add(t);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// ext

/// dim Ext^1 from the resolution against the number of Baer classes among
/// the extensions built from all cocycles.
inline Check ext_dimension_vs_classes(const RepCategory& c, const std::string& id, const std::vector<Rep>& objs,
                                      std::size_t budget) {
  Tally t(id);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& m : objs)
    for (const auto& n : objs) {
      const auto d = ext_group(c, m, n, 1).dim;
      std::vector<Extension<RepCategory>> classes;
      bool undecided = false;
      for (const auto& e : yoneda_extensions(c, m, n)) {
        bool seen = false;
        for (const auto& k : classes) {
          const auto v = baer_equal(c, k, e, budget);
          if (v == Verdict::undecided) undecided = true;
          if (v == Verdict::yes) {
            seen = true;
            break;
          }
        }
        if (!seen) classes.push_back(e);
      }
      const nlohmann::json w{{"top", c.to_json(m)}, {"bottom", c.to_json(n)}, {"ext1", d}, {"classes", classes.size()}};
      if (undecided) t.undecided("Baer comparison undecided", w);
      else t.expect(classes.size() == (std::size_t{1} << d), "class count differs from 2^dim Ext^1", w);
      if (d > 0) table.push_back({{"top", m.dims()}, {"bottom", n.dims()}, {"ext1", d}});
    }
  t.set_dims(table);
  return t.finish();
}

inline Report ext(const SuiteConfig& c) {
  const auto rec = rep_example(c.example);
  Report rep = start("ext " + c.example, c);
  const auto s = rep_samples(rec, c);
  const auto reps = iso_class_representatives(*rec.a, s.a, c.budget).representatives;
  rep.add(ext_dimension_vs_classes(*rec.a, rec.name + ".ext1_dimension_matches_baer_classes", small(reps, 2),
                                   c.budget));
  const auto a2_reps =
      iso_class_representatives(*rec.a2, rec.a2->enumerate_up_to({std::min<std::size_t>(c.max_dim_aa, 2)}), c.budget)
          .representatives;
  rep.add(ext_dimension_vs_classes(*rec.a2, rec.a2->name() + ".ext1_dimension_matches_baer_classes", a2_reps,
                                   c.budget));
  rep.merge(check_ext1_pushforward(rec, reps, s.a1, c.budget));
  rep.add(check_ext1_restriction(rec, reps, c.budget));

  const auto mv = examples::semidirect_sigma2_coefficients();
  const auto mrec = mv_recollement(mv);
  SuiteConfig cc = c;
  cc.max_dim = {std::min<std::size_t>(dim_bound(c, 0), 2), std::min<std::size_t>(dim_bound(c, 1), 1)};
  const auto ms = mv_samples(mv, cc);
  rep.merge(check_ext1_pushforward(mrec, ms.a, mv->a1().enumerate_up_to({std::min<std::size_t>(dim_bound(c, 0), 2)}),
                                   c.budget));
  return rep;
}

// ---------------------------------------------------------------------------
// classify

inline Report classify(const SuiteConfig& c) {
  Report rep = start("classify", c);
  for (const auto& name : {"quad_free", "quad_vect"}) {
    const RepCategory cat(quivers::by_name(name));
    Tally t(std::string(name) + ".iso_classes");
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [d, n] : examples::classify_iso_classes(cat, c.max_dim)) {
      t.ok();
      table.push_back({{"dims", d}, {"classes", n}});
    }
    t.set_dims(table);
    rep.add(t);
  }
  return rep;
}

inline Report run(const std::string& command, const SuiteConfig& c) {
  if (command == "verify") return verify(c);
  if (command == "mv") return mv(c);
  if (command == "counterexample") return counterexample(c);
  if (command == "derived") return derived(c);
  if (command == "ext") return ext(c);
  if (command == "classify") return classify(c);
  throw ConfigError("unknown command: " + command);
}

}  // namespace recolle::suites
