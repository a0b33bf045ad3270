#pragma once

// Comparison functors between two recollements of the same (A', A''), the
// pre-hereditary test, the functor E : A -> A(rN), and the characterisation
// of semidirect products and products.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "functor.hpp"
#include "homological.hpp"
#include "mv.hpp"
#include "recollement.hpp"
#include "report.hpp"

namespace recolle {

// ---------------------------------------------------------------------------
// Pre-hereditary recollements: (L_2 i^*)(i_* V) = 0 for projective V.

struct PrehereditaryResult {
  bool prehereditary = true;
  std::vector<std::vector<std::size_t>> l2_dims;
  std::vector<Check> checks;
};

/// `projectives` should generate the projectives of A' under sums. When the
/// verdict is true, (L_2 i^*) i_* = 0 is also checked on `vs`, and
/// (L_1 i^*) j_* against i^! j_! dimensionwise on `xs`.
template <class R>
PrehereditaryResult prehereditary_check(const R& rec, const std::vector<Obj1<R>>& projectives,
                                        const std::vector<Obj1<R>>& vs, const std::vector<Obj2<R>>& xs) {
  const auto& a1 = *rec.a1;
  PrehereditaryResult out;
  const std::string p = rec.name + ".";
  Tally verdict(p + "prehereditary_verdict");
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& v : projectives) {
    const auto l2 = derived_left(rec.i_upper_star, rec.i_lower_star.obj(v), 2);
    out.l2_dims.push_back(a1.dims(l2));
    dims.push_back({{"V", a1.dims(v)}, {"L2_i_upper_star_i_lower_star", a1.dims(l2)}});
    if (!a1.is_zero_object(l2)) out.prehereditary = false;
    verdict.ok();
  }
  verdict.set_dims(dims);
  verdict.set_note(out.prehereditary ? "pre-hereditary" : "not pre-hereditary");
  out.checks.push_back(verdict.finish());
  if (out.prehereditary) {
    Tally all(p + "prehereditary.L2_i_upper_star_i_lower_star_vanishes");
    for (const auto& v : vs)
      all.expect(a1.is_zero_object(derived_left(rec.i_upper_star, rec.i_lower_star.obj(v), 2)),
                 "L_2 i^* i_* V != 0", a1.to_json(v));
    Tally lemma(p + "prehereditary.L1_i_upper_star_j_lower_star_equals_i_upper_shriek_j_lower_shriek");
    for (const auto& x : xs)
      lemma.expect(a1.dims(derived_left(rec.i_upper_star, rec.j_lower_star.obj(x), 1)) ==
                       a1.dims(rec.i_upper_shriek.obj(rec.j_lower_shriek.obj(x))),
                   "dimensions differ", rec.a2->to_json(x));
    lemma.set_note("dimensionwise");
    out.checks.push_back(all.finish());
    out.checks.push_back(lemma.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence at budget.

struct EquivalenceVerdict {
  Verdict fully_faithful = Verdict::yes;
  Verdict essentially_surjective = Verdict::yes;
  std::optional<nlohmann::json> witness;
  std::size_t pairs = 0;
  std::size_t targets = 0;

  Verdict overall() const {
    if (fully_faithful == Verdict::no || essentially_surjective == Verdict::no) return Verdict::no;
    if (fully_faithful == Verdict::undecided || essentially_surjective == Verdict::undecided)
      return Verdict::undecided;
    return Verdict::yes;
  }
};

/// E is full and faithful on Hom between the sources, and every target is
/// isomorphic to E of some source.
template <AbelianCategory S, AbelianCategory T>
EquivalenceVerdict equivalence_at_budget(const Functor<S, T>& e, const std::vector<ObjectOf<S>>& sources,
                                         const std::vector<ObjectOf<T>>& targets,
                                         std::size_t budget = kDefaultIsoBudget) {
  const S& s = *e.src;
  const T& t = *e.dst;
  EquivalenceVerdict v;
  std::vector<ObjectOf<T>> images;
  for (const auto& x : sources) images.push_back(e.obj(x));
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (std::size_t j = 0; j < sources.size(); ++j) {
      ++v.pairs;
      const auto basis = s.hom_basis(sources[i], sources[j]);
      const auto image_dim = t.hom_basis(images[i], images[j]).size();
      std::vector<MorphismOf<T>> mapped;
      for (const auto& f : basis) mapped.push_back(e.mor(f));
      const std::size_t rank = span_rank(t, mapped);
      if (rank != basis.size() || image_dim != basis.size()) {
        v.fully_faithful = Verdict::no;
        if (!v.witness)
          v.witness = nlohmann::json{{"reason", rank != basis.size() ? "not faithful" : "not full"},
                                     {"A", s.to_json(sources[i])},
                                     {"B", s.to_json(sources[j])}};
      }
    }
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims;
  for (std::size_t i = 0; i < images.size(); ++i) by_dims[t.dims(images[i])].push_back(i);
  for (const auto& y : targets) {
    ++v.targets;
    Verdict found = Verdict::no;
    const auto it = by_dims.find(t.dims(y));
    if (it != by_dims.end())
      for (const auto i : it->second) {
        const auto r = is_isomorphic(t, images[i], y, budget);
        if (r == Verdict::yes) {
          found = Verdict::yes;
          break;
        }
        if (r == Verdict::undecided) found = Verdict::undecided;
      }
    if (found == Verdict::no) {
      v.essentially_surjective = Verdict::no;
      if (!v.witness) v.witness = nlohmann::json{{"reason", "not in the essential image"}, {"object", t.to_json(y)}};
    } else if (found == Verdict::undecided && v.essentially_surjective == Verdict::yes) {
      v.essentially_surjective = Verdict::undecided;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Comparison functors.

struct ComparisonResult {
  bool commutes_with_structure = true;
  bool exact = true;
  bool left_admissible = true;
  EquivalenceVerdict equivalence;
  EquivalenceVerdict on_ker_i_upper_star;
  EquivalenceVerdict on_ker_i_upper_shriek;
  std::vector<Check> checks;
};

/// Objectwise checks for E : A_1 -> A_2 between recollements of the same
/// (A', A''): the six structural functors commute with E up to isomorphism,
/// E is exact, E preserves L_1 i^* on Ker i^!, and E is an equivalence at
/// budget (also restricted to Ker i^* and Ker i^!). `sources` and `targets`
/// should be isomorphism-class representatives over matching dimension ranges.
template <AbelianCategory A1, AbelianCategory S, AbelianCategory T, AbelianCategory A2>
ComparisonResult comparison_check(const std::string& id, const Functor<S, T>& e,
                                  const Recollement<A1, S, A2>& rec1, const Recollement<A1, T, A2>& rec2,
                                  const std::vector<ObjectOf<S>>& sources, const std::vector<ObjectOf<T>>& targets,
                                  const std::vector<ObjectOf<A1>>& vs, const std::vector<ObjectOf<A2>>& xs,
                                  std::uint64_t seed, std::size_t budget = kDefaultIsoBudget) {
  const S& s = *e.src;
  const T& t = *e.dst;
  const A1& a1 = *rec1.a1;
  const A2& a2 = *rec1.a2;
  ComparisonResult out;

  Tally com(id + ".commutes_with_structure");
  auto iso_into = [&](auto& cat, const auto& x, const auto& y, const char* what, const nlohmann::json& w) {
    const auto v = is_isomorphic(cat, x, y, budget);
    if (v == Verdict::undecided) com.undecided(std::string(what) + " undecided", w);
    else com.expect(v == Verdict::yes, what, w);
  };
  for (const auto& x : sources) {
    const auto ex = e.obj(x);
    const auto w = s.to_json(x);
    iso_into(a1, rec2.i_upper_star.obj(ex), rec1.i_upper_star.obj(x), "i^* E differs from i^*", w);
    iso_into(a1, rec2.i_upper_shriek.obj(ex), rec1.i_upper_shriek.obj(x), "i^! E differs from i^!", w);
    iso_into(a2, rec2.j_upper_star.obj(ex), rec1.j_upper_star.obj(x), "j^* E differs from j^*", w);
  }
  for (const auto& v : vs)
    iso_into(t, e.obj(rec1.i_lower_star.obj(v)), rec2.i_lower_star.obj(v), "E i_* differs from i_*", a1.to_json(v));
  for (const auto& x : xs) {
    iso_into(t, e.obj(rec1.j_lower_shriek.obj(x)), rec2.j_lower_shriek.obj(x), "E j_! differs from j_!",
             a2.to_json(x));
    iso_into(t, e.obj(rec1.j_lower_star.obj(x)), rec2.j_lower_star.obj(x), "E j_* differs from j_*", a2.to_json(x));
  }
  const auto c_com = com.finish();
  out.commutes_with_structure = c_com.passed();
  out.checks.push_back(c_com);

  auto c_exact = audit_exactness(e, sample_short_exact(s, sources, 3, 2, seed));
  c_exact.id = id + ".exact";
  out.exact = c_exact.passed();
  out.checks.push_back(c_exact);

  // Reported as a verdict in the note.
  Tally adm(id + ".left_admissible");
  std::vector<ObjectOf<S>> ker_star, ker_shriek;
  std::vector<ObjectOf<T>> tgt_star, tgt_shriek;
  std::optional<nlohmann::json> adm_witness;
  for (const auto& x : sources) {
    if (a1.is_zero_object(rec1.i_upper_star.obj(x))) ker_star.push_back(x);
    if (!a1.is_zero_object(rec1.i_upper_shriek.obj(x))) continue;
    ker_shriek.push_back(x);
    adm.ok();
    if (a1.dims(derived_left(rec1.i_upper_star, x, 1)) != a1.dims(derived_left(rec2.i_upper_star, e.obj(x), 1))) {
      out.left_admissible = false;
      if (!adm_witness) adm_witness = s.to_json(x);
    }
  }
  for (const auto& y : targets) {
    if (a1.is_zero_object(rec2.i_upper_star.obj(y))) tgt_star.push_back(y);
    if (a1.is_zero_object(rec2.i_upper_shriek.obj(y))) tgt_shriek.push_back(y);
  }
  adm.set_note(out.left_admissible ? "L_1 i^* preserved on Ker i^!" : "L_1 i^* not preserved on Ker i^!");
  if (adm_witness) adm.set_dims({{"first_change", *adm_witness}});
  out.checks.push_back(adm.finish());

  out.equivalence = equivalence_at_budget(e, sources, targets, budget);
  out.on_ker_i_upper_star = equivalence_at_budget(e, ker_star, tgt_star, budget);
  out.on_ker_i_upper_shriek = equivalence_at_budget(e, ker_shriek, tgt_shriek, budget);
  auto kernel_check = [&](const std::string& name, const EquivalenceVerdict& v) {
    Tally k(id + "." + name);
    const auto o = v.overall();
    if (o == Verdict::undecided) k.undecided("equivalence undecided");
    else k.expect(o == Verdict::yes, "restriction is not an equivalence", v.witness.value_or(nullptr));
    k.set_note(std::to_string(v.pairs) + " hom pairs, " + std::to_string(v.targets) + " targets");
    return k.finish();
  };
  out.checks.push_back(kernel_check("equivalence_on_ker_i_upper_star", out.on_ker_i_upper_star));
  out.checks.push_back(kernel_check("equivalence_on_ker_i_upper_shriek", out.on_ker_i_upper_shriek));
  return out;
}

// ---------------------------------------------------------------------------
// The MacPherson-Vilonen form of a recollement with an exact retraction.

/// A(r j_! --rN--> r j_*) for a retraction r (or any exact r with r i_* = Id).
template <AbelianCategory A1, AbelianCategory A, AbelianCategory A2>
std::shared_ptr<const MVCategory<A1, A2>> mv_of(const Recollement<A1, A, A2>& rec, const Functor<A, A1>& r,
                                                std::optional<LeftAdjointData<A1, A2>> gstar,
                                                const std::vector<ObjectOf<A2>>& audit_objects,
                                                const std::string& name, std::uint64_t seed = 0xF2F2) {
  auto f = compose(r, rec.j_lower_shriek);
  auto g = compose(r, rec.j_lower_star);
  f.name = "F";
  g.name = "G";
  f.declared = Exactness::right;
  g.declared = Exactness::left;
  auto xi = [rec, r](const ObjectOf<A2>& x) { return r.mor(norm(rec, x)); };
  return mv_construct<A1, A2>(name, f, g, xi, std::move(gstar), audit_objects, seed);
}

/// E(A) = (j^*A, rA, r(epsilon_A), r(eta_A)), E(f) = (j^*f, rf).
template <AbelianCategory A1, AbelianCategory A, AbelianCategory A2>
Functor<A, MVCategory<A1, A2>> mv_comparison_functor(const Recollement<A1, A, A2>& rec, const Functor<A, A1>& r,
                                                     std::shared_ptr<const MVCategory<A1, A2>> mv) {
  auto obj = [rec, r, mv](const ObjectOf<A>& x) {
    return mv->make(rec.j_upper_star.obj(x), r.obj(x), r.mor(rec.epsilon(x)), r.mor(rec.eta(x)));
  };
  return {"E", rec.a, mv, obj,
          [rec, r, mv, obj](const MorphismOf<A>& f) {
            const auto& a = *rec.a;
            return mv->morphism(obj(a.source(f)), obj(a.target(f)), rec.j_upper_star.mor(f), r.mor(f));
          },
          Exactness::exact};
}

/// The zero functor A' -> A'' as a left adjoint of G = 0.
template <AbelianCategory A1, AbelianCategory A2>
LeftAdjointData<A1, A2> zero_left_adjoint(std::shared_ptr<const A1> a1, std::shared_ptr<const A2> a2,
                                          const Functor<A2, A1>& g) {
  Functor<A1, A2> z{"0", a1, a2, [a2](const ObjectOf<A1>&) { return a2->zero_object(); },
                    [a2](const MorphismOf<A1>&) { return a2->identity(a2->zero_object()); }, Exactness::exact};
  return {z, [a1, g, a2](const ObjectOf<A1>& w) { return a1->zero_morphism(w, g.obj(a2->zero_object())); },
          [a2](const ObjectOf<A2>& x) { return a2->zero_morphism(a2->zero_object(), x); }};
}

// ---------------------------------------------------------------------------
// When i^* or i^! is exact.

template <class R>
struct SemidirectResult {
  bool i_upper_star_exact = false;
  bool i_upper_shriek_j_lower_shriek_zero = true;
  bool i_upper_shriek_exact = false;
  bool i_upper_star_j_lower_star_zero = true;
  bool norm_invertible = true;
  std::vector<Check> checks;
};

/// Evaluates both sides of "i^* exact iff i^! j_! = 0" and "i^! exact iff
/// i^* j_* = 0" over the samples, and whether the norm is invertible on all
/// sampled X (which forces both vanishings).
template <class R>
SemidirectResult<R> semidirect_profile(const R& rec, const Samples<typename R::Cat1, typename R::Cat,
                                                                   typename R::Cat2>& s,
                                       std::uint64_t seed) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  SemidirectResult<R> out;
  const auto seqs = sample_short_exact(a, s.a, 3, 2, seed);
  out.i_upper_star_exact = exactness_profile(rec.i_upper_star, seqs).exact();
  out.i_upper_shriek_exact = exactness_profile(rec.i_upper_shriek, seqs).exact();
  std::optional<nlohmann::json> w1, w2;
  for (const auto& x : s.a2) {
    if (!a1.is_zero_object(rec.i_upper_shriek.obj(rec.j_lower_shriek.obj(x)))) {
      out.i_upper_shriek_j_lower_shriek_zero = false;
      if (!w1) w1 = rec.a2->to_json(x);
    }
    if (!a1.is_zero_object(rec.i_upper_star.obj(rec.j_lower_star.obj(x)))) {
      out.i_upper_star_j_lower_star_zero = false;
      if (!w2) w2 = rec.a2->to_json(x);
    }
    if (!a.is_invertible(norm(rec, x))) out.norm_invertible = false;
  }
  const std::string p = rec.name + ".";
  Tally b1(p + "i_upper_star_exact_iff_i_upper_shriek_j_lower_shriek_zero");
  b1.expect(out.i_upper_star_exact == out.i_upper_shriek_j_lower_shriek_zero, "biconditional fails",
            w1.value_or(nullptr));
  b1.set_note(std::string("i^* exact: ") + (out.i_upper_star_exact ? "yes" : "no") +
              ", i^!j_! = 0: " + (out.i_upper_shriek_j_lower_shriek_zero ? "yes" : "no"));
  Tally b2(p + "i_upper_shriek_exact_iff_i_upper_star_j_lower_star_zero");
  b2.expect(out.i_upper_shriek_exact == out.i_upper_star_j_lower_star_zero, "biconditional fails",
            w2.value_or(nullptr));
  b2.set_note(std::string("i^! exact: ") + (out.i_upper_shriek_exact ? "yes" : "no") +
              ", i^*j_* = 0: " + (out.i_upper_star_j_lower_star_zero ? "yes" : "no"));
  Tally b3(p + "invertible_norm_forces_vanishing");
  b3.expect(!out.norm_invertible || (out.i_upper_shriek_j_lower_shriek_zero && out.i_upper_star_j_lower_star_zero),
            "norm invertible but i^!j_! or i^*j_* nonzero");
  b3.set_note(std::string("norm invertible on all samples: ") + (out.norm_invertible ? "yes" : "no"));
  out.checks = {b1.finish(), b2.finish(), b3.finish()};
  return out;
}

}  // namespace recolle
