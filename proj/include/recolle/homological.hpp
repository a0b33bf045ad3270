#pragma once

// Checks on a recollement that involve derived functors, extensions and the
// subcategories Ker i^! and Ker i^*. Right derived functors go through
// duality and are only available for representation categories.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "functor.hpp"
#include "gf2.hpp"
#include "recollement.hpp"
#include "report.hpp"
#include "rep.hpp"

namespace recolle {

using RepRecollement = Recollement<RepCategory, RepCategory, RepCategory>;

template <class R>
using ObjA = ObjectOf<typename R::Cat>;
template <class R>
using Obj1 = ObjectOf<typename R::Cat1>;
template <class R>
using Obj2 = ObjectOf<typename R::Cat2>;

/// Optional R^1 i^! supplied by the caller.
template <class R>
using RightDerivedShriek = std::function<Obj1<R>(const ObjA<R>&)>;

inline RightDerivedShriek<RepRecollement> r1_i_upper_shriek(const RepRecollement& rec) {
  const auto f = rec.i_upper_shriek;
  return [f](const Rep& a) { return derived_right(f, a, 1); };
}

// ---------------------------------------------------------------------------
// The kernel of epsilon and the cokernel of eta.

/// For i^*A = 0: epsilon_A is epi and its kernel lies in i_* A', isomorphic to
/// i_*(L_1 i^*) A.
template <class R>
Check check_epsilon_kernel(const R& rec, const std::vector<ObjA<R>>& as, std::size_t budget = kDefaultIsoBudget) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  const auto& a2 = *rec.a2;
  Tally t(rec.name + ".epsilon_kernel_sequence_exact");
  std::size_t used = 0;
  for (const auto& x : as) {
    if (!a1.is_zero_object(rec.i_upper_star.obj(x))) continue;
    ++used;
    const auto e = rec.epsilon(x);
    const auto k = a.kernel(e);
    const auto l1 = derived_left(rec.i_upper_star, x, 1);
    const auto expected = rec.i_lower_star.obj(l1);
    bool ok = is_epi(a, e) && a2.is_zero_object(rec.j_upper_star.obj(k.object)) &&
              a.is_invertible(rec.unit_i(k.object)) && a.dims(k.object) == a.dims(expected);
    if (!ok) {
      t.fail("kernel of epsilon is not i_*(L_1 i^*)A", a.to_json(x));
      continue;
    }
    const auto v = is_isomorphic(a, k.object, expected, budget);
    if (v == Verdict::undecided) t.undecided("isomorphism with i_*(L_1 i^*)A undecided", a.to_json(x));
    else t.expect(v == Verdict::yes, "kernel of epsilon not isomorphic to i_*(L_1 i^*)A", a.to_json(x));
  }
  t.set_note(std::to_string(used) + " objects with i^*A = 0");
  return t.finish();
}

/// For i^!A = 0: eta_A is mono and its cokernel lies in i_* A', isomorphic to
/// i_*(R^1 i^!) A when R^1 i^! is available.
template <class R>
Check check_eta_cokernel(const R& rec, const std::vector<ObjA<R>>& as, const RightDerivedShriek<R>& r1 = nullptr,
                         std::size_t budget = kDefaultIsoBudget) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  const auto& a2 = *rec.a2;
  Tally t(rec.name + ".eta_cokernel_sequence_exact");
  std::size_t used = 0;
  for (const auto& x : as) {
    if (!a1.is_zero_object(rec.i_upper_shriek.obj(x))) continue;
    ++used;
    const auto h = rec.eta(x);
    const auto c = a.cokernel(h);
    bool ok = is_mono(a, h) && a2.is_zero_object(rec.j_upper_star.obj(c.object)) &&
              a.is_invertible(rec.unit_i(c.object));
    if (!ok) {
      t.fail("cokernel of eta is not in i_* A'", a.to_json(x));
      continue;
    }
    if (!r1) {
      t.ok();
      continue;
    }
    const auto expected = rec.i_lower_star.obj(r1(x));
    const auto v = is_isomorphic(a, c.object, expected, budget);
    if (v == Verdict::undecided) t.undecided("isomorphism with i_*(R^1 i^!)A undecided", a.to_json(x));
    else t.expect(v == Verdict::yes, "cokernel of eta not isomorphic to i_*(R^1 i^!)A", a.to_json(x));
  }
  t.set_note(std::to_string(used) + " objects with i^!A = 0" + (r1 ? "" : ", R^1 i^! comparison skipped"));
  return t.finish();
}

// ---------------------------------------------------------------------------
// Vanishing of right derived functors and the intermediate-extension identities.

inline std::vector<Check> check_right_derived_vanishing(const RepRecollement& rec,
                                                        const Samples<RepCategory, RepCategory, RepCategory>& s,
                                                        std::size_t max_n) {
  const std::string p = rec.name + ".";
  Tally t1(p + "vanishing.R1_i_upper_shriek_on_i_lower_star");
  Tally t2(p + "vanishing.R1_i_upper_shriek_on_j_lower_star");
  Tally t3(p + "vanishing.j_upper_star_Rn_j_lower_star");
  for (const auto& v : s.a1)
    t1.expect(derived_right(rec.i_upper_shriek, rec.i_lower_star.obj(v), 1).is_zero(), "R^1 i^! i_* V != 0",
              rec.a1->to_json(v));
  for (const auto& x : s.a2) {
    t2.expect(derived_right(rec.i_upper_shriek, rec.j_lower_star.obj(x), 1).is_zero(), "R^1 i^! j_* X != 0",
              rec.a2->to_json(x));
    for (std::size_t n = 1; n <= max_n; ++n)
      t3.expect(rec.j_upper_star.obj(derived_right(rec.j_lower_star, x, n)).is_zero(),
                "j^* R^n j_* X != 0 at n = " + std::to_string(n), rec.a2->to_json(x));
  }
  return {t1.finish(), t2.finish(), t3.finish()};
}

/// (L_1 i^*) j_!* X and i^! j_! X have equal dimensions, and dually
/// (R^1 i^!) j_!* X and i^* j_* X when R^1 i^! is supplied.
template <class R>
std::vector<Check> check_intermediate_derived(const R& rec, const std::vector<Obj2<R>>& xs,
                                              const RightDerivedShriek<R>& r1 = nullptr) {
  const auto& a1 = *rec.a1;
  const auto& a2 = *rec.a2;
  const std::string p = rec.name + ".";
  Tally left(p + "intermediate.L1_i_upper_star_equals_i_upper_shriek_j_lower_shriek");
  Tally right(p + "intermediate.R1_i_upper_shriek_equals_i_upper_star_j_lower_star");
  for (const auto& x : xs) {
    const auto mid = intermediate_extension(rec, x).object;
    left.expect(a1.dims(derived_left(rec.i_upper_star, mid, 1)) ==
                    a1.dims(rec.i_upper_shriek.obj(rec.j_lower_shriek.obj(x))),
                "dimensions differ", a2.to_json(x));
    if (r1)
      right.expect(a1.dims(r1(mid)) == a1.dims(rec.i_upper_star.obj(rec.j_lower_star.obj(x))), "dimensions differ",
                   a2.to_json(x));
  }
  left.set_note("dimensionwise");
  right.set_note(r1 ? "dimensionwise" : "skipped: no R^1 i^!");
  std::vector<Check> out{left.finish()};
  if (r1) out.push_back(right.finish());
  return out;
}

// ---------------------------------------------------------------------------
// Essential images of j_!, j_* and j_!*.

struct EssentialImage {
  bool criterion_j_lower_shriek = false;
  bool criterion_j_lower_star = false;
  bool criterion_intermediate = false;
  Verdict in_j_lower_shriek = Verdict::undecided;
  Verdict in_j_lower_star = Verdict::undecided;
  Verdict in_intermediate = Verdict::undecided;
};

/// Membership by the vanishing criteria, and by rebuilding the candidate
/// preimage j^*A and testing j_?(j^*A) ~= A.
inline EssentialImage essential_image_test(const RepRecollement& rec, const Rep& x,
                                           std::size_t budget = kDefaultIsoBudget) {
  const auto& a = *rec.a;
  EssentialImage e;
  const bool istar0 = rec.i_upper_star.obj(x).is_zero();
  const bool ishriek0 = rec.i_upper_shriek.obj(x).is_zero();
  e.criterion_intermediate = istar0 && ishriek0;
  e.criterion_j_lower_shriek = istar0 && derived_left(rec.i_upper_star, x, 1).is_zero();
  e.criterion_j_lower_star = ishriek0 && derived_right(rec.i_upper_shriek, x, 1).is_zero();
  const Rep y = rec.j_upper_star.obj(x);
  e.in_j_lower_shriek = is_isomorphic(a, rec.j_lower_shriek.obj(y), x, budget);
  e.in_j_lower_star = is_isomorphic(a, rec.j_lower_star.obj(y), x, budget);
  e.in_intermediate = is_isomorphic(a, intermediate_extension(rec, y).object, x, budget);
  return e;
}

inline Check check_essential_images(const RepRecollement& rec, const std::vector<Rep>& as,
                                    std::size_t budget = kDefaultIsoBudget) {
  Tally t(rec.name + ".essential_image_criteria_agree");
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& x : as) {
    const auto e = essential_image_test(rec, x, budget);
    const std::pair<bool, Verdict> pairs[3] = {{e.criterion_j_lower_shriek, e.in_j_lower_shriek},
                                               {e.criterion_j_lower_star, e.in_j_lower_star},
                                               {e.criterion_intermediate, e.in_intermediate}};
    const char* names[3] = {"j_!", "j_*", "j_!*"};
    for (int k = 0; k < 3; ++k) {
      if (pairs[k].second == Verdict::undecided) {
        t.undecided(std::string("membership in the image of ") + names[k] + " undecided", rec.a->to_json(x));
        continue;
      }
      if (pairs[k].first) ++counts[k];
      t.expect(pairs[k].first == (pairs[k].second == Verdict::yes),
               std::string("criterion for the image of ") + names[k] + " disagrees with reconstruction",
               rec.a->to_json(x));
    }
  }
  t.set_dims({{"in_j_lower_shriek", counts[0]}, {"in_j_lower_star", counts[1]}, {"in_intermediate", counts[2]},
              {"objects", as.size()}});
  return t.finish();
}

// ---------------------------------------------------------------------------
// The categories M(T): triples (X, V, alpha : V -> T X) with alpha mono.

template <class R>
struct MTObject {
  Obj2<R> x;
  Obj1<R> v;
  MorphismOf<typename R::Cat1> alpha;
};

/// T = i^* j_*.
template <class R>
Functor<typename R::Cat2, typename R::Cat1> mt_functor(const R& rec) {
  return compose(rec.i_upper_star, rec.j_lower_star);
}

/// T = i^! j_!.
template <class R>
Functor<typename R::Cat2, typename R::Cat1> mt_dual_functor(const R& rec) {
  return compose(rec.i_upper_shriek, rec.j_lower_shriek);
}

/// A in Ker i^! goes to (j^*A, i^*A, i^*(eta_A)).
template <class R>
MTObject<R> to_mt(const R& rec, const ObjA<R>& x) {
  if (!rec.a1->is_zero_object(rec.i_upper_shriek.obj(x))) throw std::invalid_argument("to_mt: i^!A is not zero");
  MTObject<R> o{rec.j_upper_star.obj(x), rec.i_upper_star.obj(x), rec.i_upper_star.mor(rec.eta(x))};
  if (!is_mono(*rec.a1, o.alpha)) throw std::logic_error("to_mt: i^*(eta_A) is not mono");
  return o;
}

/// Kernel of j_* X -> i_* i^* j_* X -> Coker(i_* alpha).
template <class R>
ObjA<R> from_mt(const R& rec, const MTObject<R>& o) {
  const auto& a = *rec.a;
  if (!is_mono(*rec.a1, o.alpha)) throw std::invalid_argument("from_mt: alpha is not mono");
  const auto q = a.cokernel(rec.i_lower_star.mor(o.alpha));
  return a.kernel(a.compose(q.projection, rec.unit_i(rec.j_lower_star.obj(o.x)))).object;
}

/// A in Ker i^* goes to (j^*A, i^! Ker epsilon_A, i^!(Ker epsilon_A -> j_! j^* A)).
template <class R>
MTObject<R> to_mt_dual(const R& rec, const ObjA<R>& x) {
  if (!rec.a1->is_zero_object(rec.i_upper_star.obj(x))) throw std::invalid_argument("to_mt_dual: i^*A is not zero");
  const auto k = rec.a->kernel(rec.epsilon(x));
  MTObject<R> o{rec.j_upper_star.obj(x), rec.i_upper_shriek.obj(k.object), rec.i_upper_shriek.mor(k.inclusion)};
  if (!is_mono(*rec.a1, o.alpha)) throw std::logic_error("to_mt_dual: alpha is not mono");
  return o;
}

/// Cokernel of i_* V -> i_* i^! j_! X -> j_! X.
template <class R>
ObjA<R> from_mt_dual(const R& rec, const MTObject<R>& o) {
  const auto& a = *rec.a;
  if (!is_mono(*rec.a1, o.alpha)) throw std::invalid_argument("from_mt_dual: alpha is not mono");
  const auto m = a.compose(rec.counit_i_shriek(rec.j_lower_shriek.obj(o.x)), rec.i_lower_star.mor(o.alpha));
  return a.cokernel(m).object;
}

/// Isomorphism in M(T): g : X -> X' invertible with T(g) alpha = alpha' phi for
/// an invertible phi. The admissible g form the subspace where T(g) alpha lands
/// in the image of alpha'; it is scanned exhaustively within `budget`.
template <class R>
Verdict mt_isomorphic(const R& rec, const Functor<typename R::Cat2, typename R::Cat1>& t, const MTObject<R>& o1,
                      const MTObject<R>& o2, std::size_t budget = kDefaultIsoBudget) {
  const auto& a1 = *rec.a1;
  const auto& a2 = *rec.a2;
  if (a2.dims(o1.x) != a2.dims(o2.x) || a1.dims(o1.v) != a1.dims(o2.v)) return Verdict::no;
  const auto basis = a2.hom_basis(o1.x, o2.x);
  if (basis.empty()) return a2.is_zero_object(o1.x) && a1.is_zero_object(o1.v) ? Verdict::yes : Verdict::no;
  const auto q = a1.cokernel(o2.alpha);
  // Constraint q T(g) alpha_1 = 0, linear in g.
  std::vector<gf2::BitMatrix> cols;
  for (const auto& g : basis) cols.push_back(a1.flatten(a1.compose(q.projection, a1.compose(t.mor(g), o1.alpha))));
  gf2::BitMatrix sys(cols.front().cols(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) sys.set_block(0, i, cols[i].transpose());
  const auto ker = gf2::kernel_basis(gf2::LinearMap(sys));
  if (ker.dim() > budget) return Verdict::undecided;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ker.dim()); ++mask) {
    auto g = a2.zero_morphism(o1.x, o2.x);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      if (!((mask >> r) & 1U)) continue;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (ker.basis().get(r, i)) g = a2.add(g, basis[i]);
    }
    if (!a2.is_invertible(g)) continue;
    const auto phi = a1.factor_through_mono(o2.alpha, a1.compose(t.mor(g), o1.alpha));
    if (phi && a1.is_invertible(*phi)) return Verdict::yes;
  }
  return Verdict::no;
}

/// Every (X, V, alpha) with X, V from the samples and alpha mono, within a
/// hom-space budget.
template <class R>
std::vector<MTObject<R>> enumerate_mt(const R& rec, const Functor<typename R::Cat2, typename R::Cat1>& t,
                                      const std::vector<Obj2<R>>& xs, const std::vector<Obj1<R>>& vs,
                                      std::size_t max_basis = 12) {
  std::vector<MTObject<R>> out;
  for (const auto& x : xs) {
    const auto tx = t.obj(x);
    for (const auto& v : vs)
      for (const auto& al : all_morphisms(*rec.a1, v, tx, max_basis))
        if (is_mono(*rec.a1, al)) out.push_back({x, v, al});
  }
  return out;
}

/// Round trips A -> M(T) -> A and M(T) -> A -> M(T) for the equivalence with
/// Ker i^! (T = i^* j_*) and, dually, with Ker i^* (T = i^! j_!).
template <class R>
std::vector<Check> check_mt_round_trips(const R& rec, const std::vector<ObjA<R>>& as, const std::vector<Obj2<R>>& xs,
                                        const std::vector<Obj1<R>>& vs, std::size_t budget = kDefaultIsoBudget) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  const std::string p = rec.name + ".";
  auto verdict_into = [](Tally& t, Verdict v, const std::string& what, const nlohmann::json& w) {
    if (v == Verdict::undecided) t.undecided(what + " undecided", w);
    else t.expect(v == Verdict::yes, what + " failed", w);
  };

  Tally direct(p + "mt_round_trip.ker_i_upper_shriek");
  const auto t = mt_functor(rec);
  for (const auto& x : as) {
    if (!a1.is_zero_object(rec.i_upper_shriek.obj(x))) continue;
    const auto o = to_mt(rec, x);
    const auto back = from_mt(rec, o);
    direct.expect(a1.is_zero_object(rec.i_upper_shriek.obj(back)), "from_mt left Ker i^!", a.to_json(x));
    verdict_into(direct, is_isomorphic(a, back, x, budget), "A ~= from_mt(to_mt A)", a.to_json(x));
  }
  for (const auto& o : enumerate_mt(rec, t, xs, vs)) {
    const auto y = from_mt(rec, o);
    const nlohmann::json w{{"X", rec.a2->to_json(o.x)}, {"alpha", a1.morphism_json(o.alpha)}};
    direct.expect(a1.is_zero_object(rec.i_upper_shriek.obj(y)), "from_mt left Ker i^!", w);
    verdict_into(direct, mt_isomorphic(rec, t, to_mt(rec, y), o, budget), "o ~= to_mt(from_mt o)", w);
  }

  Tally dual(p + "mt_round_trip.ker_i_upper_star");
  const auto td = mt_dual_functor(rec);
  for (const auto& x : as) {
    if (!a1.is_zero_object(rec.i_upper_star.obj(x))) continue;
    const auto o = to_mt_dual(rec, x);
    // The V-component is (L_1 i^*) A.
    dual.expect(a1.dims(o.v) == a1.dims(derived_left(rec.i_upper_star, x, 1)), "V differs from (L_1 i^*)A",
                a.to_json(x));
    const auto back = from_mt_dual(rec, o);
    dual.expect(a1.is_zero_object(rec.i_upper_star.obj(back)), "from_mt_dual left Ker i^*", a.to_json(x));
    verdict_into(dual, is_isomorphic(a, back, x, budget), "A ~= from_mt_dual(to_mt_dual A)", a.to_json(x));
  }
  for (const auto& o : enumerate_mt(rec, td, xs, vs)) {
    const auto y = from_mt_dual(rec, o);
    const nlohmann::json w{{"X", rec.a2->to_json(o.x)}, {"alpha", a1.morphism_json(o.alpha)}};
    dual.expect(a1.is_zero_object(rec.i_upper_star.obj(y)), "from_mt_dual left Ker i^*", w);
    verdict_into(dual, mt_isomorphic(rec, td, to_mt_dual(rec, y), o, budget), "o ~= to_mt_dual(from_mt_dual o)", w);
  }
  return {direct.finish(), dual.finish()};
}

// ---------------------------------------------------------------------------
// Extensions.

/// The extension of `top` by `bottom` with class phi : P_1 -> bottom, a
/// cocycle on the resolution of `top`: push 0 -> Omega -> P_0 -> top -> 0
/// forward along the map Omega -> bottom induced by phi.
template <AbelianCategory C>
Extension<C> extension_from_cocycle(const C& c, const Resolution<C>& res, const ObjectOf<C>& top,
                                    const MorphismOf<C>& phi) {
  const auto omega = c.kernel(*res.augmentation);
  const auto onto = c.factor_through_mono(omega.inclusion, res.differentials[0]);
  if (!onto) throw std::logic_error("extension_from_cocycle: d_0 does not land in the syzygy");
  const auto psi = c.factor_through_epi(*onto, phi);
  if (!psi) throw std::invalid_argument("extension_from_cocycle: phi is not a cocycle");
  const Extension<C> base{omega.object, top, res.terms[0], omega.inclusion, *res.augmentation};
  return push_forward_extension(c, base, *psi);
}

/// One extension for every cocycle in Z^1(top, bottom), so every class of
/// Ext^1(top, bottom) occurs. Refuses above 2^max_basis cocycles.
template <AbelianCategory C>
std::vector<Extension<C>> yoneda_extensions(const C& c, const ObjectOf<C>& top, const ObjectOf<C>& bottom,
                                            std::size_t max_basis = 10) {
  const auto res = resolve(c, top, 2);
  const auto ext = ext_group(c, top, bottom, 1);
  if (ext.cocycles.size() > max_basis) throw BudgetExceeded("yoneda_extensions: cocycle space too large");
  std::vector<Extension<C>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ext.cocycles.size()); ++mask)
    out.push_back(
        extension_from_cocycle(c, res, top, combination(c, res.terms[1], bottom, ext.cocycles, mask)));
  return out;
}

/// i_* of an extension of i^*A by V, pulled back along A -> i_* i^* A.
template <class R>
Extension<typename R::Cat> ext1_pushforward(const R& rec, const Extension<typename R::Cat1>& e, const ObjA<R>& x) {
  const auto& I = rec.i_lower_star;
  const Extension<typename R::Cat> lifted{I.obj(e.bottom), I.obj(e.top), I.obj(e.middle), I.mor(e.incl),
                                          I.mor(e.proj)};
  return pull_back_extension(*rec.a, lifted, rec.unit_i(x));
}

/// Injectivity of Ext^1_{A'}(i^*A, V) -> Ext^1_A(A, i_*V) on every class, and
/// dim Ext^1_{A'} <= dim Ext^1_A <= dim Ext^1_{A'} + dim Hom((L_1 i^*)A, V).
template <class R>
std::vector<Check> check_ext1_pushforward(const R& rec, const std::vector<ObjA<R>>& as,
                                          const std::vector<Obj1<R>>& vs, std::size_t budget = kDefaultIsoBudget) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  const std::string p = rec.name + ".";
  Tally inj(p + "ext1_pushforward_injective");
  Tally five(p + "five_term_dimension_bounds");
  nlohmann::json samples = nlohmann::json::array();
  std::size_t nonsplit_sources = 0;
  for (const auto& x : as)
    for (const auto& v : vs) {
      const auto ix = rec.i_upper_star.obj(x);
      const nlohmann::json w{{"A", a.to_json(x)}, {"V", a1.to_json(v)}};
      for (const auto& e : yoneda_extensions(a1, ix, v)) {
        const auto out = ext1_pushforward(rec, e, x);
        if (!is_valid_extension(a, out)) {
          inj.fail("pushed extension is not short exact", w);
          continue;
        }
        const auto src = is_split(a1, e, budget);
        if (src != Verdict::no) {
          inj.ok();
          continue;
        }
        ++nonsplit_sources;
        const auto img = is_split(a, out, budget);
        if (img == Verdict::undecided) inj.undecided("splitting of the image undecided", w);
        else inj.expect(img == Verdict::no, "non-split class became split", w);
      }
      const std::size_t d1 = ext_group(a1, ix, v, 1).dim;
      const std::size_t d2 = ext_group(a, x, rec.i_lower_star.obj(v), 1).dim;
      const std::size_t h = a1.hom_basis(derived_left(rec.i_upper_star, x, 1), v).size();
      five.expect(d1 <= d2 && d2 <= d1 + h, "five-term dimension bound violated", w);
      if (samples.size() < 8 && (d1 > 0 || h > 0)) {
        const std::size_t d3 = ext_group(a1, ix, v, 2).dim;
        const std::size_t d4 = ext_group(a, x, rec.i_lower_star.obj(v), 2).dim;
        samples.push_back({{"A", a.dims(x)}, {"V", a1.dims(v)}, {"ext1_A1", d1}, {"ext1_A", d2}, {"hom_L1", h},
                           {"ext2_A1", d3}, {"ext2_A", d4}});
      }
    }
  inj.set_note(std::to_string(nonsplit_sources) + " non-split source extensions");
  five.set_dims(samples);
  five.set_note("first joints only; later terms reported");
  return {inj.finish(), five.finish()};
}

/// For i^*A = 0 and i^!B = 0, j^* sends non-split extensions of A by B to
/// non-split ones.
template <class R>
Check check_ext1_restriction(const R& rec, const std::vector<ObjA<R>>& objects, std::size_t budget = kDefaultIsoBudget) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  const auto& a2 = *rec.a2;
  Tally t(rec.name + ".ext1_restriction_injective");
  std::vector<ObjA<R>> tops, bottoms;
  for (const auto& x : objects) {
    if (a2.is_zero_object(rec.j_upper_star.obj(x))) continue;
    if (a1.is_zero_object(rec.i_upper_star.obj(x))) tops.push_back(x);
    if (a1.is_zero_object(rec.i_upper_shriek.obj(x))) bottoms.push_back(x);
  }
  std::size_t pairs = 0, nonsplit = 0;
  for (const auto& top : tops)
    for (const auto& bottom : bottoms) {
      ++pairs;
      const nlohmann::json w{{"A", a.to_json(top)}, {"B", a.to_json(bottom)}};
      for (const auto& e : yoneda_extensions(a, top, bottom)) {
        const auto src = is_split(a, e, budget);
        if (src == Verdict::undecided) {
          t.undecided("splitting of the source undecided", w);
          continue;
        }
        if (src == Verdict::yes) {
          t.ok();
          continue;
        }
        ++nonsplit;
        const auto& J = rec.j_upper_star;
        const Extension<typename R::Cat2> img{J.obj(e.bottom), J.obj(e.top), J.obj(e.middle), J.mor(e.incl),
                                              J.mor(e.proj)};
        const auto v = is_split(a2, img, budget);
        if (v == Verdict::undecided) t.undecided("splitting of the image undecided", w);
        else t.expect(v == Verdict::no, "non-split extension restricts to a split one", w);
      }
    }
  t.set_note(std::to_string(pairs) + " pairs, " + std::to_string(nonsplit) + " non-split extensions");
  return t.finish();
}

// ---------------------------------------------------------------------------
// Fibers of Hom(B, B') over the pair (map on B / i_* i^! B, map on i^! B).

struct FiberReport {
  std::size_t hom_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t expected_dim = 0;
  bool exhaustive = false;
  bool fibers_uniform = true;
};

template <class R>
FiberReport fiber_partition(const R& rec, const ObjA<R>& b, const ObjA<R>& b2, std::size_t exhaustive_basis) {
  const auto& a = *rec.a;
  const auto& a1 = *rec.a1;
  FiberReport r;
  const auto q = a.cokernel(rec.counit_i_shriek(b));
  const auto q2 = a.cokernel(rec.counit_i_shriek(b2));
  const auto key = [&](const MorphismOf<typename R::Cat>& f) {
    const auto induced = a.factor_through_epi(q.projection, a.compose(q2.projection, f));
    if (!induced) throw std::logic_error("fiber_partition: map does not descend");
    return gf2::BitMatrix::hstack(a.flatten(*induced), a1.flatten(rec.i_upper_shriek.mor(f)));
  };
  const auto basis = a.hom_basis(b, b2);
  r.hom_dim = basis.size();
  r.expected_dim = a1.hom_basis(rec.i_upper_star.obj(q.object), rec.i_upper_shriek.obj(b2)).size();
  if (!basis.empty()) {
    std::vector<gf2::BitMatrix> cols;
    for (const auto& f : basis) cols.push_back(key(f));
    gf2::BitMatrix sys(cols.front().cols(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) sys.set_block(0, i, cols[i].transpose());
    r.kernel_dim = gf2::kernel_basis(gf2::LinearMap(sys)).dim();
  }
  if (basis.size() <= exhaustive_basis) {
    r.exhaustive = true;
    std::map<gf2::BitMatrix, std::size_t> fibers;
    for (const auto& f : all_morphisms(a, b, b2, exhaustive_basis)) ++fibers[key(f)];
    const std::size_t want = std::size_t{1} << r.expected_dim;
    for (const auto& [k, n] : fibers) r.fibers_uniform = r.fibers_uniform && n == want;
  }
  return r;
}

template <class R>
Check check_linear_extension_fibers(const R& rec, const std::vector<ObjA<R>>& objects,
                                    std::size_t exhaustive_basis = 12) {
  const auto& a = *rec.a;
  Tally t(rec.name + ".linear_extension_fiber_torsor");
  std::size_t exhaustive = 0, nontrivial = 0;
  for (const auto& b : objects)
    for (const auto& b2 : objects) {
      const auto r = fiber_partition(rec, b, b2, exhaustive_basis);
      if (r.exhaustive) ++exhaustive;
      if (r.expected_dim > 0) ++nontrivial;
      const nlohmann::json w{{"B", a.to_json(b)}, {"B2", a.to_json(b2)}, {"hom_dim", r.hom_dim},
                             {"kernel_dim", r.kernel_dim}, {"expected_dim", r.expected_dim}};
      t.expect(r.kernel_dim == r.expected_dim && r.fibers_uniform, "fiber size differs from the prediction", w);
    }
  t.set_note(std::to_string(exhaustive) + " pairs partitioned exhaustively, " + std::to_string(nontrivial) +
             " with nontrivial fibers");
  return t.finish();
}

}  // namespace recolle
