#pragma once

// The two diagram-category recollements of F2-vector spaces and F2[Z/2]-modules.
//
// Objects of A are (V1, H, V2, P) with H : V1 -> V2 and P : V2 -> V1. A' is
// vector spaces, A'' is vector spaces with an involution T, stored as the
// loop u = 1 + T (u^2 = 0 in characteristic 2). The functors are
//
//   i^*(V1,H,V2,P) = Coker P         j_!(V,T) = (V_T, 1+T, V, p)
//   i_*(V)         = (V,0,0,0)       j^*(V1,H,V2,P) = (V2, HP - 1)
//   i^!(V1,H,V2,P) = Ker H           j_*(V,T) = (V^T, h, V, 1+T)
//
// with V^T = Ker(1+T) (inclusion h), V_T = Coker(1+T) (quotient p), and the
// maps written 1+T factor through p or h. The retraction is r(V1,H,V2,P) = V1.

#include <cstddef>
#include <map>
#include <optional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "comparison.hpp"
#include "functor.hpp"
#include "gf2.hpp"
#include "mv.hpp"
#include "quivers.hpp"
#include "recollement.hpp"
#include "rep.hpp"

namespace recolle::examples {

using gf2::BitMatrix;
using gf2::LinearMap;
using recolle::RepRecollement;
using RepMV = MVCategory<RepCategory, RepCategory>;
using RepMVRecollement = MVRecollement<RepCategory, RepCategory>;

// Index of the arrows in both two-vertex quivers.
inline constexpr std::size_t kH = 0;
inline constexpr std::size_t kP = 1;

// ---------------------------------------------------------------------------
// Involutions and the loop presentation.

/// (V, T) with T an involution, as a sigma2 representation with u = 1 + T.
inline Rep from_involution(const LinearMap& t) {
  const LinearMap u = t + LinearMap::identity(t.domain_dim());
  return Rep(quivers::sigma2(), {t.domain_dim()}, {u});
}

/// T = u + 1.
inline LinearMap involution_of(const Rep& x) { return x.arrow(0) + LinearMap::identity(x.dim(0)); }

/// The map 1 + T of an A'' object (equal to 1 - T here).
inline const LinearMap& one_plus_t(const Rep& x) { return x.arrow(0); }

inline Rep vect_space(std::size_t n) { return Rep::semisimple(quivers::vect(), {n}); }

inline Rep quad(const QuiverPtr& q, const LinearMap& h, const LinearMap& p) {
  return Rep(q, {h.domain_dim(), h.codomain_dim()}, {h, p});
}

inline RepMorphism quad_morphism(const Rep& s, const Rep& t, LinearMap f1, LinearMap f2) {
  return RepMorphism(s, t, {std::move(f1), std::move(f2)});
}

inline RepMorphism one_vertex_morphism(const Rep& s, const Rep& t, LinearMap f) {
  return RepMorphism(s, t, {std::move(f)});
}

// ---------------------------------------------------------------------------
// The six functors, given by the formulas above.

struct QuadFormulas {
  QuiverPtr q;

  Rep i_upper_star(const Rep& a) const { return vect_space(gf2::image_and_cokernel(a.arrow(kP)).coker_dim); }
  RepMorphism i_upper_star(const RepMorphism& f) const {
    const auto s = gf2::image_and_cokernel(f.source().arrow(kP));
    const auto t = gf2::image_and_cokernel(f.target().arrow(kP));
    return one_vertex_morphism(vect_space(s.coker_dim), vect_space(t.coker_dim),
                               t.projection * f.component(0) * s.section);
  }

  Rep i_lower_star(const Rep& v) const {
    return quad(q, LinearMap::zero(v.dim(0), 0), LinearMap::zero(0, v.dim(0)));
  }
  RepMorphism i_lower_star(const RepMorphism& f) const {
    return quad_morphism(i_lower_star(f.source()), i_lower_star(f.target()), f.component(0), LinearMap::zero(0, 0));
  }

  Rep i_upper_shriek(const Rep& a) const { return vect_space(gf2::kernel_basis(a.arrow(kH)).dim()); }
  RepMorphism i_upper_shriek(const RepMorphism& f) const {
    const auto s = gf2::kernel_basis(f.source().arrow(kH));
    const auto t = gf2::kernel_basis(f.target().arrow(kH));
    return one_vertex_morphism(vect_space(s.dim()), vect_space(t.dim()),
                               t.retraction() * f.component(0) * s.inclusion());
  }

  // j_!(V,T) = (V_T, 1+T, V, p): H is the map V_T -> V with H p = 1+T.
  Rep j_lower_shriek(const Rep& x) const {
    const auto c = gf2::image_and_cokernel(one_plus_t(x));
    return quad(q, one_plus_t(x) * c.section, c.projection);
  }
  RepMorphism j_lower_shriek(const RepMorphism& g) const {
    const auto s = gf2::image_and_cokernel(one_plus_t(g.source()));
    const auto t = gf2::image_and_cokernel(one_plus_t(g.target()));
    return quad_morphism(j_lower_shriek(g.source()), j_lower_shriek(g.target()),
                         t.projection * g.component(0) * s.section, g.component(0));
  }

  // j^*(V1,H,V2,P) = (V2, HP - 1), so 1 + T = HP.
  Rep j_upper_star(const Rep& a) const {
    return Rep(quivers::sigma2(), {a.dim(1)}, {a.arrow(kH) * a.arrow(kP)});
  }
  RepMorphism j_upper_star(const RepMorphism& f) const {
    return one_vertex_morphism(j_upper_star(f.source()), j_upper_star(f.target()), f.component(1));
  }

  // j_*(V,T) = (V^T, h, V, 1+T): P is the map V -> V^T with h P = 1+T.
  Rep j_lower_star(const Rep& x) const {
    const auto k = gf2::kernel_basis(one_plus_t(x));
    return quad(q, k.inclusion(), k.retraction() * one_plus_t(x));
  }
  RepMorphism j_lower_star(const RepMorphism& g) const {
    const auto s = gf2::kernel_basis(one_plus_t(g.source()));
    const auto t = gf2::kernel_basis(one_plus_t(g.target()));
    return quad_morphism(j_lower_star(g.source()), j_lower_star(g.target()),
                         t.retraction() * g.component(0) * s.inclusion(), g.component(0));
  }

  Rep r(const Rep& a) const { return vect_space(a.dim(0)); }
  RepMorphism r(const RepMorphism& f) const { return one_vertex_morphism(r(f.source()), r(f.target()), f.component(0)); }

  // Adjunction data.
  RepMorphism unit_i(const Rep& a) const {
    const auto c = gf2::image_and_cokernel(a.arrow(kP));
    return quad_morphism(a, i_lower_star(i_upper_star(a)), c.projection, LinearMap::zero(a.dim(1), 0));
  }
  RepMorphism counit_i(const Rep& v) const {
    // Coker of the zero map keeps the original coordinates.
    return one_vertex_morphism(i_upper_star(i_lower_star(v)), v, LinearMap::identity(v.dim(0)));
  }
  RepMorphism unit_i_shriek(const Rep& v) const {
    return one_vertex_morphism(v, i_upper_shriek(i_lower_star(v)), LinearMap::identity(v.dim(0)));
  }
  RepMorphism counit_i_shriek(const Rep& a) const {
    const auto k = gf2::kernel_basis(a.arrow(kH));
    return quad_morphism(i_lower_star(i_upper_shriek(a)), a, k.inclusion(), LinearMap::zero(0, a.dim(1)));
  }
  RepMorphism unit_j_shriek(const Rep& x) const {
    return one_vertex_morphism(x, j_upper_star(j_lower_shriek(x)), LinearMap::identity(x.dim(0)));
  }
  // epsilon_A = (map Coker(HP) -> V1 induced by P, id).
  RepMorphism epsilon(const Rep& a) const {
    const auto c = gf2::image_and_cokernel(a.arrow(kH) * a.arrow(kP));
    return quad_morphism(j_lower_shriek(j_upper_star(a)), a, a.arrow(kP) * c.section, LinearMap::identity(a.dim(1)));
  }
  // eta_A = (H corestricted to Ker(HP), id).
  RepMorphism eta(const Rep& a) const {
    const auto k = gf2::kernel_basis(a.arrow(kH) * a.arrow(kP));
    return quad_morphism(a, j_lower_star(j_upper_star(a)), k.retraction() * a.arrow(kH), LinearMap::identity(a.dim(1)));
  }
  RepMorphism counit_j(const Rep& x) const {
    return one_vertex_morphism(j_upper_star(j_lower_star(x)), x, LinearMap::identity(x.dim(0)));
  }
};

inline RepRecollement build_quad_recollement(const QuiverPtr& q) {
  const QuadFormulas f{q};
  auto a1 = std::make_shared<const RepCategory>(quivers::vect());
  auto a = std::make_shared<const RepCategory>(q);
  auto a2 = std::make_shared<const RepCategory>(quivers::sigma2());
  RepRecollement rec;
  rec.name = q->name();
  rec.a1 = a1;
  rec.a = a;
  rec.a2 = a2;
  rec.i_upper_star = {"i^*", a, a1, [f](const Rep& x) { return f.i_upper_star(x); },
                      [f](const RepMorphism& m) { return f.i_upper_star(m); }, Exactness::right};
  rec.i_lower_star = {"i_*", a1, a, [f](const Rep& x) { return f.i_lower_star(x); },
                      [f](const RepMorphism& m) { return f.i_lower_star(m); }, Exactness::exact};
  rec.i_upper_shriek = {"i^!", a, a1, [f](const Rep& x) { return f.i_upper_shriek(x); },
                        [f](const RepMorphism& m) { return f.i_upper_shriek(m); }, Exactness::left};
  rec.j_lower_shriek = {"j_!", a2, a, [f](const Rep& x) { return f.j_lower_shriek(x); },
                        [f](const RepMorphism& m) { return f.j_lower_shriek(m); }, Exactness::right};
  rec.j_upper_star = {"j^*", a, a2, [f](const Rep& x) { return f.j_upper_star(x); },
                      [f](const RepMorphism& m) { return f.j_upper_star(m); }, Exactness::exact};
  rec.j_lower_star = {"j_*", a2, a, [f](const Rep& x) { return f.j_lower_star(x); },
                      [f](const RepMorphism& m) { return f.j_lower_star(m); }, Exactness::left};
  rec.unit_i = [f](const Rep& x) { return f.unit_i(x); };
  rec.counit_i = [f](const Rep& x) { return f.counit_i(x); };
  rec.unit_i_shriek = [f](const Rep& x) { return f.unit_i_shriek(x); };
  rec.counit_i_shriek = [f](const Rep& x) { return f.counit_i_shriek(x); };
  rec.unit_j_shriek = [f](const Rep& x) { return f.unit_j_shriek(x); };
  rec.epsilon = [f](const Rep& x) { return f.epsilon(x); };
  rec.eta = [f](const Rep& x) { return f.eta(x); };
  rec.counit_j = [f](const Rep& x) { return f.counit_j(x); };
  rec.retraction = Functor<RepCategory, RepCategory>{"r", a, a1, [f](const Rep& x) { return f.r(x); },
                                                     [f](const RepMorphism& m) { return f.r(m); }, Exactness::exact};
  return rec;
}

/// Diagrams with PHP = HPH = 0.
inline RepRecollement rec_quad_free() { return build_quad_recollement(quivers::quad_free()); }

/// The full subcategory where additionally PH = 0; same formulas.
inline RepRecollement rec_quad_vect() { return build_quad_recollement(quivers::quad_vect()); }

/// The example-name registry used on the command line.
inline std::optional<RepRecollement> by_example_name(const std::string& name) {
  if (name == "quad-free") return rec_quad_free();
  if (name == "quad-vect") return rec_quad_vect();
  return std::nullopt;
}

/// A bundle whose j_* has been replaced by j_! (with no meaningful unit):
/// a negative control for the axiom checks.
inline RepRecollement corrupted_j_lower_star(RepRecollement rec) {
  rec.name += "_corrupted";
  rec.j_lower_star = rec.j_lower_shriek;
  rec.j_lower_star.name = "j_*(corrupted)";
  const auto a = rec.a;
  const auto jl = rec.j_lower_shriek;
  const auto js = rec.j_upper_star;
  rec.eta = [a, jl, js](const Rep& x) { return a->zero_morphism(x, jl.obj(js.obj(x))); };
  const auto a2 = rec.a2;
  rec.counit_j = [a2, jl, js](const Rep& x) { return a2->identity(js.obj(jl.obj(x))); };
  return rec;
}

// ---------------------------------------------------------------------------
// The product A' x A'' as representations of a disconnected quiver.

inline RepRecollement rec_product() {
  const QuiverPtr q = quivers::vect_times_sigma2();
  auto a1 = std::make_shared<const RepCategory>(quivers::vect());
  auto a = std::make_shared<const RepCategory>(q);
  auto a2 = std::make_shared<const RepCategory>(quivers::sigma2());
  auto pair = [q](std::size_t w, const Rep& x) { return Rep(q, {w, x.dim(0)}, {x.arrow(0)}); };
  auto side = [](const Rep& r) { return vect_space(r.dim(0)); };
  auto loop = [](const Rep& r) { return Rep(quivers::sigma2(), {r.dim(1)}, {r.arrow(0)}); };
  auto lower = [q](const Rep& v) { return Rep(q, {v.dim(0), 0}, {LinearMap::zero(0, 0)}); };
  auto upper = [pair](const Rep& x) { return pair(0, x); };

  RepRecollement rec;
  rec.name = q->name();
  rec.a1 = a1;
  rec.a = a;
  rec.a2 = a2;
  const Functor<RepCategory, RepCategory> w_part{
      "i^*", a, a1, side,
      [side](const RepMorphism& f) { return one_vertex_morphism(side(f.source()), side(f.target()), f.component(0)); },
      Exactness::exact};
  rec.i_upper_star = w_part;
  rec.i_upper_shriek = w_part;
  rec.i_upper_shriek.name = "i^!";
  rec.i_lower_star = {"i_*", a1, a, lower,
                      [lower](const RepMorphism& f) {
                        return RepMorphism(lower(f.source()), lower(f.target()),
                                           {f.component(0), LinearMap::zero(0, 0)});
                      },
                      Exactness::exact};
  const Functor<RepCategory, RepCategory> v_part{
      "j_!", a2, a, upper,
      [upper](const RepMorphism& f) {
        return RepMorphism(upper(f.source()), upper(f.target()), {LinearMap::zero(0, 0), f.component(0)});
      },
      Exactness::exact};
  rec.j_lower_shriek = v_part;
  rec.j_lower_star = v_part;
  rec.j_lower_star.name = "j_*";
  rec.j_upper_star = {"j^*", a, a2, loop,
                      [loop](const RepMorphism& f) {
                        return one_vertex_morphism(loop(f.source()), loop(f.target()), f.component(1));
                      },
                      Exactness::exact};
  rec.unit_i = [lower, side](const Rep& x) {
    return RepMorphism(x, lower(side(x)), {LinearMap::identity(x.dim(0)), LinearMap::zero(x.dim(1), 0)});
  };
  rec.counit_i = [](const Rep& v) { return one_vertex_morphism(v, v, LinearMap::identity(v.dim(0))); };
  rec.unit_i_shriek = rec.counit_i;
  rec.counit_i_shriek = [lower, side](const Rep& x) {
    return RepMorphism(lower(side(x)), x, {LinearMap::identity(x.dim(0)), LinearMap::zero(0, x.dim(1))});
  };
  rec.unit_j_shriek = [](const Rep& x) { return one_vertex_morphism(x, x, LinearMap::identity(x.dim(0))); };
  rec.counit_j = rec.unit_j_shriek;
  rec.epsilon = [upper, loop](const Rep& x) {
    return RepMorphism(upper(loop(x)), x, {LinearMap::zero(0, x.dim(0)), LinearMap::identity(x.dim(1))});
  };
  rec.eta = [upper, loop](const Rep& x) {
    return RepMorphism(x, upper(loop(x)), {LinearMap::zero(x.dim(0), 0), LinearMap::identity(x.dim(1))});
  };
  rec.retraction = w_part;
  rec.retraction->name = "r";
  return rec;
}

// ---------------------------------------------------------------------------
// MacPherson-Vilonen categories.

inline std::shared_ptr<const RepCategory> vect_category() {
  static const auto c = std::make_shared<const RepCategory>(quivers::vect());
  return c;
}
inline std::shared_ptr<const RepCategory> sigma2_category() {
  static const auto c = std::make_shared<const RepCategory>(quivers::sigma2());
  return c;
}

/// Coinvariants V_T = Coker(1+T) and invariants V^T = Ker(1+T) as functors to vector spaces.
inline Functor<RepCategory, RepCategory> coinvariants() {
  auto f = compose(*rec_quad_free().retraction, rec_quad_free().j_lower_shriek);
  f.name = "coinvariants";
  f.declared = Exactness::right;
  return f;
}
inline Functor<RepCategory, RepCategory> invariants() {
  auto f = compose(*rec_quad_free().retraction, rec_quad_free().j_lower_star);
  f.name = "invariants";
  f.declared = Exactness::left;
  return f;
}

/// The functor giving a vector space the trivial involution.
inline Functor<RepCategory, RepCategory> trivial_action() {
  auto obj = [](const Rep& w) { return Rep(quivers::sigma2(), {w.dim(0)}, {LinearMap::zero(w.dim(0), w.dim(0))}); };
  return {"trivial", vect_category(), sigma2_category(), obj,
          [obj](const RepMorphism& f) { return one_vertex_morphism(obj(f.source()), obj(f.target()), f.component(0)); },
          Exactness::exact};
}

/// Left adjoint of the invariants: the trivial action, with unit the identity
/// and counit the inclusion of invariants.
inline LeftAdjointData<RepCategory, RepCategory> invariants_left_adjoint() {
  const auto t = trivial_action();
  const auto inv = invariants();
  return {t, [inv, t](const Rep& w) { return one_vertex_morphism(w, inv.obj(t.obj(w)), LinearMap::identity(w.dim(0))); },
          [inv, t](const Rep& x) {
            const auto k = gf2::kernel_basis(x.arrow(0));
            return one_vertex_morphism(t.obj(inv.obj(x)), x, k.inclusion());
          }};
}

inline Functor<RepCategory, RepCategory> zero_functor(std::shared_ptr<const RepCategory> src,
                                                      std::shared_ptr<const RepCategory> dst) {
  return {"0", src, dst, [dst](const Rep&) { return dst->zero_object(); },
          [dst](const RepMorphism&) { return dst->identity(dst->zero_object()); }, Exactness::exact};
}

inline std::vector<Rep> sigma2_audit_objects() { return sigma2_category()->enumerate_up_to({3}); }

/// A(r j_! --rN--> r j_*) for one of the two diagram recollements.
inline std::shared_ptr<const RepMV> mv_of_example(const RepRecollement& rec) {
  return mv_of(rec, *rec.retraction, std::optional{invariants_left_adjoint()}, sigma2_audit_objects(),
               rec.name + "_mv");
}

/// A' x| _F A'' with F the coinvariants and xi : F -> 0.
inline std::shared_ptr<const RepMV> semidirect_coinvariants() {
  const auto g = zero_functor(sigma2_category(), vect_category());
  return mv_construct<RepCategory, RepCategory>(
      "semidirect_coinvariants", coinvariants(), g,
      [g](const Rep& x) { return vect_category()->zero_morphism(coinvariants().obj(x), g.obj(x)); },
      zero_left_adjoint<RepCategory, RepCategory>(vect_category(), sigma2_category(), g), sigma2_audit_objects());
}

/// A' |x_G A'' with G the invariants and xi : 0 -> G.
inline std::shared_ptr<const RepMV> semidirect_invariants() {
  const auto f = zero_functor(sigma2_category(), vect_category());
  return mv_construct<RepCategory, RepCategory>(
      "semidirect_invariants", f, invariants(),
      [f](const Rep& x) { return vect_category()->zero_morphism(f.obj(x), invariants().obj(x)); },
      invariants_left_adjoint(), sigma2_audit_objects());
}

/// A' x| _F A'' with A' = sigma2, A'' = vect and F the trivial action, so
/// that Ext^1 in A' is not zero.
inline std::shared_ptr<const RepMV> semidirect_sigma2_coefficients() {
  const auto g = zero_functor(vect_category(), sigma2_category());
  const auto f = trivial_action();
  return mv_construct<RepCategory, RepCategory>(
      "semidirect_sigma2", f, g,
      [f, g](const Rep& x) { return sigma2_category()->zero_morphism(f.obj(x), g.obj(x)); },
      zero_left_adjoint<RepCategory, RepCategory>(sigma2_category(), vect_category(), g),
      vect_category()->enumerate_up_to({3}));
}

// ---------------------------------------------------------------------------
// The inclusion of the PH = 0 subcategory and the object outside its image.

inline Functor<RepCategory, RepCategory> inclusion_functor() {
  auto src = std::make_shared<const RepCategory>(quivers::quad_vect());
  auto dst = std::make_shared<const RepCategory>(quivers::quad_free());
  auto obj = [](const Rep& x) { return Rep(quivers::quad_free(), x.dims(), x.arrows()); };
  return {"E_incl", src, dst, obj,
          [obj](const RepMorphism& m) { return RepMorphism(obj(m.source()), obj(m.target()), m.components()); },
          Exactness::exact};
}

/// (F2^2, H = [1 0], F2, P = (0,1)^T): PHP = HPH = 0 because HP = 0, but
/// PH = [[0,0],[1,0]] is not zero.
inline Rep counterexample_witness() {
  return Rep::make(quivers::quad_free(), {2, 1},
                   {{"H", BitMatrix::from_strings({"10"})}, {"P", BitMatrix::from_strings({"0", "1"})}});
}

struct WitnessCertificate {
  bool satisfies_free_relations = false;
  BitMatrix ph;
  bool ph_nonzero = false;
  std::size_t candidates_scanned = 0;
  Verdict isomorphic_to_some_candidate = Verdict::undecided;
};

/// Relations, PH, and an exhaustive isomorphism scan against every PH = 0
/// object with the same dimension vector.
inline WitnessCertificate certify_witness(std::size_t iso_budget = kDefaultIsoBudget) {
  WitnessCertificate c;
  const Rep w = counterexample_witness();
  c.satisfies_free_relations = check_relations(w);
  c.ph = (w.arrow(kP) * w.arrow(kH)).matrix();
  c.ph_nonzero = !c.ph.is_zero();
  const RepCategory free_cat(quivers::quad_free());
  const auto incl = inclusion_functor();
  bool undecided = false;
  c.isomorphic_to_some_candidate = Verdict::no;
  for (const auto& r : RepCategory(quivers::quad_vect()).enumerate(w.dims())) {
    ++c.candidates_scanned;
    const auto v = is_isomorphic(free_cat, w, incl.obj(r), iso_budget);
    if (v == Verdict::yes) {
      c.isomorphic_to_some_candidate = Verdict::yes;
      return c;
    }
    if (v == Verdict::undecided) undecided = true;
  }
  if (undecided) c.isomorphic_to_some_candidate = Verdict::undecided;
  return c;
}

/// Isomorphism-class counts per dimension vector up to `max_dims`.
inline std::map<std::vector<std::size_t>, std::size_t> classify_iso_classes(const RepCategory& c,
                                                                           const std::vector<std::size_t>& max_dims,
                                                                           std::size_t max_bits = 24) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  std::vector<std::size_t> d(max_dims.size(), 0);
  while (true) {
    out[d] = iso_class_representatives(c, c.enumerate(d, max_bits)).representatives.size();
    std::size_t k = d.size();
    bool advanced = false;
    while (k > 0) {
      --k;
      if (d[k] < max_dims[k]) {
        ++d[k];
        for (std::size_t j = k + 1; j < d.size(); ++j) d[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace recolle::examples
