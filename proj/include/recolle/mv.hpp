#pragma once

// The category A(xi) of tuples (X, V, alpha, beta) with X in A'', V in A',
// alpha : F X -> V, beta : V -> G X and beta alpha = xi_X, for F right exact,
// G left exact and xi : F -> G. Morphisms are pairs (f, phi) with
// phi alpha = alpha' F(f) and G(f) beta = beta' phi.
//
//   i^*(X,V,a,b) = Coker a      j_! X = (X, FX, 1, xi_X)
//   i_* V        = (0, V, 0, 0) j^*(X,V,a,b) = X
//   i^!(X,V,a,b) = Ker b        j_* X = (X, GX, xi_X, 1)
//   r(X,V,a,b)   = V
//
// Projectives need a left adjoint G^* of G; with it, r has the left adjoint
// r^* W = (G^* W, F G^* W + W, (1,0), (xi, unit)).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "functor.hpp"
#include "gf2.hpp"
#include "recollement.hpp"

namespace recolle {

template <AbelianCategory C1, AbelianCategory C2>
struct MVObject {
  ObjectOf<C2> x;
  ObjectOf<C1> v;
  MorphismOf<C1> alpha;  // F X -> V
  MorphismOf<C1> beta;   // V -> G X
};

template <AbelianCategory C1, AbelianCategory C2>
struct MVMorphism {
  std::shared_ptr<const MVObject<C1, C2>> src;
  std::shared_ptr<const MVObject<C1, C2>> tgt;
  MorphismOf<C2> f;
  MorphismOf<C1> phi;
};

/// A left adjoint of G with its unit W -> G G^* W and counit G^* G X -> X.
template <AbelianCategory C1, AbelianCategory C2>
struct LeftAdjointData {
  Functor<C1, C2> functor;
  std::function<MorphismOf<C1>(const ObjectOf<C1>&)> unit;
  std::function<MorphismOf<C2>(const ObjectOf<C2>&)> counit;
};

template <AbelianCategory C1, AbelianCategory C2>
class MVCategory {
 public:
  using Object = MVObject<C1, C2>;
  using Morphism = MVMorphism<C1, C2>;
  using KernelT = Kernel<Object, Morphism>;
  using CokernelT = Cokernel<Object, Morphism>;
  using BiproductT = Biproduct<Object, Morphism>;
  using CoverT = Cover<Object, Morphism>;

  MVCategory(std::string name, std::shared_ptr<const C1> a1, std::shared_ptr<const C2> a2, Functor<C2, C1> f,
             Functor<C2, C1> g, std::function<MorphismOf<C1>(const ObjectOf<C2>&)> xi,
             std::optional<LeftAdjointData<C1, C2>> gstar)
      : name_(std::move(name)), a1_(std::move(a1)), a2_(std::move(a2)), f_(std::move(f)), g_(std::move(g)),
        xi_(std::move(xi)), gstar_(std::move(gstar)) {
    x_rank_ = a2_->dims(a2_->zero_object()).size();
  }

  const C1& a1() const { return *a1_; }
  const C2& a2() const { return *a2_; }
  std::shared_ptr<const C1> a1_ptr() const { return a1_; }
  std::shared_ptr<const C2> a2_ptr() const { return a2_; }
  const Functor<C2, C1>& F() const { return f_; }
  const Functor<C2, C1>& G() const { return g_; }
  MorphismOf<C1> xi(const ObjectOf<C2>& x) const { return xi_(x); }
  const std::optional<LeftAdjointData<C1, C2>>& gstar() const { return gstar_; }

  std::string name() const { return name_; }

  // --- objects -------------------------------------------------------------

  Object make(ObjectOf<C2> x, ObjectOf<C1> v, MorphismOf<C1> alpha, MorphismOf<C1> beta) const {
    return Object{std::move(x), std::move(v), std::move(alpha), std::move(beta)};
  }

  /// Shapes of alpha and beta, and beta alpha = xi_X.
  bool is_valid(const Object& o) const {
    const C1& c = *a1_;
    if (!c.same_object(c.source(o.alpha), f_.obj(o.x)) || !c.same_object(c.target(o.alpha), o.v)) return false;
    if (!c.same_object(c.source(o.beta), o.v) || !c.same_object(c.target(o.beta), g_.obj(o.x))) return false;
    return c.equal(c.compose(o.beta, o.alpha), xi_(o.x));
  }

  Object zero_object() const {
    const auto x = a2_->zero_object();
    const auto v = a1_->zero_object();
    return make(x, v, a1_->zero_morphism(f_.obj(x), v), a1_->zero_morphism(v, g_.obj(x)));
  }

  std::vector<std::size_t> dims(const Object& o) const {
    auto d = a2_->dims(o.x);
    const auto dv = a1_->dims(o.v);
    d.insert(d.end(), dv.begin(), dv.end());
    return d;
  }
  bool is_zero_object(const Object& o) const { return a2_->is_zero_object(o.x) && a1_->is_zero_object(o.v); }
  bool same_object(const Object& a, const Object& b) const {
    return a2_->same_object(a.x, b.x) && a1_->same_object(a.v, b.v) && a1_->equal(a.alpha, b.alpha) &&
           a1_->equal(a.beta, b.beta);
  }

  // --- morphisms -----------------------------------------------------------

  Morphism morphism(const Object& s, const Object& t, MorphismOf<C2> f, MorphismOf<C1> phi) const {
    return Morphism{std::make_shared<const Object>(s), std::make_shared<const Object>(t), std::move(f),
                    std::move(phi)};
  }
  Morphism morphism(std::shared_ptr<const Object> s, std::shared_ptr<const Object> t, MorphismOf<C2> f,
                    MorphismOf<C1> phi) const {
    return Morphism{std::move(s), std::move(t), std::move(f), std::move(phi)};
  }

  bool is_morphism(const Morphism& m) const {
    const C1& c = *a1_;
    const bool left = c.equal(c.compose(m.phi, m.src->alpha), c.compose(m.tgt->alpha, f_.mor(m.f)));
    const bool right = c.equal(c.compose(g_.mor(m.f), m.src->beta), c.compose(m.tgt->beta, m.phi));
    return left && right;
  }

  const Object& source(const Morphism& m) const { return *m.src; }
  const Object& target(const Morphism& m) const { return *m.tgt; }

  Morphism identity(const Object& o) const {
    auto p = std::make_shared<const Object>(o);
    return morphism(p, p, a2_->identity(o.x), a1_->identity(o.v));
  }
  Morphism zero_morphism(const Object& a, const Object& b) const {
    return morphism(a, b, a2_->zero_morphism(a.x, b.x), a1_->zero_morphism(a.v, b.v));
  }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    return morphism(f.src, g.tgt, a2_->compose(g.f, f.f), a1_->compose(g.phi, f.phi));
  }
  Morphism add(const Morphism& f, const Morphism& g) const {
    return morphism(f.src, f.tgt, a2_->add(f.f, g.f), a1_->add(f.phi, g.phi));
  }
  bool is_zero(const Morphism& m) const { return a2_->is_zero(m.f) && a1_->is_zero(m.phi); }
  bool equal(const Morphism& f, const Morphism& g) const { return a2_->equal(f.f, g.f) && a1_->equal(f.phi, g.phi); }

  gf2::BitMatrix flatten(const Morphism& m) const {
    return gf2::BitMatrix::hstack(a2_->flatten(m.f), a1_->flatten(m.phi));
  }

  /// Pairs from the two hom bases cut down by the two commuting squares.
  std::vector<Morphism> hom_basis(const Object& a, const Object& b) const {
    const C1& c = *a1_;
    const auto fs = a2_->hom_basis(a.x, b.x);
    const auto ps = c.hom_basis(a.v, b.v);
    const std::size_t n = fs.size() + ps.size();
    if (n == 0) return {};
    auto residual = [&](const MorphismOf<C2>& f, const MorphismOf<C1>& phi) {
      const auto l = c.add(c.compose(phi, a.alpha), c.compose(b.alpha, f_.mor(f)));
      const auto r = c.add(c.compose(g_.mor(f), a.beta), c.compose(b.beta, phi));
      return gf2::BitMatrix::hstack(c.flatten(l), c.flatten(r));
    };
    std::vector<gf2::BitMatrix> cols;
    for (const auto& f : fs) cols.push_back(residual(f, c.zero_morphism(a.v, b.v)));
    for (const auto& p : ps) cols.push_back(residual(a2_->zero_morphism(a.x, b.x), p));
    const std::size_t len = cols.front().cols();
    gf2::BitMatrix sys(len, n);
    for (std::size_t i = 0; i < n; ++i) sys.set_block(0, i, cols[i].transpose());
    const auto ker = gf2::kernel_basis(gf2::LinearMap(sys));
    auto sp = std::make_shared<const Object>(a);
    auto tp = std::make_shared<const Object>(b);
    std::vector<Morphism> out;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      auto f = a2_->zero_morphism(a.x, b.x);
      auto phi = c.zero_morphism(a.v, b.v);
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (ker.basis().get(r, i)) f = a2_->add(f, fs[i]);
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (ker.basis().get(r, fs.size() + i)) phi = c.add(phi, ps[i]);
      out.push_back(morphism(sp, tp, f, phi));
    }
    return out;
  }

  // --- abelian structure -----------------------------------------------------

  KernelT kernel(const Morphism& m) const {
    const C1& c = *a1_;
    const auto kx = a2_->kernel(m.f);
    const auto kv = c.kernel(m.phi);
    const auto alpha = c.factor_through_mono(kv.inclusion, c.compose(m.src->alpha, f_.mor(kx.inclusion)));
    const auto beta = c.factor_through_mono(g_.mor(kx.inclusion), c.compose(m.src->beta, kv.inclusion));
    if (!alpha || !beta) throw std::logic_error("MVCategory::kernel: structure maps do not factor");
    const Object k = make(kx.object, kv.object, *alpha, *beta);
    return {k, morphism(std::make_shared<const Object>(k), m.src, kx.inclusion, kv.inclusion)};
  }

  CokernelT cokernel(const Morphism& m) const {
    const C1& c = *a1_;
    const auto qx = a2_->cokernel(m.f);
    const auto qv = c.cokernel(m.phi);
    const auto beta = c.factor_through_epi(qv.projection, c.compose(g_.mor(qx.projection), m.tgt->beta));
    const auto alpha = c.factor_through_epi(f_.mor(qx.projection), c.compose(qv.projection, m.tgt->alpha));
    if (!alpha || !beta) throw std::logic_error("MVCategory::cokernel: structure maps do not factor");
    const Object q = make(qx.object, qv.object, *alpha, *beta);
    return {q, morphism(m.tgt, std::make_shared<const Object>(q), qx.projection, qv.projection)};
  }

  BiproductT direct_sum(const Object& a, const Object& b) const {
    const C1& c = *a1_;
    const auto sx = a2_->direct_sum(a.x, b.x);
    const auto sv = c.direct_sum(a.v, b.v);
    const auto alpha = c.add(c.compose(sv.inj1, c.compose(a.alpha, f_.mor(sx.proj1))),
                             c.compose(sv.inj2, c.compose(b.alpha, f_.mor(sx.proj2))));
    const auto beta = c.add(c.compose(g_.mor(sx.inj1), c.compose(a.beta, sv.proj1)),
                            c.compose(g_.mor(sx.inj2), c.compose(b.beta, sv.proj2)));
    auto s = std::make_shared<const Object>(make(sx.object, sv.object, alpha, beta));
    auto pa = std::make_shared<const Object>(a);
    auto pb = std::make_shared<const Object>(b);
    return {*s, morphism(pa, s, sx.inj1, sv.inj1), morphism(pb, s, sx.inj2, sv.inj2),
            morphism(s, pa, sx.proj1, sv.proj1), morphism(s, pb, sx.proj2, sv.proj2)};
  }

  std::optional<Morphism> factor_through_mono(const Morphism& mono, const Morphism& g) const {
    const auto f = a2_->factor_through_mono(mono.f, g.f);
    const auto phi = a1_->factor_through_mono(mono.phi, g.phi);
    if (!f || !phi) return std::nullopt;
    return morphism(g.src, mono.src, *f, *phi);
  }

  std::optional<Morphism> factor_through_epi(const Morphism& epi, const Morphism& g) const {
    const auto f = a2_->factor_through_epi(epi.f, g.f);
    const auto phi = a1_->factor_through_epi(epi.phi, g.phi);
    if (!f || !phi) return std::nullopt;
    return morphism(epi.tgt, g.tgt, *f, *phi);
  }

  bool is_invertible(const Morphism& m) const { return a2_->is_invertible(m.f) && a1_->is_invertible(m.phi); }
  Morphism inverse(const Morphism& m) const {
    return morphism(m.tgt, m.src, a2_->inverse(m.f), a1_->inverse(m.phi));
  }

  // --- the structural functors on objects ----------------------------------

  Object j_lower_shriek(const ObjectOf<C2>& x) const {
    const auto fx = f_.obj(x);
    return make(x, fx, a1_->identity(fx), xi_(x));
  }
  Object j_lower_star(const ObjectOf<C2>& x) const {
    const auto gx = g_.obj(x);
    return make(x, gx, xi_(x), a1_->identity(gx));
  }
  Object i_lower_star(const ObjectOf<C1>& v) const {
    const auto z = a2_->zero_object();
    return make(z, v, a1_->zero_morphism(f_.obj(z), v), a1_->zero_morphism(v, g_.obj(z)));
  }

  /// The map j_! Y -> M adjunct to g : Y -> X.
  Morphism from_j_lower_shriek(const MorphismOf<C2>& g, const Object& m) const {
    return morphism(j_lower_shriek(a2_->source(g)), m, g, a1_->compose(m.alpha, f_.mor(g)));
  }

  /// r^* W = (G^* W, F G^* W + W, (1,0), (xi, unit)).
  Object r_star(const ObjectOf<C1>& w) const {
    const auto& gs = require_gstar();
    const C1& c = *a1_;
    const auto y = gs.functor.obj(w);
    const auto sum = c.direct_sum(f_.obj(y), w);
    const auto beta = c.add(c.compose(xi_(y), sum.proj1), c.compose(gs.unit(w), sum.proj2));
    return make(y, sum.object, sum.inj1, beta);
  }

  /// The map r^* W -> M adjunct to p : W -> V = r(M).
  Morphism from_r_star(const MorphismOf<C1>& p, const Object& m) const {
    const auto& gs = require_gstar();
    const C1& c = *a1_;
    const auto w = c.source(p);
    const auto src = r_star(w);
    const auto y = src.x;
    const auto f = a2_->compose(gs.counit(m.x), gs.functor.mor(c.compose(m.beta, p)));
    const auto sum = c.direct_sum(f_.obj(y), w);
    const auto phi = c.add(c.compose(m.alpha, c.compose(f_.mor(f), sum.proj1)), c.compose(p, sum.proj2));
    return morphism(src, m, f, phi);
  }

  /// j_!(Q) + r^*(P) -> M from projective covers Q -> X and P -> V.
  CoverT projective_cover(const Object& m) const {
    const auto qx = a2_->projective_cover(m.x);
    const auto pv = a1_->projective_cover(m.v);
    const auto e1 = from_j_lower_shriek(qx.epi, m);
    const auto e2 = from_r_star(pv.epi, m);
    const auto sum = direct_sum(*e1.src, *e2.src);
    const auto epi = add(compose(e1, sum.proj1), compose(e2, sum.proj2));
    return {sum.object, epi};
  }

  /// Every object with the given dims = (dims X, dims V).
  std::vector<Object> enumerate(const std::vector<std::size_t>& d, std::size_t max_bits = 24) const {
    const std::vector<std::size_t> dx(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(x_rank_));
    const std::vector<std::size_t> dv(d.begin() + static_cast<std::ptrdiff_t>(x_rank_), d.end());
    std::vector<Object> out;
    for (const auto& x : enumerate_in(*a2_, dx, max_bits))
      for (const auto& v : enumerate_in(*a1_, dv, max_bits)) {
        const auto fx = f_.obj(x);
        const auto gx = g_.obj(x);
        const auto xi = xi_(x);
        const auto alphas = all_morphisms(*a1_, fx, v, max_bits);
        const auto betas = all_morphisms(*a1_, v, gx, max_bits);
        if (alphas.size() * betas.size() > (std::size_t{1} << max_bits))
          throw BudgetExceeded("MVCategory::enumerate: too many structure maps");
        for (const auto& a : alphas)
          for (const auto& b : betas)
            if (a1_->equal(a1_->compose(b, a), xi)) out.push_back(make(x, v, a, b));
      }
    return out;
  }

  std::vector<Object> enumerate_up_to(const std::vector<std::size_t>& max_dims, std::size_t max_bits = 24) const {
    std::vector<Object> out;
    std::vector<std::size_t> d(max_dims.size(), 0);
    while (true) {
      auto part = enumerate(d, max_bits);
      out.insert(out.end(), part.begin(), part.end());
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

  nlohmann::json to_json(const Object& o) const {
    return {{"X", a2_->to_json(o.x)}, {"V", a1_->to_json(o.v)}, {"alpha", a1_->morphism_json(o.alpha)},
            {"beta", a1_->morphism_json(o.beta)}};
  }
  nlohmann::json morphism_json(const Morphism& m) const {
    return {{"source", to_json(*m.src)}, {"target", to_json(*m.tgt)}, {"f", a2_->morphism_json(m.f)},
            {"phi", a1_->morphism_json(m.phi)}};
  }

 private:
  template <class C>
  static std::vector<ObjectOf<C>> enumerate_in(const C& c, const std::vector<std::size_t>& d, std::size_t max_bits) {
    return c.enumerate(d, max_bits);
  }

  const LeftAdjointData<C1, C2>& require_gstar() const {
    if (!gstar_) throw std::logic_error("MVCategory: no left adjoint of G supplied, projectives unavailable");
    return *gstar_;
  }

  std::string name_;
  std::shared_ptr<const C1> a1_;
  std::shared_ptr<const C2> a2_;
  Functor<C2, C1> f_;
  Functor<C2, C1> g_;
  std::function<MorphismOf<C1>(const ObjectOf<C2>&)> xi_;
  std::optional<LeftAdjointData<C1, C2>> gstar_;
  std::size_t x_rank_ = 0;
};

// ---------------------------------------------------------------------------
// The recollement of A(xi).

template <AbelianCategory C1, AbelianCategory C2>
using MVRecollement = Recollement<C1, MVCategory<C1, C2>, C2>;

template <AbelianCategory C1, AbelianCategory C2>
MVRecollement<C1, C2> mv_recollement(std::shared_ptr<const MVCategory<C1, C2>> mv) {
  using M = MVCategory<C1, C2>;
  using O = typename M::Object;
  using Mor = typename M::Morphism;
  MVRecollement<C1, C2> rec;
  rec.name = mv->name();
  rec.a = mv;
  rec.a1 = mv->a1_ptr();
  rec.a2 = mv->a2_ptr();
  const auto a1 = rec.a1;
  const auto a2 = rec.a2;

  rec.i_upper_star = {"i^*", mv, a1, [a1](const O& o) { return a1->cokernel(o.alpha).object; },
                      [a1](const Mor& m) {
                        const auto s = a1->cokernel(m.src->alpha);
                        const auto t = a1->cokernel(m.tgt->alpha);
                        const auto h = a1->factor_through_epi(s.projection, a1->compose(t.projection, m.phi));
                        if (!h) throw std::logic_error("i^*: map on cokernels does not exist");
                        return *h;
                      },
                      Exactness::right};
  rec.i_lower_star = {"i_*", a1, mv, [mv](const ObjectOf<C1>& v) { return mv->i_lower_star(v); },
                      [mv, a2](const MorphismOf<C1>& f) {
                        const auto z = a2->zero_object();
                        return mv->morphism(mv->i_lower_star(mv->a1().source(f)), mv->i_lower_star(mv->a1().target(f)),
                                            a2->identity(z), f);
                      },
                      Exactness::exact};
  rec.i_upper_shriek = {"i^!", mv, a1, [a1](const O& o) { return a1->kernel(o.beta).object; },
                        [a1](const Mor& m) {
                          const auto s = a1->kernel(m.src->beta);
                          const auto t = a1->kernel(m.tgt->beta);
                          const auto h = a1->factor_through_mono(t.inclusion, a1->compose(m.phi, s.inclusion));
                          if (!h) throw std::logic_error("i^!: map on kernels does not exist");
                          return *h;
                        },
                        Exactness::left};
  rec.j_lower_shriek = {"j_!", a2, mv, [mv](const ObjectOf<C2>& x) { return mv->j_lower_shriek(x); },
                        [mv](const MorphismOf<C2>& f) {
                          return mv->morphism(mv->j_lower_shriek(mv->a2().source(f)),
                                              mv->j_lower_shriek(mv->a2().target(f)), f, mv->F().mor(f));
                        },
                        Exactness::right};
  rec.j_upper_star = {"j^*", mv, a2, [](const O& o) { return o.x; }, [](const Mor& m) { return m.f; },
                      Exactness::exact};
  rec.j_lower_star = {"j_*", a2, mv, [mv](const ObjectOf<C2>& x) { return mv->j_lower_star(x); },
                      [mv](const MorphismOf<C2>& f) {
                        return mv->morphism(mv->j_lower_star(mv->a2().source(f)),
                                            mv->j_lower_star(mv->a2().target(f)), f, mv->G().mor(f));
                      },
                      Exactness::left};

  rec.unit_i = [mv, a1, a2](const O& o) {
    const auto q = a1->cokernel(o.alpha);
    return mv->morphism(o, mv->i_lower_star(q.object), a2->zero_morphism(o.x, a2->zero_object()), q.projection);
  };
  rec.counit_i = [mv, a1](const ObjectOf<C1>& v) {
    const auto w = mv->i_lower_star(v);
    return a1->inverse(a1->cokernel(w.alpha).projection);
  };
  rec.unit_i_shriek = [mv, a1](const ObjectOf<C1>& v) {
    const auto w = mv->i_lower_star(v);
    return a1->inverse(a1->kernel(w.beta).inclusion);
  };
  rec.counit_i_shriek = [mv, a1, a2](const O& o) {
    const auto k = a1->kernel(o.beta);
    return mv->morphism(mv->i_lower_star(k.object), o, a2->zero_morphism(a2->zero_object(), o.x), k.inclusion);
  };
  rec.unit_j_shriek = [a2](const ObjectOf<C2>& x) { return a2->identity(x); };
  rec.epsilon = [mv, a2](const O& o) {
    return mv->morphism(mv->j_lower_shriek(o.x), o, a2->identity(o.x), o.alpha);
  };
  rec.eta = [mv, a2](const O& o) { return mv->morphism(o, mv->j_lower_star(o.x), a2->identity(o.x), o.beta); };
  rec.counit_j = [a2](const ObjectOf<C2>& x) { return a2->identity(x); };
  rec.retraction = Functor<M, C1>{"r", mv, a1, [](const O& o) { return o.v; }, [](const Mor& m) { return m.phi; },
                                  Exactness::exact};
  return rec;
}

/// r^* as a functor A' -> A(xi).
template <AbelianCategory C1, AbelianCategory C2>
Functor<C1, MVCategory<C1, C2>> r_star_functor(std::shared_ptr<const MVCategory<C1, C2>> mv) {
  return {"r^*", mv->a1_ptr(), mv, [mv](const ObjectOf<C1>& w) { return mv->r_star(w); },
          [mv](const MorphismOf<C1>& p) {
            // r^* p is adjunct to the composite W -> W' -> r(r^* W') = F G^* W' + W'.
            const auto& c = mv->a1();
            const auto t = mv->r_star(c.target(p));
            const auto sum = c.direct_sum(mv->F().obj(t.x), c.target(p));
            return mv->from_r_star(c.compose(sum.inj2, p), t);
          },
          Exactness::right};
}

/// Unit W -> r r^* W and counit r^* r M -> M of r^* -| r.
template <AbelianCategory C1, AbelianCategory C2>
Adjunction<C1, MVCategory<C1, C2>> r_star_adjunction(std::shared_ptr<const MVCategory<C1, C2>> mv) {
  using O = typename MVCategory<C1, C2>::Object;
  const auto rs = r_star_functor(mv);
  const Functor<MVCategory<C1, C2>, C1> r{"r", mv, mv->a1_ptr(), [](const O& o) { return o.v; },
                                          [](const typename MVCategory<C1, C2>::Morphism& m) { return m.phi; },
                                          Exactness::exact};
  return {"r^*-|r", rs, r,
          [mv](const ObjectOf<C1>& w) {
            const auto& c = mv->a1();
            const auto t = mv->r_star(w);
            return c.direct_sum(mv->F().obj(t.x), w).inj2;
          },
          [mv](const O& m) { return mv->from_r_star(mv->a1().identity(m.v), m); }};
}

/// Builds A(xi) after auditing F right exact, G left exact and xi natural on
/// short exact sequences and maps among `audit_objects`; throws on failure.
template <AbelianCategory C1, AbelianCategory C2>
std::shared_ptr<const MVCategory<C1, C2>> mv_construct(std::string name, Functor<C2, C1> f, Functor<C2, C1> g,
                                                        std::function<MorphismOf<C1>(const ObjectOf<C2>&)> xi,
                                                        std::optional<LeftAdjointData<C1, C2>> gstar,
                                                        const std::vector<ObjectOf<C2>>& audit_objects,
                                                        std::uint64_t seed = 0xF2F2) {
  const C2& a2 = *f.src;
  const auto seqs = sample_short_exact(a2, audit_objects, 4, 2, seed);
  const auto pf = exactness_profile(f, seqs);
  const auto pg = exactness_profile(g, seqs);
  if (!pf.right_exact) throw std::invalid_argument("mv_construct: F is not right exact on the audit sample");
  if (!pg.left_exact) throw std::invalid_argument("mv_construct: G is not left exact on the audit sample");
  Tally nat("xi_natural");
  const NatTrans<C2, C1> t{"xi", f, g, xi};
  check_naturality(nat, t, sample_morphisms(a2, audit_objects, 64, seed + 1));
  if (nat.failed()) throw std::invalid_argument("mv_construct: xi is not natural on the audit sample");
  auto a1 = f.dst;
  auto a2p = f.src;
  return std::make_shared<const MVCategory<C1, C2>>(std::move(name), a1, a2p, std::move(f), std::move(g),
                                                    std::move(xi), std::move(gstar));
}

}  // namespace recolle
