#pragma once

// Additive functors given by procedures, natural transformations,
// adjunctions, derived functors and exactness audits.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "rep.hpp"
#include "report.hpp"

namespace recolle {

enum class Exactness { none, left, right, exact };

inline const char* to_string(Exactness e) {
  switch (e) {
    case Exactness::none: return "none";
    case Exactness::left: return "left";
    case Exactness::right: return "right";
    case Exactness::exact: return "exact";
  }
  return "?";
}

template <AbelianCategory S, AbelianCategory T>
struct Functor {
  std::string name;
  std::shared_ptr<const S> src;
  std::shared_ptr<const T> dst;
  std::function<ObjectOf<T>(const ObjectOf<S>&)> on_object;
  std::function<MorphismOf<T>(const MorphismOf<S>&)> on_morphism;
  Exactness declared = Exactness::none;

  ObjectOf<T> obj(const ObjectOf<S>& x) const { return on_object(x); }
  MorphismOf<T> mor(const MorphismOf<S>& f) const { return on_morphism(f); }
};

template <AbelianCategory C>
Functor<C, C> identity_functor(std::shared_ptr<const C> c) {
  return {"Id", c, c, [](const ObjectOf<C>& x) { return x; }, [](const MorphismOf<C>& f) { return f; },
          Exactness::exact};
}

/// g after f.
template <AbelianCategory A, AbelianCategory B, AbelianCategory C>
Functor<A, C> compose(const Functor<B, C>& g, const Functor<A, B>& f) {
  Exactness e = Exactness::none;
  if (f.declared == g.declared) e = f.declared;
  else if (f.declared == Exactness::exact) e = g.declared;
  else if (g.declared == Exactness::exact) e = f.declared;
  return {g.name + f.name, f.src, g.dst, [g, f](const ObjectOf<A>& x) { return g.obj(f.obj(x)); },
          [g, f](const MorphismOf<A>& m) { return g.mor(f.mor(m)); }, e};
}

template <AbelianCategory S, AbelianCategory T>
struct NatTrans {
  std::string name;
  Functor<S, T> from;
  Functor<S, T> to;
  std::function<MorphismOf<T>(const ObjectOf<S>&)> component;

  MorphismOf<T> at(const ObjectOf<S>& x) const { return component(x); }
};

/// L -| R with unit Id -> RL and counit LR -> Id.
template <AbelianCategory C, AbelianCategory D>
struct Adjunction {
  std::string name;
  Functor<C, D> left;
  Functor<D, C> right;
  std::function<MorphismOf<C>(const ObjectOf<C>&)> unit;
  std::function<MorphismOf<D>(const ObjectOf<D>&)> counit;
};

// ---------------------------------------------------------------------------
// Audits of functor and transformation laws over sample data.

template <AbelianCategory S, AbelianCategory T>
Check check_functor_laws(const Functor<S, T>& f, const std::vector<ObjectOf<S>>& objects, std::size_t pair_budget,
                         std::uint64_t seed) {
  Tally t("functor_laws." + f.name);
  const S& s = *f.src;
  const T& d = *f.dst;
  std::mt19937_64 rng(seed);
  for (const auto& x : objects) {
    t.expect(d.equal(f.mor(s.identity(x)), d.identity(f.obj(x))), "identity not preserved", s.to_json(x));
    t.expect(d.same_object(d.target(f.mor(s.identity(x))), f.obj(x)), "object map and morphism map disagree",
             s.to_json(x));
  }
  if (objects.empty()) return t.finish();
  for (std::size_t k = 0; k < pair_budget; ++k) {
    const auto& a = objects[rng() % objects.size()];
    const auto& b = objects[rng() % objects.size()];
    const auto& c = objects[rng() % objects.size()];
    const auto g1 = random_morphism(s, a, b, rng);
    const auto g2 = random_morphism(s, b, c, rng);
    const auto h = random_morphism(s, a, b, rng);
    t.expect(d.equal(f.mor(s.compose(g2, g1)), d.compose(f.mor(g2), f.mor(g1))), "composition not preserved",
             s.morphism_json(g1));
    t.expect(d.equal(f.mor(s.add(g1, h)), d.add(f.mor(g1), f.mor(h))), "not additive on morphisms",
             s.morphism_json(g1));
    const auto sum = s.direct_sum(a, b);
    const auto fs = d.direct_sum(f.obj(a), f.obj(b));
    t.expect(is_isomorphic(d, f.obj(sum.object), fs.object) != Verdict::no, "not additive on objects",
             s.to_json(sum.object));
  }
  return t.finish();
}

template <AbelianCategory S, AbelianCategory T>
void check_naturality(Tally& t, const NatTrans<S, T>& n, const std::vector<MorphismOf<S>>& morphisms) {
  const S& s = *n.from.src;
  const T& d = *n.from.dst;
  for (const auto& f : morphisms) {
    const auto lhs = d.compose(n.to.mor(f), n.at(s.source(f)));
    const auto rhs = d.compose(n.at(s.target(f)), n.from.mor(f));
    t.expect(d.equal(lhs, rhs), "naturality square for " + n.name + " does not commute", s.morphism_json(f));
  }
}

/// Sample morphisms: up to `per_pair` random elements of Hom(a, b) for pairs
/// drawn from `objects`.
template <AbelianCategory C>
std::vector<MorphismOf<C>> sample_morphisms(const C& c, const std::vector<ObjectOf<C>>& objects, std::size_t count,
                                            std::uint64_t seed) {
  std::vector<MorphismOf<C>> out;
  if (objects.empty()) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& a = objects[rng() % objects.size()];
    const auto& b = objects[rng() % objects.size()];
    out.push_back(random_morphism(c, a, b, rng));
  }
  return out;
}

/// Triangle identities, naturality of unit and counit, and the hom-set
/// bijection g -> R(g) unit_X from Hom(LX, A) to Hom(X, RA).
template <AbelianCategory C, AbelianCategory D>
Check check_adjunction(const Adjunction<C, D>& adj, const std::vector<ObjectOf<C>>& xs,
                       const std::vector<ObjectOf<D>>& as, std::size_t morphism_samples, std::uint64_t seed) {
  Tally t("adjunction." + adj.name);
  const C& c = *adj.left.src;
  const D& d = *adj.left.dst;
  const auto& L = adj.left;
  const auto& R = adj.right;
  for (const auto& x : xs) {
    const auto eta = adj.unit(x);
    t.expect(c.same_object(c.source(eta), x) && c.same_object(c.target(eta), R.obj(L.obj(x))),
             "unit has the wrong endpoints", c.to_json(x));
    const auto tri = d.compose(adj.counit(L.obj(x)), L.mor(eta));
    t.expect(d.equal(tri, d.identity(L.obj(x))), "triangle identity on L fails", c.to_json(x));
  }
  for (const auto& a : as) {
    const auto eps = adj.counit(a);
    t.expect(d.same_object(d.source(eps), L.obj(R.obj(a))) && d.same_object(d.target(eps), a),
             "counit has the wrong endpoints", d.to_json(a));
    const auto tri = c.compose(R.mor(eps), adj.unit(R.obj(a)));
    t.expect(c.equal(tri, c.identity(R.obj(a))), "triangle identity on R fails", d.to_json(a));
  }
  const NatTrans<C, C> unit{adj.name + ".unit", identity_functor(adj.left.src), compose(R, L), adj.unit};
  const NatTrans<D, D> counit{adj.name + ".counit", compose(L, R), identity_functor(adj.left.dst), adj.counit};
  check_naturality(t, unit, sample_morphisms(c, xs, morphism_samples, seed));
  check_naturality(t, counit, sample_morphisms(d, as, morphism_samples, seed + 1));
  for (const auto& x : xs)
    for (const auto& a : as) {
      const auto lhs = d.hom_basis(L.obj(x), a);
      const auto rhs = c.hom_basis(x, R.obj(a));
      if (lhs.size() != rhs.size()) {
        t.fail("hom dimensions differ across the adjunction",
               nlohmann::json{{"X", c.to_json(x)}, {"A", d.to_json(a)}});
        continue;
      }
      std::vector<MorphismOf<C>> images;
      for (const auto& g : lhs) images.push_back(c.compose(R.mor(g), adj.unit(x)));
      t.expect(span_rank(c, images) == rhs.size(), "adjunction map on hom sets is not bijective",
               nlohmann::json{{"X", c.to_json(x)}, {"A", d.to_json(a)}});
    }
  return t.finish();
}

// ---------------------------------------------------------------------------
// Exactness.

/// Short exact sequences ker h -> Y -> coim h for h : Y -> W.
template <AbelianCategory C>
struct ShortExact {
  MorphismOf<C> incl;
  MorphismOf<C> proj;
};

template <AbelianCategory C>
ShortExact<C> short_exact_from(const C& c, const MorphismOf<C>& h) {
  const auto k = c.kernel(h);
  const auto q = c.cokernel(k.inclusion);
  return {k.inclusion, q.projection};
}

/// Every map between sample objects when the hom space is small, else a
/// seeded selection of `random_per_pair` maps.
template <AbelianCategory C>
std::vector<ShortExact<C>> sample_short_exact(const C& c, const std::vector<ObjectOf<C>>& objects,
                                              std::size_t exhaustive_basis, std::size_t random_per_pair,
                                              std::uint64_t seed) {
  std::vector<ShortExact<C>> out;
  std::mt19937_64 rng(seed);
  for (const auto& y : objects)
    for (const auto& w : objects) {
      const auto basis = c.hom_basis(y, w);
      if (basis.size() <= exhaustive_basis) {
        for (const auto& h : all_morphisms(c, y, w, exhaustive_basis)) out.push_back(short_exact_from(c, h));
      } else {
        for (std::size_t k = 0; k < random_per_pair; ++k) out.push_back(short_exact_from(c, random_morphism(c, y, w, rng)));
      }
    }
  return out;
}

struct ExactnessProfile {
  bool left_exact = true;
  bool right_exact = true;
  std::size_t sequences = 0;
  std::optional<nlohmann::json> left_witness;
  std::optional<nlohmann::json> right_witness;

  bool exact() const { return left_exact && right_exact; }
  Exactness as_exactness() const {
    if (left_exact && right_exact) return Exactness::exact;
    if (left_exact) return Exactness::left;
    if (right_exact) return Exactness::right;
    return Exactness::none;
  }
};

/// Applies f to each sequence 0 -> K -> Y -> Q -> 0. Left exactness needs
/// F(K) -> F(Y) mono and exactness at F(Y); right exactness needs F(Y) -> F(Q)
/// epi and exactness at F(Y).
template <AbelianCategory S, AbelianCategory T>
ExactnessProfile exactness_profile(const Functor<S, T>& f, const std::vector<ShortExact<S>>& seqs) {
  ExactnessProfile p;
  const S& s = *f.src;
  const T& d = *f.dst;
  for (const auto& e : seqs) {
    ++p.sequences;
    const auto fi = f.mor(e.incl);
    const auto fp = f.mor(e.proj);
    const bool middle = is_exact_at(d, fi, fp);
    auto witness = [&]() {
      return nlohmann::json{{"incl", s.morphism_json(e.incl)}, {"proj", s.morphism_json(e.proj)}};
    };
    if (p.left_exact && !(middle && is_mono(d, fi))) {
      p.left_exact = false;
      p.left_witness = witness();
    }
    if (p.right_exact && !(middle && is_epi(d, fp))) {
      p.right_exact = false;
      p.right_witness = witness();
    }
  }
  return p;
}

/// Confirms a functor's declared exactness against a profile.
template <AbelianCategory S, AbelianCategory T>
Check audit_exactness(const Functor<S, T>& f, const std::vector<ShortExact<S>>& seqs) {
  Tally t("exactness." + f.name);
  const auto p = exactness_profile(f, seqs);
  const bool need_left = f.declared == Exactness::left || f.declared == Exactness::exact;
  const bool need_right = f.declared == Exactness::right || f.declared == Exactness::exact;
  t.expect(!need_left || p.left_exact, "declared left exact but fails", p.left_witness.value_or(nullptr));
  t.expect(!need_right || p.right_exact, "declared right exact but fails", p.right_witness.value_or(nullptr));
  t.set_note(std::string("declared ") + to_string(f.declared) + ", observed " + to_string(p.as_exactness()) +
             " on " + std::to_string(p.sequences) + " sequences");
  return t.finish();
}

// ---------------------------------------------------------------------------
// Derived functors.

/// H_n of f applied to the given resolution (n = 0 is the cokernel of F(d_0)).
template <AbelianCategory S, AbelianCategory T>
ObjectOf<T> derived_left_from(const Functor<S, T>& f, const Resolution<S>& res, std::size_t n) {
  const T& d = *f.dst;
  if (res.terms.size() < n + 2) throw std::invalid_argument("derived_left: resolution too short");
  const auto in = f.mor(res.differentials[n]);
  const auto out = n == 0 ? d.zero_morphism(f.obj(res.terms[0]), d.zero_object()) : f.mor(res.differentials[n - 1]);
  return homology(d, in, out);
}

template <AbelianCategory S, AbelianCategory T>
ObjectOf<T> derived_left(const Functor<S, T>& f, const ObjectOf<S>& m, std::size_t n) {
  return derived_left_from(f, resolve(*f.src, m, n + 1), n);
}

/// Adds the contractible piece `extra` -id-> `extra` in degrees k+1, k.
template <AbelianCategory C>
Resolution<C> pad_resolution(const C& c, const Resolution<C>& res, std::size_t k, const ObjectOf<C>& extra) {
  if (k + 1 >= res.terms.size()) throw std::invalid_argument("pad_resolution: degree out of range");
  Resolution<C> out;
  std::vector<Biproduct<ObjectOf<C>, MorphismOf<C>>> sums;
  for (std::size_t i = 0; i < res.terms.size(); ++i) {
    if (i == k || i == k + 1) {
      sums.push_back(c.direct_sum(res.terms[i], extra));
      out.terms.push_back(sums.back().object);
    } else {
      sums.push_back(c.direct_sum(res.terms[i], c.zero_object()));
      out.terms.push_back(res.terms[i]);
    }
  }
  auto pad = [&](std::size_t i) { return i == k || i == k + 1; };
  for (std::size_t i = 0; i < res.differentials.size(); ++i) {
    // d_i : P_{i+1} -> P_i
    auto d = res.differentials[i];
    if (pad(i + 1) || pad(i)) {
      const auto& from = sums[i + 1];
      const auto& to = sums[i];
      auto src_part = pad(i + 1) ? c.compose(d, from.proj1) : d;
      auto full = pad(i) ? c.compose(to.inj1, src_part) : src_part;
      if (i == k) full = c.add(full, c.compose(to.inj2, from.proj2));
      d = full;
    }
    out.differentials.push_back(d);
  }
  if (res.augmentation) out.augmentation = k == 0 ? c.compose(*res.augmentation, sums[0].proj1) : *res.augmentation;
  return out;
}

/// Conjugate D F D of a functor between representation categories, acting
/// between the opposite categories.
inline Functor<RepCategory, RepCategory> conjugate_by_duality(const Functor<RepCategory, RepCategory>& f) {
  auto sop = std::make_shared<const RepCategory>(f.src->opposite());
  auto top = std::make_shared<const RepCategory>(f.dst->opposite());
  Exactness e = f.declared;
  if (e == Exactness::left) e = Exactness::right;
  else if (e == Exactness::right) e = Exactness::left;
  return {"D" + f.name + "D", sop, top,
          [f, sop](const Rep& x) { return f.dst->dualize(f.obj(sop->dualize(x))); },
          [f, sop](const RepMorphism& m) { return f.dst->dualize(f.mor(sop->dualize(m))); }, e};
}

/// R^n F(m) = D L_n(D F D)(D m).
inline Rep derived_right(const Functor<RepCategory, RepCategory>& f, const Rep& m, std::size_t n) {
  const auto conj = conjugate_by_duality(f);
  return conj.dst->dualize(derived_left(conj, f.src->dualize(m), n));
}

}  // namespace recolle
