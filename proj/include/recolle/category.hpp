#pragma once

// Category-generic algorithms. Every abelian category in the library (bound
// quiver representations, MacPherson-Vilonen gluings) models the
// `AbelianCategory` concept below; everything here is written once against it.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gf2.hpp"

namespace recolle {

/// Thrown when an exhaustive search would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { yes, no, undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

/// Exhaustive isomorphism search runs when the hom space has at most this many
/// basis elements.
inline constexpr std::size_t kDefaultIsoBudget = 16;

template <class O, class M>
struct Kernel {
  O object;
  M inclusion;
};

template <class O, class M>
struct Cokernel {
  O object;
  M projection;
};

template <class O, class M>
struct Biproduct {
  O object;
  M inj1, inj2, proj1, proj2;
};

template <class O, class M>
struct Cover {
  O object;
  M epi;
};

template <class C>
concept AbelianCategory = requires(const C& c, const typename C::Object& o, const typename C::Morphism& m) {
  typename C::Object;
  typename C::Morphism;
  { c.name() } -> std::convertible_to<std::string>;
  { c.zero_object() } -> std::same_as<typename C::Object>;
  { c.identity(o) } -> std::same_as<typename C::Morphism>;
  { c.zero_morphism(o, o) } -> std::same_as<typename C::Morphism>;
  { c.compose(m, m) } -> std::same_as<typename C::Morphism>;
  { c.add(m, m) } -> std::same_as<typename C::Morphism>;
  { c.source(m) } -> std::convertible_to<const typename C::Object&>;
  { c.target(m) } -> std::convertible_to<const typename C::Object&>;
  { c.dims(o) } -> std::same_as<std::vector<std::size_t>>;
  { c.is_zero_object(o) } -> std::same_as<bool>;
  { c.is_zero(m) } -> std::same_as<bool>;
  { c.same_object(o, o) } -> std::same_as<bool>;
  { c.equal(m, m) } -> std::same_as<bool>;
  { c.hom_basis(o, o) } -> std::same_as<std::vector<typename C::Morphism>>;
  { c.flatten(m) } -> std::same_as<gf2::BitMatrix>;
  { c.kernel(m) } -> std::same_as<Kernel<typename C::Object, typename C::Morphism>>;
  { c.cokernel(m) } -> std::same_as<Cokernel<typename C::Object, typename C::Morphism>>;
  { c.direct_sum(o, o) } -> std::same_as<Biproduct<typename C::Object, typename C::Morphism>>;
  { c.factor_through_mono(m, m) } -> std::same_as<std::optional<typename C::Morphism>>;
  { c.factor_through_epi(m, m) } -> std::same_as<std::optional<typename C::Morphism>>;
  { c.is_invertible(m) } -> std::same_as<bool>;
  { c.inverse(m) } -> std::same_as<typename C::Morphism>;
  { c.projective_cover(o) } -> std::same_as<Cover<typename C::Object, typename C::Morphism>>;
  { c.to_json(o) } -> std::same_as<nlohmann::json>;
  { c.morphism_json(m) } -> std::same_as<nlohmann::json>;
};

template <class C>
using ObjectOf = typename C::Object;
template <class C>
using MorphismOf = typename C::Morphism;

inline std::size_t total(const std::vector<std::size_t>& dims) {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

// ---------------------------------------------------------------------------
// Elementary consequences of the abelian structure.

/// Image of f as a subobject of its target (kernel of the cokernel projection).
template <AbelianCategory C>
Kernel<ObjectOf<C>, MorphismOf<C>> image(const C& c, const MorphismOf<C>& f) {
  return c.kernel(c.cokernel(f).projection);
}

/// Coimage: the quotient of the source by the kernel, with the projection.
template <AbelianCategory C>
Cokernel<ObjectOf<C>, MorphismOf<C>> coimage(const C& c, const MorphismOf<C>& f) {
  return c.cokernel(c.kernel(f).inclusion);
}

template <AbelianCategory C>
bool is_mono(const C& c, const MorphismOf<C>& f) {
  return c.is_zero_object(c.kernel(f).object);
}

template <AbelianCategory C>
bool is_epi(const C& c, const MorphismOf<C>& f) {
  return c.is_zero_object(c.cokernel(f).object);
}

/// Exactness of X -f-> Y -g-> Z at Y.
template <AbelianCategory C>
bool is_exact_at(const C& c, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!c.is_zero(c.compose(g, f))) return false;
  return c.dims(c.kernel(g).object) == c.dims(image(c, f).object);
}

template <AbelianCategory C>
bool is_short_exact(const C& c, const MorphismOf<C>& incl, const MorphismOf<C>& proj) {
  return is_mono(c, incl) && is_epi(c, proj) && is_exact_at(c, incl, proj);
}

/// The pullback of f: A -> Z and g: B -> Z with its projections to A and B.
template <AbelianCategory C>
struct PullbackSquare {
  ObjectOf<C> object;
  MorphismOf<C> to_first;
  MorphismOf<C> to_second;
};

template <AbelianCategory C>
PullbackSquare<C> pullback(const C& c, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  const auto sum = c.direct_sum(c.source(f), c.source(g));
  // f p1 - g p2, and subtraction is addition over F2.
  const auto diff = c.add(c.compose(f, sum.proj1), c.compose(g, sum.proj2));
  const auto k = c.kernel(diff);
  return {k.object, c.compose(sum.proj1, k.inclusion), c.compose(sum.proj2, k.inclusion)};
}

template <AbelianCategory C>
struct PushoutSquare {
  ObjectOf<C> object;
  MorphismOf<C> from_first;
  MorphismOf<C> from_second;
};

template <AbelianCategory C>
PushoutSquare<C> pushout(const C& c, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  const auto sum = c.direct_sum(c.target(f), c.target(g));
  const auto diff = c.add(c.compose(sum.inj1, f), c.compose(sum.inj2, g));
  const auto q = c.cokernel(diff);
  return {q.object, c.compose(q.projection, sum.inj1), c.compose(q.projection, sum.inj2)};
}

/// Homology at Y of X -in-> Y -out-> Z, assuming out * in == 0.
template <AbelianCategory C>
ObjectOf<C> homology(const C& c, const MorphismOf<C>& incoming, const MorphismOf<C>& outgoing) {
  const auto k = c.kernel(outgoing);
  const auto lifted = c.factor_through_mono(k.inclusion, incoming);
  if (!lifted) throw std::logic_error("homology: incoming map does not land in the kernel");
  return c.cokernel(*lifted).object;
}

// ---------------------------------------------------------------------------
// Hom spaces as F2-vector spaces.

template <AbelianCategory C>
MorphismOf<C> combination(const C& c, const ObjectOf<C>& a, const ObjectOf<C>& b,
                          const std::vector<MorphismOf<C>>& basis, std::uint64_t coeffs) {
  auto m = c.zero_morphism(a, b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((coeffs >> i) & 1U) m = c.add(m, basis[i]);
  return m;
}

/// Every element of Hom(a, b); refuses above 2^max_basis elements.
template <AbelianCategory C>
std::vector<MorphismOf<C>> all_morphisms(const C& c, const ObjectOf<C>& a, const ObjectOf<C>& b,
                                         std::size_t max_basis = 16) {
  const auto basis = c.hom_basis(a, b);
  if (basis.size() > max_basis) throw BudgetExceeded("all_morphisms: hom space too large to enumerate");
  std::vector<MorphismOf<C>> out;
  out.reserve(std::size_t{1} << basis.size());
  out.push_back(c.zero_morphism(a, b));
  // Gray code order: each step adds one basis element.
  auto cur = out.front();
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
    cur = c.add(cur, basis[static_cast<std::size_t>(std::countr_zero(i))]);
    out.push_back(cur);
  }
  return out;
}

template <AbelianCategory C, class Rng>
MorphismOf<C> random_morphism(const C& c, const ObjectOf<C>& a, const ObjectOf<C>& b, Rng& rng) {
  const auto basis = c.hom_basis(a, b);
  auto m = c.zero_morphism(a, b);
  for (const auto& e : basis)
    if (rng() & 1U) m = c.add(m, e);
  return m;
}

/// Rank of the span of the given morphisms, via their flattened bit vectors.
template <AbelianCategory C>
std::size_t span_rank(const C& c, const std::vector<MorphismOf<C>>& ms) {
  if (ms.empty()) return 0;
  gf2::BitMatrix rows;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const gf2::BitMatrix f = c.flatten(ms[i]);
    if (i == 0) rows = gf2::BitMatrix(ms.size(), f.cols());
    rows.set_block(i, 0, f);
  }
  return gf2::rank(rows);
}

// ---------------------------------------------------------------------------
// Isomorphism testing.

template <AbelianCategory C>
struct IsoResult {
  Verdict verdict = Verdict::undecided;
  std::optional<MorphismOf<C>> iso;
  std::string reason;
};

/// Decides a ~= b. Exhaustive over Hom(a, b) when its dimension is within
/// `budget`; otherwise dimension invariants and a seeded random search are
/// tried, and the answer is `undecided` if neither settles it.
template <AbelianCategory C>
IsoResult<C> find_isomorphism(const C& c, const ObjectOf<C>& a, const ObjectOf<C>& b,
                              std::size_t budget = kDefaultIsoBudget) {
  IsoResult<C> r;
  if (c.dims(a) != c.dims(b)) {
    r.verdict = Verdict::no;
    r.reason = "dimension vectors differ";
    return r;
  }
  if (c.same_object(a, b)) {
    r.verdict = Verdict::yes;
    r.iso = c.identity(a);
    r.reason = "identical";
    return r;
  }
  const auto basis = c.hom_basis(a, b);
  if (c.is_zero_object(a)) {
    r.verdict = Verdict::yes;
    r.iso = c.zero_morphism(a, b);
    return r;
  }
  if (basis.size() <= budget) {
    auto cur = c.zero_morphism(a, b);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
      cur = c.add(cur, basis[static_cast<std::size_t>(std::countr_zero(i))]);
      if (c.is_invertible(cur)) {
        r.verdict = Verdict::yes;
        r.iso = cur;
        return r;
      }
    }
    r.verdict = Verdict::no;
    r.reason = "no invertible element in an exhaustive scan of Hom";
    return r;
  }
  const std::size_t end_a = c.hom_basis(a, a).size();
  const std::size_t end_b = c.hom_basis(b, b).size();
  const std::size_t back = c.hom_basis(b, a).size();
  if (end_a != end_b || end_a != basis.size() || back != basis.size()) {
    r.verdict = Verdict::no;
    r.reason = "hom-space dimensions separate the objects";
    return r;
  }
  std::mt19937_64 rng(0xF2F2);
  for (int t = 0; t < 4096; ++t) {
    auto m = c.zero_morphism(a, b);
    for (const auto& e : basis)
      if (rng() & 1U) m = c.add(m, e);
    if (c.is_invertible(m)) {
      r.verdict = Verdict::yes;
      r.iso = m;
      return r;
    }
  }
  r.verdict = Verdict::undecided;
  r.reason = "hom space beyond budget and invariants agree";
  return r;
}

template <AbelianCategory C>
Verdict is_isomorphic(const C& c, const ObjectOf<C>& a, const ObjectOf<C>& b, std::size_t budget = kDefaultIsoBudget) {
  return find_isomorphism(c, a, b, budget).verdict;
}

/// One representative per isomorphism class, keeping the first occurrence.
/// Pairs that cannot be decided are kept apart and counted.
template <AbelianCategory C>
struct IsoClasses {
  std::vector<ObjectOf<C>> representatives;
  std::size_t undecided_pairs = 0;
};

template <AbelianCategory C>
IsoClasses<C> iso_class_representatives(const C& c, const std::vector<ObjectOf<C>>& objects,
                                        std::size_t budget = kDefaultIsoBudget) {
  IsoClasses<C> out;
  // Cheap invariant buckets before pairwise search.
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::vector<std::size_t>> buckets;
  for (const auto& o : objects) {
    auto key = std::make_pair(c.dims(o), c.hom_basis(o, o).size());
    auto& bucket = buckets[key];
    bool found = false;
    for (std::size_t idx : bucket) {
      const Verdict v = is_isomorphic(c, out.representatives[idx], o, budget);
      if (v == Verdict::yes) {
        found = true;
        break;
      }
      if (v == Verdict::undecided) ++out.undecided_pairs;
    }
    if (!found) {
      bucket.push_back(out.representatives.size());
      out.representatives.push_back(o);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective resolutions, homology of complexes, Ext.

template <AbelianCategory C>
struct Resolution {
  std::vector<ObjectOf<C>> terms;              // P_0 .. P_n
  std::vector<MorphismOf<C>> differentials;    // d_k : P_{k+1} -> P_k
  std::optional<MorphismOf<C>> augmentation;   // P_0 -> M
};

/// P_length -> ... -> P_0 -> m -> 0, each step a projective cover of the
/// previous kernel.
template <AbelianCategory C>
Resolution<C> resolve(const C& c, const ObjectOf<C>& m, std::size_t length) {
  Resolution<C> res;
  auto cover = c.projective_cover(m);
  res.terms.push_back(cover.object);
  res.augmentation = cover.epi;
  auto prev = cover.epi;
  for (std::size_t k = 0; k < length; ++k) {
    const auto ker = c.kernel(prev);
    auto next = c.projective_cover(ker.object);
    auto d = c.compose(ker.inclusion, next.epi);
    res.terms.push_back(next.object);
    res.differentials.push_back(d);
    prev = d;
  }
  return res;
}

/// Ext^n(m, n_obj) through Hom(P_., n_obj): dimension and a basis of cocycles.
template <AbelianCategory C>
struct ExtResult {
  std::size_t dim = 0;
  std::vector<MorphismOf<C>> cocycles;
};

template <AbelianCategory C>
ExtResult<C> ext_group(const C& c, const ObjectOf<C>& m, const ObjectOf<C>& n, std::size_t degree) {
  const Resolution<C> res = resolve(c, m, degree + 1);
  const auto& P = res.terms;
  const auto basis_k = c.hom_basis(P[degree], n);
  // delta_k(phi) = phi * d_k : P_{k+1} -> n
  std::vector<MorphismOf<C>> images;
  for (const auto& phi : basis_k) images.push_back(c.compose(phi, res.differentials[degree]));
  ExtResult<C> out;
  std::size_t cocycle_dim = basis_k.size();
  if (!basis_k.empty()) {
    gf2::BitMatrix cols;
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto f = c.flatten(images[i]);
      if (i == 0) cols = gf2::BitMatrix(f.cols(), images.size());
      cols.set_block(0, i, f.transpose());
    }
    const auto ker = gf2::kernel_basis(gf2::LinearMap(cols));
    cocycle_dim = ker.dim();
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      std::uint64_t coeffs = 0;
      for (std::size_t i = 0; i < basis_k.size(); ++i)
        if (ker.basis().get(r, i)) coeffs |= std::uint64_t{1} << i;
      if (basis_k.size() <= 64) out.cocycles.push_back(combination(c, P[degree], n, basis_k, coeffs));
    }
  }
  std::size_t boundary_rank = 0;
  if (degree > 0) {
    std::vector<MorphismOf<C>> prev;
    for (const auto& phi : c.hom_basis(P[degree - 1], n)) prev.push_back(c.compose(phi, res.differentials[degree - 1]));
    boundary_rank = span_rank(c, prev);
  }
  out.dim = cocycle_dim - boundary_rank;
  return out;
}

// ---------------------------------------------------------------------------
// Extensions and Baer equivalence.

template <AbelianCategory C>
struct Extension {
  ObjectOf<C> bottom;
  ObjectOf<C> top;
  ObjectOf<C> middle;
  MorphismOf<C> incl;  // bottom -> middle
  MorphismOf<C> proj;  // middle -> top
};

template <AbelianCategory C>
bool is_valid_extension(const C& c, const Extension<C>& e) {
  return c.same_object(c.source(e.incl), e.bottom) && c.same_object(c.target(e.incl), e.middle) &&
         c.same_object(c.source(e.proj), e.middle) && c.same_object(c.target(e.proj), e.top) &&
         is_short_exact(c, e.incl, e.proj);
}

template <AbelianCategory C>
Extension<C> split_extension(const C& c, const ObjectOf<C>& bottom, const ObjectOf<C>& top) {
  const auto s = c.direct_sum(bottom, top);
  return {bottom, top, s.object, s.inj1, s.proj2};
}

/// Decides whether two extensions of `top` by `bottom` are Baer equivalent:
/// some middle isomorphism commutes with both inclusions and projections.
/// The commuting conditions are affine in Hom(m1, m2); every solution is an
/// isomorphism by the five lemma, which is nevertheless checked directly.
template <AbelianCategory C>
Verdict baer_equal(const C& c, const Extension<C>& e1, const Extension<C>& e2, std::size_t budget = kDefaultIsoBudget) {
  if (!c.same_object(e1.bottom, e2.bottom) || !c.same_object(e1.top, e2.top))
    throw std::invalid_argument("baer_equal: extensions of different objects");
  if (c.dims(e1.middle) != c.dims(e2.middle)) return Verdict::no;
  const auto basis = c.hom_basis(e1.middle, e2.middle);
  const gf2::BitMatrix t1 = c.flatten(e2.incl);
  const gf2::BitMatrix t2 = c.flatten(e1.proj);
  const std::size_t rows = t1.cols() + t2.cols();
  gf2::BitMatrix a(rows, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto u = c.flatten(c.compose(basis[i], e1.incl));
    const auto v = c.flatten(c.compose(e2.proj, basis[i]));
    a.set_block(0, i, u.transpose());
    a.set_block(t1.cols(), i, v.transpose());
  }
  gf2::BitMatrix target(rows, 1);
  target.set_block(0, 0, t1.transpose());
  target.set_block(t1.cols(), 0, t2.transpose());
  const auto sol = gf2::solve(gf2::LinearMap(a), gf2::LinearMap(target));
  if (!sol) return Verdict::no;
  auto from_coeffs = [&](const gf2::BitMatrix& x) {
    auto m = c.zero_morphism(e1.middle, e2.middle);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (x.get(i, 0)) m = c.add(m, basis[i]);
    return m;
  };
  const auto particular = from_coeffs(sol->matrix());
  if (c.is_invertible(particular)) return Verdict::yes;
  const auto ker = gf2::kernel_basis(gf2::LinearMap(a));
  if (ker.dim() > budget) return Verdict::undecided;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ker.dim()); ++mask) {
    gf2::BitMatrix x = sol->matrix();
    for (std::size_t r = 0; r < ker.dim(); ++r)
      if ((mask >> r) & 1U) x += ker.basis().row(r).transpose();
    if (c.is_invertible(from_coeffs(x))) return Verdict::yes;
  }
  return Verdict::no;
}

template <AbelianCategory C>
Verdict is_split(const C& c, const Extension<C>& e, std::size_t budget = kDefaultIsoBudget) {
  return baer_equal(c, e, split_extension(c, e.bottom, e.top), budget);
}

/// Pull an extension of `top` back along g: A -> top.
template <AbelianCategory C>
Extension<C> pull_back_extension(const C& c, const Extension<C>& e, const MorphismOf<C>& g) {
  const auto pb = pullback(c, e.proj, g);
  const auto sum = c.direct_sum(e.middle, c.source(g));
  // bottom -> pullback: (incl, 0) factors through the pullback kernel.
  const auto incl = c.factor_through_mono(
      c.kernel(c.add(c.compose(e.proj, sum.proj1), c.compose(g, sum.proj2))).inclusion,
      c.compose(sum.inj1, e.incl));
  if (!incl) throw std::logic_error("pull_back_extension: inclusion does not factor");
  return {e.bottom, c.source(g), pb.object, *incl, pb.to_second};
}

/// Push an extension of `top` by `bottom` forward along h: bottom -> B.
template <AbelianCategory C>
Extension<C> push_forward_extension(const C& c, const Extension<C>& e, const MorphismOf<C>& h) {
  const auto po = pushout(c, e.incl, h);
  const auto sum = c.direct_sum(e.middle, c.target(h));
  const auto q = c.cokernel(c.add(c.compose(sum.inj1, e.incl), c.compose(sum.inj2, h)));
  const auto proj = c.factor_through_epi(q.projection, c.compose(e.proj, sum.proj1));
  if (!proj) throw std::logic_error("push_forward_extension: projection does not factor");
  return {c.target(h), e.top, po.object, po.from_second, *proj};
}

}  // namespace recolle
