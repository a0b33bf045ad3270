#pragma once

// Finite-dimensional representations of a bound quiver over F2, and the
// abelian category they form.

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
#include "gf2.hpp"
#include "quiver.hpp"

namespace recolle {

using gf2::BitMatrix;
using gf2::LinearMap;

class Rep {
 public:
  Rep() = default;
  Rep(QuiverPtr q, std::vector<std::size_t> dims, std::vector<LinearMap> arrows)
      : q_(std::move(q)), dims_(std::move(dims)), arrows_(std::move(arrows)) {
    if (!q_) throw std::invalid_argument("Rep: null quiver");
    if (dims_.size() != q_->vertex_count()) throw std::invalid_argument("Rep: one dimension per vertex required");
    if (arrows_.size() != q_->arrow_count()) throw std::invalid_argument("Rep: one map per arrow required");
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      const Arrow& ar = q_->arrows()[a];
      if (arrows_[a].domain_dim() != dims_[ar.source] || arrows_[a].codomain_dim() != dims_[ar.target])
        throw std::invalid_argument("Rep: arrow " + ar.name + " has the wrong shape");
    }
  }

  static Rep zero(QuiverPtr q) {
    std::vector<LinearMap> as;
    for (std::size_t a = 0; a < q->arrow_count(); ++a) as.push_back(LinearMap::zero(0, 0));
    return Rep(q, std::vector<std::size_t>(q->vertex_count(), 0), std::move(as));
  }

  /// All arrow maps zero.
  static Rep semisimple(QuiverPtr q, std::vector<std::size_t> dims) {
    std::vector<LinearMap> as;
    for (const auto& ar : q->arrows()) as.push_back(LinearMap::zero(dims.at(ar.source), dims.at(ar.target)));
    return Rep(q, std::move(dims), std::move(as));
  }

  /// Arrow maps given by name; arrows not mentioned are zero.
  static Rep make(QuiverPtr q, std::vector<std::size_t> dims, const std::map<std::string, BitMatrix>& maps) {
    std::vector<LinearMap> as;
    for (const auto& ar : q->arrows()) {
      auto it = maps.find(ar.name);
      as.push_back(it == maps.end() ? LinearMap::zero(dims.at(ar.source), dims.at(ar.target)) : LinearMap(it->second));
    }
    return Rep(q, std::move(dims), std::move(as));
  }

  const BoundQuiver& quiver() const { return *q_; }
  const QuiverPtr& quiver_ptr() const { return q_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const { return total(dims_); }
  const LinearMap& arrow(std::size_t a) const { return arrows_[a]; }
  const LinearMap& arrow(const std::string& name) const { return arrows_[q_->arrow_index(name)]; }
  const std::vector<LinearMap>& arrows() const { return arrows_; }
  bool is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
  }

  /// The composite of the arrow maps along a path (identity for the empty path at `start`).
  LinearMap path_map(const Path& p, std::size_t start) const {
    LinearMap m = LinearMap::identity(dims_[start]);
    for (std::size_t a : p) m = arrows_[a] * m;
    return m;
  }

  friend bool operator==(const Rep& a, const Rep& b) {
    return a.q_->name() == b.q_->name() && a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
  }

 private:
  QuiverPtr q_;
  std::vector<std::size_t> dims_;
  std::vector<LinearMap> arrows_;
};

/// True iff every relation evaluates to the zero map.
inline bool check_relations(const Rep& r) {
  const auto& q = r.quiver();
  for (const auto& rel : q.relations()) {
    const std::size_t s = q.arrows()[rel.terms.front().front()].source;
    const std::size_t t = q.arrows()[rel.terms.front().back()].target;
    LinearMap sum = LinearMap::zero(r.dim(s), r.dim(t));
    for (const auto& term : rel.terms) sum += r.path_map(term, s);
    if (!sum.is_zero()) return false;
  }
  return true;
}

class RepMorphism {
 public:
  RepMorphism() = default;
  RepMorphism(std::shared_ptr<const Rep> source, std::shared_ptr<const Rep> target, std::vector<LinearMap> comps)
      : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(comps)) {
    if (src_->quiver().name() != tgt_->quiver().name()) throw std::invalid_argument("RepMorphism: quivers differ");
    if (comps_.size() != src_->dims().size()) throw std::invalid_argument("RepMorphism: one component per vertex");
    for (std::size_t v = 0; v < comps_.size(); ++v)
      if (comps_[v].domain_dim() != src_->dim(v) || comps_[v].codomain_dim() != tgt_->dim(v))
        throw std::invalid_argument("RepMorphism: component has the wrong shape");
  }
  RepMorphism(const Rep& source, const Rep& target, std::vector<LinearMap> comps)
      : RepMorphism(std::make_shared<const Rep>(source), std::make_shared<const Rep>(target), std::move(comps)) {}

  const Rep& source() const { return *src_; }
  const Rep& target() const { return *tgt_; }
  const std::shared_ptr<const Rep>& source_ptr() const { return src_; }
  const std::shared_ptr<const Rep>& target_ptr() const { return tgt_; }
  const LinearMap& component(std::size_t v) const { return comps_[v]; }
  const std::vector<LinearMap>& components() const { return comps_; }

  /// Commuting squares for every arrow.
  bool is_intertwining() const {
    const auto& q = src_->quiver();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrows()[a];
      if (!(comps_[ar.target] * src_->arrow(a) == tgt_->arrow(a) * comps_[ar.source])) return false;
    }
    return true;
  }

 private:
  std::shared_ptr<const Rep> src_;
  std::shared_ptr<const Rep> tgt_;
  std::vector<LinearMap> comps_;
};

inline nlohmann::json rep_to_json(const Rep& r) {
  nlohmann::json dims = nlohmann::json::object();
  nlohmann::json arrows = nlohmann::json::object();
  const auto& q = r.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = r.dim(v);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) arrows[q.arrows()[a].name] = gf2::to_json(r.arrow(a).matrix());
  return {{"quiver", q.name()}, {"dims", dims}, {"arrows", arrows}};
}

inline Rep rep_from_json(const nlohmann::json& j, const QuiverPtr& q) {
  if (j.contains("quiver") && j.at("quiver").get<std::string>() != q->name())
    throw std::invalid_argument("Rep JSON: quiver " + j.at("quiver").get<std::string>() + " does not match " + q->name());
  std::vector<std::size_t> dims;
  for (const auto& v : q->vertices()) dims.push_back(j.at("dims").at(v).get<std::size_t>());
  std::map<std::string, BitMatrix> maps;
  if (j.contains("arrows"))
    for (const auto& [name, m] : j.at("arrows").items()) {
      q->arrow_index(name);
      maps.emplace(name, gf2::bitmatrix_from_json(m));
    }
  Rep r = Rep::make(q, dims, maps);
  if (!check_relations(r)) throw std::invalid_argument("Rep JSON: relations of " + q->name() + " violated");
  return r;
}

inline nlohmann::json morphism_to_json(const RepMorphism& f) {
  nlohmann::json comps = nlohmann::json::object();
  const auto& q = f.source().quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) comps[q.vertices()[v]] = gf2::to_json(f.component(v).matrix());
  return {{"source", rep_to_json(f.source())}, {"target", rep_to_json(f.target())}, {"components", comps}};
}

/// The category of representations of one bound quiver.
class RepCategory {
 public:
  using Object = Rep;
  using Morphism = RepMorphism;
  using KernelT = Kernel<Rep, RepMorphism>;
  using CokernelT = Cokernel<Rep, RepMorphism>;
  using BiproductT = Biproduct<Rep, RepMorphism>;
  using CoverT = Cover<Rep, RepMorphism>;

  explicit RepCategory(QuiverPtr q) : q_(std::move(q)), op_(q_->opposite()) {}
  RepCategory(QuiverPtr q, QuiverPtr op) : q_(std::move(q)), op_(std::move(op)) {}

  const BoundQuiver& quiver() const { return *q_; }
  const QuiverPtr& quiver_ptr() const { return q_; }
  std::string name() const { return q_->name(); }

  Rep zero_object() const { return Rep::zero(q_); }

  RepMorphism identity(const Rep& m) const {
    auto p = std::make_shared<const Rep>(m);
    std::vector<LinearMap> cs;
    for (auto d : m.dims()) cs.push_back(LinearMap::identity(d));
    return RepMorphism(p, p, std::move(cs));
  }
  RepMorphism zero_morphism(const Rep& a, const Rep& b) const {
    std::vector<LinearMap> cs;
    for (std::size_t v = 0; v < a.dims().size(); ++v) cs.push_back(LinearMap::zero(a.dim(v), b.dim(v)));
    return RepMorphism(a, b, std::move(cs));
  }
  /// g after f.
  RepMorphism compose(const RepMorphism& g, const RepMorphism& f) const {
    if (!(f.target() == g.source())) throw std::invalid_argument("compose: target/source mismatch");
    std::vector<LinearMap> cs;
    for (std::size_t v = 0; v < f.components().size(); ++v) cs.push_back(g.component(v) * f.component(v));
    return RepMorphism(f.source_ptr(), g.target_ptr(), std::move(cs));
  }
  RepMorphism add(const RepMorphism& f, const RepMorphism& g) const {
    std::vector<LinearMap> cs;
    for (std::size_t v = 0; v < f.components().size(); ++v) cs.push_back(f.component(v) + g.component(v));
    return RepMorphism(f.source_ptr(), f.target_ptr(), std::move(cs));
  }
  const Rep& source(const RepMorphism& f) const { return f.source(); }
  const Rep& target(const RepMorphism& f) const { return f.target(); }
  std::vector<std::size_t> dims(const Rep& r) const { return r.dims(); }
  bool is_zero_object(const Rep& r) const { return r.is_zero(); }
  bool is_zero(const RepMorphism& f) const {
    return std::all_of(f.components().begin(), f.components().end(), [](const LinearMap& m) { return m.is_zero(); });
  }
  bool same_object(const Rep& a, const Rep& b) const { return a == b; }
  bool equal(const RepMorphism& f, const RepMorphism& g) const {
    return f.source() == g.source() && f.target() == g.target() && f.components() == g.components();
  }

  gf2::BitMatrix flatten(const RepMorphism& f) const {
    std::size_t n = 0;
    for (const auto& c : f.components()) n += c.matrix().rows() * c.matrix().cols();
    gf2::BitMatrix out(1, n);
    std::size_t k = 0;
    for (const auto& c : f.components())
      for (std::size_t i = 0; i < c.matrix().rows(); ++i)
        for (std::size_t j = 0; j < c.matrix().cols(); ++j, ++k)
          if (c.matrix().get(i, j)) out.set(0, k, true);
    return out;
  }

  /// Basis of Hom(m, n): the solution space of the intertwining equations
  /// f_w M_a = N_a f_v, one block of unknowns per vertex.
  std::vector<RepMorphism> hom_basis(const Rep& m, const Rep& n) const {
    const std::size_t nv = q_->vertex_count();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    const std::size_t unknowns = offset[nv];
    std::size_t constraints = 0;
    for (const auto& ar : q_->arrows()) constraints += n.dim(ar.target) * m.dim(ar.source);
    gf2::BitMatrix sys(constraints, unknowns);
    std::size_t row0 = 0;
    for (std::size_t a = 0; a < q_->arrow_count(); ++a) {
      const Arrow& ar = q_->arrows()[a];
      const std::size_t v = ar.source, w = ar.target;
      const BitMatrix& ma = m.arrow(a).matrix();
      const BitMatrix& na = n.arrow(a).matrix();
      // (f_w M_a)(i,j) = sum_k f_w(i,k) M_a(k,j)
      for (std::size_t i = 0; i < n.dim(w); ++i)
        for (std::size_t k = 0; k < m.dim(w); ++k)
          for (std::size_t j = 0; j < m.dim(v); ++j)
            if (ma.get(k, j)) sys.flip(row0 + i * m.dim(v) + j, offset[w] + i * m.dim(w) + k);
      // (N_a f_v)(i,j) = sum_k N_a(i,k) f_v(k,j)
      for (std::size_t i = 0; i < n.dim(w); ++i)
        for (std::size_t k = 0; k < n.dim(v); ++k)
          if (na.get(i, k))
            for (std::size_t j = 0; j < m.dim(v); ++j) sys.flip(row0 + i * m.dim(v) + j, offset[v] + k * m.dim(v) + j);
      row0 += n.dim(w) * m.dim(v);
    }
    const gf2::Subspace sol = gf2::kernel_basis(LinearMap(sys));
    auto sp = std::make_shared<const Rep>(m);
    auto tp = std::make_shared<const Rep>(n);
    std::vector<RepMorphism> out;
    for (std::size_t r = 0; r < sol.dim(); ++r) {
      std::vector<LinearMap> cs;
      for (std::size_t v = 0; v < nv; ++v) {
        BitMatrix c(n.dim(v), m.dim(v));
        for (std::size_t i = 0; i < n.dim(v); ++i)
          for (std::size_t j = 0; j < m.dim(v); ++j)
            if (sol.basis().get(r, offset[v] + i * m.dim(v) + j)) c.set(i, j, true);
        cs.emplace_back(std::move(c));
      }
      out.emplace_back(sp, tp, std::move(cs));
    }
    return out;
  }

  KernelT kernel(const RepMorphism& f) const {
    const Rep& m = f.source();
    const std::size_t nv = q_->vertex_count();
    std::vector<gf2::Subspace> ks;
    std::vector<std::size_t> dims;
    std::vector<LinearMap> incl;
    for (std::size_t v = 0; v < nv; ++v) {
      ks.push_back(gf2::kernel_basis(f.component(v)));
      dims.push_back(ks.back().dim());
      incl.push_back(ks.back().inclusion());
    }
    std::vector<LinearMap> arrows;
    for (std::size_t a = 0; a < q_->arrow_count(); ++a) {
      const Arrow& ar = q_->arrows()[a];
      LinearMap ka = ks[ar.target].retraction() * m.arrow(a) * incl[ar.source];
      if (!(incl[ar.target] * ka == m.arrow(a) * incl[ar.source]))
        throw std::logic_error("kernel: induced arrow map does not exist (input is not a morphism)");
      arrows.push_back(std::move(ka));
    }
    Rep k(q_, std::move(dims), std::move(arrows));
    return {k, RepMorphism(std::make_shared<const Rep>(k), f.source_ptr(), std::move(incl))};
  }

  CokernelT cokernel(const RepMorphism& f) const {
    const Rep& n = f.target();
    const std::size_t nv = q_->vertex_count();
    std::vector<gf2::ImageCokernel> ics;
    std::vector<std::size_t> dims;
    std::vector<LinearMap> proj;
    for (std::size_t v = 0; v < nv; ++v) {
      ics.push_back(gf2::image_and_cokernel(f.component(v)));
      dims.push_back(ics.back().coker_dim);
      proj.push_back(ics.back().projection);
    }
    std::vector<LinearMap> arrows;
    for (std::size_t a = 0; a < q_->arrow_count(); ++a) {
      const Arrow& ar = q_->arrows()[a];
      LinearMap ca = proj[ar.target] * n.arrow(a) * ics[ar.source].section;
      if (!(ca * proj[ar.source] == proj[ar.target] * n.arrow(a)))
        throw std::logic_error("cokernel: induced arrow map does not exist (input is not a morphism)");
      arrows.push_back(std::move(ca));
    }
    Rep c(q_, std::move(dims), std::move(arrows));
    return {c, RepMorphism(f.target_ptr(), std::make_shared<const Rep>(c), std::move(proj))};
  }

  BiproductT direct_sum(const Rep& a, const Rep& b) const {
    const std::size_t nv = q_->vertex_count();
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < nv; ++v) dims.push_back(a.dim(v) + b.dim(v));
    std::vector<LinearMap> arrows;
    for (std::size_t k = 0; k < q_->arrow_count(); ++k)
      arrows.emplace_back(BitMatrix::block_diagonal(a.arrow(k).matrix(), b.arrow(k).matrix()));
    auto s = std::make_shared<const Rep>(q_, dims, std::move(arrows));
    auto ap = std::make_shared<const Rep>(a);
    auto bp = std::make_shared<const Rep>(b);
    std::vector<LinearMap> i1, i2, p1, p2;
    for (std::size_t v = 0; v < nv; ++v) {
      BitMatrix e1(dims[v], a.dim(v)), e2(dims[v], b.dim(v));
      e1.set_block(0, 0, BitMatrix::identity(a.dim(v)));
      e2.set_block(a.dim(v), 0, BitMatrix::identity(b.dim(v)));
      p1.emplace_back(e1.transpose());
      p2.emplace_back(e2.transpose());
      i1.emplace_back(std::move(e1));
      i2.emplace_back(std::move(e2));
    }
    return {*s, RepMorphism(ap, s, std::move(i1)), RepMorphism(bp, s, std::move(i2)), RepMorphism(s, ap, std::move(p1)),
            RepMorphism(s, bp, std::move(p2))};
  }

  /// h with mono * h == g, if g lands in the image of mono.
  std::optional<RepMorphism> factor_through_mono(const RepMorphism& mono, const RepMorphism& g) const {
    std::vector<LinearMap> cs;
    for (std::size_t v = 0; v < q_->vertex_count(); ++v) {
      auto h = gf2::solve(mono.component(v), g.component(v));
      if (!h) return std::nullopt;
      cs.push_back(std::move(*h));
    }
    RepMorphism h(g.source_ptr(), mono.source_ptr(), std::move(cs));
    if (!h.is_intertwining()) return std::nullopt;
    return h;
  }

  /// h with h * epi == g, if g vanishes on the kernel of epi.
  std::optional<RepMorphism> factor_through_epi(const RepMorphism& epi, const RepMorphism& g) const {
    std::vector<LinearMap> cs;
    for (std::size_t v = 0; v < q_->vertex_count(); ++v) {
      auto h = gf2::solve_right(epi.component(v), g.component(v));
      if (!h) return std::nullopt;
      cs.push_back(std::move(*h));
    }
    RepMorphism h(epi.target_ptr(), g.target_ptr(), std::move(cs));
    if (!h.is_intertwining()) return std::nullopt;
    return h;
  }

  bool is_invertible(const RepMorphism& f) const {
    return std::all_of(f.components().begin(), f.components().end(),
                       [](const LinearMap& m) { return gf2::is_invertible(m); });
  }
  RepMorphism inverse(const RepMorphism& f) const {
    std::vector<LinearMap> cs;
    for (const auto& c : f.components()) {
      auto inv = gf2::inverse(c);
      if (!inv) throw std::invalid_argument("inverse: morphism is not invertible");
      cs.push_back(std::move(*inv));
    }
    return RepMorphism(f.target_ptr(), f.source_ptr(), std::move(cs));
  }

  /// Paths starting at v modulo the relations, arrows acting by extension.
  Rep indecomposable_projective(std::size_t v) const {
    const PathBasis& b = q_->projective_basis(v);
    std::vector<std::size_t> dims;
    for (const auto& ps : b.paths_at) dims.push_back(ps.size());
    return Rep(q_, std::move(dims), b.arrow_action);
  }

  /// Radical at each vertex: the sum of the images of the incoming arrows.
  std::vector<gf2::Subspace> radical(const Rep& m) const {
    std::vector<gf2::Subspace> out;
    for (std::size_t w = 0; w < q_->vertex_count(); ++w) {
      BitMatrix span(m.dim(w), 0);
      for (std::size_t a = 0; a < q_->arrow_count(); ++a)
        if (q_->arrows()[a].target == w) span = BitMatrix::hstack(span, m.arrow(a).matrix());
      out.push_back(gf2::Subspace::span_of_columns(span));
    }
    return out;
  }

  /// Minimal projective cover: one copy of P(w) per basis vector of a
  /// complement to the radical at w, mapped by evaluating paths on it.
  CoverT projective_cover(const Rep& m) const {
    const std::size_t nv = q_->vertex_count();
    std::vector<std::pair<std::size_t, BitMatrix>> generators;  // (vertex, column vector)
    for (std::size_t w = 0; w < nv; ++w) {
      BitMatrix span(m.dim(w), 0);
      for (std::size_t a = 0; a < q_->arrow_count(); ++a)
        if (q_->arrows()[a].target == w) span = BitMatrix::hstack(span, m.arrow(a).matrix());
      const auto ic = gf2::image_and_cokernel(LinearMap(span));
      for (std::size_t k = 0; k < ic.coker_dim; ++k) generators.emplace_back(w, ic.section.matrix().col(k));
    }
    std::vector<std::size_t> dims(nv, 0);
    for (const auto& [w, vec] : generators) {
      const PathBasis& b = q_->projective_basis(w);
      for (std::size_t x = 0; x < nv; ++x) dims[x] += b.paths_at[x].size();
    }
    std::vector<BitMatrix> arrows;
    for (const auto& ar : q_->arrows()) arrows.emplace_back(dims[ar.target], dims[ar.source]);
    std::vector<BitMatrix> epi;
    for (std::size_t x = 0; x < nv; ++x) epi.emplace_back(m.dim(x), dims[x]);
    std::vector<std::size_t> off(nv, 0);
    for (const auto& [w, vec] : generators) {
      const PathBasis& b = q_->projective_basis(w);
      for (std::size_t a = 0; a < q_->arrow_count(); ++a) {
        const Arrow& ar = q_->arrows()[a];
        arrows[a].set_block(off[ar.target], off[ar.source], b.arrow_action[a].matrix());
      }
      for (std::size_t x = 0; x < nv; ++x)
        for (std::size_t k = 0; k < b.paths_at[x].size(); ++k)
          epi[x].set_block(0, off[x] + k, (m.path_map(b.paths_at[x][k], w) * LinearMap(vec)).matrix());
      for (std::size_t x = 0; x < nv; ++x) off[x] += b.paths_at[x].size();
    }
    std::vector<LinearMap> as(arrows.begin(), arrows.end());
    std::vector<LinearMap> es(epi.begin(), epi.end());
    auto p = std::make_shared<const Rep>(q_, dims, std::move(as));
    return {*p, RepMorphism(p, std::make_shared<const Rep>(m), std::move(es))};
  }

  /// Every representation with the given dimension vector, arrow maps in
  /// lexicographic bit order (arrow by arrow, row-major, first bit most significant).
  std::vector<Rep> enumerate(const std::vector<std::size_t>& dims, std::size_t max_bits = 24) const {
    if (dims.size() != q_->vertex_count()) throw std::invalid_argument("enumerate: wrong dimension vector length");
    std::size_t bits = 0;
    for (const auto& ar : q_->arrows()) bits += dims[ar.source] * dims[ar.target];
    if (bits > max_bits)
      throw BudgetExceeded("enumerate: " + std::to_string(bits) + " free bits exceed the budget of " +
                           std::to_string(max_bits));
    std::vector<Rep> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
      std::vector<LinearMap> as;
      std::size_t pos = 0;
      for (const auto& ar : q_->arrows()) {
        BitMatrix mtx(dims[ar.target], dims[ar.source]);
        for (std::size_t i = 0; i < mtx.rows(); ++i)
          for (std::size_t j = 0; j < mtx.cols(); ++j, ++pos)
            if ((code >> (bits - 1 - pos)) & 1U) mtx.set(i, j, true);
        as.emplace_back(std::move(mtx));
      }
      Rep r(q_, dims, std::move(as));
      if (check_relations(r)) out.push_back(std::move(r));
    }
    return out;
  }

  /// All representations with dims <= max_dims componentwise, in
  /// lexicographic order of the dimension vectors.
  std::vector<Rep> enumerate_up_to(const std::vector<std::size_t>& max_dims, std::size_t max_bits = 24) const {
    std::vector<Rep> out;
    std::vector<std::size_t> d(max_dims.size(), 0);
    while (true) {
      for (auto& r : enumerate(d, max_bits)) out.push_back(std::move(r));
      std::size_t k = d.size();
      while (k > 0) {
        --k;
        if (d[k] < max_dims[k]) {
          ++d[k];
          for (std::size_t j = k + 1; j < d.size(); ++j) d[j] = 0;
          break;
        }
        if (k == 0) return out;
      }
      if (d.empty()) return out;
    }
  }

  RepCategory opposite() const { return RepCategory(op_, q_); }

  /// Vector-space duality onto the opposite quiver: transpose every map.
  Rep dualize(const Rep& r) const {
    std::vector<LinearMap> as;
    for (const auto& a : r.arrows()) as.push_back(a.transpose());
    return Rep(op_, r.dims(), std::move(as));
  }
  RepMorphism dualize(const RepMorphism& f) const {
    std::vector<LinearMap> cs;
    for (const auto& c : f.components()) cs.push_back(c.transpose());
    return RepMorphism(dualize(f.target()), dualize(f.source()), std::move(cs));
  }

  nlohmann::json to_json(const Rep& r) const { return rep_to_json(r); }
  nlohmann::json morphism_json(const RepMorphism& f) const { return morphism_to_json(f); }

 private:
  QuiverPtr q_;
  QuiverPtr op_;
};

static_assert(AbelianCategory<RepCategory>);

/// Enumeration with optional reduction to one representative per
/// isomorphism class (the first one met in enumeration order).
inline std::vector<Rep> enumerate_reps(const RepCategory& c, const std::vector<std::size_t>& dims, bool dedup,
                                       std::size_t max_bits = 24) {
  auto all = c.enumerate(dims, max_bits);
  if (!dedup) return all;
  return iso_class_representatives(c, all).representatives;
}

}  // namespace recolle
