#pragma once

// Bound quivers over F2 and the truncated path algebra they present.
//
// Paths are stored in traversal order: {a1, a2, ..., ak} means a1 first. In
// composition notation that path is ak ... a2 a1. Relations are required to be
// homogeneous (all terms share source, target and length), which makes the
// ideal graded and lets the path algebra be computed degree by degree.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace recolle {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

using Path = std::vector<std::size_t>;

struct Relation {
  std::vector<Path> terms;  // formal F2-sum of paths
};

class BoundQuiver;

/// Basis of the indecomposable projective at one vertex: path classes modulo
/// the relations, grouped by end vertex.
struct PathBasis {
  std::size_t start = 0;
  std::vector<std::vector<Path>> paths_at;  // representative path per basis element
  std::vector<gf2::LinearMap> arrow_action; // per arrow, dims(target) x dims(source)
};

class BoundQuiver {
 public:
  BoundQuiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows,
              std::vector<Relation> relations, std::size_t nilpotency_bound)
      : name_(std::move(name)),
        vertices_(std::move(vertices)),
        arrows_(std::move(arrows)),
        relations_(std::move(relations)),
        bound_(nilpotency_bound) {
    validate();
    for (std::size_t v = 0; v < vertices_.size(); ++v) bases_.push_back(compute_basis(v));
  }

  /// Arrows are given as (name, source name, target name); each relation is a
  /// list of terms, each term a list of arrow names in traversal order.
  static std::shared_ptr<const BoundQuiver> make(
      std::string name, std::vector<std::string> vertices,
      const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
      const std::vector<std::vector<std::vector<std::string>>>& relations, std::size_t nilpotency_bound) {
    auto vidx = [&](const std::string& v) {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return i;
      throw std::invalid_argument("BoundQuiver: unknown vertex " + v);
    };
    std::vector<Arrow> as;
    for (const auto& [n, s, t] : arrows) as.push_back({n, vidx(s), vidx(t)});
    auto aidx = [&](const std::string& a) {
      for (std::size_t i = 0; i < as.size(); ++i)
        if (as[i].name == a) return i;
      throw std::invalid_argument("BoundQuiver: unknown arrow " + a);
    };
    std::vector<Relation> rels;
    for (const auto& rel : relations) {
      Relation r;
      for (const auto& term : rel) {
        Path p;
        for (const auto& a : term) p.push_back(aidx(a));
        r.terms.push_back(std::move(p));
      }
      rels.push_back(std::move(r));
    }
    return std::make_shared<const BoundQuiver>(std::move(name), std::move(vertices), std::move(as), std::move(rels),
                                               nilpotency_bound);
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t nilpotency_bound() const { return bound_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::size_t vertex_index(const std::string& v) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == v) return i;
    throw std::invalid_argument("BoundQuiver " + name_ + ": unknown vertex " + v);
  }
  std::size_t arrow_index(const std::string& a) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == a) return i;
    throw std::invalid_argument("BoundQuiver " + name_ + ": unknown arrow " + a);
  }

  std::size_t path_source(const Path& p, std::size_t fallback) const {
    return p.empty() ? fallback : arrows_[p.front()].source;
  }
  std::size_t path_target(const Path& p, std::size_t fallback) const {
    return p.empty() ? fallback : arrows_[p.back()].target;
  }

  const PathBasis& projective_basis(std::size_t v) const { return bases_.at(v); }

  /// Same vertices, every arrow reversed, relations read backwards.
  std::shared_ptr<const BoundQuiver> opposite() const {
    std::vector<Arrow> as;
    for (const auto& a : arrows_) as.push_back({a.name, a.target, a.source});
    std::vector<Relation> rels;
    for (const auto& r : relations_) {
      Relation o;
      for (const auto& t : r.terms) o.terms.emplace_back(t.rbegin(), t.rend());
      rels.push_back(std::move(o));
    }
    return std::make_shared<const BoundQuiver>(opposite_name(name_), vertices_, std::move(as), std::move(rels), bound_);
  }

  static std::string opposite_name(const std::string& n) {
    const std::string suffix = "^op";
    if (n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0)
      return n.substr(0, n.size() - suffix.size());
    return n + suffix;
  }

 private:
  void validate() const {
    for (const auto& a : arrows_)
      if (a.source >= vertices_.size() || a.target >= vertices_.size())
        throw std::invalid_argument("BoundQuiver: arrow endpoint out of range");
    for (const auto& r : relations_) {
      if (r.terms.empty()) throw std::invalid_argument("BoundQuiver: empty relation");
      const Path& first = r.terms.front();
      for (const auto& t : r.terms) {
        if (t.size() < 2) throw std::invalid_argument("BoundQuiver: relation paths must have length >= 2");
        if (t.size() != first.size()) throw std::invalid_argument("BoundQuiver: relations must be homogeneous");
        for (std::size_t k = 0; k + 1 < t.size(); ++k)
          if (arrows_[t[k]].target != arrows_[t[k + 1]].source)
            throw std::invalid_argument("BoundQuiver: relation path not composable");
        if (arrows_[t.front()].source != arrows_[first.front()].source ||
            arrows_[t.back()].target != arrows_[first.back()].target)
          throw std::invalid_argument("BoundQuiver: relation terms with different endpoints");
      }
    }
  }

  // Breadth-first enumeration of the paths from v up to the nilpotency bound,
  // then linear algebra degree by degree to quotient by the relation ideal.
  PathBasis compute_basis(std::size_t v) const {
    const std::size_t nv = vertices_.size();
    std::vector<std::vector<Path>> by_len(bound_ + 1);
    by_len[0].push_back({});
    for (std::size_t len = 1; len <= bound_; ++len)
      for (const Path& p : by_len[len - 1]) {
        const std::size_t end = path_target(p, v);
        for (std::size_t a = 0; a < arrows_.size(); ++a)
          if (arrows_[a].source == end) {
            Path q = p;
            q.push_back(a);
            by_len[len].push_back(std::move(q));
          }
      }

    // Index every path of length <= bound by end vertex.
    std::vector<std::vector<Path>> all_at(nv);
    std::vector<std::map<Path, std::size_t>> index_at(nv);
    for (std::size_t len = 0; len <= bound_; ++len)
      for (const Path& p : by_len[len]) {
        const std::size_t w = path_target(p, v);
        index_at[w].emplace(p, all_at[w].size());
        all_at[w].push_back(p);
      }

    // Ideal generators p * rel * q with total length <= bound.
    std::vector<std::vector<std::vector<std::size_t>>> gens(nv);  // supports
    for (const auto& rel : relations_) {
      const std::size_t rs = arrows_[rel.terms.front().front()].source;
      const std::size_t rt = arrows_[rel.terms.front().back()].target;
      const std::size_t rl = rel.terms.front().size();
      for (std::size_t lp = 0; lp + rl <= bound_; ++lp)
        for (const Path& pre : by_len[lp]) {
          if (path_target(pre, v) != rs) continue;
          // Extend by every suffix starting at rt.
          std::vector<Path> suffixes{{}};
          for (std::size_t lq = 0; lp + rl + lq <= bound_; ++lq) {
            std::vector<Path> next;
            for (const Path& suf : suffixes) {
              std::vector<std::size_t> support;
              std::size_t end = rt;
              for (const Path& term : rel.terms) {
                Path full = pre;
                full.insert(full.end(), term.begin(), term.end());
                full.insert(full.end(), suf.begin(), suf.end());
                end = path_target(full, v);
                support.push_back(index_at[end].at(full));
              }
              gens[end].push_back(std::move(support));
              const std::size_t suf_end = path_target(suf, rt);
              for (std::size_t a = 0; a < arrows_.size(); ++a)
                if (arrows_[a].source == suf_end) {
                  Path s2 = suf;
                  s2.push_back(a);
                  next.push_back(std::move(s2));
                }
            }
            suffixes = std::move(next);
          }
        }
    }

    PathBasis basis;
    basis.start = v;
    basis.paths_at.resize(nv);
    std::vector<gf2::ImageCokernel> quot(nv);
    for (std::size_t w = 0; w < nv; ++w) {
      gf2::BitMatrix ideal(all_at[w].size(), gens[w].size());
      for (std::size_t g = 0; g < gens[w].size(); ++g)
        for (std::size_t idx : gens[w][g]) ideal.flip(idx, g);
      quot[w] = gf2::image_and_cokernel(gf2::LinearMap(ideal));
      // Paths of maximal length must already vanish, otherwise the algebra is
      // not truncated at the declared bound.
      for (const Path& p : by_len[bound_]) {
        if (path_target(p, v) != w) continue;
        gf2::BitMatrix e(all_at[w].size(), 1);
        e.set(index_at[w].at(p), 0, true);
        if (!quot[w].image.contains(e))
          throw std::invalid_argument("BoundQuiver " + name_ + ": paths of length " + std::to_string(bound_) +
                                      " are not zero; algebra not finite-dimensional at this bound");
      }
      const gf2::LinearMap& sec = quot[w].section;
      for (std::size_t k = 0; k < quot[w].coker_dim; ++k)
        for (std::size_t i = 0; i < all_at[w].size(); ++i)
          if (sec.matrix().get(i, k)) basis.paths_at[w].push_back(all_at[w][i]);
    }

    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      const std::size_t s = arrows_[a].source;
      const std::size_t t = arrows_[a].target;
      gf2::BitMatrix m(quot[t].coker_dim, quot[s].coker_dim);
      for (std::size_t k = 0; k < basis.paths_at[s].size(); ++k) {
        Path ext = basis.paths_at[s][k];
        if (ext.size() + 1 > bound_) continue;
        ext.push_back(a);
        gf2::BitMatrix e(all_at[t].size(), 1);
        e.set(index_at[t].at(ext), 0, true);
        m.set_block(0, k, quot[t].projection.matrix() * e);
      }
      basis.arrow_action.emplace_back(std::move(m));
    }
    return basis;
  }

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  std::size_t bound_;
  std::vector<PathBasis> bases_;
};

using QuiverPtr = std::shared_ptr<const BoundQuiver>;

}  // namespace recolle
