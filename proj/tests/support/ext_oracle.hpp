#pragma once

// Brute-force Ext^1 count: every extension of `top` by `bottom` is equivalent
// to one whose middle has block upper-triangular arrow maps
//   [ bottom_a  c_a ]
//   [   0      top_a]
// with the standard inclusion and projection. Enumerate every choice of the
// off-diagonal blocks c, keep those satisfying the relations, and group the
// survivors into Baer classes.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "recolle/category.hpp"
#include "recolle/rep.hpp"

namespace oracle {

struct BaerCount {
  std::size_t classes = 0;
  std::size_t valid_middles = 0;
  bool undecided = false;
};

inline BaerCount count_baer_classes(const recolle::RepCategory& c, const recolle::Rep& bottom,
                                    const recolle::Rep& top, std::size_t max_bits = 20) {
  using recolle::gf2::BitMatrix;
  using recolle::gf2::LinearMap;
  const auto& q = c.quiver();
  std::size_t bits = 0;
  for (const auto& ar : q.arrows()) bits += bottom.dim(ar.target) * top.dim(ar.source);
  if (bits > max_bits) throw recolle::BudgetExceeded("ext oracle: too many off-diagonal bits");

  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(bottom.dim(v) + top.dim(v));
  auto bp = std::make_shared<const recolle::Rep>(bottom);
  auto tp = std::make_shared<const recolle::Rep>(top);

  std::vector<recolle::Extension<recolle::RepCategory>> classes;
  BaerCount out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<LinearMap> arrows;
    std::size_t pos = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& ar = q.arrows()[a];
      BitMatrix m(dims[ar.target], dims[ar.source]);
      m.set_block(0, 0, bottom.arrow(a).matrix());
      m.set_block(bottom.dim(ar.target), bottom.dim(ar.source), top.arrow(a).matrix());
      for (std::size_t i = 0; i < bottom.dim(ar.target); ++i)
        for (std::size_t j = 0; j < top.dim(ar.source); ++j, ++pos)
          if ((code >> pos) & 1U) m.set(i, bottom.dim(ar.source) + j, true);
      arrows.emplace_back(std::move(m));
    }
    recolle::Rep mid(c.quiver_ptr(), dims, std::move(arrows));
    if (!recolle::check_relations(mid)) continue;
    ++out.valid_middles;
    auto mp = std::make_shared<const recolle::Rep>(mid);
    std::vector<LinearMap> inc, pr;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      BitMatrix i(dims[v], bottom.dim(v)), p(top.dim(v), dims[v]);
      i.set_block(0, 0, BitMatrix::identity(bottom.dim(v)));
      p.set_block(0, bottom.dim(v), BitMatrix::identity(top.dim(v)));
      inc.emplace_back(std::move(i));
      pr.emplace_back(std::move(p));
    }
    recolle::Extension<recolle::RepCategory> e{bottom, top, mid, recolle::RepMorphism(bp, mp, std::move(inc)),
                                               recolle::RepMorphism(mp, tp, std::move(pr))};
    bool seen = false;
    for (const auto& k : classes) {
      const auto v = recolle::baer_equal(c, k, e);
      if (v == recolle::Verdict::undecided) out.undecided = true;
      if (v == recolle::Verdict::yes) {
        seen = true;
        break;
      }
    }
    if (!seen) classes.push_back(std::move(e));
  }
  out.classes = classes.size();
  return out;
}

}  // namespace oracle
