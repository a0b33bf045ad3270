#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "recolle/gf2.hpp"

namespace {

using recolle::gf2::BitMatrix;
using recolle::gf2::LinearMap;
namespace gf2 = recolle::gf2;

BitMatrix M(std::vector<std::string> rows) { return BitMatrix::from_strings(rows); }

BitMatrix column_from_bits(std::uint64_t bits, std::size_t n) {
  BitMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if ((bits >> i) & 1U) v.set(i, 0, true);
  return v;
}

std::uint64_t bits_of_column(const BitMatrix& v) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (v.get(i, 0)) b |= std::uint64_t{1} << i;
  return b;
}

// Brute force: the set of all vectors killed by f.
std::set<std::uint64_t> kernel_by_enumeration(const LinearMap& f) {
  std::set<std::uint64_t> out;
  const std::size_t n = f.domain_dim();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if ((f.matrix() * column_from_bits(x, n)).is_zero()) out.insert(x);
  return out;
}

std::set<std::uint64_t> image_by_enumeration(const LinearMap& f) {
  std::set<std::uint64_t> out;
  const std::size_t n = f.domain_dim();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    out.insert(bits_of_column(f.matrix() * column_from_bits(x, n)));
  return out;
}

std::set<std::uint64_t> span_elements(const gf2::Subspace& s) {
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << s.dim()); ++c) {
    BitMatrix v(s.ambient_dim(), 1);
    for (std::size_t i = 0; i < s.dim(); ++i)
      if ((c >> i) & 1U) v += s.basis().row(i).transpose();
    out.insert(bits_of_column(v));
  }
  return out;
}

BitMatrix matrix_from_code(std::uint64_t code, std::size_t r, std::size_t c) {
  BitMatrix m(r, c);
  for (std::size_t k = 0; k < r * c; ++k)
    if ((code >> k) & 1U) m.set(k / c, k % c, true);
  return m;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() & 1U) m.set(i, j, true);
  return m;
}

TEST(Rref, IdentityIsFixed) {
  const auto r = gf2::rref(BitMatrix::identity(2));
  EXPECT_EQ(r.reduced, BitMatrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroHasNoPivots) {
  const auto r = gf2::rref(BitMatrix(2, 2));
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, EqualRowsCancel) {
  const auto r = gf2::rref(M({"11", "11"}));
  EXPECT_EQ(r.reduced, M({"11", "00"}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, TransformReproducesReducedAndIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng, rng() % 9, rng() % 9);
    const auto r = gf2::rref(m);
    EXPECT_EQ(r.transform * m, r.reduced);
    EXPECT_TRUE(gf2::is_invertible(LinearMap(r.transform)));
    EXPECT_EQ(gf2::rref(r.reduced).reduced, r.reduced);
  }
}

TEST(Rref, EmptyShapesAreLegal) {
  EXPECT_EQ(gf2::rank(BitMatrix(0, 3)), 0U);
  EXPECT_EQ(gf2::rank(BitMatrix(3, 0)), 0U);
  EXPECT_EQ(gf2::kernel_basis(LinearMap(BitMatrix(0, 3))).dim(), 3U);
}

TEST(Kernel, IdentityHasZeroKernel) { EXPECT_EQ(gf2::kernel_basis(LinearMap::identity(2)).dim(), 0U); }

TEST(Kernel, SumFunctionalKillsDiagonal) {
  const auto k = gf2::kernel_basis(LinearMap(M({"11"})));
  EXPECT_EQ(k.dim(), 1U);
  EXPECT_EQ(k.basis(), M({"11"}));
}

TEST(Kernel, RepeatedRowsMatchEnumeration) {
  const LinearMap f(M({"11", "11"}));
  const auto k = gf2::kernel_basis(f);
  EXPECT_EQ(span_elements(k), kernel_by_enumeration(f));
  EXPECT_EQ(k.basis(), M({"11"}));
}

TEST(Kernel, RankNullityExhaustiveUpTo3x3) {
  for (std::size_t r = 0; r <= 3; ++r)
    for (std::size_t c = 0; c <= 3; ++c)
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (r * c)); ++code) {
        const LinearMap f(matrix_from_code(code, r, c));
        const auto k = gf2::kernel_basis(f);
        EXPECT_EQ(k.dim() + gf2::rank(f), c);
        EXPECT_EQ(span_elements(k), kernel_by_enumeration(f));
        EXPECT_EQ(std::size_t{1} << gf2::rank(f), image_by_enumeration(f).size());
      }
}

TEST(Kernel, RankNullityRandomLarge) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const LinearMap f(random_matrix(rng, 1 + rng() % 90, 1 + rng() % 90));
    const auto k = gf2::kernel_basis(f);
    EXPECT_EQ(k.dim() + gf2::rank(f), f.domain_dim());
    EXPECT_TRUE((f.matrix() * k.inclusion().matrix()).is_zero());
  }
}

TEST(Cokernel, OfZeroMapIsIdentity) {
  const auto ic = gf2::image_and_cokernel(LinearMap::zero(0, 3));
  EXPECT_EQ(ic.image.dim(), 0U);
  EXPECT_EQ(ic.projection, LinearMap::identity(3));
}

TEST(Cokernel, OfIdentityIsZero) { EXPECT_EQ(gf2::image_and_cokernel(LinearMap::identity(3)).coker_dim, 0U); }

TEST(Cokernel, SecondCoordinateKilled) {
  const auto ic = gf2::image_and_cokernel(LinearMap(M({"0", "1"})));
  EXPECT_EQ(ic.coker_dim, 1U);
  EXPECT_EQ(ic.projection.matrix(), M({"10"}));
}

TEST(Cokernel, ProjectionExactExhaustive) {
  for (std::size_t r = 0; r <= 3; ++r)
    for (std::size_t c = 0; c <= 3; ++c)
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (r * c)); ++code) {
        const LinearMap f(matrix_from_code(code, r, c));
        const auto ic = gf2::image_and_cokernel(f);
        EXPECT_EQ(ic.coker_dim, r - gf2::rank(f));
        EXPECT_TRUE(gf2::is_surjective(ic.projection));
        EXPECT_TRUE((ic.projection * f).is_zero());
        EXPECT_EQ(ic.projection * ic.section, LinearMap::identity(ic.coker_dim));
        EXPECT_EQ(span_elements(gf2::kernel_basis(ic.projection)), image_by_enumeration(f));
      }
}

TEST(Solve, IdentityReturnsTarget) {
  const LinearMap t(M({"101", "011"}));
  EXPECT_EQ(*gf2::solve(LinearMap::identity(2), t), t);
}

TEST(Solve, PicksMinimalSolution) {
  const auto g = gf2::solve(LinearMap(M({"11"})), LinearMap(M({"1"})));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->matrix(), M({"1", "0"}));
}

TEST(Solve, ZeroMapHasNoSolution) {
  EXPECT_FALSE(gf2::solve(LinearMap::zero(2, 2), LinearMap(M({"1", "0"}))));
}

TEST(Solve, SoundAndCompleteExhaustive) {
  // f : F2^2 -> F2^2, target a single column: solvable iff target in image.
  for (std::uint64_t code = 0; code < 16; ++code) {
    const LinearMap f(matrix_from_code(code, 2, 2));
    const auto img = image_by_enumeration(f);
    for (std::uint64_t t = 0; t < 4; ++t) {
      const LinearMap target(column_from_bits(t, 2));
      const auto g = gf2::solve(f, target);
      EXPECT_EQ(g.has_value(), img.count(t) == 1);
      if (g) EXPECT_EQ(f * *g, target);
    }
  }
}

TEST(Solve, RightFactorisation) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const LinearMap f(random_matrix(rng, 4, 5));
    const LinearMap h(random_matrix(rng, 3, 4));
    const auto g = gf2::solve_right(f, h * f);
    ASSERT_TRUE(g);
    EXPECT_EQ(*g * f, h * f);
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const LinearMap f(random_matrix(rng, 5, 5));
    const auto inv = gf2::inverse(f);
    EXPECT_EQ(inv.has_value(), gf2::rank(f) == 5);
    if (inv) EXPECT_EQ(*inv * f, LinearMap::identity(5));
  }
}

TEST(Pullback, OfIdentitiesIsDiagonal) {
  const auto p = gf2::pullback(LinearMap::identity(2), LinearMap::identity(2));
  EXPECT_EQ(p.dim, 2U);
  EXPECT_EQ(p.p1, p.p2);
}

TEST(Pullback, AlongZeroIsKernel) {
  const LinearMap f(M({"11"}));
  const auto p = gf2::pullback(f, LinearMap::zero(0, 1));
  EXPECT_EQ(p.dim, gf2::kernel_basis(f).dim());
}

TEST(Pullback, SumFunctionalAgainstIdentity) {
  const auto p = gf2::pullback(LinearMap(M({"11"})), LinearMap::identity(1));
  EXPECT_EQ(p.dim, 2U);
}

TEST(Pullback, SquaresCommuteAndAreUniversal) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const LinearMap f(random_matrix(rng, 3, 1 + rng() % 4));
    const LinearMap g(random_matrix(rng, 3, 1 + rng() % 4));
    const auto p = gf2::pullback(f, g);
    EXPECT_EQ(f * p.p1, g * p.p2);
    // Dimension from the rank of (f g).
    EXPECT_EQ(p.dim, f.domain_dim() + g.domain_dim() - gf2::rank(BitMatrix::hstack(f.matrix(), g.matrix())));
    // Any commuting pair from a test space factors through P.
    const LinearMap a(random_matrix(rng, f.domain_dim(), 2));
    const auto b = gf2::solve(g, f * a);
    if (b) {
      const LinearMap joint(BitMatrix::vstack(a.matrix(), b->matrix()));
      const LinearMap incl(BitMatrix::vstack(p.p1.matrix(), p.p2.matrix()));
      EXPECT_TRUE(gf2::solve(incl, joint).has_value());
    }
  }
}

TEST(Pushout, OfIdentitiesIsCodiagonal) {
  const auto q = gf2::pushout(LinearMap::identity(2), LinearMap::identity(2));
  EXPECT_EQ(q.dim, 2U);
  EXPECT_EQ(q.q1, q.q2);
}

TEST(Pushout, FromZeroIsCokernel) {
  const LinearMap f(M({"1", "1"}));
  const auto q = gf2::pushout(f, LinearMap::zero(1, 0));
  EXPECT_EQ(q.dim, gf2::image_and_cokernel(f).coker_dim);
}

TEST(Pushout, DiagonalAgainstIdentity) {
  const auto q = gf2::pushout(LinearMap(M({"1", "1"})), LinearMap::identity(1));
  EXPECT_EQ(q.dim, 2U);
}

TEST(Pushout, SquaresCommute) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const LinearMap f(random_matrix(rng, 1 + rng() % 4, 3));
    const LinearMap g(random_matrix(rng, 1 + rng() % 4, 3));
    const auto q = gf2::pushout(f, g);
    EXPECT_EQ(q.q1 * f, q.q2 * g);
  }
}

TEST(BitMatrixJson, RoundTrip) {
  const auto m = M({"0110", "1000"});
  const auto j = gf2::to_json(m);
  EXPECT_EQ(j.dump(), R"({"cols":4,"data":["0110","1000"],"rows":2})");
  EXPECT_EQ(gf2::bitmatrix_from_json(j), m);
}

TEST(BitMatrix, WideRowsKeepPaddingZero) {
  std::mt19937_64 rng(17);
  const auto a = random_matrix(rng, 70, 130);
  const auto b = random_matrix(rng, 130, 67);
  const auto c = a * b;
  EXPECT_EQ(c.transpose().transpose(), c);
  for (std::size_t i = 0; i < 70; ++i)
    for (std::size_t j = 0; j < 67; ++j) {
      bool s = false;
      for (std::size_t k = 0; k < 130; ++k) s ^= a.get(i, k) && b.get(k, j);
      ASSERT_EQ(c.get(i, j), s);
    }
}

}  // namespace
