#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "recolle/category.hpp"
#include "recolle/quivers.hpp"
#include "recolle/rep.hpp"
#include "support/ext_oracle.hpp"

namespace {

using namespace recolle;
using gf2::BitMatrix;
using gf2::LinearMap;

BitMatrix M(std::vector<std::string> rows) { return BitMatrix::from_strings(rows); }
BitMatrix M(std::vector<std::string> rows, std::size_t cols) { return BitMatrix::from_strings(rows, cols); }

Rep quad(const QuiverPtr& q, std::size_t d1, std::size_t d2, BitMatrix h, BitMatrix p) {
  return Rep::make(q, {d1, d2}, {{"H", h}, {"P", p}});
}

Rep witness() { return quad(quivers::quad_free(), 2, 1, M({"10"}), M({"0", "1"})); }

Rep sigma(std::size_t d, BitMatrix u) { return Rep::make(quivers::sigma2(), {d}, {{"u", u}}); }

// Number of tuples of vertex maps satisfying every commuting square, by
// running over all of them.
std::size_t hom_count_by_enumeration(const Rep& m, const Rep& n) {
  const auto& q = m.quiver();
  std::size_t bits = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) bits += m.dim(v) * n.dim(v);
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<LinearMap> cs;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      BitMatrix c(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j, ++pos)
          if ((code >> pos) & 1U) c.set(i, j, true);
      cs.emplace_back(std::move(c));
    }
    if (RepMorphism(m, n, cs).is_intertwining()) ++count;
  }
  return count;
}

TEST(Relations, ScalarCycleViolatesPHP) {
  EXPECT_FALSE(check_relations(quad(quivers::quad_free(), 1, 1, M({"1"}), M({"1"}))));
}

TEST(Relations, ZeroArrowsSatisfyEverything) {
  EXPECT_TRUE(check_relations(Rep::semisimple(quivers::quad_free(), {3, 0})));
  EXPECT_TRUE(check_relations(Rep::semisimple(quivers::quad_vect(), {2, 2})));
}

TEST(Relations, WitnessSatisfiesFreeRelationsButNotPH) {
  const Rep w = witness();
  EXPECT_TRUE(check_relations(w));
  const LinearMap ph = w.arrow("P") * w.arrow("H");
  EXPECT_EQ(ph.matrix(), M({"00", "10"}));
  const Rep as_vect = quad(quivers::quad_vect(), 2, 1, M({"10"}), M({"0", "1"}));
  EXPECT_FALSE(check_relations(as_vect));
}

TEST(Quiver, RejectsNonTruncatedBound) {
  EXPECT_THROW(BoundQuiver::make("bad", {"v"}, {{"u", "v", "v"}}, {{{"u", "u", "u"}}}, 2), std::invalid_argument);
}

TEST(Quiver, OppositeReversesRelations) {
  const auto op = quivers::quad_free()->opposite();
  EXPECT_EQ(op->name(), "quad_free^op");
  EXPECT_EQ(op->opposite()->name(), "quad_free");
  EXPECT_EQ(op->arrows()[op->arrow_index("H")].source, op->vertex_index("v2"));
}

TEST(Hom, ContainsIdentity) {
  RepCategory c(quivers::quad_free());
  for (const auto& r : c.enumerate({1, 1})) {
    const auto basis = c.hom_basis(r, r);
    std::vector<RepMorphism> with_id = basis;
    with_id.push_back(c.identity(r));
    EXPECT_EQ(span_rank(c, with_id), basis.size());
  }
}

TEST(Hom, OneVertexIsFullMatrixSpace) {
  RepCategory c(quivers::vect());
  EXPECT_EQ(c.hom_basis(Rep::semisimple(quivers::vect(), {2}), Rep::semisimple(quivers::vect(), {3})).size(), 6U);
}

TEST(Hom, DimensionMatchesEnumeration) {
  for (const auto& q : {quivers::quad_free(), quivers::quad_vect()}) {
    RepCategory c(q);
    const auto objs = c.enumerate_up_to({1, 2});
    for (const auto& a : objs)
      for (const auto& b : objs) {
        const auto basis = c.hom_basis(a, b);
        for (const auto& f : basis) EXPECT_TRUE(f.is_intertwining());
        EXPECT_EQ(std::size_t{1} << basis.size(), hom_count_by_enumeration(a, b));
      }
  }
}

TEST(Enumerate, TwoVertexUnitDims) {
  RepCategory c(quivers::quad_free());
  const auto objs = c.enumerate({1, 1});
  ASSERT_EQ(objs.size(), 3U);
  // Lexicographic bit order: H bit first.
  EXPECT_EQ(objs[0].arrow("H").matrix(), M({"0"}));
  EXPECT_EQ(objs[0].arrow("P").matrix(), M({"0"}));
  EXPECT_EQ(objs[1].arrow("P").matrix(), M({"1"}));
  EXPECT_EQ(objs[2].arrow("H").matrix(), M({"1"}));
  EXPECT_EQ(RepCategory(quivers::quad_vect()).enumerate({1, 1}).size(), 3U);
}

TEST(Enumerate, ZeroDimsGiveZeroObject) {
  RepCategory c(quivers::quad_free());
  const auto objs = c.enumerate({0, 0});
  ASSERT_EQ(objs.size(), 1U);
  EXPECT_TRUE(objs[0].is_zero());
}

TEST(Enumerate, NoArrowsGivesOneObject) { EXPECT_EQ(RepCategory(quivers::vect()).enumerate({2}).size(), 1U); }

TEST(Enumerate, RefusesBeyondBudget) {
  RepCategory c(quivers::quad_free());
  EXPECT_THROW(c.enumerate({4, 4}), BudgetExceeded);
}

TEST(Kernel, OfIdentityIsZero) {
  RepCategory c(quivers::quad_free());
  EXPECT_TRUE(c.kernel(c.identity(witness())).object.is_zero());
}

TEST(Cokernel, OfZeroMapIsTarget) {
  RepCategory c(quivers::quad_free());
  const Rep w = witness();
  const auto k = c.cokernel(c.zero_morphism(c.zero_object(), w));
  EXPECT_EQ(k.object, w);
  EXPECT_TRUE(k.projection.component(0).is_identity());
}

TEST(Abelian, KernelsCokernelsAndFirstIsomorphism) {
  for (const auto& q : {quivers::quad_free(), quivers::quad_vect(), quivers::sigma2()}) {
    RepCategory c(q);
    const std::vector<std::size_t> bound = q->vertex_count() == 2 ? std::vector<std::size_t>{1, 1}
                                                                  : std::vector<std::size_t>{2};
    auto objs = c.enumerate_up_to(bound);
    if (q->vertex_count() == 2)
      for (auto& r : c.enumerate({2, 1})) objs.push_back(r);
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& f : all_morphisms(c, a, b)) {
          const auto k = c.kernel(f);
          const auto ck = c.cokernel(f);
          EXPECT_TRUE(check_relations(k.object));
          EXPECT_TRUE(check_relations(ck.object));
          EXPECT_TRUE(k.inclusion.is_intertwining());
          EXPECT_TRUE(ck.projection.is_intertwining());
          EXPECT_TRUE(c.is_zero(c.compose(f, k.inclusion)));
          EXPECT_TRUE(c.is_zero(c.compose(ck.projection, f)));
          const auto im = image(c, f);
          const auto coim = coimage(c, f);
          // Induced map coimage -> image.
          const auto through = c.factor_through_mono(im.inclusion, f);
          ASSERT_TRUE(through);
          const auto induced = c.factor_through_epi(coim.projection, *through);
          ASSERT_TRUE(induced);
          EXPECT_TRUE(c.is_invertible(*induced));
        }
  }
}

TEST(DirectSum, BiproductIdentities) {
  RepCategory c(quivers::quad_free());
  const Rep w = witness();
  const Rep z = c.zero_object();
  EXPECT_EQ(c.direct_sum(w, z).object, w);
  EXPECT_EQ(c.direct_sum(z, w).object, w);
  for (const auto& a : c.enumerate({1, 1}))
    for (const auto& b : c.enumerate({1, 2})) {
      const auto s = c.direct_sum(a, b);
      EXPECT_TRUE(check_relations(s.object));
      EXPECT_EQ(s.object.dims(), (std::vector<std::size_t>{2, 3}));
      EXPECT_TRUE(c.equal(c.compose(s.proj1, s.inj1), c.identity(a)));
      EXPECT_TRUE(c.equal(c.compose(s.proj2, s.inj2), c.identity(b)));
      EXPECT_TRUE(c.is_zero(c.compose(s.proj2, s.inj1)));
      EXPECT_TRUE(c.equal(c.add(c.compose(s.inj1, s.proj1), c.compose(s.inj2, s.proj2)), c.identity(s.object)));
    }
}

TEST(Projective, Dimensions) {
  EXPECT_EQ(RepCategory(quivers::vect()).indecomposable_projective(0).dims(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(RepCategory(quivers::sigma2()).indecomposable_projective(0).dims(), (std::vector<std::size_t>{2}));
  // Paths from v1: e, H, PH (HPH is a relation).
  EXPECT_EQ(RepCategory(quivers::quad_free()).indecomposable_projective(0).dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(RepCategory(quivers::quad_vect()).indecomposable_projective(0).dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(RepCategory(quivers::quad_free()).indecomposable_projective(1).dims(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(RepCategory(quivers::quad_vect()).indecomposable_projective(1).dims(), (std::vector<std::size_t>{1, 2}));
}

TEST(Projective, HomFromProjectiveIsEvaluation) {
  // dim Hom(P(v), M) = dim M_v.
  for (const auto& q : {quivers::quad_free(), quivers::quad_vect()}) {
    RepCategory c(q);
    for (std::size_t v = 0; v < 2; ++v) {
      const Rep p = c.indecomposable_projective(v);
      EXPECT_TRUE(check_relations(p));
      for (const auto& m : c.enumerate_up_to({2, 1})) EXPECT_EQ(c.hom_basis(p, m).size(), m.dim(v));
    }
  }
}

TEST(ProjectiveCover, ProjectiveIsItsOwnCover) {
  RepCategory c(quivers::quad_free());
  const Rep p = c.indecomposable_projective(0);
  const auto cov = c.projective_cover(p);
  EXPECT_TRUE(c.is_invertible(cov.epi));
}

TEST(ProjectiveCover, SimpleCoveredByItsProjective) {
  RepCategory c(quivers::quad_free());
  const auto cov = c.projective_cover(Rep::semisimple(quivers::quad_free(), {0, 1}));
  EXPECT_EQ(cov.object.dims(), c.indecomposable_projective(1).dims());
}

TEST(ProjectiveCover, LoopSimpleHasSimpleKernel) {
  RepCategory c(quivers::sigma2());
  const Rep s = Rep::semisimple(quivers::sigma2(), {1});
  const auto cov = c.projective_cover(s);
  EXPECT_EQ(cov.object.dims(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(is_isomorphic(c, c.kernel(cov.epi).object, s), Verdict::yes);
}

TEST(ProjectiveCover, EpiAndMinimal) {
  for (const auto& q : {quivers::quad_free(), quivers::quad_vect(), quivers::sigma2()}) {
    RepCategory c(q);
    const std::vector<std::size_t> bound = q->vertex_count() == 2 ? std::vector<std::size_t>{2, 2}
                                                                  : std::vector<std::size_t>{3};
    for (const auto& m : c.enumerate_up_to(bound)) {
      const auto cov = c.projective_cover(m);
      ASSERT_TRUE(cov.epi.is_intertwining());
      EXPECT_TRUE(is_epi(c, cov.epi));
      const auto ker = c.kernel(cov.epi);
      const auto rad = c.radical(cov.object);
      for (std::size_t v = 0; v < q->vertex_count(); ++v)
        EXPECT_TRUE(rad[v].contains(gf2::Subspace::span_of_columns(ker.inclusion.component(v).matrix())));
    }
  }
}

TEST(Resolution, ProjectiveHasZeroTail) {
  RepCategory c(quivers::quad_free());
  const auto res = resolve(c, c.indecomposable_projective(1), 3);
  for (std::size_t k = 1; k < res.terms.size(); ++k) EXPECT_TRUE(res.terms[k].is_zero());
}

TEST(Resolution, LoopSimpleIsPeriodic) {
  RepCategory c(quivers::sigma2());
  const auto res = resolve(c, Rep::semisimple(quivers::sigma2(), {1}), 4);
  for (const auto& t : res.terms) EXPECT_EQ(t.dims(), (std::vector<std::size_t>{2}));
}

TEST(Resolution, DifferentialsComposeToZeroAndAreExact) {
  for (const auto& q : {quivers::quad_free(), quivers::quad_vect()}) {
    RepCategory c(q);
    for (const auto& m : c.enumerate_up_to({2, 1})) {
      const auto res = resolve(c, m, 3);
      EXPECT_TRUE(c.is_zero(c.compose(*res.augmentation, res.differentials[0])));
      EXPECT_TRUE(is_exact_at(c, res.differentials[0], *res.augmentation));
      for (std::size_t k = 0; k + 1 < res.differentials.size(); ++k) {
        EXPECT_TRUE(c.is_zero(c.compose(res.differentials[k], res.differentials[k + 1])));
        EXPECT_TRUE(is_exact_at(c, res.differentials[k + 1], res.differentials[k]));
      }
    }
  }
}

TEST(Ext, ProjectiveIsAcyclic) {
  RepCategory c(quivers::quad_free());
  const Rep p = c.indecomposable_projective(0);
  for (const auto& n : c.enumerate_up_to({1, 1}))
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(ext_group(c, p, n, k).dim, 0U);
}

TEST(Ext, DegreeZeroIsHom) {
  RepCategory c(quivers::quad_free());
  const auto objs = c.enumerate_up_to({2, 1});
  for (const auto& a : objs)
    for (const auto& b : objs) EXPECT_EQ(ext_group(c, a, b, 0).dim, c.hom_basis(a, b).size());
}

TEST(Ext, LoopSimpleSelfExtension) {
  RepCategory c(quivers::sigma2());
  const Rep s = Rep::semisimple(quivers::sigma2(), {1});
  EXPECT_EQ(ext_group(c, s, s, 1).dim, 1U);
  EXPECT_EQ(oracle::count_baer_classes(c, s, s).classes, 2U);
}

TEST(Ext, MatchesBaerClassCountSmall) {
  RepCategory c(quivers::quad_free());
  const auto reps = iso_class_representatives(c, c.enumerate_up_to({1, 1})).representatives;
  for (const auto& a : reps)
    for (const auto& b : reps) {
      const auto count = oracle::count_baer_classes(c, b, a);
      ASSERT_FALSE(count.undecided);
      EXPECT_EQ(std::size_t{1} << ext_group(c, a, b, 1).dim, count.classes);
    }
}

TEST(Baer, SelfAndSplit) {
  RepCategory c(quivers::sigma2());
  const Rep s = Rep::semisimple(quivers::sigma2(), {1});
  const auto split = split_extension(c, s, s);
  EXPECT_EQ(baer_equal(c, split, split), Verdict::yes);
  // Split with permuted middle coordinates.
  const Rep mid = sigma(2, M({"00", "00"}));
  auto mp = std::make_shared<const Rep>(mid);
  auto sp = std::make_shared<const Rep>(s);
  Extension<RepCategory> swapped{s, s, mid, RepMorphism(sp, mp, {LinearMap(M({"0", "1"}))}),
                                 RepMorphism(mp, sp, {LinearMap(M({"10"}))})};
  ASSERT_TRUE(is_valid_extension(c, swapped));
  EXPECT_EQ(baer_equal(c, split, swapped), Verdict::yes);
  // The projective as a non-split self-extension of the simple.
  const Rep p = sigma(2, M({"00", "10"}));
  auto pp = std::make_shared<const Rep>(p);
  Extension<RepCategory> nonsplit{s, s, p, RepMorphism(sp, pp, {LinearMap(M({"0", "1"}))}),
                                  RepMorphism(pp, sp, {LinearMap(M({"10"}))})};
  ASSERT_TRUE(is_valid_extension(c, nonsplit));
  EXPECT_EQ(baer_equal(c, split, nonsplit), Verdict::no);
}

TEST(Iso, Basics) {
  RepCategory c(quivers::quad_free());
  const Rep w = witness();
  EXPECT_EQ(is_isomorphic(c, w, w), Verdict::yes);
  EXPECT_EQ(is_isomorphic(c, w, Rep::semisimple(quivers::quad_free(), {1, 2})), Verdict::no);
}

TEST(Iso, WitnessMatchesNoPHZeroObject) {
  RepCategory c(quivers::quad_free());
  const Rep w = witness();
  for (const auto& r : RepCategory(quivers::quad_vect()).enumerate({2, 1})) {
    const Rep as_free = Rep(quivers::quad_free(), r.dims(), r.arrows());
    EXPECT_EQ(is_isomorphic(c, w, as_free), Verdict::no);
  }
}

TEST(Iso, EnumerationCountsUnderConjugation) {
  // Orbit-stabilizer: the objects with a given dimension vector split into
  // classes whose sizes are |GL| / |Aut|.
  RepCategory c(quivers::sigma2());
  const auto all = c.enumerate({2});
  const auto reps = iso_class_representatives(c, all).representatives;
  ASSERT_EQ(reps.size(), 2U);
  // |GL_2(F2)| = 6; Aut(S+S) = GL_2, Aut(P) = units of F2[u]/u^2, size 2.
  EXPECT_EQ(all.size(), 6U / 6U + 6U / 2U);
}

TEST(Dual, IsAnExactInvolution) {
  RepCategory c(quivers::quad_free());
  RepCategory op = c.opposite();
  EXPECT_TRUE(c.dualize(c.zero_object()).is_zero());
  const Rep iv = Rep::semisimple(quivers::quad_free(), {2, 0});
  const Rep d = c.dualize(iv);
  EXPECT_EQ(d.quiver().name(), "quad_free^op");
  EXPECT_TRUE(c.is_zero(c.zero_morphism(iv, iv)));
  EXPECT_EQ(op.dualize(d), iv);
  EXPECT_TRUE(check_relations(c.dualize(witness())));
  const auto objs = c.enumerate_up_to({1, 1});
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : all_morphisms(c, a, b)) {
        const auto k = c.kernel(f).object;
        const auto ck = op.cokernel(c.dualize(f)).object;
        EXPECT_EQ(is_isomorphic(op, c.dualize(k), ck), Verdict::yes);
      }
}

TEST(Json, RepRoundTrip) {
  const Rep w = witness();
  const auto j = rep_to_json(w);
  EXPECT_EQ(j.dump(),
            R"({"arrows":{"H":{"cols":2,"data":["10"],"rows":1},"P":{"cols":1,"data":["0","1"],"rows":2}},)"
            R"("dims":{"v1":2,"v2":1},"quiver":"quad_free"})");
  EXPECT_EQ(rep_from_json(j, quivers::quad_free()), w);
  EXPECT_THROW(rep_from_json(j, quivers::quad_vect()), std::invalid_argument);
}

}  // namespace
