#include <vector>

#include <gtest/gtest.h>

#include "recolle/comparison.hpp"
#include "recolle/examples.hpp"
#include "recolle/homological.hpp"
#include "recolle/mv.hpp"

namespace {

using namespace recolle;
using examples::RepMV;
using examples::RepRecollement;

bool all_pass(const std::vector<Check>& cs) {
  bool ok = true;
  for (const auto& c : cs)
    if (!c.passed()) {
      ADD_FAILURE() << c.id << ": " << c.note << " " << (c.witness ? c.witness->dump() : "");
      ok = false;
    }
  return ok;
}

Samples<RepCategory, RepCategory, RepCategory> rep_samples(const RepRecollement& rec, std::size_t a_max,
                                                           std::size_t a2_max) {
  Samples<RepCategory, RepCategory, RepCategory> s;
  s.a1 = rec.a1->enumerate_up_to({a_max});
  s.a = iso_class_representatives(*rec.a, rec.a->enumerate_up_to(std::vector<std::size_t>(
                                                rec.a->dims(rec.a->zero_object()).size(), a_max)))
            .representatives;
  s.a2 = rec.a2->enumerate_up_to({a2_max});
  return s;
}

Samples<RepCategory, RepMV, RepCategory> mv_samples(const std::shared_ptr<const RepMV>& mv, std::size_t x_max,
                                                    std::size_t v_max) {
  Samples<RepCategory, RepMV, RepCategory> s;
  s.a1 = mv->a1().enumerate_up_to({v_max});
  s.a = iso_class_representatives(*mv, mv->enumerate_up_to({x_max, v_max})).representatives;
  s.a2 = mv->a2().enumerate_up_to({x_max});
  return s;
}

TEST(MV, DiagramCategoryIsAbelianOnSamples) {
  const auto mv = examples::mv_of_example(examples::rec_quad_free());
  const auto objs = mv->enumerate_up_to({2, 1});
  ASSERT_FALSE(objs.empty());
  for (const auto& o : objs) EXPECT_TRUE(mv->is_valid(o));
  for (const auto& f : sample_morphisms(*mv, objs, 60, 3)) {
    const auto k = mv->kernel(f);
    const auto c = mv->cokernel(f);
    EXPECT_TRUE(mv->is_zero(mv->compose(f, k.inclusion)));
    EXPECT_TRUE(mv->is_zero(mv->compose(c.projection, f)));
    EXPECT_TRUE(is_mono(*mv, k.inclusion));
    EXPECT_TRUE(is_epi(*mv, c.projection));
    EXPECT_TRUE(is_exact_at(*mv, k.inclusion, f));
    EXPECT_TRUE(is_exact_at(*mv, f, c.projection));
  }
}

TEST(MV, RecollementAxioms) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto mv = examples::mv_of_example(rec);
    const auto r = mv_recollement(mv);
    EXPECT_TRUE(all_pass(verify_axioms(r, mv_samples(mv, 2, 1), 30, 5))) << rec.name;
  }
}

TEST(MV, RStarIsLeftAdjointOfR) {
  const auto mv = examples::mv_of_example(examples::rec_quad_free());
  const auto adj = r_star_adjunction(mv);
  const auto s = mv_samples(mv, 2, 1);
  EXPECT_TRUE(check_adjunction(adj, mv->a1().enumerate_up_to({2}), s.a, 20, 9).passed());
}

TEST(MV, ProjectiveCoversAreProjective) {
  const auto mv = examples::mv_of_example(examples::rec_quad_free());
  const auto s = mv_samples(mv, 2, 1);
  for (const auto& m : s.a) {
    const auto cover = mv->projective_cover(m);
    EXPECT_TRUE(is_epi(*mv, cover.epi));
    for (const auto& n : s.a) EXPECT_EQ(ext_group(*mv, cover.object, n, 1).dim, 0u);
  }
}

TEST(MV, ConstructionRejectsNonRightExactF) {
  const auto inv = examples::invariants();
  auto bad = inv;
  bad.declared = Exactness::right;
  const auto identity_xi = [](const Rep& x) {
    return examples::vect_category()->identity(examples::invariants().obj(x));
  };
  EXPECT_THROW((mv_construct<RepCategory, RepCategory>("bad", bad, inv, identity_xi, std::nullopt,
                                                       examples::sigma2_audit_objects())),
               std::invalid_argument);
}

TEST(Semidirect, CoinvariantsAndInvariants) {
  {
    const auto r = mv_recollement(examples::semidirect_coinvariants());
    const auto p = semidirect_profile(r, mv_samples(examples::semidirect_coinvariants(), 2, 1), 3);
    EXPECT_TRUE(all_pass(p.checks));
    EXPECT_TRUE(p.i_upper_shriek_exact);
    EXPECT_TRUE(p.i_upper_star_j_lower_star_zero);
    EXPECT_FALSE(p.i_upper_star_exact);
  }
  {
    const auto mv = examples::semidirect_invariants();
    const auto r = mv_recollement(mv);
    const auto p = semidirect_profile(r, mv_samples(mv, 2, 1), 3);
    EXPECT_TRUE(all_pass(p.checks));
    EXPECT_TRUE(p.i_upper_star_exact);
    EXPECT_TRUE(p.i_upper_shriek_j_lower_shriek_zero);
    EXPECT_FALSE(p.i_upper_shriek_exact);
  }
}

TEST(Product, NormInvertibleAndComparisonIsEquivalence) {
  const auto rec = examples::rec_product();
  const auto s = rep_samples(rec, 2, 2);
  EXPECT_TRUE(all_pass(verify_axioms(rec, s, 30, 1)));
  const auto p = semidirect_profile(rec, s, 2);
  EXPECT_TRUE(p.norm_invertible);
  EXPECT_TRUE(all_pass(p.checks));
}

TEST(Prehereditary, VerdictsForBothDiagramRecollements) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto pre = prehereditary_check(rec, {examples::vect_space(1)}, rec.a1->enumerate_up_to({2}),
                                         rec.a2->enumerate_up_to({3}));
    EXPECT_TRUE(all_pass(pre.checks));
    EXPECT_EQ(pre.prehereditary, rec.name == "quad_free") << rec.name;
  }
}

TEST(Comparison, InclusionIsNotAnEquivalence) {
  const auto incl = examples::inclusion_functor();
  const auto r1 = examples::rec_quad_vect();
  const auto r2 = examples::rec_quad_free();
  const auto src = rep_samples(r1, 2, 2).a;
  const auto tgt = rep_samples(r2, 2, 2).a;
  const auto res = comparison_check("E_incl", incl, r1, r2, src, tgt, r1.a1->enumerate_up_to({2}),
                                    r1.a2->enumerate_up_to({2}), 4);
  EXPECT_TRUE(res.commutes_with_structure);
  EXPECT_TRUE(res.exact);
  EXPECT_EQ(res.equivalence.overall(), Verdict::no);
}

TEST(Comparison, DiagramFunctorMatchesPrehereditary) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto mv = examples::mv_of_example(rec);
    const auto e = mv_comparison_functor(rec, *rec.retraction, mv);
    const auto mr = mv_recollement(mv);
    const auto src = rep_samples(rec, 2, 2).a;
    const auto tgt = mv_samples(mv, 2, 2).a;
    const auto res = comparison_check("E", e, rec, mr, src, tgt, rec.a1->enumerate_up_to({2}),
                                      rec.a2->enumerate_up_to({2}), 4);
    const auto pre = prehereditary_check(rec, {examples::vect_space(1)}, {}, {});
    EXPECT_TRUE(res.commutes_with_structure);
    EXPECT_TRUE(res.exact);
    EXPECT_EQ(res.left_admissible, pre.prehereditary);
    EXPECT_EQ(res.equivalence.overall() == Verdict::yes, pre.prehereditary) << rec.name;
  }
}

TEST(Homological, SequencesAndFibers) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto s = rep_samples(rec, 2, 3);
    const auto r1 = r1_i_upper_shriek(rec);
    EXPECT_TRUE(check_epsilon_kernel(rec, s.a).passed()) << rec.name;
    EXPECT_TRUE(check_eta_cokernel(rec, s.a, r1).passed()) << rec.name;
    EXPECT_TRUE(all_pass(check_right_derived_vanishing(rec, s, 3))) << rec.name;
    EXPECT_TRUE(all_pass(check_intermediate_derived(rec, s.a2, r1))) << rec.name;
    EXPECT_TRUE(check_essential_images(rec, s.a).passed()) << rec.name;
    EXPECT_TRUE(all_pass(check_mt_round_trips(rec, s.a, rec.a2->enumerate_up_to({2}), rec.a1->enumerate_up_to({2}))))
        << rec.name;
    EXPECT_TRUE(check_linear_extension_fibers(rec, s.a).passed()) << rec.name;
    EXPECT_TRUE(check_ext1_restriction(rec, s.a).passed()) << rec.name;
  }
}

TEST(Homological, Ext1PushforwardWithNonzeroExt) {
  const auto mv = examples::semidirect_sigma2_coefficients();
  const auto r = mv_recollement(mv);
  const auto s = mv_samples(mv, 1, 2);
  EXPECT_TRUE(all_pass(check_ext1_pushforward(r, s.a, r.a1->enumerate_up_to({2}))));
}

}  // namespace
