#include <chrono>
#include <vector>

#include <gtest/gtest.h>

#include "recolle/examples.hpp"
#include "recolle/functor.hpp"
#include "recolle/recollement.hpp"

namespace {

using namespace recolle;
using examples::RepRecollement;
using gf2::BitMatrix;
using gf2::LinearMap;

BitMatrix M(std::vector<std::string> rows) { return BitMatrix::from_strings(rows); }

Rep sigma(std::size_t d, BitMatrix u) { return Rep::make(quivers::sigma2(), {d}, {{"u", u}}); }
Rep trivial_line() { return sigma(1, M({"0"})); }
Rep regular() { return sigma(2, M({"11", "11"})); }

Samples<RepCategory, RepCategory, RepCategory> small_samples(const RepRecollement& rec, std::size_t a_max,
                                                             std::size_t a2_max) {
  Samples<RepCategory, RepCategory, RepCategory> s;
  s.a1 = rec.a1->enumerate_up_to({a_max});
  s.a = iso_class_representatives(*rec.a, rec.a->enumerate_up_to({a_max, a_max})).representatives;
  s.a2 = rec.a2->enumerate_up_to({a2_max});
  return s;
}

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.passed()) {
      ADD_FAILURE() << c.id << ": " << c.note;
      return false;
    }
  return true;
}

TEST(Formulas, InvolutionRoundTrip) {
  const auto t = LinearMap(M({"01", "10"}));
  const Rep x = examples::from_involution(t);
  EXPECT_EQ(x.arrow(0).matrix(), M({"11", "11"}));
  EXPECT_EQ(examples::involution_of(x).matrix(), t.matrix());
  EXPECT_TRUE(check_relations(x));
}

TEST(Formulas, LowerShriekOfTrivialLine) {
  const auto rec = examples::rec_quad_free();
  const Rep a = rec.j_lower_shriek.obj(trivial_line());
  EXPECT_EQ(a.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(a.arrow("H").is_zero());
  EXPECT_TRUE(a.arrow("P").is_identity());
}

TEST(Formulas, LowerStarOfTrivialLine) {
  const auto rec = examples::rec_quad_free();
  const Rep a = rec.j_lower_star.obj(trivial_line());
  EXPECT_EQ(a.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(a.arrow("H").is_identity());
  EXPECT_TRUE(a.arrow("P").is_zero());
}

TEST(Formulas, RegularModule) {
  const auto rec = examples::rec_quad_free();
  const Rep lo = rec.j_lower_shriek.obj(regular());
  const Rep hi = rec.j_lower_star.obj(regular());
  EXPECT_EQ(lo.dims(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(hi.dims(), (std::vector<std::size_t>{1, 2}));
  // The free module is projective and injective, so the norm is invertible.
  EXPECT_TRUE(rec.a->is_invertible(norm(rec, regular())));
}

TEST(Formulas, OutputsSatisfyRelations) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    for (const auto& x : rec.a2->enumerate_up_to({3})) {
      EXPECT_TRUE(check_relations(rec.j_lower_shriek.obj(x)));
      EXPECT_TRUE(check_relations(rec.j_lower_star.obj(x)));
      EXPECT_TRUE(rec.a2->same_object(rec.j_upper_star.obj(rec.j_lower_shriek.obj(x)), x));
    }
  }
}

TEST(Norm, TrivialLineExample) {
  const auto rec = examples::rec_quad_free();
  const auto x = trivial_line();
  const auto n = norm(rec, x);
  EXPECT_TRUE(n.component(0).is_zero());
  EXPECT_TRUE(n.component(1).is_identity());
  EXPECT_EQ(rec.a->hom_basis(rec.j_lower_shriek.obj(x), rec.j_lower_star.obj(x)).size(), 1u);
  const auto mid = intermediate_extension(rec, x).object;
  EXPECT_EQ(mid.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rec.counit_i_shriek(rec.j_lower_shriek.obj(x)).source().dims(), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(rec.unit_i(rec.j_lower_star.obj(x)).target().dims(), (std::vector<std::size_t>{1, 0}));
}

TEST(Axioms, BothBundlesPass) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto s = small_samples(rec, 2, 2);
    EXPECT_TRUE(all_pass(verify_axioms(rec, s, 40, 7))) << rec.name;
  }
}

TEST(Axioms, CorruptedLowerStarFails) {
  const auto rec = examples::corrupted_j_lower_star(examples::rec_quad_free());
  const auto s = small_samples(rec, 1, 2);
  bool some_fail = false;
  for (const auto& c : verify_axioms(rec, s, 20, 7)) some_fail = some_fail || c.status == Status::fail;
  EXPECT_TRUE(some_fail);
}

TEST(Functors, LawsAndDeclaredExactness) {
  const auto rec = examples::rec_quad_free();
  const auto s = small_samples(rec, 2, 3);
  const auto seqs_a = sample_short_exact(*rec.a, s.a, 3, 2, 11);
  const auto seqs_a2 = sample_short_exact(*rec.a2, s.a2, 3, 2, 12);
  for (const auto* f : {&rec.i_upper_star, &rec.i_upper_shriek, &rec.j_upper_star}) {
    EXPECT_TRUE(check_functor_laws(*f, s.a, 30, 3).passed()) << f->name;
    EXPECT_TRUE(audit_exactness(*f, seqs_a).passed()) << f->name;
  }
  for (const auto* f : {&rec.j_lower_shriek, &rec.j_lower_star}) {
    EXPECT_TRUE(check_functor_laws(*f, s.a2, 30, 3).passed()) << f->name;
    EXPECT_TRUE(audit_exactness(*f, seqs_a2).passed()) << f->name;
  }
  // i^* is not left exact and i^! is not right exact here.
  EXPECT_FALSE(exactness_profile(rec.i_upper_star, seqs_a).left_exact);
  EXPECT_FALSE(exactness_profile(rec.i_upper_shriek, seqs_a).right_exact);
}

TEST(Sequences, NormAndUnitSequences) {
  for (const auto& rec : {examples::rec_quad_free(), examples::rec_quad_vect()}) {
    const auto s = small_samples(rec, 2, 3);
    EXPECT_TRUE(all_pass(check_norm(rec, s.a2, s.a)));
    EXPECT_TRUE(all_pass(check_unit_sequences(rec, s.a)));
    EXPECT_TRUE(all_pass(check_plain_vanishing(rec, s.a2)));
    EXPECT_TRUE(all_pass(check_left_derived_vanishing(rec, s, 3)));
    const auto seqs = sample_short_exact(*rec.a2, s.a2, 3, 2, 5);
    EXPECT_TRUE(check_snake_sequence(rec, seqs).passed());
  }
}

TEST(Derived, RightDerivedOfLowerStar) {
  const auto rec = examples::rec_quad_free();
  // R^0 agrees with the functor itself.
  for (const auto& x : rec.a2->enumerate_up_to({2}))
    EXPECT_EQ(derived_right(rec.j_lower_star, x, 0).dims(), rec.j_lower_star.obj(x).dims());
  // j^* R^1 j_* vanishes.
  for (const auto& x : rec.a2->enumerate_up_to({3}))
    EXPECT_TRUE(rec.j_upper_star.obj(derived_right(rec.j_lower_star, x, 1)).is_zero());
}

}  // namespace
