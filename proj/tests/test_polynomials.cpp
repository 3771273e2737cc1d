#include "oracles.hpp"

#include "starsuper/constructions.hpp"
#include "starsuper/errors.hpp"
#include "starsuper/polynomials.hpp"

#include <gtest/gtest.h>

using namespace starsuper;

TEST(Poly, RejectsWordsThatAreNotPermutations) {
  MultilinearPoly p({VarKind::Any, VarKind::Any});
  EXPECT_THROW(p.add_term({0, 0}, 1), InvalidArgument);
  EXPECT_THROW(p.add_term({0}, 1), InvalidArgument);
  p.add_term({0, 1}, 1);
  p.add_term({0, 1}, -1);
  EXPECT_TRUE(p.terms().empty());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(Poly, CommutatorPrintsAndNegates) {
  MultilinearPoly p({VarKind::Any, VarKind::Any}, {"a", "b"});
  p.add_term({0, 1}, 1);
  p.add_term({1, 0}, -1);
  EXPECT_EQ(p.to_string(), "a b - b a");
  EXPECT_EQ(p.swapped_slots(0, 1), p.negated());
}

TEST(Capelli, TermCountIsFactorial) {
  std::size_t f = 1;
  for (int m = 1; m <= 5; ++m) {
    f *= static_cast<std::size_t>(m);
    EXPECT_EQ(capelli_ordinary(m).terms().size(), f);
    EXPECT_EQ(capelli_ordinary(m).slot_count(), static_cast<std::size_t>(2 * m - 1));
  }
}

TEST(Capelli, AlternatesInTheAlternatingSlots) {
  for (int m = 2; m <= 4; ++m) {
    const MultilinearPoly p = capelli_graded(m, VarKind::ZMinus);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) EXPECT_EQ(p.swapped_slots(i, j), p.negated());
    // the x slots are not alternating
    if (m >= 3) EXPECT_NE(p.swapped_slots(m, m + 1), p.negated());
  }
}

TEST(Capelli, SecondRankIsTheExpectedPolynomial) {
  const MultilinearPoly p = barred_capelli(CapelliDescriptor::unbarred(2, VarKind::YPlus));
  EXPECT_EQ(p.to_string(), "y1+ x1 y2+ - y2+ x1 y1+");
  CapelliDescriptor d = CapelliDescriptor::unbarred(2, VarKind::YPlus);
  d.deleted[0] = true;
  EXPECT_EQ(barred_capelli(d).to_string(), "y1+ y2+ - y2+ y1+");
  EXPECT_EQ(d.describe(), "cap2[y+] without x1");
  EXPECT_EQ(d.slot_count(), 2U);
}

TEST(Capelli, GradedNeedsAGradedKind) { EXPECT_THROW(capelli_graded(2, VarKind::Any), InvalidArgument); }

TEST(Capelli, BarredSetsHaveAllDeletionPatterns) {
  const GeneratorSet s = barred_capelli_set(4, VarKind::YMinus);
  ASSERT_EQ(s.size(), 8U);
  EXPECT_EQ(s[0].descriptor()->kept_x(), 3);
  EXPECT_EQ(s[7].descriptor()->kept_x(), 0);
  const GeneratorSet g = gamma_generators(HomDims{3, 1, 2, 2});
  EXPECT_EQ(g.size(), 4U + 1U + 2U + 2U);
  EXPECT_THROW(gamma_generators(0, 1, 1, 1), InvalidArgument);
}

TEST(Capelli, MembersMaterializeLazily) {
  const GeneratorMember member(CapelliDescriptor::unbarred(3, VarKind::ZPlus));
  EXPECT_EQ(member.describe(), "cap3[z+]");
  EXPECT_EQ(member.poly().terms().size(), 6U);
}

TEST(Evaluate, SubsetRecursionMatchesExpansion) {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 150; ++trial) {
    const StarSuperAlgebra a = build_family(gen.family(3));
    const int m = gen.integer(1, 4);
    CapelliDescriptor d = CapelliDescriptor::unbarred(m, VarKind::Any);
    for (std::size_t j = 0; j < d.deleted.size(); ++j) d.deleted[j] = gen.coin();
    std::vector<Vec> asg;
    for (std::size_t s = 0; s < d.slot_count(); ++s) asg.push_back(gen.vector(a.dim()));
    EXPECT_EQ(evaluate_alternating_fast(a, d, asg), evaluate(a, barred_capelli(d), asg));
  }
}

TEST(Evaluate, AgreesWithHandExpansionOnMatrixUnits) {
  const StarSuperAlgebra m2 = m_hl_transpose(2, 0);
  // e11 x e12 - e12 x e11 with x = e11: e11 e11 e12 - e12 e11 e11 = e12
  const std::vector<Vec> asg = {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 0)};
  EXPECT_EQ(evaluate(m2, capelli_ordinary(2), asg), unit_vec(4, 1));
  EXPECT_EQ(evaluate_alternating_fast(m2, CapelliDescriptor::unbarred(2, VarKind::Any), asg), unit_vec(4, 1));
}

TEST(Evaluate, RejectsBadAssignments) {
  const StarSuperAlgebra a = m_hl_transpose(1, 1);
  EXPECT_THROW(evaluate(a, capelli_ordinary(2), {unit_vec(4, 0)}), InvalidArgument);
  EXPECT_THROW(evaluate(a, capelli_ordinary(1), {unit_vec(3, 0)}), InvalidArgument);
}

TEST(Evaluate, PermutationSigns) {
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
}
