#include "oracles.hpp"

#include "starsuper/constructions.hpp"
#include "starsuper/errors.hpp"

#include <gtest/gtest.h>

using namespace starsuper;

namespace {

// 2 * sum_{i<j} s_i s_j units above the diagonal blocks, mirrored.
std::size_t expected_ut_dim(const UtSpec& s) {
  std::size_t total = 0;
  std::vector<int> sizes;
  for (const auto& c : s.components) {
    total += build_family(c).dim();
    sizes.push_back(c.size());
  }
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) total += 2 * static_cast<std::size_t>(sizes[i] * sizes[j]);
  return total;
}

std::size_t expected_radical_dim(const UtSpec& s) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < s.components.size(); ++i)
    for (std::size_t j = i + 1; j < s.components.size(); ++j)
      total += 2 * static_cast<std::size_t>(s.components[i].size() * s.components[j].size());
  return total;
}

}  // namespace

TEST(Families, RejectInvalidParameters) {
  EXPECT_THROW(m_hh_symplectic(0), InvalidArgument);
  EXPECT_THROW(m_hl_transpose(1, 2), InvalidArgument);
  EXPECT_THROW(m_hl_transpose(0, 0), InvalidArgument);
  EXPECT_THROW(mn_cmn(1, Diamond::Symplectic, true), InvalidArgument);
  EXPECT_THROW(mn_cmn_exchange(0), InvalidArgument);
  EXPECT_THROW(build_family(FamilyTag{}), InvalidArgument);
}

TEST(Families, DescriptorsParse) {
  EXPECT_EQ(parse_family_descriptor("mhl-t:2,1"), FamilyTag::mhl_t(2, 1));
  EXPECT_EQ(parse_family_descriptor("mn-cmn:2,s,plus"), FamilyTag::mn_cmn_dagger(2, Diamond::Symplectic));
  EXPECT_THROW(parse_family_descriptor("mhl-t:2"), ParseError);
  EXPECT_THROW(parse_family_descriptor("nope:1"), ParseError);
  EXPECT_THROW(parse_family_descriptor("mhh-s:0"), InvalidArgument);
}

TEST(Ut, LayoutOfTwoPoints) {
  const UtLayout l = ut_layout({{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, {0, 1}});
  EXPECT_EQ(l.sizes, (std::vector<int>{1, 1}));
  EXPECT_EQ(l.eta, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(l.matrix_size(), 4);
  EXPECT_EQ(l.alpha, (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(l.block_first(2), 2);
  EXPECT_EQ(l.block_last(2), 2);
}

TEST(Ut, RejectsGradingLengthMismatch) {
  EXPECT_THROW(ut_star({{FamilyTag::mhl_t(1, 0)}, {0, 1}}), InvalidArgument);
  EXPECT_THROW(ut_star({{}, {}}), InvalidArgument);
  EXPECT_THROW(ut_star({{FamilyTag::mhl_t(1, 0)}, {2}}), InvalidArgument);
}

TEST(Ut, RandomSpecsHaveExpectedShape) {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 12; ++trial) {
    UtSpec s;
    const int m = gen.integer(1, 3);
    for (int k = 0; k < m; ++k) {
      s.components.push_back(gen.family(2));
      s.gtilde.push_back(gen.integer(0, 1));
    }
    const UtAlgebra u = ut_star(s);
    EXPECT_EQ(u.algebra.dim(), expected_ut_dim(s));
    EXPECT_TRUE(validate(u.algebra).empty());
    EXPECT_EQ(jacobson_radical(u.algebra).dim(), expected_radical_dim(s));
    EXPECT_EQ(u.layout.eta.back() * 2, u.layout.matrix_size());
    for (int i = 1; i <= u.layout.matrix_size(); ++i) {
      // the grading vector is symmetric about the secondary diagonal
      EXPECT_EQ(u.layout.alpha[static_cast<std::size_t>(i - 1)],
                u.layout.alpha[static_cast<std::size_t>(u.layout.matrix_size() - i)]);
    }
  }
}

TEST(Ut, TwoSquareBlocksGiveDimensionSixteen) {
  const UtAlgebra u = ut_star({{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 1)}, {0, 0}});
  EXPECT_EQ(u.algebra.dim(), 16U);
  EXPECT_EQ(jacobson_radical(u.algebra).dim(), 8U);
}

TEST(Ut, ComponentHomDimsAddUpInTheSemisimplePart) {
  const UtSpec s{{FamilyTag::mhl_t(1, 1), FamilyTag::mn_cmn_star(1, Diamond::Transpose)}, {0, 1}};
  const UtAlgebra u = ut_star(s);
  const HomDims a = hom_dims(m_hl_transpose(1, 1));
  const HomDims b = hom_dims(mn_cmn(1, Diamond::Transpose, true));
  const HomDims total = hom_dims(u.algebra);
  // V contributes to every component, so the totals dominate the sums
  EXPECT_GE(total.m_plus, a.m_plus + b.m_plus);
  EXPECT_GE(total.l_minus, a.l_minus + b.l_minus);
  EXPECT_EQ(total.total(), static_cast<int>(u.algebra.dim()));
}

TEST(Extensions, OneSidedTriplesTheDimension) {
  const StarSuperAlgebra a = m_hl_transpose(1, 1);
  const StarSuperAlgebra r = one_sided_radical_extension(a);
  EXPECT_EQ(r.dim(), 3 * a.dim());
  EXPECT_TRUE(validate(r).empty());
  EXPECT_EQ(jacobson_radical(r).dim(), 2 * a.dim());
  EXPECT_TRUE(subspace_product(r, jacobson_radical(r), jacobson_radical(r)).is_zero());
}

TEST(Extensions, OneSidedRejectsNonSimpleInput) {
  EXPECT_THROW(one_sided_radical_extension(direct_sum(m_hl_transpose(1, 0), m_hl_transpose(1, 0))), InvalidArgument);
  const UtAlgebra u = ut_star({{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, {0, 0}});
  EXPECT_THROW(one_sided_radical_extension(u.algebra), InvalidArgument);
}

TEST(Extensions, TensorWithNilpotentAlgebras) {
  const StarSuperAlgebra a = m_hl_transpose(1, 1);
  for (int k = 1; k <= 3; ++k) {
    const StarSuperAlgebra t = tensor_nilpotent_extension(a, commutative_nilpotent(k));
    EXPECT_EQ(t.dim(), a.dim() * static_cast<std::size_t>(k + 1));
    EXPECT_TRUE(validate(t).empty());
    EXPECT_EQ(jacobson_radical(t).dim(), a.dim() * static_cast<std::size_t>(k));
    // J^{k+1} = 0 but J^k != 0
    Subspace power = jacobson_radical(t);
    for (int i = 1; i < k; ++i) power = subspace_product(t, power, jacobson_radical(t));
    EXPECT_FALSE(power.is_zero());
    EXPECT_TRUE(subspace_product(t, power, jacobson_radical(t)).is_zero());
  }
  const StarSuperAlgebra nc = tensor_nilpotent_extension(a, noncommutative_nilpotent());
  EXPECT_EQ(nc.dim(), 5 * a.dim());
  EXPECT_TRUE(validate(nc).empty());
}

TEST(Extensions, CentralizerOfTheRadical) {
  const StarSuperAlgebra t = tensor_nilpotent_extension(m_hl_transpose(1, 1), noncommutative_nilpotent());
  // A (x) N with A unital: the elements 1 (x) n commute with A (x) 1
  EXPECT_EQ(radical_centralizer(t).dim(), 4U);
}
