#include "oracles.hpp"

#include "starsuper/analysis.hpp"
#include "starsuper/errors.hpp"

#include <gtest/gtest.h>

using namespace starsuper;

namespace {

std::vector<std::pair<std::string, StarSuperAlgebra>> small_subjects() {
  return {
      {"mhl-t(1,1)", m_hl_transpose(1, 1)},
      {"mn-cmn(1,t,-)", mn_cmn(1, Diamond::Transpose, true)},
      {"mhh-s(1)", m_hh_symplectic(1)},
      {"ut(1,0;1,0)", ut_star({{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, {0, 1}}).algebra},
      {"one_sided(1,0)", one_sided_radical_extension(m_hl_transpose(1, 0))},
  };
}

MultilinearPoly commutator() {
  MultilinearPoly p({VarKind::Any, VarKind::Any});
  p.add_term({0, 1}, 1);
  p.add_term({1, 0}, -1);
  return p;
}

}  // namespace

TEST(Identity, CapelliDescriptorsAgreeWithBruteForce) {
  for (const auto& [name, a] : small_subjects()) {
    const auto domains = oracle::homogeneous_domains(a);
    for (VarKind kind : kGradedKinds) {
      for (int m = 1; m <= 3; ++m) {
        for (unsigned mask = 0; mask < (1U << (m - 1)); ++mask) {
          CapelliDescriptor d = CapelliDescriptor::unbarred(m, kind);
          for (int j = 0; j < m - 1; ++j) d.deleted[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
          const WitnessReport r = is_graded_identity(a, d);
          EXPECT_EQ(r.is_identity, oracle::brute_force_identity(a, barred_capelli(d), domains))
              << name << " " << d.describe();
          if (!r.is_identity) {
            ASSERT_TRUE(r.witness.has_value());
            EXPECT_TRUE(reverify(a, *r.witness));
          }
        }
      }
    }
  }
}

TEST(Identity, RandomPolynomialsAgreeWithBruteForce) {
  oracle::Gen gen(51);
  const std::vector<VarKind> kinds = {VarKind::YPlus, VarKind::YMinus, VarKind::ZPlus, VarKind::ZMinus, VarKind::Any};
  for (const auto& [name, a] : small_subjects()) {
    const auto domains = oracle::homogeneous_domains(a);
    for (int trial = 0; trial < 15; ++trial) {
      const int slots = gen.integer(1, 3);
      std::vector<VarKind> sk;
      for (int s = 0; s < slots; ++s) sk.push_back(kinds[static_cast<std::size_t>(gen.integer(0, 4))]);
      MultilinearPoly p(sk);
      std::vector<int> w(static_cast<std::size_t>(slots));
      for (int s = 0; s < slots; ++s) w[static_cast<std::size_t>(s)] = s;
      do {
        if (gen.coin()) p.add_term(w, gen.integer(-2, 2));
      } while (std::next_permutation(w.begin(), w.end()));
      const WitnessReport r = is_graded_identity(a, p);
      EXPECT_EQ(r.is_identity, oracle::brute_force_identity(a, p, domains)) << name << " " << p.to_string();
      if (!r.is_identity) EXPECT_TRUE(reverify(a, *r.witness));
    }
  }
}

TEST(Identity, GeneratorSetsReportTheFirstFailingMember) {
  const StarSuperAlgebra field = m_hl_transpose(1, 0);
  const StarSuperAlgebra m11 = m_hl_transpose(1, 1);
  GeneratorSet s;
  s.emplace_back(commutator());
  EXPECT_TRUE(satisfies_generator_set(field, s).is_identity);
  const WitnessReport r = satisfies_generator_set(m11, s);
  EXPECT_FALSE(r.is_identity);
  ASSERT_TRUE(r.witness && r.witness->poly);
  EXPECT_EQ(*r.witness->poly, commutator());
  EXPECT_THROW(satisfies_generator_set(m11, GeneratorSet{}), InvalidArgument);
}

TEST(Threshold, SimpleAlgebrasReachHomDimPlusOne) {
  for (const FamilyTag& t : {FamilyTag::mhl_t(1, 1), FamilyTag::mhh_s(1), FamilyTag::mn_cmn_star(2, Diamond::Transpose),
                             FamilyTag::mhl_exc(1, 1), FamilyTag::mn_cmn_exc(1)}) {
    const StarSuperAlgebra a = build_family(t);
    const HomDims h = oracle::closed_formula(t);
    for (VarKind k : kGradedKinds) {
      const ThresholdReport r = capelli_threshold(a, k, 12);
      EXPECT_EQ(r.threshold, h.of(k) + 1) << t.describe() << " " << to_string(k);
      if (h.of(k) > 0) {
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_EQ(r.witness->descriptor->m, h.of(k));
        EXPECT_TRUE(reverify(a, *r.witness));
      }
    }
  }
}

TEST(Threshold, OrdinaryMatrixAlgebras) {
  // n^2 + 1 for M_n
  EXPECT_EQ(ordinary_capelli_threshold(m_hl_transpose(1, 0), 5).threshold, 2);
  EXPECT_EQ(ordinary_capelli_threshold(m_hl_transpose(2, 0), 8).threshold, 5);
  EXPECT_EQ(ordinary_capelli_threshold(m_hl_transpose(3, 0), 12).threshold, 10);
  // a direct sum behaves like its largest block
  EXPECT_EQ(ordinary_capelli_threshold(direct_sum(m_hl_transpose(2, 0), m_hl_transpose(1, 0)), 8).threshold, 5);
}

TEST(Threshold, UnbarredNeverExceedsBarred) {
  const StarSuperAlgebra u = ut_star({{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)}, {0, 1}}).algebra;
  for (VarKind k : kGradedKinds) {
    EXPECT_LE(capelli_threshold(u, k, 12, {}, false).threshold, capelli_threshold(u, k, 12).threshold);
  }
}

TEST(Threshold, CapTooSmallIsASizeCapRefusal) {
  EXPECT_THROW(capelli_threshold(m_hl_transpose(2, 1), VarKind::YPlus, 3), SizeCapExceeded);
  EXPECT_THROW(capelli_threshold(m_hl_transpose(1, 1), VarKind::YPlus, 0), InvalidArgument);
}

TEST(Threshold, DoesNotDependOnTheSeed) {
  const StarSuperAlgebra u = ut_star({{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 1)}, {1, 0}}).algebra;
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    AnalysisConfig cfg;
    cfg.seed = seed;
    cfg.structured_budget = 1;  // force the later stages
    EXPECT_EQ(capelli_threshold(u, VarKind::YPlus, 12, cfg).threshold, capelli_threshold(u, VarKind::YPlus, 12).threshold);
  }
}

TEST(Threshold, CaseTwoOffsets) {
  const UtSpec s{{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, {0, 1}};
  const CaseTwoOffsets c = measure_case_two(s, ut_star(s).algebra, 8);
  EXPECT_EQ(c.m, 2);
  EXPECT_EQ(c.m_bar, 2);
  EXPECT_EQ(c.m_tilde, 1);
  EXPECT_EQ(c.thresholds, (std::array<int, 4>{3, 1, 2, 2}));
  EXPECT_EQ(c.r0, 0);
  EXPECT_EQ(c.r1, 1);
}

TEST(Codim, MatchesTheDefinition) {
  for (const auto& [name, a] : small_subjects()) {
    for (int n = 1; n <= 3; ++n) {
      EXPECT_EQ(codim_graded(a, n).value, oracle::codim_by_definition(a, n)) << name << " n=" << n;
      EXPECT_EQ(codim_ordinary(a, n), oracle::ordinary_codim_by_definition(a, n)) << name << " n=" << n;
    }
  }
}

TEST(Codim, ReductionMatchesBruteForceAndThreads) {
  const StarSuperAlgebra a = m_hl_exchange(1, 1);
  AnalysisConfig threaded;
  threaded.threads = 3;
  for (int n = 1; n <= 3; ++n) {
    const CodimReport r = codim_graded(a, n);
    EXPECT_EQ(r.value, codim_graded_bruteforce(a, n));
    EXPECT_EQ(codim_graded(a, n, threaded).per_kind_ranks, r.per_kind_ranks);
  }
}

TEST(Codim, FieldHasCodimensionOne) {
  const StarSuperAlgebra f = m_hl_transpose(1, 0);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(codim_ordinary(f, n), 1U);
    EXPECT_EQ(codim_graded(f, n).value, 1U);
  }
}

TEST(Codim, ModularCrossCheck) {
  AnalysisConfig cfg;
  cfg.mod_p = 2147483647ULL;
  const StarSuperAlgebra a = m_hl_transpose(1, 1);
  EXPECT_EQ(codim_graded(a, 3, cfg).value, codim_graded(a, 3).value);
  const KindRank r = kind_vector_rank(a, {VarKind::YPlus, VarKind::ZPlus}, {2147483647ULL, 4294967291ULL});
  EXPECT_EQ(r.modular, (std::vector<std::size_t>{r.exact, r.exact}));
}

TEST(Codim, TableRoots) {
  const auto rows = codim_table(m_hl_transpose(1, 1), 3);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_EQ(rows[0].report.value, 3U);
  EXPECT_NEAR(rows[1].root, std::sqrt(static_cast<double>(rows[1].report.value)), 1e-12);
}

TEST(Codim, Caps) {
  const StarSuperAlgebra a = m_hl_transpose(1, 1);
  EXPECT_THROW(codim_graded(a, 7), SizeCapExceeded);
  AnalysisConfig tiny;
  tiny.cap_evals = 10;
  EXPECT_THROW(codim_graded(a, 3, tiny), SizeCapExceeded);
  EXPECT_THROW(codim_graded(a, 0), InvalidArgument);
}

TEST(Config, RejectsBadValues) {
  AnalysisConfig c;
  c.mod_p = 1000003;  // prime but too small
  EXPECT_THROW(check_config(c), InvalidArgument);
  c.mod_p = 2147483648ULL;  // not prime
  EXPECT_THROW(check_config(c), InvalidArgument);
  c.mod_p.reset();
  c.threads = 0;
  EXPECT_THROW(check_config(c), InvalidArgument);
  c.threads = 1;
  c.cap_n = 0;
  EXPECT_THROW(check_config(c), InvalidArgument);
}

TEST(Exponent, SimpleSumsAndUt) {
  EXPECT_EQ(admissible_exponent(m_hl_transpose(2, 1)), 9);
  EXPECT_EQ(admissible_exponent(direct_sum(m_hl_transpose(1, 1), m_hl_transpose(1, 0))), 4);
  EXPECT_FALSE(is_reduced(direct_sum(m_hl_transpose(1, 1), m_hl_transpose(1, 0))));
  const UtAlgebra u = ut_star({{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)}, {0, 0}});
  EXPECT_EQ(admissible_exponent(u.algebra), 5);
  EXPECT_TRUE(is_reduced(u.algebra));
  EXPECT_EQ(admissible_exponent(one_sided_radical_extension(m_hl_transpose(1, 1))), 4);
}
