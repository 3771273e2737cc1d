// Acceptance harness: one PASS/FAIL line per criterion. Expected values come
// from closed formulas and reference computations in this directory, never
// from the library's own report code.

#include "oracles.hpp"

#include "starsuper/analysis.hpp"
#include "starsuper/constructions.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace starsuper;

namespace {

struct Check {
  std::ostringstream problems;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    problems << "    " << what << "\n";
  }
  template <class T>
  void equal(const T& actual, const T& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream s;
    s << what << ": expected " << expected << ", got " << actual;
    expect(false, s.str());
  }
};

std::ostream& operator<<(std::ostream& os, const HomDims& h) { return os << to_string(h); }

std::vector<FamilyTag> grid() {
  std::vector<FamilyTag> out;
  for (auto [h, l] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    out.push_back(FamilyTag::mhl_t(h, l));
    out.push_back(FamilyTag::mhl_exc(h, l));
  }
  for (int h : {1, 2}) out.push_back(FamilyTag::mhh_s(h));
  for (int n : {1, 2}) {
    out.push_back(FamilyTag::mn_cmn_star(n, Diamond::Transpose));
    out.push_back(FamilyTag::mn_cmn_dagger(n, Diamond::Transpose));
    out.push_back(FamilyTag::mn_cmn_exc(n));
  }
  out.push_back(FamilyTag::mn_cmn_star(2, Diamond::Symplectic));
  out.push_back(FamilyTag::mn_cmn_dagger(2, Diamond::Symplectic));
  return out;
}

// Value of a witness recomputed term by term from the expanded polynomial.
Vec expanded_value(const StarSuperAlgebra& a, const Witness& w) {
  const MultilinearPoly p = w.descriptor ? barred_capelli(*w.descriptor) : *w.poly;
  Vec total(a.dim());
  for (const auto& [word, c] : p.terms()) {
    Vec prod = w.assignment[static_cast<std::size_t>(word[0])];
    for (std::size_t k = 1; k < word.size(); ++k) prod = a.multiply(prod, w.assignment[static_cast<std::size_t>(word[k])]);
    for (std::size_t k = 0; k < a.dim(); ++k) total[k] += c * prod[k];
  }
  return total;
}

bool witness_holds(const StarSuperAlgebra& a, const Witness& w) {
  const Vec v = expanded_value(a, w);
  return v == w.value && !is_zero(v);
}

HomDims summed(const std::vector<FamilyTag>& comps) {
  HomDims d;
  for (const auto& c : comps) {
    const HomDims h = oracle::closed_formula(c);
    d = {d.m_plus + h.m_plus, d.m_minus + h.m_minus, d.l_plus + h.l_plus, d.l_minus + h.l_minus};
  }
  return d;
}

// --- criteria ---------------------------------------------------------------------

void dimension_table(Check& c) {
  for (const auto& t : grid()) {
    const HomDims h = hom_dims(build_family(t));
    c.equal(h, oracle::closed_formula(t), t.describe() + " closed formula");
    c.equal(h, oracle::hom_dims_of(oracle::model_of(t)), t.describe() + " matrix model");
  }
}

void simple_thresholds(Check& c) {
  for (const auto& t : grid()) {
    const StarSuperAlgebra a = build_family(t);
    if (a.dim() > 9) continue;
    const HomDims h = oracle::closed_formula(t);
    for (VarKind k : kGradedKinds) {
      const ThresholdReport r = capelli_threshold(a, k, h.of(k) + 2);
      const std::string name = t.describe() + " " + to_string(k);
      c.equal(r.threshold, h.of(k) + 1, name + " threshold");
      if (h.of(k) == 0) continue;
      c.expect(r.witness.has_value(), name + " has no witness at rank " + std::to_string(h.of(k)));
      if (!r.witness) continue;
      c.equal(r.witness->descriptor ? r.witness->descriptor->m : -1, h.of(k), name + " witness rank");
      c.expect(witness_holds(a, *r.witness), name + " witness does not evaluate to its stored nonzero value");
    }
  }
}

void generator_containment(Check& c) {
  for (const auto& t : grid()) {
    const StarSuperAlgebra a = build_family(t);
    const WitnessReport r = satisfies_generator_set(a, gamma_generators(oracle::closed_formula(t).plus_one()));
    c.expect(r.is_identity, t.describe() + " violates " + (r.witness ? r.witness->describe() : std::string("?")));
  }
}

void ut_case_one(Check& c) {
  const UtSpec s{{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 1)}, {0, 0}};
  const UtAlgebra u = ut_star(s);
  c.equal(u.algebra.dim(), std::size_t{16}, "dimension");
  const HomDims d = summed(s.components);
  const int expected[4] = {6, 2, 4, 4};
  for (std::size_t k = 0; k < 4; ++k) {
    c.equal(d.of(kGradedKinds[k]) + 2, expected[k], "d(kind)+2 for " + to_string(kGradedKinds[k]));
    const ThresholdReport r = capelli_threshold(u.algebra, kGradedKinds[k], expected[k] + 2);
    c.equal(r.threshold, expected[k], to_string(kGradedKinds[k]) + " threshold");
    if (r.witness) c.expect(witness_holds(u.algebra, *r.witness), to_string(kGradedKinds[k]) + " witness");
  }
}

void ut_case_two(Check& c) {
  for (const auto& g : std::vector<std::vector<int>>{{0, 0}, {0, 1}}) {
    const UtSpec s{{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, g};
    const CaseTwoOffsets o = measure_case_two(s, ut_star(s).algebra, 8);
    const std::string name = "grading (" + std::to_string(g[0]) + "," + std::to_string(g[1]) + ")";
    // both components are trivially graded and adjacent: one run
    c.equal(o.m_bar, 2, name + " m_bar");
    c.equal(o.m_tilde, 1, name + " m_tilde");
    const HomDims d = summed(s.components);
    c.equal(o.r0, o.thresholds[0] - d.m_plus - 1, name + " r0 from the y+ threshold");
    c.equal(o.r1, o.thresholds[2] - d.l_plus - 1, name + " r1 from the z+ threshold");
    c.expect(o.r0 >= 0 && o.r1 >= 0, name + " negative offset");
    c.equal(o.r0 + o.r1, o.m_bar - o.m_tilde, name + " r0 + r1");
    std::cout << "    " << name << ": r0=" << o.r0 << " r1=" << o.r1 << "\n";
  }
}

void sandwiches(Check& c) {
  const std::vector<FamilyTag> pool = {FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 1),
                                       FamilyTag::mn_cmn_star(1, Diamond::Transpose)};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const StarSuperAlgebra a = build_family(pool[i]), b = build_family(pool[j]);
      const StarSuperAlgebra s = direct_sum(a, b);
      const std::string name = pool[i].describe() + "+" + pool[j].describe();
      std::uint64_t four = 1;
      for (int n = 1; n <= 4; ++n) {
        four *= 4;
        const auto ga = codim_graded(a, n).value, gb = codim_graded(b, n).value, gs = codim_graded(s, n).value;
        const auto oa = codim_ordinary(a, n), ob = codim_ordinary(b, n), os = codim_ordinary(s, n);
        const std::string at = name + " n=" + std::to_string(n);
        c.expect(std::max(ga, gb) <= gs && gs <= ga + gb, at + " graded direct-sum bounds");
        c.expect(std::max(oa, ob) <= os && os <= oa + ob, at + " ordinary direct-sum bounds");
        for (const auto& [x, gx, ox] : {std::tuple{"A", ga, oa}, std::tuple{"B", gb, ob}, std::tuple{"A+B", gs, os}}) {
          c.expect(ox <= gx && gx <= four * ox, at + " " + x + " graded vs ordinary");
        }
        if (n <= 2) {
          c.equal(gs, oracle::codim_by_definition(s, n), at + " graded codimension by definition");
          c.equal(os, oracle::ordinary_codim_by_definition(s, n), at + " ordinary codimension by definition");
        }
      }
    }
  }
}

void kind_symmetry(Check& c) {
  for (const auto& t : grid()) {
    const StarSuperAlgebra a = build_family(t);
    if (a.dim() > 8) continue;
    for (int n = 1; n <= 3; ++n) {
      const std::uint64_t reduced = codim_graded(a, n).value;
      c.equal(reduced, codim_graded_bruteforce(a, n), t.describe() + " n=" + std::to_string(n) + " brute force");
      if (n <= 2) c.equal(reduced, oracle::codim_by_definition(a, n), t.describe() + " definition");
    }
  }
}

void exponents(Check& c) {
  for (const auto& t : grid()) {
    const StarSuperAlgebra a = build_family(t);
    c.equal(admissible_exponent(a), static_cast<int>(a.dim()), t.describe());
  }
  const std::vector<UtSpec> uts = {{{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 1)}, {0, 0}},
                                   {{FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, {0, 1}},
                                   {{FamilyTag::mhl_t(1, 0), FamilyTag::mn_cmn_star(1, Diamond::Transpose),
                                     FamilyTag::mhl_t(1, 1)},
                                    {1, 0, 0}}};
  for (const auto& s : uts) {
    int total = 0;
    for (const auto& comp : s.components) total += oracle::closed_formula(comp).total();
    c.equal(admissible_exponent(ut_star(s).algebra), total, "UT* with " + std::to_string(s.components.size()) + " blocks");
  }
  const std::vector<std::pair<FamilyTag, FamilyTag>> sums = {{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)},
                                                            {FamilyTag::mhl_exc(1, 1), FamilyTag::mhl_t(2, 1)},
                                                            {FamilyTag::mhh_s(1), FamilyTag::mn_cmn_exc(1)}};
  for (const auto& [x, y] : sums) {
    const int dx = oracle::closed_formula(x).total(), dy = oracle::closed_formula(y).total();
    c.equal(admissible_exponent(direct_sum(build_family(x), build_family(y))), std::max(dx, dy),
            x.describe() + "+" + y.describe());
  }
}

void peirce(Check& c) {
  const StarSuperAlgebra m11 = m_hl_transpose(1, 1);
  const std::vector<std::pair<std::string, StarSuperAlgebra>> subjects = {
      {"one-sided extension", one_sided_radical_extension(m11)},
      {"tensor extension", tensor_nilpotent_extension(m11, noncommutative_nilpotent())},
      {"UT*", ut_star({{FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)}, {0, 1}}).algebra},
  };
  for (const auto& [name, a] : subjects) {
    const PeirceDecomposition p = peirce_decompose(a);
    const Subspace j = jacobson_radical(a);
    c.equal(p.j00.dim() + p.j01.dim() + p.j10.dim() + p.j11.dim(), j.dim(), name + " dimensions add up");
    for (const auto& f : check_peirce(a, p)) c.expect(false, name + ": " + f);
    // direct re-check of the module laws on basis vectors
    const Subspace* parts[2][2] = {{&p.j00, &p.j01}, {&p.j10, &p.j11}};
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            for (const auto& u : parts[q][r]->basis())
              for (const auto& v : parts[s][t]->basis()) {
                const Vec uv = a.multiply(u, v);
                if (r == s) {
                  c.expect(parts[q][t]->contains(uv), name + " J" + std::to_string(q) + std::to_string(r) + " J" +
                                                          std::to_string(s) + std::to_string(t) + " escapes");
                } else {
                  c.expect(is_zero(uv), name + " mismatched Peirce product is nonzero");
                }
              }
    for (const auto& u : p.j01.basis()) c.expect(p.j10.contains(a.star(u)), name + " J01* not in J10");
    for (const auto& u : p.j00.basis()) c.expect(p.j00.contains(a.star(u)), name + " J00 not star-stable");
    for (const auto& u : p.j11.basis()) c.expect(p.j11.contains(a.star(u)), name + " J11 not star-stable");
  }
}

void counterexamples(Check& c) {
  const StarSuperAlgebra m11 = m_hl_transpose(1, 1);
  const GeneratorSet gamma = gamma_generators(oracle::closed_formula(FamilyTag::mhl_t(1, 1)).plus_one());
  for (const auto& [name, a] : std::vector<std::pair<std::string, StarSuperAlgebra>>{
           {"one-sided extension", one_sided_radical_extension(m11)},
           {"noncommutative tensor extension", tensor_nilpotent_extension(m11, noncommutative_nilpotent())}}) {
    const WitnessReport r = satisfies_generator_set(a, gamma);
    c.expect(!r.is_identity, name + " satisfies the generator set");
    if (r.witness) {
      c.expect(witness_holds(a, *r.witness), name + " witness does not re-evaluate");
      std::cout << "    " << name << ": " << r.witness->describe() << "\n";
    }
  }
  const StarSuperAlgebra comm = tensor_nilpotent_extension(m11, commutative_nilpotent(2));
  for (int n = 1; n <= 3; ++n) {
    c.equal(codim_graded(comm, n).value, codim_graded(m11, n).value, "commutative tensor n=" + std::to_string(n));
  }
  c.equal(codim_graded(comm, 2).value, oracle::codim_by_definition(m11, 2), "base codimension by definition");
}

void ordinary_thresholds(Check& c) {
  for (const auto& t : grid()) {
    const StarSuperAlgebra a = build_family(t);
    const HomDims h = oracle::closed_formula(t);
    int graded = 0;
    for (VarKind k : kGradedKinds) graded += capelli_threshold(a, k, h.of(k) + 2).threshold;
    const int ordinary = ordinary_capelli_threshold(a, static_cast<int>(a.dim()) + 1).threshold;
    c.expect(ordinary <= graded, t.describe() + ": ordinary " + std::to_string(ordinary) + " > graded sum " +
                                     std::to_string(graded));
  }
  c.equal(ordinary_capelli_threshold(m_hl_transpose(2, 0), 6).threshold, 5, "M_2 ordinary threshold");
}

// Exact against modular rank on every sorted kind vector of length n.
void ranks_agree(Check& c, const StarSuperAlgebra& a, const std::string& name, int n,
                 const std::vector<std::uint64_t>& primes) {
  std::vector<std::size_t> counts(4, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == 3) {
      counts[3] = static_cast<std::size_t>(left);
      std::vector<VarKind> kinds;
      for (std::size_t q = 0; q < 4; ++q) kinds.insert(kinds.end(), counts[q], kGradedKinds[q]);
      const KindRank r = kind_vector_rank(a, kinds, primes);
      for (std::size_t p = 0; p < primes.size(); ++p) {
        c.equal(r.modular[p], r.exact, name + " n=" + std::to_string(n) + " rank modulo " + std::to_string(primes[p]));
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      counts[k] = static_cast<std::size_t>(x);
      rec(k + 1, left - x);
    }
  };
  rec(0, n);
}

void evaluators_and_primes(Check& c) {
  oracle::Gen gen(2024);
  const std::vector<std::uint64_t> primes = {2147483647ULL, 2147483629ULL, 4294967291ULL};
  for (const auto& t : grid()) {
    const StarSuperAlgebra a = build_family(t);
    if (a.dim() > 9) continue;
    const auto domains = oracle::homogeneous_domains(a);
    int mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int m = gen.integer(1, 5);
      const VarKind kind = kGradedKinds[static_cast<std::size_t>(gen.integer(0, 3))];
      CapelliDescriptor d = CapelliDescriptor::unbarred(m, kind);
      for (std::size_t j = 0; j < d.deleted.size(); ++j) d.deleted[j] = gen.coin();
      std::vector<Vec> asg;
      for (int i = 0; i < m; ++i) asg.push_back(gen.combination(domains.at(kind), a.dim()));
      for (int j = 0; j < d.kept_x(); ++j) asg.push_back(gen.vector(a.dim()));
      Witness w{d, std::nullopt, asg, evaluate_alternating_fast(a, d, asg), WitnessStage::Random};
      if (expanded_value(a, w) != w.value) ++mismatches;
    }
    c.equal(mismatches, 0, t.describe() + " fast vs expanded evaluation");
    if (a.dim() > 8) continue;
    for (int n = 1; n <= 3; ++n) ranks_agree(c, a, t.describe(), n, primes);
  }
  // the matrices behind the codimension sandwiches
  const std::vector<FamilyTag> pool = {FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 1),
                                       FamilyTag::mn_cmn_star(1, Diamond::Transpose)};
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (int n = 1; n <= 4; ++n)
        ranks_agree(c, direct_sum(build_family(pool[i]), build_family(pool[j])),
                    pool[i].describe() + "+" + pool[j].describe(), n, primes);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"dimension table of the six families", dimension_table},
      {"simple-algebra thresholds equal hom_dim + 1 with witnesses", simple_thresholds},
      {"grid algebras satisfy the generator set at hom_dims + 1", generator_containment},
      {"UT* case one thresholds 6/2/4/4", ut_case_one},
      {"UT* case two offsets are nonnegative and sum to 1", ut_case_two},
      {"codimension sandwiches for n <= 4", sandwiches},
      {"kind symmetry against all 4^n kind vectors", kind_symmetry},
      {"admissible exponents", exponents},
      {"Peirce laws", peirce},
      {"counterexamples", counterexamples},
      {"ordinary threshold bounded by graded thresholds", ordinary_thresholds},
      {"fast evaluation and modular ranks", evaluators_and_primes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << static_cast<int>(secs * 1000) << " ms)\n"
              << c.problems.str() << std::flush;
    failed += !c.ok;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
