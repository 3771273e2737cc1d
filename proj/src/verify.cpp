#include "starsuper/verify.hpp"

#include "starsuper/errors.hpp"

#include <algorithm>
#include <random>

namespace starsuper {

namespace {

std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }
std::string yes(bool b) { return b ? "true" : "false"; }

ReportRow info_row(std::string check, std::string subject, std::string kind, std::string n, std::string actual) {
  return {std::move(check), std::move(subject), std::move(kind), std::move(n), "", std::move(actual), "info"};
}

// Small algebras of the grid: the ones searched exhaustively.
std::vector<FamilyTag> small_grid(std::size_t max_dim) {
  std::vector<FamilyTag> out;
  for (const auto& t : dimension_grid()) {
    if (build_family(t).dim() <= max_dim) out.push_back(t);
  }
  return out;
}

UtSpec ut_spec(std::vector<FamilyTag> comps, std::vector<int> g) { return {std::move(comps), std::move(g)}; }

std::string ut_name(const UtSpec& s) {
  std::string out = "ut[";
  for (std::size_t i = 0; i < s.components.size(); ++i) out += (i ? "," : "") + s.components[i].describe();
  out += ";";
  for (std::size_t i = 0; i < s.gtilde.size(); ++i) out += (i ? "," : "") + std::to_string(s.gtilde[i]);
  return out + "]";
}

// --- dims -----------------------------------------------------------------------------

void suite_dims(std::vector<ReportRow>& rows) {
  for (const auto& t : dimension_grid()) {
    const StarSuperAlgebra a = build_family(t);
    rows.push_back(compare_row("hom_dims", t.describe(), "", "", to_string(expected_hom_dims(t)), to_string(hom_dims(a))));
  }
}

// --- thresholds -----------------------------------------------------------------------

void suite_thresholds(std::vector<ReportRow>& rows, const AnalysisConfig& cfg) {
  for (const auto& t : dimension_grid()) {
    const StarSuperAlgebra a = build_family(t);
    const HomDims h = hom_dims(a);
    int graded_sum = 0;
    for (VarKind k : kGradedKinds) {
      const ThresholdReport r = capelli_threshold(a, k, h.of(k) + 2, cfg);
      graded_sum += r.threshold;
      if (a.dim() > 9) continue;
      rows.push_back(compare_row("threshold", t.describe(), to_string(k), "", str(h.of(k) + 1), str(r.threshold)));
      const bool witnessed = h.of(k) == 0 || (r.witness && reverify(a, *r.witness));
      rows.push_back(compare_row("witness_at_hom_dim", t.describe(), to_string(k), str(h.of(k)), "true", yes(witnessed)));
    }
    const WitnessReport g = satisfies_generator_set(a, gamma_generators(h.plus_one()), cfg);
    rows.push_back(compare_row("gamma_identity", t.describe(), "", "", "true", yes(g.is_identity)));
    const ThresholdReport o = ordinary_capelli_threshold(a, static_cast<int>(a.dim()) + 1, cfg);
    rows.push_back(compare_row("ordinary_le_graded_sum", t.describe(), "x", "", "true",
                               yes(o.threshold <= graded_sum)));
  }
  const StarSuperAlgebra m2 = m_hl_transpose(2, 0);
  rows.push_back(compare_row("ordinary_threshold", "m2", "x", "", "5",
                             str(ordinary_capelli_threshold(m2, 6, cfg).threshold)));

  // UT* with two components of type (1,1), trivial gtilde: d(kind) + 2.
  const UtSpec case_one = ut_spec({FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 1)}, {0, 0});
  const UtAlgebra ut = ut_star(case_one);
  HomDims d;
  for (const auto& c : case_one.components) {
    const HomDims hc = hom_dims(build_family(c));
    d = {d.m_plus + hc.m_plus, d.m_minus + hc.m_minus, d.l_plus + hc.l_plus, d.l_minus + hc.l_minus};
  }
  for (VarKind k : kGradedKinds) {
    const ThresholdReport r = capelli_threshold(ut.algebra, k, d.of(k) + 3, cfg);
    rows.push_back(compare_row("threshold", ut_name(case_one), to_string(k), "", str(d.of(k) + 2), str(r.threshold)));
  }

  for (const auto& g : std::vector<std::vector<int>>{{0, 0}, {0, 1}}) {
    const UtSpec spec = ut_spec({FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, g);
    const UtAlgebra u = ut_star(spec);
    const CaseTwoOffsets c = measure_case_two(spec, u.algebra, 8, cfg);
    const std::string name = ut_name(spec);
    rows.push_back(info_row("r0", name, "y+", "", str(c.r0)));
    rows.push_back(info_row("r1", name, "z+", "", str(c.r1)));
    rows.push_back(compare_row("offsets_nonnegative", name, "", "", "true", yes(c.r0 >= 0 && c.r1 >= 0)));
    rows.push_back(compare_row("offset_sum", name, "", "", str(c.m_bar - c.m_tilde), str(c.r0 + c.r1)));
  }

  // Subset evaluation against the expanded polynomial.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& t : small_grid(8)) {
    const StarSuperAlgebra a = build_family(t);
    const HomComponents hc = hom_components(a);
    int agree = 0;
    constexpr int kTrials = 1000;
    for (int trial = 0; trial < kTrials; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 5);
      const VarKind kind = kGradedKinds[rng() % 4];
      CapelliDescriptor desc = CapelliDescriptor::unbarred(m, kind);
      for (std::size_t j = 0; j < desc.deleted.size(); ++j) desc.deleted[j] = (rng() & 1U) != 0;
      const Subspace& dom = kind == VarKind::YPlus ? hc.even_sym
                            : kind == VarKind::YMinus ? hc.even_skew
                            : kind == VarKind::ZPlus ? hc.odd_sym
                                                     : hc.odd_skew;
      std::vector<Vec> asg;
      for (int i = 0; i < m; ++i) {
        Vec v(a.dim());
        for (const auto& b : dom.basis()) axpy(v, Rational(coef(rng)), b);
        asg.push_back(std::move(v));
      }
      for (int j = 0; j < desc.kept_x(); ++j) {
        Vec x(a.dim());
        for (auto& e : x) e = coef(rng);
        asg.push_back(std::move(x));
      }
      if (evaluate_alternating_fast(a, desc, asg) == evaluate(a, barred_capelli(desc), asg)) ++agree;
    }
    rows.push_back(compare_row("fast_eval_agrees", t.describe(), "", "", str(kTrials), str(agree)));
  }
}

// --- sandwich ----------------------------------------------------------------------------

void suite_sandwich(std::vector<ReportRow>& rows, const AnalysisConfig& cfg) {
  const std::vector<FamilyTag> pool = {FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 1),
                                       FamilyTag::mn_cmn_star(1, Diamond::Transpose)};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const StarSuperAlgebra a = build_family(pool[i]);
      const StarSuperAlgebra b = build_family(pool[j]);
      const StarSuperAlgebra s = direct_sum(a, b);
      const std::string name = pool[i].describe() + "+" + pool[j].describe();
      for (int n = 1; n <= 4; ++n) {
        const std::uint64_t ga = codim_graded(a, n, cfg).value;
        const std::uint64_t gb = codim_graded(b, n, cfg).value;
        const std::uint64_t gs = codim_graded(s, n, cfg).value;
        const std::uint64_t oa = codim_ordinary(a, n, cfg);
        const std::uint64_t ob = codim_ordinary(b, n, cfg);
        const std::uint64_t os = codim_ordinary(s, n, cfg);
        rows.push_back(info_row("codim_graded", name, "graded", str(n), str(gs)));
        rows.push_back(info_row("codim_ordinary", name, "x", str(n), str(os)));
        rows.push_back(compare_row("direct_sum_bounds", name, "graded", str(n), "true",
                                   yes(std::max(ga, gb) <= gs && gs <= ga + gb)));
        rows.push_back(compare_row("direct_sum_bounds", name, "x", str(n), "true",
                                   yes(std::max(oa, ob) <= os && os <= oa + ob)));
        std::uint64_t four = 1;
        for (int k = 0; k < n; ++k) four *= 4;
        rows.push_back(compare_row("graded_vs_ordinary", name, "", str(n), "true", yes(os <= gs && gs <= four * os)));
      }
    }
  }
  for (const auto& t : small_grid(8)) {
    const StarSuperAlgebra a = build_family(t);
    for (int n = 1; n <= 3; ++n) {
      rows.push_back(compare_row("kind_symmetry", t.describe(), "graded", str(n), str(codim_graded_bruteforce(a, n, cfg)),
                                 str(codim_graded(a, n, cfg).value)));
    }
    const std::vector<std::uint64_t> primes = {2147483647ULL, 2147483629ULL, 4294967291ULL};
    const KindRank r = kind_vector_rank(a, {VarKind::YPlus, VarKind::ZPlus, VarKind::ZMinus}, primes, cfg);
    for (std::size_t p = 0; p < primes.size(); ++p) {
      rows.push_back(compare_row("rank_mod_p", t.describe(), "y+,z+,z-", str(primes[p]), str(r.exact), str(r.modular[p])));
    }
  }
}

// --- peirce -----------------------------------------------------------------------------

std::string peirce_failures(const StarSuperAlgebra& a) {
  const auto failures = check_peirce(a, peirce_decompose(a));
  if (failures.empty()) return "none";
  std::string out;
  for (const auto& f : failures) out += (out.empty() ? "" : "; ") + f;
  return out;
}

void suite_peirce(std::vector<ReportRow>& rows) {
  const StarSuperAlgebra m11 = m_hl_transpose(1, 1);
  const std::vector<std::pair<std::string, StarSuperAlgebra>> subjects = {
      {"one_sided(mhl-t(1,1))", one_sided_radical_extension(m11)},
      {"tensor(mhl-t(1,1),n1n2)", tensor_nilpotent_extension(m11, noncommutative_nilpotent())},
      {"tensor(mhl-t(1,1),n^2)", tensor_nilpotent_extension(m11, commutative_nilpotent(2))},
      {ut_name(ut_spec({FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)}, {0, 0})),
       ut_star(ut_spec({FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)}, {0, 0})).algebra},
  };
  for (const auto& [name, a] : subjects) {
    const PeirceDecomposition p = peirce_decompose(a);
    rows.push_back(info_row("peirce_dims", name, "", "",
                            "(" + str(p.j00.dim()) + "," + str(p.j01.dim()) + "," + str(p.j10.dim()) + "," +
                                str(p.j11.dim()) + ")"));
    rows.push_back(compare_row("peirce_laws", name, "", "", "none", peirce_failures(a)));
  }
}

// --- exponent ---------------------------------------------------------------------------

void suite_exponent(std::vector<ReportRow>& rows) {
  for (const auto& t : dimension_grid()) {
    const StarSuperAlgebra a = build_family(t);
    rows.push_back(compare_row("exponent", t.describe(), "", "", str(static_cast<int>(a.dim())), str(admissible_exponent(a))));
  }
  const std::vector<UtSpec> uts = {ut_spec({FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 1)}, {0, 0}),
                                   ut_spec({FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)}, {0, 1}),
                                   ut_spec({FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)}, {0, 0}),
                                   ut_spec({FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0), FamilyTag::mhl_t(1, 0)},
                                           {0, 1, 0})};
  for (const auto& s : uts) {
    int total = 0;
    for (const auto& c : s.components) total += static_cast<int>(build_family(c).dim());
    const StarSuperAlgebra u = ut_star(s).algebra;
    rows.push_back(compare_row("exponent", ut_name(s), "", "", str(total), str(admissible_exponent(u))));
    rows.push_back(compare_row("reduced", ut_name(s), "", "", "true", yes(is_reduced(u))));
  }
  const std::vector<std::pair<FamilyTag, FamilyTag>> sums = {
      {FamilyTag::mhl_t(1, 1), FamilyTag::mhl_t(1, 0)},
      {FamilyTag::mhl_t(2, 1), FamilyTag::mhl_exc(1, 1)},
      {FamilyTag::mn_cmn_star(1, Diamond::Transpose), FamilyTag::mhh_s(1)}};
  for (const auto& [x, y] : sums) {
    const StarSuperAlgebra a = build_family(x);
    const StarSuperAlgebra b = build_family(y);
    const int expected = std::max(admissible_exponent(a), admissible_exponent(b));
    rows.push_back(compare_row("exponent", x.describe() + "+" + y.describe(), "", "", str(expected),
                               str(admissible_exponent(direct_sum(a, b)))));
  }
}

// --- counterexamples ----------------------------------------------------------------------

void suite_counterexamples(std::vector<ReportRow>& rows, const AnalysisConfig& cfg) {
  const StarSuperAlgebra m11 = m_hl_transpose(1, 1);
  const GeneratorSet gamma = gamma_generators(hom_dims(m11).plus_one());
  const std::vector<std::pair<std::string, StarSuperAlgebra>> violators = {
      {"one_sided(mhl-t(1,1))", one_sided_radical_extension(m11)},
      {"tensor(mhl-t(1,1),n1n2)", tensor_nilpotent_extension(m11, noncommutative_nilpotent())},
  };
  for (const auto& [name, a] : violators) {
    const WitnessReport r = satisfies_generator_set(a, gamma, cfg);
    rows.push_back(compare_row("violates_gamma", name, "", "", "true", yes(!r.is_identity)));
    rows.push_back(compare_row("witness_reverified", name, "", "", "true", yes(r.witness && reverify(a, *r.witness))));
    if (r.witness) rows.push_back(info_row("witness", name, "", "", r.witness->describe()));
  }
  const StarSuperAlgebra comm = tensor_nilpotent_extension(m11, commutative_nilpotent(2));
  for (int n = 1; n <= 3; ++n) {
    rows.push_back(compare_row("codim_graded", "tensor(mhl-t(1,1),n^2)", "graded", str(n),
                               str(codim_graded(m11, n, cfg).value), str(codim_graded(comm, n, cfg).value)));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dims",    "thresholds",      "sandwich", "peirce",
                                                 "exponent", "counterexamples", "all"};
  return names;
}

std::vector<FamilyTag> dimension_grid() {
  std::vector<FamilyTag> out;
  const std::vector<std::pair<int, int>> hl = {{1, 0}, {1, 1}, {2, 1}, {2, 2}};
  for (const auto& [h, l] : hl) out.push_back(FamilyTag::mhl_t(h, l));
  for (int h : {1, 2}) out.push_back(FamilyTag::mhh_s(h));
  for (const auto& [h, l] : hl) out.push_back(FamilyTag::mhl_exc(h, l));
  for (int n : {1, 2}) {
    out.push_back(FamilyTag::mn_cmn_star(n, Diamond::Transpose));
    out.push_back(FamilyTag::mn_cmn_dagger(n, Diamond::Transpose));
  }
  out.push_back(FamilyTag::mn_cmn_star(2, Diamond::Symplectic));
  out.push_back(FamilyTag::mn_cmn_dagger(2, Diamond::Symplectic));
  for (int n : {1, 2}) out.push_back(FamilyTag::mn_cmn_exc(n));
  return out;
}

HomDims expected_hom_dims(const FamilyTag& t) {
  const int h = t.h, l = t.l, n = t.n;
  switch (t.family) {
    case Family::MhlTranspose:
      return {h * (h + 1) / 2 + l * (l + 1) / 2, h * (h - 1) / 2 + l * (l - 1) / 2, h * l, h * l};
    case Family::MhhSymplectic:
      return {h * h, h * h, h * (h - 1), h * (h + 1)};
    case Family::MhlExchange:
      return {h * h + l * l, h * h + l * l, 2 * h * l, 2 * h * l};
    case Family::MnCmnStar:
    case Family::MnCmnDagger: {
      const int sym = t.diamond == Diamond::Transpose ? n * (n + 1) / 2 : n * (n - 1) / 2;
      const int skew = n * n - sym;
      // c b is symmetric iff b is skew (minus sign) or symmetric (plus sign)
      return t.family == Family::MnCmnStar ? HomDims{sym, skew, skew, sym} : HomDims{sym, skew, sym, skew};
    }
    case Family::MnCmnExchange:
      return {n * n, n * n, n * n, n * n};
    case Family::Custom:
      break;
  }
  throw InvalidArgument("no closed formula for custom blocks");
}

std::vector<ReportRow> run_suite(const std::string& suite, const AnalysisConfig& cfg) {
  check_config(cfg);
  std::vector<ReportRow> rows;
  if (suite == "dims") {
    suite_dims(rows);
  } else if (suite == "thresholds") {
    suite_thresholds(rows, cfg);
  } else if (suite == "sandwich") {
    suite_sandwich(rows, cfg);
  } else if (suite == "peirce") {
    suite_peirce(rows);
  } else if (suite == "exponent") {
    suite_exponent(rows);
  } else if (suite == "counterexamples") {
    suite_counterexamples(rows, cfg);
  } else if (suite == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, cfg);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  return rows;
}

}  // namespace starsuper
