#pragma once

#include "starsuper/algebra.hpp"
#include "starsuper/constructions.hpp"
#include "starsuper/polynomials.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace starsuper {

struct AnalysisConfig {
  int cap_n = 6;                            // largest n for codimensions
  std::uint64_t cap_evals = 100000000;      // enumeration budget of a single check
  std::optional<std::uint64_t> mod_p;       // screening prime (> 2^30)
  int threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t structured_budget = 20000;  // DFS nodes per alternating tuple
  int random_trials = 24;
};

/// Throws InvalidArgument when caps are not positive or the prime is unusable.
void check_config(const AnalysisConfig& c);

/// Prime used for internal modular screening when none is configured.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

// --- identities ------------------------------------------------------------------

enum class WitnessStage { Structured, Random, Exhaustive };
std::string to_string(WitnessStage s);

/// A nonzero evaluation. Capelli witnesses carry their descriptor, others the
/// explicit polynomial.
struct Witness {
  std::optional<CapelliDescriptor> descriptor;
  std::optional<MultilinearPoly> poly;
  std::vector<Vec> assignment;  // one vector per slot of poly
  Vec value;                    // nonzero
  WitnessStage stage = WitnessStage::Exhaustive;

  std::string describe() const;
};

struct WitnessReport {
  bool is_identity = true;
  std::optional<Witness> witness;
  std::uint64_t evaluations = 0;
};

/// True iff p vanishes for every assignment of basis vectors of the matching
/// homogeneous components (x slots range over the whole homogeneous basis).
WitnessReport is_graded_identity(const StarSuperAlgebra& a, const MultilinearPoly& p,
                                 const AnalysisConfig& cfg = {});

/// Same for a (barred) Capelli polynomial, on the subset-DP path.
WitnessReport is_graded_identity(const StarSuperAlgebra& a, const CapelliDescriptor& d,
                                 const AnalysisConfig& cfg = {});

/// Checks every member; the witness belongs to the first failing member.
WitnessReport satisfies_generator_set(const StarSuperAlgebra& a, const GeneratorSet& s,
                                      const AnalysisConfig& cfg = {});

/// Re-evaluates the witness and compares with the stored value.
bool reverify(const StarSuperAlgebra& a, const Witness& w);

// --- Capelli thresholds ----------------------------------------------------------

struct ThresholdReport {
  VarKind kind = VarKind::YPlus;
  int threshold = 0;
  int search_cap = 0;
  bool barred = true;
  std::optional<Witness> witness;  // non-identity at threshold - 1 (absent when threshold = 1)
};

/// Smallest m <= cap such that the whole barred set at rank m (or only
/// Cap_m itself when barred is false) consists of identities.
ThresholdReport capelli_threshold(const StarSuperAlgebra& a, VarKind kind, int cap,
                                  const AnalysisConfig& cfg = {}, bool barred = true);

/// Same with ungraded alternating variables.
ThresholdReport ordinary_capelli_threshold(const StarSuperAlgebra& a, int cap,
                                           const AnalysisConfig& cfg = {}, bool barred = true);

/// Measured quantities of the threshold lemma for a UT* algebra.
struct CaseTwoOffsets {
  int m = 0;            // components
  int m_bar = 0;        // trivially graded components
  int m_tilde = 0;      // maximal runs of consecutive trivially graded components
  HomDims d;            // summed over the components
  std::array<int, 4> thresholds{};  // y+, y-, z+, z-
  int r0 = 0;           // from y+
  int r1 = 0;           // from z+
  int r0_skew = 0;      // the same offset measured from y-
  int r1_skew = 0;      // the same offset measured from z-
};

CaseTwoOffsets measure_case_two(const UtSpec& spec, const StarSuperAlgebra& ut, int cap,
                                const AnalysisConfig& cfg = {});

// --- codimensions ----------------------------------------------------------------

using KindContent = std::array<int, 4>;  // (n1, n2, n3, n4) of y+, y-, z+, z-

struct CodimReport {
  int n = 0;
  std::uint64_t value = 0;
  std::map<KindContent, std::size_t> per_kind_ranks;
};

/// c_n^{(Z2,*)}(A) = sum over contents of multinomial(n; content) * rank.
CodimReport codim_graded(const StarSuperAlgebra& a, int n, const AnalysisConfig& cfg = {});

/// Sum of ranks over all 4^n kind vectors, without the symmetry reduction.
std::uint64_t codim_graded_bruteforce(const StarSuperAlgebra& a, int n, const AnalysisConfig& cfg = {});

std::uint64_t codim_ordinary(const StarSuperAlgebra& a, int n, const AnalysisConfig& cfg = {});

/// Exact rank of the evaluation matrix of one kind vector, plus its rank
/// modulo each prime in `primes` (same matrix).
struct KindRank {
  std::size_t exact = 0;
  std::vector<std::size_t> modular;
};
KindRank kind_vector_rank(const StarSuperAlgebra& a, const std::vector<VarKind>& kinds,
                          const std::vector<std::uint64_t>& primes, const AnalysisConfig& cfg = {});

struct CodimRow {
  CodimReport report;
  double root = 0;  // value^(1/n)
};
std::vector<CodimRow> codim_table(const StarSuperAlgebra& a, int n_max, const AnalysisConfig& cfg = {});

// --- exponent --------------------------------------------------------------------

/// Largest total dimension of blocks A_{l1}, ..., A_{lk} (distinct, any
/// order) with A_{l1} J A_{l2} J ... J A_{lk} != 0.
int admissible_exponent(const StarSuperAlgebra& a);

/// Whether all blocks together are admissible in some order.
bool is_reduced(const StarSuperAlgebra& a);

}  // namespace starsuper
