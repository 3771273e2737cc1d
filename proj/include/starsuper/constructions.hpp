#pragma once

#include "starsuper/algebra.hpp"
#include "starsuper/family.hpp"
#include "starsuper/var_kind.hpp"

#include <string>
#include <vector>

namespace starsuper {

// --- the simple families ----------------------------------------------------------
//
// Matrix units are labelled 1-based ("e12"). Every constructor attaches
// Wedderburn data with a single block and an empty radical.

/// (M_{h,l}, t): M_{h+l} with grading deg e_ij = alpha(i)+alpha(j), transpose.
StarSuperAlgebra m_hl_transpose(int h, int l);

/// (M_{h,h}, s): star(X) = Omega X^t Omega^{-1}, Omega = [[0, I], [-I, 0]].
StarSuperAlgebra m_hh_symplectic(int h);

/// (M_{h,l} + M_{h,l}^op, exc). Basis (e_ij, 0) first, then (0, e_ij).
StarSuperAlgebra m_hl_exchange(int h, int l);

/// (M_n + cM_n) with (a+cb) -> a^d - c b^d (negative_sign) or a^d + c b^d.
/// Basis e_ij first, then c e_ij.
StarSuperAlgebra mn_cmn(int n, Diamond diamond, bool negative_sign);

/// ((M_n + cM_n) + (M_n + cM_n)^op, exc). Blocks of n^2: first e, first ce,
/// second e, second ce.
StarSuperAlgebra mn_cmn_exchange(int n);

/// Dispatches on the tag (Custom is rejected).
StarSuperAlgebra build_family(const FamilyTag& tag);

HomDims hom_dims(const StarSuperAlgebra& a);

// --- UT* -------------------------------------------------------------------------------

struct UtSpec {
  std::vector<FamilyTag> components;
  std::vector<int> gtilde;
};

struct UtLayout {
  std::vector<int> sizes;  // s_k
  std::vector<int> eta;    // eta_0 = 0, ..., eta_m
  std::vector<int> alpha;  // alpha_gtilde(i) for i = 1..2 eta_m, stored at i-1

  int matrix_size() const { return 2 * eta.back(); }
  /// Bl_k as 1-based first and last index, k = 1..m.
  int block_first(int k) const { return eta[static_cast<std::size_t>(k) - 1] + 1; }
  int block_last(int k) const { return eta[static_cast<std::size_t>(k)]; }
};

struct UtAlgebra {
  StarSuperAlgebra algebra;
  UtLayout layout;
};

/// D + V inside M_{2 eta_m} with the secondary-diagonal reflection as
/// involution and the elementary grading induced by alpha_gtilde. Verifies
/// validity, the radical, and that each Delta-block reproduces its component.
UtAlgebra ut_star(const UtSpec& spec);

UtLayout ut_layout(const UtSpec& spec);

// --- radical extensions ----------------------------------------------------------------

/// A finite-dimensional nilpotent algebra with involution, trivially graded.
struct NilpotentSpec {
  std::vector<std::string> labels;
  std::vector<StructureConstant> structure;
  RationalMatrix involution;
};

/// span{n, ..., n^k}, n^{k+1} = 0, identity involution.
NilpotentSpec commutative_nilpotent(int k);

/// span{n1, n2, n1n2, n2n1} with N^3 = 0, n_i* = n_i, (n1n2)* = n2n1.
NilpotentSpec noncommutative_nilpotent();

/// R = A + V + V° where V, V° are copies of A: a.v = av, v.a = 0,
/// v°.a = (va)°, a.v° = 0, and all products inside V + V° vanish;
/// star(v) = (v*)°. Requires A simple and unital.
StarSuperAlgebra one_sided_radical_extension(const StarSuperAlgebra& a);

/// A (x) N^# where N^# is N with a unit adjoined; componentwise star and
/// grading. Block A (x) 1, radical A (x) N.
StarSuperAlgebra tensor_nilpotent_extension(const StarSuperAlgebra& a, const NilpotentSpec& n);

}  // namespace starsuper
