#pragma once

#include "starsuper/family.hpp"
#include "starsuper/linalg.hpp"
#include "starsuper/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starsuper {

/// basis_i * basis_j has `coef` on basis_k.
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational coef;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

struct WedderburnBlock {
  std::vector<int> indices;
  FamilyTag family;

  friend bool operator==(const WedderburnBlock&, const WedderburnBlock&) = default;
};

/// Simple blocks and radical of A = A_1 + ... + A_s + J, as basis index sets.
struct WedderburnData {
  std::vector<WedderburnBlock> blocks;
  std::vector<int> radical;

  friend bool operator==(const WedderburnData&, const WedderburnData&) = default;
};

/// Finite-dimensional associative Z2-graded algebra with a graded involution,
/// given by structure constants on a homogeneous basis.
///
/// The constructor only checks shapes (index ranges, matrix sizes). The
/// algebraic invariants are reported by validate(); downstream operations
/// assume an algebra whose report is empty.
class StarSuperAlgebra {
 public:
  StarSuperAlgebra() = default;
  StarSuperAlgebra(std::vector<std::string> labels, std::vector<StructureConstant> structure,
                   std::vector<int> grading, RationalMatrix involution,
                   std::optional<WedderburnData> wedderburn = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sorted by (i, j, k), merged, without zero coefficients.
  const std::vector<StructureConstant>& structure() const { return structure_; }
  const std::vector<int>& grading() const { return grading_; }
  /// Column k is the image of basis_k.
  const RationalMatrix& involution() const { return involution_; }
  const std::optional<WedderburnData>& wedderburn() const { return wedderburn_; }
  void set_wedderburn(std::optional<WedderburnData> w) { wedderburn_ = std::move(w); }

  /// Nonzero (k, coef) pairs of basis_i * basis_j.
  const std::vector<std::pair<int, Rational>>& product_terms(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j)];
  }
  /// Nonzero (row, coef) pairs of the involution column k.
  const std::vector<std::pair<int, Rational>>& star_column(int k) const {
    return star_columns_[static_cast<std::size_t>(k)];
  }

  Vec multiply(const Vec& u, const Vec& v) const;
  Vec star(const Vec& u) const;
  Vec basis_product(int i, int j) const;

  friend bool operator==(const StarSuperAlgebra& a, const StarSuperAlgebra& b);

 private:
  std::vector<std::string> labels_;
  std::vector<StructureConstant> structure_;
  std::vector<int> grading_;
  RationalMatrix involution_;
  std::optional<WedderburnData> wedderburn_;
  std::vector<std::vector<std::pair<int, Rational>>> table_;
  std::vector<std::vector<std::pair<int, Rational>>> star_columns_;
};

// --- validation ------------------------------------------------------------------

struct Violation {
  std::string invariant;  // "associativity", "grading compatibility", "involution order", ...
  std::vector<int> witness;
  std::string detail;
};
using ValidationReport = std::vector<Violation>;

/// Every violated invariant, one entry per invariant with its first witness.
ValidationReport validate(const StarSuperAlgebra& a);

bool report_mentions(const ValidationReport& report, const std::string& invariant);

// --- basic operations ----------------------------------------------------------

/// Bilinear product; throws InvalidArgument on length mismatch.
Vec multiply(const StarSuperAlgebra& a, const Vec& u, const Vec& v);
/// Applies the involution; throws InvalidArgument on length mismatch.
Vec star(const StarSuperAlgebra& a, const Vec& u);

/// A = A_0^+ + A_0^- + A_1^+ + A_1^-.
struct HomComponents {
  Subspace even_sym;
  Subspace even_skew;
  Subspace odd_sym;
  Subspace odd_skew;
};

HomComponents hom_components(const StarSuperAlgebra& a);

/// Span of all products u*v with u in U, v in V.
Subspace subspace_product(const StarSuperAlgebra& a, const Subspace& u, const Subspace& v);

/// Radical of the trace form of the left regular representation. Verifies the
/// result is a nilpotent two-sided ideal and throws InternalInconsistency if not.
Subspace jacobson_radical(const StarSuperAlgebra& a);

/// Two-sided unit, if the algebra has one.
std::optional<Vec> unit_element(const StarSuperAlgebra& a);

/// Center {z : z x = x z for all x}.
Subspace center(const StarSuperAlgebra& a);

/// Central primitive idempotents of a semisimple algebra. Throws Refusal when
/// the center does not split over the rationals.
std::vector<Vec> central_primitive_idempotents(const StarSuperAlgebra& a);

/// A^2 != 0 and no proper nonzero ideal is both graded and star-stable.
bool is_star_graded_simple(const StarSuperAlgebra& a);

StarSuperAlgebra direct_sum(const StarSuperAlgebra& a, const StarSuperAlgebra& b);

// --- Wedderburn-based structure ----------------------------------------------------

/// Spans of the Wedderburn blocks; throws InvalidArgument without metadata.
std::vector<Subspace> block_subspaces(const StarSuperAlgebra& a);
Subspace semisimple_part(const StarSuperAlgebra& a);
Subspace declared_radical(const StarSuperAlgebra& a);

/// Sum of the block units. Throws InvalidArgument without Wedderburn data or
/// when some block is not unital.
Vec semisimple_unit(const StarSuperAlgebra& a);

/// J = J00 + J01 + J10 + J11 relative to the semisimple unit e.
struct PeirceDecomposition {
  Subspace j00;
  Subspace j01;
  Subspace j10;
  Subspace j11;
  Vec unit;

  const Subspace& part(int p, int q) const {
    return p == 0 ? (q == 0 ? j00 : j01) : (q == 0 ? j10 : j11);
  }
};

PeirceDecomposition peirce_decompose(const StarSuperAlgebra& a);

/// Violated Peirce laws (empty when all hold): direct sum, e-actions,
/// star-stability, J01* = J10, J_pq J_ql in J_pl, J_pq J_il = 0 for q != i.
std::vector<std::string> check_peirce(const StarSuperAlgebra& a, const PeirceDecomposition& p);

/// {x in J11 : x a = a x for every a in the semisimple part}.
Subspace radical_centralizer(const StarSuperAlgebra& a);

}  // namespace starsuper
