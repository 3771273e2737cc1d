#pragma once

#include "starsuper/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace starsuper {

/// A linear subspace of Q^n stored as a reduced row-echelon basis, so two
/// subspaces are equal exactly when their stored rows are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the given standard basis vectors.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<int>& indices);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns false if v was already inside.
  bool insert(const Vec& v);

  /// v minus its projection along the pivots; zero iff v lies in the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the stored basis. Requires contains(v).
  Vec coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t matrix_rank(const RationalMatrix& m);

/// Rank over GF(p). Every denominator must be invertible modulo p.
std::size_t matrix_rank_mod_p(const RationalMatrix& m, std::uint64_t p);

/// Basis of {x : m x = 0}; `cols` fixes the unknown count when m has no rows.
std::vector<Vec> nullspace(const RationalMatrix& m, std::size_t cols);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const RationalMatrix& m, const Vec& b, std::size_t cols);

// --- modular arithmetic -----------------------------------------------------

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

bool is_prime(std::uint64_t n);

// --- incremental echelon forms ---------------------------------------------

/// Sparse rational vector: (index, nonzero value), indices strictly increasing.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

SparseVec to_sparse(const Vec& v);

/// Row echelon basis grown one vector at a time. Used for ranks of tall
/// evaluation matrices, where vectors arrive lazily and most are dependent.
class ExactEchelon {
 public:
  /// Returns true when v is independent of everything inserted so far.
  bool insert(SparseVec v);
  /// True iff v lies in the current span (v is not inserted).
  bool spans(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  SparseVec reduce(SparseVec v) const;
  std::vector<SparseVec> rows_;                 // leading entry normalized to 1
  std::vector<std::int64_t> row_of_lead_;       // lead index -> row, or -1
};

/// Same over GF(p) with dense rows of fixed length.
class ModPEchelon {
 public:
  ModPEchelon(std::size_t length, std::uint64_t p) : length_(length), p_(p) {}
  bool insert(std::vector<std::uint64_t> v);
  std::size_t rank() const { return rows_.size(); }
  std::uint64_t prime() const { return p_; }

 private:
  std::size_t length_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> leads_;
  std::vector<std::int64_t> row_of_lead_;
};

}  // namespace starsuper
