#include "starsuper/linalg.hpp"

#include "starsuper/errors.hpp"

#include <algorithm>

namespace starsuper {

// --- Subspace ----------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(unit_vec(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<int>& indices) {
  Subspace s(ambient_dim);
  for (int i : indices) s.insert(unit_vec(ambient_dim, static_cast<std::size_t>(i)));
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim_) {
    throw InvalidArgument("vector length " + std::to_string(v.size()) +
                          " does not match ambient dimension " + std::to_string(ambient_dim_));
  }
  Vec r(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return starsuper::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t lead = 0;
  while (lead < r.size() && sgn(r[lead]) == 0) ++lead;
  if (lead == r.size()) return false;
  const Rational inv = 1 / r[lead];
  for (auto& x : r) x *= inv;
  for (auto& row : rows_) {
    const Rational c = row[lead];
    if (sgn(c) != 0) axpy(row, -c, r);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s(*this);
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InvalidArgument("ambient dimension mismatch");
  // a.U = b.W  <=>  (a, b) in the nullspace of [U^T | -W^T].
  const std::size_t du = dim(), dw = other.dim();
  RationalMatrix m(ambient_dim_, Vec(du + dw));
  for (std::size_t r = 0; r < ambient_dim_; ++r) {
    for (std::size_t i = 0; i < du; ++i) m[r][i] = rows_[i][r];
    for (std::size_t j = 0; j < dw; ++j) m[r][du + j] = -other.rows_[j][r];
  }
  Subspace out(ambient_dim_);
  for (const auto& sol : nullspace(m, du + dw)) {
    Vec v(ambient_dim_);
    for (std::size_t i = 0; i < du; ++i) axpy(v, sol[i], rows_[i]);
    out.insert(v);
  }
  return out;
}

// --- dense elimination helpers -----------------------------------------------

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      const Rational c = m[r][col];
      if (sgn(c) != 0) axpy(m[r], -c, m[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<mpz_class> integer_row(const Vec& row) {
  mpz_class l = 1;
  for (const auto& q : row) {
    if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (sgn(row[i]) != 0) out[i] = row[i].get_num() * (l / row[i].get_den());
  }
  return out;
}

}  // namespace

std::size_t matrix_rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows);
  for (const auto& r : m) a.push_back(integer_row(r));

  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const mpz_class& piv = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = piv * a[i][j] - lead * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::size_t matrix_rank_mod_p(const RationalMatrix& m, std::uint64_t p) {
  if (m.empty()) return 0;
  ModPEchelon e(m[0].size(), p);
  for (const auto& row : m) {
    std::vector<std::uint64_t> r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) r[i] = to_mod_p(row[i], p);
    e.insert(std::move(r));
  }
  return e.rank();
}

std::vector<Vec> nullspace(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix a(m);
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const RationalMatrix& m, const Vec& b, std::size_t cols) {
  RationalMatrix a(m);
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

// --- echelon forms -----------------------------------------------------------

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return s;
}

namespace {

// a - c*b for sparse vectors.
SparseVec sparse_sub_scaled(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec ExactEchelon::reduce(SparseVec v) const {
  while (!v.empty()) {
    const auto lead = v.front().first;
    if (lead >= row_of_lead_.size() || row_of_lead_[lead] < 0) break;
    const Rational c = v.front().second;
    v = sparse_sub_scaled(v, c, rows_[static_cast<std::size_t>(row_of_lead_[lead])]);
  }
  return v;
}

bool ExactEchelon::spans(SparseVec v) const {
  // Rows have distinct leads, so a combination of them leads with the
  // smallest lead involved; an unmatched lead proves independence.
  return reduce(std::move(v)).empty();
}

bool ExactEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational inv = 1 / v.front().second;
  for (auto& [idx, val] : v) val *= inv;
  const auto lead = v.front().first;
  if (lead >= row_of_lead_.size()) row_of_lead_.resize(static_cast<std::size_t>(lead) + 1, -1);
  row_of_lead_[lead] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool ModPEchelon::insert(std::vector<std::uint64_t> v) {
  if (v.size() != length_) throw InvalidArgument("ModPEchelon: length mismatch");
  if (row_of_lead_.empty()) row_of_lead_.assign(length_, -1);
  for (std::size_t i = 0; i < length_; ++i) {
    if (v[i] == 0) continue;
    const auto r = row_of_lead_[i];
    if (r < 0) {
      const std::uint64_t inv = inv_mod(v[i], p_);
      for (std::size_t j = i; j < length_; ++j) v[j] = mul_mod(v[j], inv, p_);
      row_of_lead_[i] = static_cast<std::int64_t>(rows_.size());
      rows_.push_back(std::move(v));
      leads_.push_back(i);
      return true;
    }
    const auto& row = rows_[static_cast<std::size_t>(r)];
    const std::uint64_t c = v[i];
    for (std::size_t j = i; j < length_; ++j) {
      if (row[j] != 0) v[j] = sub_mod(v[j], mul_mod(c, row[j], p_), p_);
    }
  }
  return false;
}

}  // namespace starsuper
