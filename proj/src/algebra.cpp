#include "starsuper/algebra.hpp"

#include "starsuper/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace starsuper {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

void require_length(const StarSuperAlgebra& a, const Vec& v) {
  if (v.size() != a.dim()) {
    throw InvalidArgument("vector length " + idx(v.size()) + " does not match algebra dimension " +
                          idx(a.dim()));
  }
}

}  // namespace

StarSuperAlgebra::StarSuperAlgebra(std::vector<std::string> labels,
                                   std::vector<StructureConstant> structure,
                                   std::vector<int> grading, RationalMatrix involution,
                                   std::optional<WedderburnData> wedderburn)
    : labels_(std::move(labels)),
      grading_(std::move(grading)),
      involution_(std::move(involution)),
      wedderburn_(std::move(wedderburn)) {
  const std::size_t d = labels_.size();
  const int di = static_cast<int>(d);
  if (grading_.size() != d) throw InvalidArgument("grading has " + idx(grading_.size()) + " entries, expected " + idx(d));
  for (int g : grading_) {
    if (g != 0 && g != 1) throw InvalidArgument("grading values must be 0 or 1");
  }
  if (involution_.size() != d) throw InvalidArgument("involution must be a " + idx(d) + "x" + idx(d) + " matrix");
  for (const auto& row : involution_) {
    if (row.size() != d) throw InvalidArgument("involution must be a " + idx(d) + "x" + idx(d) + " matrix");
  }

  std::map<std::tuple<int, int, int>, Rational> merged;
  for (const auto& c : structure) {
    if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= di || c.j >= di || c.k >= di) {
      throw InvalidArgument("structure constant index out of range");
    }
    merged[{c.i, c.j, c.k}] += c.coef;
  }
  for (const auto& [key, coef] : merged) {
    if (sgn(coef) == 0) continue;
    structure_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), coef});
  }

  table_.assign(d * d, {});
  for (const auto& c : structure_) {
    table_[static_cast<std::size_t>(c.i) * d + static_cast<std::size_t>(c.j)].emplace_back(c.k, c.coef);
  }
  star_columns_.assign(d, {});
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(involution_[r][k]) != 0) star_columns_[k].emplace_back(static_cast<int>(r), involution_[r][k]);
    }
  }

  if (wedderburn_) {
    const auto check = [di](const std::vector<int>& ids) {
      for (int i : ids) {
        if (i < 0 || i >= di) throw InvalidArgument("Wedderburn index out of range");
      }
    };
    for (const auto& b : wedderburn_->blocks) check(b.indices);
    check(wedderburn_->radical);
  }
}

Vec StarSuperAlgebra::multiply(const Vec& u, const Vec& v) const {
  const std::size_t d = dim();
  Vec out(d);
  std::vector<std::size_t> vs;
  for (std::size_t j = 0; j < d; ++j) {
    if (sgn(v[j]) != 0) vs.push_back(j);
  }
  Rational t;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j : vs) {
      const auto& terms = table_[i * d + j];
      if (terms.empty()) continue;
      t = u[i] * v[j];
      for (const auto& [k, c] : terms) out[static_cast<std::size_t>(k)] += t * c;
    }
  }
  return out;
}

Vec StarSuperAlgebra::star(const Vec& u) const {
  Vec out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(u[k]) == 0) continue;
    for (const auto& [r, c] : star_columns_[k]) out[static_cast<std::size_t>(r)] += u[k] * c;
  }
  return out;
}

Vec StarSuperAlgebra::basis_product(int i, int j) const {
  Vec out(dim());
  for (const auto& [k, c] : product_terms(i, j)) out[static_cast<std::size_t>(k)] = c;
  return out;
}

bool operator==(const StarSuperAlgebra& a, const StarSuperAlgebra& b) {
  return a.labels_ == b.labels_ && a.structure_ == b.structure_ && a.grading_ == b.grading_ &&
         a.involution_ == b.involution_ && a.wedderburn_ == b.wedderburn_;
}

Vec multiply(const StarSuperAlgebra& a, const Vec& u, const Vec& v) {
  require_length(a, u);
  require_length(a, v);
  return a.multiply(u, v);
}

Vec star(const StarSuperAlgebra& a, const Vec& u) {
  require_length(a, u);
  return a.star(u);
}

// --- validation ------------------------------------------------------------------

namespace {

Vec star_of_basis(const StarSuperAlgebra& a, int k) {
  Vec out(a.dim());
  for (const auto& [r, c] : a.star_column(k)) out[static_cast<std::size_t>(r)] = c;
  return out;
}

Subspace span_of_indices(const StarSuperAlgebra& a, const std::vector<int>& ids) {
  return Subspace::coordinate(a.dim(), ids);
}

}  // namespace

ValidationReport validate(const StarSuperAlgebra& a) {
  ValidationReport report;
  const int d = static_cast<int>(a.dim());
  const auto add = [&report](std::string inv, std::vector<int> w, std::string detail) {
    report.push_back({std::move(inv), std::move(w), std::move(detail)});
  };

  bool assoc_ok = true;
  for (int i = 0; i < d && assoc_ok; ++i) {
    for (int j = 0; j < d && assoc_ok; ++j) {
      for (int k = 0; k < d; ++k) {
        Vec left(a.dim());
        for (const auto& [m, c] : a.product_terms(i, j)) {
          for (const auto& [r, c2] : a.product_terms(m, k)) left[static_cast<std::size_t>(r)] += c * c2;
        }
        Vec right(a.dim());
        for (const auto& [m, c] : a.product_terms(j, k)) {
          for (const auto& [r, c2] : a.product_terms(i, m)) right[static_cast<std::size_t>(r)] += c * c2;
        }
        if (left != right) {
          add("associativity", {i, j, k}, "(b" + idx(i) + " b" + idx(j) + ") b" + idx(k) + " != b" + idx(i) + " (b" + idx(j) + " b" + idx(k) + ")");
          assoc_ok = false;
          break;
        }
      }
    }
  }

  bool grading_ok = true;
  for (const auto& c : a.structure()) {
    if (a.grading()[c.k] != (a.grading()[c.i] ^ a.grading()[c.j])) {
      add("grading compatibility", {c.i, c.j, c.k},
          "b" + idx(c.i) + " b" + idx(c.j) + " has a component on b" + idx(c.k) + " of the wrong degree");
      grading_ok = false;
      break;
    }
  }

  bool order_ok = true;
  for (int k = 0; k < d; ++k) {
    if (a.star(star_of_basis(a, k)) != unit_vec(a.dim(), static_cast<std::size_t>(k))) {
      add("involution order", {k}, "star(star(b" + idx(k) + ")) != b" + idx(k));
      order_ok = false;
      break;
    }
  }

  bool inv_grading_ok = true;
  for (int k = 0; k < d && inv_grading_ok; ++k) {
    for (const auto& [r, c] : a.star_column(k)) {
      if (a.grading()[r] != a.grading()[k]) {
        add("involution grading", {k}, "star(b" + idx(k) + ") is not of degree " + idx(a.grading()[k]));
        inv_grading_ok = false;
        break;
      }
    }
  }

  bool anti_ok = true;
  for (int i = 0; i < d && anti_ok; ++i) {
    for (int j = 0; j < d; ++j) {
      const Vec lhs = a.star(a.basis_product(i, j));
      const Vec rhs = a.multiply(star_of_basis(a, j), star_of_basis(a, i));
      if (lhs != rhs) {
        add("involution antiautomorphism", {i, j}, "star(b" + idx(i) + " b" + idx(j) + ") != star(b" + idx(j) + ") star(b" + idx(i) + ")");
        anti_ok = false;
        break;
      }
    }
  }

  if (!a.wedderburn()) return report;
  const auto& w = *a.wedderburn();
  std::vector<int> seen(a.dim(), 0);
  for (const auto& b : w.blocks) {
    for (int i : b.indices) ++seen[static_cast<std::size_t>(i)];
  }
  for (int i : w.radical) ++seen[static_cast<std::size_t>(i)];
  bool partition_ok = true;
  for (int i = 0; i < d; ++i) {
    if (seen[static_cast<std::size_t>(i)] != 1) {
      add("wedderburn partition", {i}, "basis index " + idx(i) + " is covered " + idx(seen[static_cast<std::size_t>(i)]) + " times");
      partition_ok = false;
      break;
    }
  }

  bool blocks_ok = true;
  for (std::size_t bi = 0; bi < w.blocks.size() && blocks_ok; ++bi) {
    const auto& ids = w.blocks[bi].indices;
    const Subspace span = span_of_indices(a, ids);
    for (int i : ids) {
      if (!span.contains(star_of_basis(a, i))) {
        add("wedderburn block", {static_cast<int>(bi), i}, "block " + idx(bi) + " is not star-stable");
        blocks_ok = false;
        break;
      }
      for (int j : ids) {
        if (!span.contains(a.basis_product(i, j))) {
          add("wedderburn block", {static_cast<int>(bi), i, j}, "block " + idx(bi) + " is not closed under products");
          blocks_ok = false;
          break;
        }
      }
      if (!blocks_ok) break;
    }
  }

  // The computed radical is only meaningful for an associative algebra.
  if (assoc_ok && grading_ok && order_ok && inv_grading_ok && anti_ok && partition_ok) {
    std::string detail;
    try {
      if (!(jacobson_radical(a) == span_of_indices(a, w.radical))) {
        detail = "declared radical differs from the Jacobson radical";
      }
    } catch (const InternalInconsistency& e) {
      detail = e.what();
    }
    if (!detail.empty()) add("wedderburn radical", w.radical, detail);
  }
  return report;
}

bool report_mentions(const ValidationReport& report, const std::string& invariant) {
  return std::any_of(report.begin(), report.end(),
                     [&](const Violation& v) { return v.invariant == invariant; });
}

// --- basic operations ----------------------------------------------------------

HomComponents hom_components(const StarSuperAlgebra& a) {
  const std::size_t d = a.dim();
  HomComponents h{Subspace(d), Subspace(d), Subspace(d), Subspace(d)};
  for (std::size_t k = 0; k < d; ++k) {
    const Vec e = unit_vec(d, k);
    const Vec s = a.star(e);
    Subspace& sym = a.grading()[k] == 0 ? h.even_sym : h.odd_sym;
    Subspace& skew = a.grading()[k] == 0 ? h.even_skew : h.odd_skew;
    sym.insert(e + s);
    skew.insert(e - s);
  }
  return h;
}

Subspace subspace_product(const StarSuperAlgebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim()) {
    throw InvalidArgument("subspace ambient dimension does not match the algebra");
  }
  Subspace out(a.dim());
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) {
      out.insert(a.multiply(x, y));
      if (out.dim() == a.dim()) return out;
    }
  }
  return out;
}

Subspace jacobson_radical(const StarSuperAlgebra& a) {
  const std::size_t d = a.dim();
  // t_k = Tr(L_{b_k});  T[i][j] = Tr(L_{b_i b_j}).
  Vec t(d);
  for (const auto& c : a.structure()) {
    if (c.j == c.k) t[static_cast<std::size_t>(c.i)] += c.coef;
  }
  RationalMatrix form(d, Vec(d));
  for (const auto& c : a.structure()) {
    form[static_cast<std::size_t>(c.i)][static_cast<std::size_t>(c.j)] += c.coef * t[static_cast<std::size_t>(c.k)];
  }
  // The form is symmetric (Tr L_{xy} = Tr L_{yx}), so rows or columns give the same kernel.
  const Subspace rad = Subspace::span(d, nullspace(form, d));

  const Subspace full = Subspace::full(d);
  if (!rad.contains(subspace_product(a, full, rad)) || !rad.contains(subspace_product(a, rad, full))) {
    throw InternalInconsistency("trace-form radical is not a two-sided ideal");
  }
  Subspace power = rad;
  for (std::size_t k = 0; k <= d && !power.is_zero(); ++k) power = subspace_product(a, power, rad);
  if (!power.is_zero()) throw InternalInconsistency("trace-form radical is not nilpotent");
  return rad;
}

std::optional<Vec> unit_element(const StarSuperAlgebra& a) {
  const std::size_t d = a.dim();
  if (d == 0) return std::nullopt;
  // Unknowns u_i; equations (u b_j)_k = delta_jk and (b_j u)_k = delta_jk.
  RationalMatrix m(2 * d * d, Vec(d));
  Vec rhs(2 * d * d);
  for (const auto& c : a.structure()) {
    m[static_cast<std::size_t>(c.j) * d + static_cast<std::size_t>(c.k)][static_cast<std::size_t>(c.i)] += c.coef;
    m[d * d + static_cast<std::size_t>(c.i) * d + static_cast<std::size_t>(c.k)][static_cast<std::size_t>(c.j)] += c.coef;
  }
  for (std::size_t j = 0; j < d; ++j) {
    rhs[j * d + j] = 1;
    rhs[d * d + j * d + j] = 1;
  }
  return solve(m, rhs, d);
}

Subspace center(const StarSuperAlgebra& a) {
  const std::size_t d = a.dim();
  RationalMatrix m(d * d, Vec(d));
  for (const auto& c : a.structure()) {
    // z_i (b_i b_j - b_j b_i) contributes to equation (j, k).
    m[static_cast<std::size_t>(c.j) * d + static_cast<std::size_t>(c.k)][static_cast<std::size_t>(c.i)] += c.coef;
    m[static_cast<std::size_t>(c.i) * d + static_cast<std::size_t>(c.k)][static_cast<std::size_t>(c.j)] -= c.coef;
  }
  return Subspace::span(d, nullspace(m, d));
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n > mpz_class("1000000000000")) throw Refusal("center splitting needs factoring a large integer");
  for (mpz_class k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  }
  return out;
}

// Value of the polynomial with coefficients poly[0] + poly[1] x + ... at x.
Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Distinct rational roots of a polynomial, or nullopt if it does not split
// into distinct linear factors over Q.
std::optional<std::vector<Rational>> split_roots(std::vector<Rational> poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1 && sgn(poly[0]) == 0) {
    roots.push_back(0);
    poly.erase(poly.begin());
  }
  if (roots.size() > 1) return std::nullopt;
  const std::size_t degree = poly.size() - 1;
  if (degree > 0) {
    mpz_class lcm = 1;
    for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : poly) ints.push_back(mpz_class(c * lcm));
    for (const auto& p : divisors(ints.front())) {
      for (const auto& q : divisors(ints.back())) {
        for (int s : {1, -1}) {
          Rational r(s * p, q);
          r.canonicalize();
          if (sgn(eval_poly(poly, r)) != 0) continue;
          if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
      }
    }
  }
  const std::size_t nonzero = roots.size() - (roots.empty() || sgn(roots.front()) != 0 ? 0 : 1);
  if (nonzero != degree) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<Vec> central_primitive_idempotents(const StarSuperAlgebra& a) {
  const std::size_t d = a.dim();
  if (d == 0) return {};
  const auto unit = unit_element(a);
  if (!unit) throw Refusal("algebra has no unit, so central idempotents are not defined");
  const Subspace z = center(a);
  if (z.dim() == 1) return {*unit};

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec x(d);
    for (const auto& b : z.basis()) axpy(x, Rational(coef(rng)), b);
    // Krylov sequence 1, x, x^2, ... inside the center until it becomes dependent.
    std::vector<Vec> powers{*unit};
    Subspace krylov(d);
    krylov.insert(*unit);
    std::optional<std::vector<Rational>> minpoly;
    while (true) {
      Vec next = a.multiply(powers.back(), x);
      if (!krylov.contains(next)) {
        krylov.insert(next);
        powers.push_back(std::move(next));
        continue;
      }
      // next = sum c_i x^i; minimal polynomial t^k - sum c_i t^i.
      RationalMatrix m(d, Vec(powers.size()));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i < powers.size(); ++i) m[r][i] = powers[i][r];
      }
      const auto c = solve(m, next, powers.size());
      if (!c) throw InternalInconsistency("Krylov relation lost");
      std::vector<Rational> poly(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) poly[i] = -(*c)[i];
      poly.back() = 1;
      minpoly = poly;
      break;
    }
    if (minpoly->size() - 1 < z.dim()) continue;  // x does not separate the blocks
    const auto roots = split_roots(*minpoly);
    if (!roots || roots->size() != z.dim()) {
      throw Refusal("the center does not split over the rationals");
    }
    std::vector<Vec> out;
    for (std::size_t r = 0; r < roots->size(); ++r) {
      Vec e = *unit;
      for (std::size_t s = 0; s < roots->size(); ++s) {
        if (s == r) continue;
        const Vec factor = scaled(x - scaled(*unit, (*roots)[s]), 1 / ((*roots)[r] - (*roots)[s]));
        e = a.multiply(e, factor);
      }
      out.push_back(std::move(e));
    }
    return out;
  }
  throw Refusal("no separating central element found; the center may not split over the rationals");
}

bool is_star_graded_simple(const StarSuperAlgebra& a) {
  if (a.structure().empty()) return false;
  if (!jacobson_radical(a).is_zero()) return false;
  const auto idem = central_primitive_idempotents(a);
  const std::size_t s = idem.size();
  const auto find = [&](const Vec& v) -> std::size_t {
    for (std::size_t i = 0; i < s; ++i) {
      if (idem[i] == v) return i;
    }
    throw InternalInconsistency("automorphism image of a central primitive idempotent is not one");
  };
  std::vector<std::size_t> star_perm(s), parity_perm(s);
  for (std::size_t i = 0; i < s; ++i) {
    star_perm[i] = find(a.star(idem[i]));
    Vec flipped = idem[i];
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a.grading()[k] == 1) flipped[k] = -flipped[k];
    }
    parity_perm[i] = find(flipped);
  }
  // Single orbit of the group generated by both permutations.
  std::vector<bool> seen(s, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : {star_perm[i], parity_perm[i]}) {
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == s;
}

StarSuperAlgebra direct_sum(const StarSuperAlgebra& a, const StarSuperAlgebra& b) {
  const int da = static_cast<int>(a.dim());
  const std::size_t d = a.dim() + b.dim();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<StructureConstant> structure = a.structure();
  for (const auto& c : b.structure()) structure.push_back({c.i + da, c.j + da, c.k + da, c.coef});
  std::vector<int> grading = a.grading();
  grading.insert(grading.end(), b.grading().begin(), b.grading().end());
  RationalMatrix inv(d, Vec(d));
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) inv[r][c] = a.involution()[r][c];
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < b.dim(); ++c) inv[a.dim() + r][a.dim() + c] = b.involution()[r][c];
  }
  std::optional<WedderburnData> w;
  if (a.wedderburn() && b.wedderburn()) {
    w = *a.wedderburn();
    for (auto blk : b.wedderburn()->blocks) {
      for (int& i : blk.indices) i += da;
      w->blocks.push_back(std::move(blk));
    }
    for (int i : b.wedderburn()->radical) w->radical.push_back(i + da);
  }
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          std::move(w));
}

// --- Wedderburn-based structure ----------------------------------------------------

namespace {

const WedderburnData& require_wedderburn(const StarSuperAlgebra& a) {
  if (!a.wedderburn()) throw InvalidArgument("algebra carries no Wedderburn data");
  return *a.wedderburn();
}

Subspace star_image(const StarSuperAlgebra& a, const Subspace& s) {
  Subspace out(a.dim());
  for (const auto& v : s.basis()) out.insert(a.star(v));
  return out;
}

// Basis of {x in S : f(x) = 0} for a linear map f given on S's basis.
template <class F>
Subspace kernel_in(const StarSuperAlgebra& a, const Subspace& s, F f) {
  const std::size_t n = s.dim();
  std::vector<Vec> images;
  for (const auto& v : s.basis()) images.push_back(f(v));
  std::size_t len = images.empty() ? 0 : images[0].size();
  RationalMatrix m(len, Vec(n));
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t i = 0; i < n; ++i) m[r][i] = images[i][r];
  }
  Subspace out(a.dim());
  for (const auto& c : nullspace(m, n)) {
    Vec x(a.dim());
    for (std::size_t i = 0; i < n; ++i) axpy(x, c[i], s.basis()[i]);
    out.insert(x);
  }
  return out;
}

Vec block_unit(const StarSuperAlgebra& a, const std::vector<int>& ids) {
  const std::size_t d = a.dim();
  const std::size_t n = ids.size();
  // u = sum x_t b_{ids[t]} with u b_j = b_j = b_j u for j in the block.
  RationalMatrix m;
  Vec rhs;
  for (int j : ids) {
    for (int side = 0; side < 2; ++side) {
      RationalMatrix rows(d, Vec(n));
      for (std::size_t t = 0; t < n; ++t) {
        const auto& terms = side == 0 ? a.product_terms(ids[t], j) : a.product_terms(j, ids[t]);
        for (const auto& [k, c] : terms) rows[static_cast<std::size_t>(k)][t] += c;
      }
      for (std::size_t k = 0; k < d; ++k) {
        m.push_back(std::move(rows[k]));
        rhs.push_back(static_cast<int>(k) == j ? 1 : 0);
      }
    }
  }
  const auto x = solve(m, rhs, n);
  if (!x) throw InvalidArgument("a Wedderburn block has no unit");
  Vec u(d);
  for (std::size_t t = 0; t < n; ++t) u[static_cast<std::size_t>(ids[t])] = (*x)[t];
  return u;
}

}  // namespace

std::vector<Subspace> block_subspaces(const StarSuperAlgebra& a) {
  std::vector<Subspace> out;
  for (const auto& b : require_wedderburn(a).blocks) out.push_back(span_of_indices(a, b.indices));
  return out;
}

Subspace semisimple_part(const StarSuperAlgebra& a) {
  std::vector<int> ids;
  for (const auto& b : require_wedderburn(a).blocks) ids.insert(ids.end(), b.indices.begin(), b.indices.end());
  return span_of_indices(a, ids);
}

Subspace declared_radical(const StarSuperAlgebra& a) {
  return span_of_indices(a, require_wedderburn(a).radical);
}

Vec semisimple_unit(const StarSuperAlgebra& a) {
  Vec e(a.dim());
  for (const auto& b : require_wedderburn(a).blocks) e = e + block_unit(a, b.indices);
  return e;
}

PeirceDecomposition peirce_decompose(const StarSuperAlgebra& a) {
  const Vec e = semisimple_unit(a);
  const Subspace j = declared_radical(a);
  PeirceDecomposition p;
  p.unit = e;
  for (int l = 0; l < 2; ++l) {
    for (int r = 0; r < 2; ++r) {
      Subspace part = kernel_in(a, j, [&](const Vec& x) {
        Vec left = a.multiply(e, x);
        Vec right = a.multiply(x, e);
        if (l == 1) left = left - x;
        if (r == 1) right = right - x;
        left.insert(left.end(), right.begin(), right.end());
        return left;
      });
      (l == 0 ? (r == 0 ? p.j00 : p.j01) : (r == 0 ? p.j10 : p.j11)) = std::move(part);
    }
  }
  return p;
}

std::vector<std::string> check_peirce(const StarSuperAlgebra& a, const PeirceDecomposition& p) {
  std::vector<std::string> failures;
  const Subspace j = declared_radical(a);
  const Subspace total = p.j00.sum(p.j01).sum(p.j10).sum(p.j11);
  if (p.j00.dim() + p.j01.dim() + p.j10.dim() + p.j11.dim() != j.dim() || !(total == j)) {
    failures.push_back("direct sum");
  }
  for (int l = 0; l < 2; ++l) {
    for (int r = 0; r < 2; ++r) {
      for (const auto& x : p.part(l, r).basis()) {
        if (a.multiply(p.unit, x) != scaled(x, l) || a.multiply(x, p.unit) != scaled(x, r)) {
          failures.push_back("unit action on J" + idx(l) + idx(r));
          break;
        }
      }
    }
  }
  if (!(star_image(a, p.j00) == p.j00)) failures.push_back("star-stability of J00");
  if (!(star_image(a, p.j11) == p.j11)) failures.push_back("star-stability of J11");
  if (!(star_image(a, p.j01) == p.j10)) failures.push_back("J01* = J10");
  for (int pp = 0; pp < 2; ++pp) {
    for (int q = 0; q < 2; ++q) {
      for (int i = 0; i < 2; ++i) {
        for (int l = 0; l < 2; ++l) {
          const Subspace prod = subspace_product(a, p.part(pp, q), p.part(i, l));
          const std::string name = "J" + idx(pp) + idx(q) + " J" + idx(i) + idx(l);
          if (q == i) {
            if (!p.part(pp, l).contains(prod)) failures.push_back(name + " not in J" + idx(pp) + idx(l));
          } else if (!prod.is_zero()) {
            failures.push_back(name + " != 0");
          }
        }
      }
    }
  }
  return failures;
}

Subspace radical_centralizer(const StarSuperAlgebra& a) {
  const PeirceDecomposition p = peirce_decompose(a);
  const Subspace s = semisimple_part(a);
  return kernel_in(a, p.j11, [&](const Vec& x) {
    Vec out;
    for (const auto& b : s.basis()) {
      const Vec c = a.multiply(x, b) - a.multiply(b, x);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  });
}

}  // namespace starsuper
