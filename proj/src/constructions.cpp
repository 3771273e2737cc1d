#include "starsuper/constructions.hpp"

#include "starsuper/errors.hpp"

#include <map>
#include <utility>

namespace starsuper {

namespace {

std::string unit_label(int i, int j, int s) {
  if (s <= 9) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Image of the matrix unit e_ij under the transpose or the symplectic
// involution of M_s: star(e_ij) = sign * e_{r,c}.
struct UnitImage {
  int r;
  int c;
  int sign;
};

UnitImage diamond_image(Diamond d, int i, int j, int s) {
  if (d == Diamond::Transpose) return {j, i, 1};
  // Omega X^t Omega^{-1} sends e_pq to s(p)s(q) e_{phi(q), phi(p)},
  // phi(i) = i +- h and s(i) = +1 on the first half, -1 on the second.
  const int h = s / 2;
  const auto phi = [h](int x) { return x < h ? x + h : x - h; };
  const auto sg = [h](int x) { return x < h ? 1 : -1; };
  return {phi(j), phi(i), sg(i) * sg(j)};
}

RationalMatrix zero_matrix(std::size_t d) { return RationalMatrix(d, Vec(d)); }

WedderburnData single_block(std::size_t d, const FamilyTag& tag) {
  WedderburnData w;
  WedderburnBlock b;
  for (std::size_t i = 0; i < d; ++i) b.indices.push_back(static_cast<int>(i));
  b.family = tag;
  w.blocks.push_back(std::move(b));
  return w;
}

std::vector<int> alpha_of(int first, int second) {
  std::vector<int> alpha(static_cast<std::size_t>(first + second), 0);
  for (int i = first; i < first + second; ++i) alpha[static_cast<std::size_t>(i)] = 1;
  return alpha;
}

// Full matrix algebra M_s with an elementary grading and the transpose or
// symplectic involution.
StarSuperAlgebra full_matrix_algebra(int s, const std::vector<int>& alpha, Diamond d,
                                     const FamilyTag& tag) {
  const auto id = [s](int i, int j) { return i * s + j; };
  const std::size_t dim = static_cast<std::size_t>(s) * static_cast<std::size_t>(s);
  std::vector<std::string> labels;
  std::vector<int> grading;
  std::vector<StructureConstant> structure;
  RationalMatrix inv = zero_matrix(dim);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      labels.push_back(unit_label(i, j, s));
      grading.push_back((alpha[static_cast<std::size_t>(i)] + alpha[static_cast<std::size_t>(j)]) % 2);
      for (int k = 0; k < s; ++k) structure.push_back({id(i, j), id(j, k), id(i, k), 1});
      const UnitImage im = diamond_image(d, i, j, s);
      inv[static_cast<std::size_t>(id(im.r, im.c))][static_cast<std::size_t>(id(i, j))] = im.sign;
    }
  }
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          single_block(dim, tag));
}

}  // namespace

StarSuperAlgebra m_hl_transpose(int h, int l) {
  const FamilyTag tag = FamilyTag::mhl_t(h, l);
  tag.check();
  return full_matrix_algebra(h + l, alpha_of(h, l), Diamond::Transpose, tag);
}

StarSuperAlgebra m_hh_symplectic(int h) {
  const FamilyTag tag = FamilyTag::mhh_s(h);
  tag.check();
  return full_matrix_algebra(2 * h, alpha_of(h, h), Diamond::Symplectic, tag);
}

StarSuperAlgebra m_hl_exchange(int h, int l) {
  const FamilyTag tag = FamilyTag::mhl_exc(h, l);
  tag.check();
  const int s = h + l;
  const int sq = s * s;
  const auto alpha = alpha_of(h, l);
  const auto first = [s](int i, int j) { return i * s + j; };
  const auto second = [s, sq](int i, int j) { return sq + i * s + j; };
  const std::size_t dim = 2 * static_cast<std::size_t>(sq);
  std::vector<std::string> labels(dim);
  std::vector<int> grading(dim);
  std::vector<StructureConstant> structure;
  RationalMatrix inv = zero_matrix(dim);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const std::string u = unit_label(i, j, s);
      labels[static_cast<std::size_t>(first(i, j))] = "(" + u + ",0)";
      labels[static_cast<std::size_t>(second(i, j))] = "(0," + u + ")";
      const int g = (alpha[static_cast<std::size_t>(i)] + alpha[static_cast<std::size_t>(j)]) % 2;
      grading[static_cast<std::size_t>(first(i, j))] = g;
      grading[static_cast<std::size_t>(second(i, j))] = g;
      for (int k = 0; k < s; ++k) {
        structure.push_back({first(i, j), first(j, k), first(i, k), 1});
        // (0, e_ij)(0, e_ki) = (0, e_ki e_ij) = (0, e_kj).
        structure.push_back({second(i, j), second(k, i), second(k, j), 1});
      }
      inv[static_cast<std::size_t>(second(i, j))][static_cast<std::size_t>(first(i, j))] = 1;
      inv[static_cast<std::size_t>(first(i, j))][static_cast<std::size_t>(second(i, j))] = 1;
    }
  }
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          single_block(dim, tag));
}

namespace {

// Structure of M_n + cM_n placed at `offset`, with c-part starting at offset + n^2.
// `reversed` multiplies in the opposite order.
void cmn_products(int n, int offset, bool reversed, std::vector<StructureConstant>& out) {
  const int sq = n * n;
  const auto e = [&](int c, int i, int j) { return offset + c * sq + i * n + j; };
  for (int ca = 0; ca < 2; ++ca) {
    for (int cb = 0; cb < 2; ++cb) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            // (c^ca e_ij)(c^cb e_jk) = c^(ca+cb) e_ik, using c^2 = 1.
            if (reversed) {
              out.push_back({e(cb, j, k), e(ca, i, j), e((ca + cb) % 2, i, k), 1});
            } else {
              out.push_back({e(ca, i, j), e(cb, j, k), e((ca + cb) % 2, i, k), 1});
            }
          }
        }
      }
    }
  }
}

void cmn_labels(int n, const std::string& prefix, const std::string& suffix,
                std::vector<std::string>& labels, std::vector<int>& grading) {
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        labels.push_back(prefix + (c == 1 ? "c" : "") + unit_label(i, j, n) + suffix);
        grading.push_back(c);
      }
    }
  }
}

}  // namespace

StarSuperAlgebra mn_cmn(int n, Diamond diamond, bool negative_sign) {
  const FamilyTag tag =
      negative_sign ? FamilyTag::mn_cmn_star(n, diamond) : FamilyTag::mn_cmn_dagger(n, diamond);
  tag.check();
  const int sq = n * n;
  const std::size_t dim = 2 * static_cast<std::size_t>(sq);
  std::vector<std::string> labels;
  std::vector<int> grading;
  cmn_labels(n, "", "", labels, grading);
  std::vector<StructureConstant> structure;
  cmn_products(n, 0, false, structure);
  RationalMatrix inv = zero_matrix(dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const UnitImage im = diamond_image(diamond, i, j, n);
      inv[static_cast<std::size_t>(im.r * n + im.c)][static_cast<std::size_t>(i * n + j)] = im.sign;
      inv[static_cast<std::size_t>(sq + im.r * n + im.c)][static_cast<std::size_t>(sq + i * n + j)] =
          negative_sign ? -im.sign : im.sign;
    }
  }
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          single_block(dim, tag));
}

StarSuperAlgebra mn_cmn_exchange(int n) {
  const FamilyTag tag = FamilyTag::mn_cmn_exc(n);
  tag.check();
  const int half = 2 * n * n;
  const std::size_t dim = 2 * static_cast<std::size_t>(half);
  std::vector<std::string> labels;
  std::vector<int> grading;
  cmn_labels(n, "(", ",0)", labels, grading);
  cmn_labels(n, "(0,", ")", labels, grading);
  std::vector<StructureConstant> structure;
  cmn_products(n, 0, false, structure);
  cmn_products(n, half, true, structure);
  RationalMatrix inv = zero_matrix(dim);
  for (int t = 0; t < half; ++t) {
    inv[static_cast<std::size_t>(half + t)][static_cast<std::size_t>(t)] = 1;
    inv[static_cast<std::size_t>(t)][static_cast<std::size_t>(half + t)] = 1;
  }
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          single_block(dim, tag));
}

StarSuperAlgebra build_family(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::MhlTranspose: return m_hl_transpose(tag.h, tag.l);
    case Family::MhhSymplectic: return m_hh_symplectic(tag.h);
    case Family::MhlExchange: return m_hl_exchange(tag.h, tag.l);
    case Family::MnCmnStar: return mn_cmn(tag.n, tag.diamond, true);
    case Family::MnCmnDagger: return mn_cmn(tag.n, tag.diamond, false);
    case Family::MnCmnExchange: return mn_cmn_exchange(tag.n);
    case Family::Custom: break;
  }
  throw InvalidArgument("custom blocks cannot be constructed from a tag");
}

HomDims hom_dims(const StarSuperAlgebra& a) {
  const HomComponents h = hom_components(a);
  return {static_cast<int>(h.even_sym.dim()), static_cast<int>(h.even_skew.dim()),
          static_cast<int>(h.odd_sym.dim()), static_cast<int>(h.odd_skew.dim())};
}

// --- UT* -------------------------------------------------------------------------------

namespace {

using Position = std::pair<int, int>;
using SparseMatrix = std::map<Position, Rational>;

void add_entry(SparseMatrix& m, int r, int c, const Rational& v) {
  auto& slot = m[{r, c}];
  slot += v;
  if (sgn(slot) == 0) m.erase({r, c});
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) {
  std::map<int, std::vector<std::pair<int, Rational>>> rows;
  for (const auto& [pos, v] : b) rows[pos.first].emplace_back(pos.second, v);
  SparseMatrix out;
  for (const auto& [pos, v] : a) {
    const auto it = rows.find(pos.second);
    if (it == rows.end()) continue;
    for (const auto& [c, w] : it->second) add_entry(out, pos.first, c, v * w);
  }
  return out;
}

// Secondary-diagonal reflection of M_size: e_ij -> e_{size-1-j, size-1-i}.
SparseMatrix reflect(const SparseMatrix& m, int size) {
  SparseMatrix out;
  for (const auto& [pos, v] : m) out[{size - 1 - pos.second, size - 1 - pos.first}] = v;
  return out;
}

// The matrix a-bar of a basis vector of a simple component (size s_k).
SparseMatrix realize(const FamilyTag& tag, int index) {
  SparseMatrix m;
  switch (tag.family) {
    case Family::MhlTranspose:
    case Family::MhhSymplectic:
    case Family::MhlExchange: {
      const int s = tag.size();
      if (index < s * s) m[{index / s, index % s}] = 1;  // second exchange summand maps to 0
      return m;
    }
    case Family::MnCmnStar:
    case Family::MnCmnDagger:
    case Family::MnCmnExchange: {
      const int n = tag.n;
      const int sq = n * n;
      if (index >= 2 * sq) return m;  // second exchange summand maps to 0
      const int c = index / sq;
      const int i = (index % sq) / n;
      const int j = index % n;
      // a + cb -> [[a, b], [b, a]]
      m[{i, c * n + j}] = 1;
      m[{n + i, (1 - c) * n + j}] = 1;
      return m;
    }
    case Family::Custom: break;
  }
  throw InvalidArgument("custom blocks cannot be realized in UT*");
}

SparseMatrix shifted(const SparseMatrix& m, int offset) {
  SparseMatrix out;
  for (const auto& [pos, v] : m) out[{pos.first + offset, pos.second + offset}] = v;
  return out;
}

// Subalgebra of M_size spanned by matrices with pairwise disjoint supports.
class MatrixSpan {
 public:
  MatrixSpan(std::vector<SparseMatrix> mats, int size) : mats_(std::move(mats)), size_(size) {
    for (std::size_t t = 0; t < mats_.size(); ++t) {
      if (mats_[t].empty()) throw InternalInconsistency("zero matrix in a UT* basis");
      for (const auto& [pos, v] : mats_[t]) {
        if (!owner_.emplace(pos, static_cast<int>(t)).second) {
          throw InternalInconsistency("UT* basis matrices overlap");
        }
      }
    }
  }

  std::vector<std::pair<int, Rational>> coordinates(const SparseMatrix& m) const {
    std::map<int, Rational> coef;
    for (const auto& [pos, v] : m) {
      const auto it = owner_.find(pos);
      if (it == owner_.end()) throw InternalInconsistency("product leaves the UT* span");
      const int t = it->second;
      if (coef.count(t)) continue;
      coef[t] = v / mats_[static_cast<std::size_t>(t)].at(pos);
    }
    SparseMatrix rebuilt;
    for (const auto& [t, c] : coef) {
      for (const auto& [pos, v] : mats_[static_cast<std::size_t>(t)]) add_entry(rebuilt, pos.first, pos.second, c * v);
    }
    if (rebuilt != m) throw InternalInconsistency("product leaves the UT* span");
    return {coef.begin(), coef.end()};
  }

  const std::vector<SparseMatrix>& mats() const { return mats_; }
  int size() const { return size_; }

 private:
  std::vector<SparseMatrix> mats_;
  int size_;
  std::map<Position, int> owner_;
};

}  // namespace

UtLayout ut_layout(const UtSpec& spec) {
  if (spec.components.empty()) throw InvalidArgument("UT* needs at least one component");
  if (spec.gtilde.size() != spec.components.size()) {
    throw InvalidArgument("grading tuple has " + std::to_string(spec.gtilde.size()) + " entries for " +
                          std::to_string(spec.components.size()) + " components");
  }
  UtLayout layout;
  layout.eta.push_back(0);
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    spec.components[k].check();
    if (spec.gtilde[k] != 0 && spec.gtilde[k] != 1) throw InvalidArgument("grading tuple entries must be 0 or 1");
    layout.sizes.push_back(spec.components[k].size());
    layout.eta.push_back(layout.eta.back() + layout.sizes.back());
  }
  const int eta_m = layout.eta.back();
  layout.alpha.assign(2 * static_cast<std::size_t>(eta_m), 0);
  for (int i = 1; i <= 2 * eta_m; ++i) {
    // Mirrored indices take their block from 2 eta_m - i + 1.
    const int base = i <= eta_m ? i : 2 * eta_m - i + 1;
    std::size_t k = 1;
    while (layout.eta[k] < base) ++k;
    const FamilyTag& tag = spec.components[k - 1];
    const int local = base - layout.eta[k - 1];
    const int half = (tag.family == Family::MhlTranspose || tag.family == Family::MhlExchange ||
                      tag.family == Family::MhhSymplectic)
                         ? tag.h
                         : tag.n;
    const int alpha_k = local <= half ? 0 : 1;
    layout.alpha[static_cast<std::size_t>(i - 1)] = (alpha_k + spec.gtilde[k - 1]) % 2;
  }
  return layout;
}

UtAlgebra ut_star(const UtSpec& spec) {
  const UtLayout layout = ut_layout(spec);
  const int eta_m = layout.eta.back();
  const int size = 2 * eta_m;

  std::vector<SparseMatrix> mats;
  std::vector<std::string> labels;
  WedderburnData w;
  std::vector<StarSuperAlgebra> comps;
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    const FamilyTag& tag = spec.components[k];
    comps.push_back(build_family(tag));
    const StarSuperAlgebra& c = comps.back();
    const int offset = layout.eta[k];
    WedderburnBlock block;
    block.family = tag;
    for (std::size_t b = 0; b < c.dim(); ++b) {
      SparseMatrix top = shifted(realize(tag, static_cast<int>(b)), offset);
      SparseMatrix img;
      for (const auto& [r, coef] : c.star_column(static_cast<int>(b))) {
        for (const auto& [pos, v] : realize(tag, r)) add_entry(img, pos.first, pos.second, coef * v);
      }
      for (const auto& [pos, v] : reflect(shifted(img, offset), size)) top[pos] = v;
      block.indices.push_back(static_cast<int>(mats.size()));
      mats.push_back(std::move(top));
      labels.push_back("D" + std::to_string(k + 1) + "." + c.labels()[b]);
    }
    w.blocks.push_back(std::move(block));
  }
  const auto unit_name = [size](int p, int q) {
    return "E(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")";
  };
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.components.size(); ++j) {
      for (int p = layout.eta[i]; p < layout.eta[i + 1]; ++p) {
        for (int q = layout.eta[j]; q < layout.eta[j + 1]; ++q) {
          for (const Position& pos : {Position{p, q}, Position{size - 1 - q, size - 1 - p}}) {
            w.radical.push_back(static_cast<int>(mats.size()));
            mats.push_back(SparseMatrix{{pos, Rational(1)}});
            labels.push_back(unit_name(pos.first, pos.second));
          }
        }
      }
    }
  }

  const MatrixSpan span(mats, size);
  const std::size_t d = mats.size();
  std::vector<StructureConstant> structure;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SparseMatrix prod = mat_mul(mats[i], mats[j]);
      for (const auto& [k, c] : span.coordinates(prod)) {
        structure.push_back({static_cast<int>(i), static_cast<int>(j), k, c});
      }
    }
  }
  RationalMatrix inv = zero_matrix(d);
  std::vector<int> grading(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& [r, c] : span.coordinates(reflect(mats[k], size))) inv[static_cast<std::size_t>(r)][k] = c;
    int deg = -1;
    for (const auto& [pos, v] : mats[k]) {
      const int g = (layout.alpha[static_cast<std::size_t>(pos.first)] + layout.alpha[static_cast<std::size_t>(pos.second)]) % 2;
      if (deg >= 0 && g != deg) throw InternalInconsistency("UT* basis matrix is not homogeneous");
      deg = g;
    }
    grading[k] = deg;
  }
  StarSuperAlgebra ut(std::move(labels), std::move(structure), std::move(grading), std::move(inv), w);

  const ValidationReport report = validate(ut);
  if (!report.empty()) {
    throw InternalInconsistency("UT* construction violates " + report.front().invariant + ": " + report.front().detail);
  }
  // Delta restricted to each component must be a graded *-isomorphism onto its block.
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const StarSuperAlgebra& c = comps[k];
    const auto& ids = w.blocks[k].indices;
    for (std::size_t a = 0; a < c.dim(); ++a) {
      const int ga = ids[a];
      bool ok = ut.grading()[static_cast<std::size_t>(ga)] == c.grading()[a];
      std::vector<std::pair<int, Rational>> mapped;
      for (const auto& [r, coef] : c.star_column(static_cast<int>(a))) mapped.emplace_back(ids[static_cast<std::size_t>(r)], coef);
      ok = ok && mapped == ut.star_column(ga);
      for (std::size_t b = 0; b < c.dim() && ok; ++b) {
        std::map<int, Rational> expect;
        for (const auto& [r, coef] : c.product_terms(static_cast<int>(a), static_cast<int>(b))) {
          expect[ids[static_cast<std::size_t>(r)]] = coef;
        }
        std::map<int, Rational> got;
        for (const auto& [r, coef] : ut.product_terms(ga, ids[b])) got[r] = coef;
        ok = expect == got;
      }
      if (!ok) {
        throw InternalInconsistency("Delta does not reproduce component " + std::to_string(k + 1) +
                                    " at basis " + c.labels()[a]);
      }
    }
  }
  return {std::move(ut), layout};
}

// --- radical extensions ----------------------------------------------------------------

NilpotentSpec commutative_nilpotent(int k) {
  if (k < 1) throw InvalidArgument("commutative_nilpotent needs k >= 1");
  NilpotentSpec n;
  for (int i = 1; i <= k; ++i) n.labels.push_back(i == 1 ? "n" : "n^" + std::to_string(i));
  // n^i n^j = n^{i+j}; index i-1 holds n^i.
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; i + j <= k; ++j) n.structure.push_back({i - 1, j - 1, i + j - 1, 1});
  }
  n.involution = zero_matrix(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) n.involution[i][i] = 1;
  return n;
}

NilpotentSpec noncommutative_nilpotent() {
  NilpotentSpec n;
  n.labels = {"n1", "n2", "n1n2", "n2n1"};
  n.structure = {{0, 1, 2, 1}, {1, 0, 3, 1}};
  n.involution = zero_matrix(4);
  n.involution[0][0] = 1;
  n.involution[1][1] = 1;
  n.involution[3][2] = 1;
  n.involution[2][3] = 1;
  return n;
}

namespace {

FamilyTag block_family(const StarSuperAlgebra& a) {
  if (a.wedderburn() && a.wedderburn()->blocks.size() == 1) return a.wedderburn()->blocks[0].family;
  return FamilyTag{};
}

void require_simple_unital(const StarSuperAlgebra& a, const std::string& op) {
  if (!validate(a).empty()) throw InvalidArgument(op + " needs a valid algebra");
  if (!unit_element(a)) throw InvalidArgument(op + " needs a unital algebra");
  if (!is_star_graded_simple(a)) throw InvalidArgument(op + " needs a simple *-superalgebra");
}

}  // namespace

StarSuperAlgebra one_sided_radical_extension(const StarSuperAlgebra& a) {
  require_simple_unital(a, "one_sided_radical_extension");
  const int d = static_cast<int>(a.dim());
  const std::size_t dim = 3 * a.dim();
  std::vector<std::string> labels = a.labels();
  for (const auto& l : a.labels()) labels.push_back("V[" + l + "]");
  for (const auto& l : a.labels()) labels.push_back("Vo[" + l + "]");
  std::vector<int> grading;
  for (int copy = 0; copy < 3; ++copy) grading.insert(grading.end(), a.grading().begin(), a.grading().end());
  std::vector<StructureConstant> structure;
  for (const auto& c : a.structure()) {
    structure.push_back(c);
    structure.push_back({c.i, d + c.j, d + c.k, c.coef});              // a . v = av
    structure.push_back({2 * d + c.i, c.j, 2 * d + c.k, c.coef});      // v° . a = (va)°
  }
  RationalMatrix inv = zero_matrix(dim);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Rational& v = a.involution()[r][k];
      if (sgn(v) == 0) continue;
      inv[r][k] = v;
      inv[2 * a.dim() + r][a.dim() + k] = v;
      inv[a.dim() + r][2 * a.dim() + k] = v;
    }
  }
  WedderburnData w;
  WedderburnBlock block;
  block.family = block_family(a);
  for (int i = 0; i < d; ++i) block.indices.push_back(i);
  w.blocks.push_back(block);
  for (int i = d; i < 3 * d; ++i) w.radical.push_back(i);
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          std::move(w));
}

StarSuperAlgebra tensor_nilpotent_extension(const StarSuperAlgebra& a, const NilpotentSpec& n) {
  require_simple_unital(a, "tensor_nilpotent_extension");
  const std::size_t dn = n.labels.size();
  if (dn == 0) throw InvalidArgument("nilpotent algebra must be nonzero");
  const StarSuperAlgebra nalg(n.labels, n.structure, std::vector<int>(dn, 0), n.involution);
  const ValidationReport report = validate(nalg);
  if (!report.empty()) throw InvalidArgument("nilpotent algebra violates " + report.front().invariant);
  Subspace power = Subspace::full(dn);
  for (std::size_t k = 0; k <= dn && !power.is_zero(); ++k) power = subspace_product(nalg, power, Subspace::full(dn));
  if (!power.is_zero()) throw InvalidArgument("algebra passed as N is not nilpotent");

  // N^# basis: index 0 is the adjoined unit, index t+1 is n_t.
  const std::size_t ds = dn + 1;
  const auto id = [ds](std::size_t i, std::size_t t) { return static_cast<int>(i * ds + t); };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sharp(ds * ds);
  for (std::size_t t = 0; t < ds; ++t) {
    sharp[0 * ds + t].emplace_back(t, 1);
    if (t > 0) sharp[t * ds + 0].emplace_back(t, 1);
  }
  for (const auto& c : nalg.structure()) {
    sharp[static_cast<std::size_t>(c.i + 1) * ds + static_cast<std::size_t>(c.j + 1)].emplace_back(
        static_cast<std::size_t>(c.k + 1), c.coef);
  }

  const std::size_t dim = a.dim() * ds;
  std::vector<std::string> labels;
  std::vector<int> grading;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t t = 0; t < ds; ++t) {
      labels.push_back(t == 0 ? a.labels()[i] : a.labels()[i] + "*" + n.labels[t - 1]);
      grading.push_back(a.grading()[i]);
    }
  }
  std::vector<StructureConstant> structure;
  for (const auto& c : a.structure()) {
    for (std::size_t s = 0; s < ds; ++s) {
      for (std::size_t t = 0; t < ds; ++t) {
        for (const auto& [u, coef] : sharp[s * ds + t]) {
          structure.push_back({id(static_cast<std::size_t>(c.i), s), id(static_cast<std::size_t>(c.j), t),
                               id(static_cast<std::size_t>(c.k), u), c.coef * coef});
        }
      }
    }
  }
  RationalMatrix inv = zero_matrix(dim);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Rational& v = a.involution()[r][k];
      if (sgn(v) == 0) continue;
      inv[static_cast<std::size_t>(id(r, 0))][static_cast<std::size_t>(id(k, 0))] = v;
      for (std::size_t p = 0; p < dn; ++p) {
        for (std::size_t q = 0; q < dn; ++q) {
          if (sgn(n.involution[p][q]) == 0) continue;
          inv[static_cast<std::size_t>(id(r, p + 1))][static_cast<std::size_t>(id(k, q + 1))] = v * n.involution[p][q];
        }
      }
    }
  }
  WedderburnData w;
  WedderburnBlock block;
  block.family = block_family(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    block.indices.push_back(id(i, 0));
    for (std::size_t t = 1; t < ds; ++t) w.radical.push_back(id(i, t));
  }
  w.blocks.push_back(block);
  return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(inv),
                          std::move(w));
}

}  // namespace starsuper
