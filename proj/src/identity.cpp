#include "starsuper/analysis.hpp"

#include "starsuper/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace starsuper {

void check_config(const AnalysisConfig& c) {
  if (c.cap_n < 1) throw InvalidArgument("--cap-n must be positive");
  if (c.cap_evals < 1) throw InvalidArgument("--cap-evals must be positive");
  if (c.threads < 1) throw InvalidArgument("--threads must be positive");
  if (c.mod_p && (*c.mod_p <= (1ULL << 30) || *c.mod_p >= (1ULL << 62) || !is_prime(*c.mod_p))) {
    throw InvalidArgument("--mod-p must be a prime between 2^30 and 2^62");
  }
}

std::string to_string(WitnessStage s) {
  switch (s) {
    case WitnessStage::Structured: return "structured";
    case WitnessStage::Random: return "random";
    case WitnessStage::Exhaustive: return "exhaustive";
  }
  return "exhaustive";
}

std::string Witness::describe() const {
  return (descriptor ? descriptor->describe() : poly->to_string()) + " (" + starsuper::to_string(stage) + ")";
}

bool reverify(const StarSuperAlgebra& a, const Witness& w) {
  const Vec v = w.descriptor ? evaluate_alternating_fast(a, *w.descriptor, w.assignment)
                             : evaluate(a, *w.poly, w.assignment);
  return v == w.value && !is_zero(v);
}

namespace {

std::uint64_t prime_of(const AnalysisConfig& cfg) { return cfg.mod_p.value_or(kDefaultPrime); }

using ModVec = std::vector<std::uint64_t>;

bool is_zero_mod(const ModVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

// Structure table reduced modulo p.
class ModAlgebra {
 public:
  ModAlgebra(const StarSuperAlgebra& a, std::uint64_t p) : d_(a.dim()), p_(p), rows_(a.dim()) {
    for (const auto& c : a.structure()) {
      rows_[static_cast<std::size_t>(c.i)].push_back({c.j, c.k, to_mod_p(c.coef, p)});
    }
  }

  ModVec mul(const ModVec& u, const ModVec& v) const {
    ModVec out(d_, 0);
    for (std::size_t i = 0; i < d_; ++i) {
      if (u[i] == 0) continue;
      for (const auto& t : rows_[i]) {
        const std::uint64_t vj = v[static_cast<std::size_t>(t.j)];
        if (vj == 0) continue;
        auto& o = out[static_cast<std::size_t>(t.k)];
        o = add_mod(o, mul_mod(mul_mod(u[i], vj, p_), t.c, p_), p_);
      }
    }
    return out;
  }

  ModVec convert(const Vec& v) const {
    ModVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_mod_p(v[i], p_);
    return out;
  }

  std::uint64_t prime() const { return p_; }

 private:
  struct Term {
    int j;
    int k;
    std::uint64_t c;
  };
  std::size_t d_;
  std::uint64_t p_;
  std::vector<std::vector<Term>> rows_;
};

// Exact sparse vectors of the algebra and their products.
using SparseA = std::vector<std::pair<int, Rational>>;

SparseA sparse_of(const Vec& v) {
  SparseA s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<int>(i), v[i]);
  }
  return s;
}

class SparseProduct {
 public:
  explicit SparseProduct(const StarSuperAlgebra& a) : a_(a), acc_(a.dim()), touched_flag_(a.dim(), 0) {}

  // acc += c * u * v
  void accumulate(const SparseA& u, const SparseA& v, const Rational& c) {
    for (const auto& [i, ui] : u) {
      for (const auto& [j, vj] : v) {
        const auto& terms = a_.product_terms(i, j);
        if (terms.empty()) continue;
        const Rational t = c * ui * vj;
        for (const auto& [k, coef] : terms) {
          if (!touched_flag_[static_cast<std::size_t>(k)]) {
            touched_flag_[static_cast<std::size_t>(k)] = 1;
            touched_.push_back(k);
          }
          acc_[static_cast<std::size_t>(k)] += t * coef;
        }
      }
    }
  }

  SparseA take() {
    std::sort(touched_.begin(), touched_.end());
    SparseA out;
    for (int k : touched_) {
      auto& x = acc_[static_cast<std::size_t>(k)];
      if (sgn(x) != 0) out.emplace_back(k, x);
      x = 0;
      touched_flag_[static_cast<std::size_t>(k)] = 0;
    }
    touched_.clear();
    return out;
  }

  SparseA mul(const SparseA& u, const SparseA& v) {
    accumulate(u, v, 1);
    return take();
  }

 private:
  const StarSuperAlgebra& a_;
  Vec acc_;
  std::vector<char> touched_flag_;
  std::vector<int> touched_;
};

std::vector<Vec> domain_basis(const StarSuperAlgebra& a, VarKind kind) {
  if (kind == VarKind::Any) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(unit_vec(a.dim(), i));
    return out;
  }
  const HomComponents h = hom_components(a);
  switch (kind) {
    case VarKind::YPlus: return h.even_sym.basis();
    case VarKind::YMinus: return h.even_skew.basis();
    case VarKind::ZPlus: return h.odd_sym.basis();
    case VarKind::ZMinus: return h.odd_skew.basis();
    case VarKind::Any: break;
  }
  return {};
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Advances an increasing tuple over {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
  return true;
}

enum class LevelMode { Keep, Skip, Both };

// Search over one Capelli rank: alternating entries from `alt`, x entries
// from the homogeneous basis, and per x-level whether x is kept, deleted, or
// both (the union of the whole barred set).
class CapelliSearch {
 public:
  CapelliSearch(const StarSuperAlgebra& a, std::vector<Vec> alt, VarKind kind, int m,
                std::vector<LevelMode> modes, const AnalysisConfig& cfg)
      : a_(a),
        alt_(std::move(alt)),
        kind_(kind),
        m_(m),
        modes_(std::move(modes)),
        cfg_(cfg),
        mod_(a, prime_of(cfg)) {
    for (const auto& v : alt_) alt_mod_.push_back(mod_.convert(v));
    for (std::size_t i = 0; i < a.dim(); ++i) x_mod_.push_back(mod_.convert(unit_vec(a.dim(), i)));
  }

  WitnessReport run() {
    WitnessReport report;
    if (static_cast<int>(alt_.size()) < m_) return report;  // no increasing tuple
    if (m_ > 20) throw SizeCapExceeded("alternating rank " + std::to_string(m_) + " exceeds the supported 20");
    const std::uint64_t tuples = binomial_capped(alt_.size(), static_cast<std::uint64_t>(m_), cfg_.cap_evals);
    if (tuples > cfg_.cap_evals) {
      throw SizeCapExceeded(std::to_string(alt_.size()) + " choose " + std::to_string(m_) +
                            " alternating tuples exceed the evaluation cap");
    }
    std::optional<Witness> w = structured();
    if (!w) w = random_stage();
    if (!w) w = exhaustive();
    report.evaluations = evaluations_;
    if (w) {
      report.is_identity = false;
      report.witness = std::move(w);
    }
    return report;
  }

 private:
  // Options at x-level `level` (0-based): basis indices, then -1 for deletion.
  std::vector<int> options(int level) const {
    std::vector<int> out;
    const LevelMode mode = modes_[static_cast<std::size_t>(level)];
    if (mode != LevelMode::Skip) {
      for (std::size_t i = 0; i < a_.dim(); ++i) out.push_back(static_cast<int>(i));
    }
    if (mode != LevelMode::Keep) out.push_back(-1);
    return out;
  }

  void count(std::uint64_t k = 1) {
    evaluations_ += k;
    if (evaluations_ > cfg_.cap_evals) {
      throw SizeCapExceeded("identity check exceeded the evaluation cap of " + std::to_string(cfg_.cap_evals));
    }
  }

  // Exact witness from alternating values (in slot order) and x values
  // (nullopt = deleted). Returns nullopt when the exact value is zero.
  std::optional<Witness> make_witness(std::vector<Vec> alt_values, const std::vector<std::optional<Vec>>& xs,
                                      WitnessStage stage) const {
    CapelliDescriptor d = CapelliDescriptor::unbarred(m_, kind_);
    std::vector<Vec> assignment = std::move(alt_values);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (xs[j]) {
        assignment.push_back(*xs[j]);
      } else {
        d.deleted[j] = true;
      }
    }
    Vec value = evaluate_alternating_fast(a_, d, assignment);
    if (is_zero(value)) return std::nullopt;
    return Witness{d, std::nullopt, std::move(assignment), std::move(value), stage};
  }

  // Subset DP modulo p. alt: m vectors in slot order; xs: m-1 entries, null = deleted.
  ModVec dp_mod(const std::vector<const ModVec*>& alt, const std::vector<const ModVec*>& xs) const {
    const std::size_t full = (std::size_t{1} << m_) - 1;
    const std::uint64_t p = mod_.prime();
    std::vector<ModVec> vx(full + 1);
    ModVec last;
    for (std::size_t s = 1; s <= full; ++s) {
      const int size = __builtin_popcountll(s);
      ModVec v;
      if (size == 1) {
        v = *alt[static_cast<std::size_t>(__builtin_ctzll(s))];
      } else {
        v.assign(a_.dim(), 0);
        int greater = 0;
        bool any = false;
        for (int i = m_ - 1; i >= 0; --i) {
          if (!((s >> i) & 1U)) continue;
          const ModVec& prev = vx[s & ~(std::size_t{1} << i)];
          if (!prev.empty()) {
            const ModVec t = mod_.mul(prev, *alt[static_cast<std::size_t>(i)]);
            for (std::size_t k = 0; k < t.size(); ++k) {
              if (t[k] == 0) continue;
              v[k] = greater % 2 == 0 ? add_mod(v[k], t[k], p) : sub_mod(v[k], t[k], p);
              any = true;
            }
          }
          ++greater;
        }
        if (!any || is_zero_mod(v)) v.clear();
      }
      if (size == m_) {
        last = std::move(v);
      } else if (!v.empty()) {
        const ModVec* x = xs[static_cast<std::size_t>(size) - 1];
        ModVec t = x ? mod_.mul(v, *x) : std::move(v);
        if (!is_zero_mod(t)) vx[s] = std::move(t);
      }
    }
    return last;
  }

  // Stage 1: chains a_1 x_1 a_2 ... kept nonzero, as in matrix-unit witnesses.
  std::optional<Witness> structured() {
    std::vector<int> tuple(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) tuple[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(alt_.size());
    int tuples_tried = 0;
    do {
      std::uint64_t budget = cfg_.structured_budget;
      std::vector<int> order;
      std::vector<int> choices;
      std::vector<bool> used(static_cast<std::size_t>(m_), false);
      std::optional<Witness> found;
      for (int first = 0; first < m_ && !found && budget > 0; ++first) {
        used[static_cast<std::size_t>(first)] = true;
        order.push_back(tuple[static_cast<std::size_t>(first)]);
        found = chain_dfs(tuple, alt_mod_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(first)])], order,
                          choices, used, budget);
        order.pop_back();
        used[static_cast<std::size_t>(first)] = false;
      }
      if (found) return found;
    } while (++tuples_tried < 64 && next_combination(tuple, n));
    return std::nullopt;
  }

  std::optional<Witness> chain_dfs(const std::vector<int>& tuple, const ModVec& chain, std::vector<int>& order,
                                   std::vector<int>& choices, std::vector<bool>& used, std::uint64_t& budget) {
    if (budget == 0) return std::nullopt;
    --budget;
    count();
    const int depth = static_cast<int>(order.size());
    if (depth == m_) {
      std::vector<const ModVec*> alt;
      for (int idx : order) alt.push_back(&alt_mod_[static_cast<std::size_t>(idx)]);
      std::vector<const ModVec*> xs;
      for (int c : choices) xs.push_back(c < 0 ? nullptr : &x_mod_[static_cast<std::size_t>(c)]);
      if (is_zero_mod(dp_mod(alt, xs))) return std::nullopt;
      std::vector<Vec> alt_values;
      for (int idx : order) alt_values.push_back(alt_[static_cast<std::size_t>(idx)]);
      std::vector<std::optional<Vec>> x_values;
      for (int c : choices) {
        x_values.push_back(c < 0 ? std::nullopt : std::optional<Vec>(unit_vec(a_.dim(), static_cast<std::size_t>(c))));
      }
      return make_witness(std::move(alt_values), x_values, WitnessStage::Structured);
    }
    for (int c : options(depth - 1)) {
      const ModVec with_x = c < 0 ? chain : mod_.mul(chain, x_mod_[static_cast<std::size_t>(c)]);
      if (is_zero_mod(with_x)) continue;
      for (int u = 0; u < m_; ++u) {
        if (used[static_cast<std::size_t>(u)]) continue;
        const int idx = tuple[static_cast<std::size_t>(u)];
        const ModVec next = mod_.mul(with_x, alt_mod_[static_cast<std::size_t>(idx)]);
        if (is_zero_mod(next)) continue;
        used[static_cast<std::size_t>(u)] = true;
        order.push_back(idx);
        choices.push_back(c);
        auto found = chain_dfs(tuple, next, order, choices, used, budget);
        choices.pop_back();
        order.pop_back();
        used[static_cast<std::size_t>(u)] = false;
        if (found || budget == 0) return found;
      }
    }
    return std::nullopt;
  }

  // Stage 2: random small-integer combinations, screened modulo p.
  std::optional<Witness> random_stage() {
    std::mt19937_64 rng(cfg_.seed ^ (static_cast<std::uint64_t>(m_) << 32) ^ static_cast<std::uint64_t>(kind_));
    std::uniform_int_distribution<int> coef(-3, 3);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < cfg_.random_trials; ++trial) {
      count();
      std::vector<Vec> alt_values;
      for (int i = 0; i < m_; ++i) {
        Vec v(a_.dim());
        for (const auto& b : alt_) axpy(v, Rational(coef(rng)), b);
        alt_values.push_back(std::move(v));
      }
      std::vector<std::optional<Vec>> xs;
      for (int j = 0; j + 1 < m_; ++j) {
        const LevelMode mode = modes_[static_cast<std::size_t>(j)];
        const bool skip = mode == LevelMode::Skip || (mode == LevelMode::Both && coin(rng));
        if (skip) {
          xs.push_back(std::nullopt);
          continue;
        }
        Vec x(a_.dim());
        for (auto& e : x) e = coef(rng);
        xs.push_back(std::move(x));
      }
      std::vector<ModVec> alt_m, x_m;
      for (const auto& v : alt_values) alt_m.push_back(mod_.convert(v));
      for (const auto& x : xs) x_m.push_back(x ? mod_.convert(*x) : ModVec{});
      std::vector<const ModVec*> alt_p, x_p;
      for (const auto& v : alt_m) alt_p.push_back(&v);
      for (std::size_t j = 0; j < xs.size(); ++j) x_p.push_back(xs[j] ? &x_m[j] : nullptr);
      if (is_zero_mod(dp_mod(alt_p, x_p))) continue;
      if (auto w = make_witness(std::move(alt_values), xs, WitnessStage::Random)) return w;
    }
    return std::nullopt;
  }

  // Stage 3: for every increasing tuple, the span of all reachable subset-DP
  // states is grown level by level. The states are linear in the next x, so
  // keeping a basis of the reachable span (with the concrete prefix that
  // produced each kept state) covers every x-assignment; the polynomial set
  // vanishes on the tuple iff every state at the last level is zero.
  std::optional<Witness> exhaustive() {
    const int m = m_;
    const std::size_t full = (std::size_t{1} << m) - 1;
    std::vector<std::vector<std::size_t>> by_level(static_cast<std::size_t>(m) + 1);
    std::vector<std::size_t> rank_of(full + 1, 0);
    for (std::size_t s = 1; s <= full; ++s) {
      auto& level = by_level[static_cast<std::size_t>(__builtin_popcountll(s))];
      rank_of[s] = level.size();
      level.push_back(s);
    }
    const std::size_t d = a_.dim();
    SparseProduct prod(a_);

    struct State {
      std::vector<SparseA> v;  // indexed by rank within the level
      std::vector<int> prefix;
    };

    std::vector<int> tuple(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) tuple[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(alt_.size());
    do {
      std::vector<SparseA> avec;
      for (int idx : tuple) avec.push_back(sparse_of(alt_[static_cast<std::size_t>(idx)]));
      std::vector<State> states(1);
      states[0].v.resize(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) states[0].v[rank_of[std::size_t{1} << i]] = avec[static_cast<std::size_t>(i)];

      for (int k = 1; k < m; ++k) {  // states hold subsets of size k
        const bool last = k + 1 == m;
        const auto& targets = by_level[static_cast<std::size_t>(k) + 1];
        ExactEchelon echelon;
        std::vector<State> next_states;
        for (const State& st : states) {
          for (int c : options(k - 1)) {
            count();
            std::vector<SparseA> w(st.v.size());
            for (std::size_t r = 0; r < st.v.size(); ++r) {
              if (st.v[r].empty()) continue;
              if (c < 0) {
                w[r] = st.v[r];
              } else {
                w[r] = prod.mul(st.v[r], SparseA{{c, Rational(1)}});
              }
            }
            std::vector<SparseA> nv(targets.size());
            bool nonzero = false;
            for (std::size_t t = 0; t < targets.size(); ++t) {
              const std::size_t s = targets[t];
              int greater = 0;
              for (int i = m - 1; i >= 0; --i) {
                if (!((s >> i) & 1U)) continue;
                const SparseA& prev = w[rank_of[s & ~(std::size_t{1} << i)]];
                if (!prev.empty()) {
                  prod.accumulate(prev, avec[static_cast<std::size_t>(i)], greater % 2 == 0 ? 1 : -1);
                }
                ++greater;
              }
              nv[t] = prod.take();
              if (!nv[t].empty()) nonzero = true;
            }
            if (!nonzero) continue;
            std::vector<int> prefix = st.prefix;
            prefix.push_back(c);
            if (last) {
              std::vector<Vec> alt_values;
              for (int idx : tuple) alt_values.push_back(alt_[static_cast<std::size_t>(idx)]);
              std::vector<std::optional<Vec>> xs;
              for (int ch : prefix) {
                xs.push_back(ch < 0 ? std::nullopt : std::optional<Vec>(unit_vec(d, static_cast<std::size_t>(ch))));
              }
              auto wtn = make_witness(std::move(alt_values), xs, WitnessStage::Exhaustive);
              if (!wtn) throw InternalInconsistency("span reduction and direct evaluation disagree");
              return wtn;
            }
            SparseVec flat;
            for (std::size_t t = 0; t < nv.size(); ++t) {
              for (const auto& [coord, val] : nv[t]) {
                flat.emplace_back(static_cast<std::uint32_t>(t * d + static_cast<std::size_t>(coord)), val);
              }
            }
            if (echelon.insert(std::move(flat))) next_states.push_back({std::move(nv), std::move(prefix)});
          }
        }
        states = std::move(next_states);
        if (states.empty()) break;
      }
      if (m == 1 && !states.empty() && !states[0].v[0].empty()) {
        return make_witness({alt_[static_cast<std::size_t>(tuple[0])]}, {}, WitnessStage::Exhaustive);
      }
    } while (next_combination(tuple, n));
    return std::nullopt;
  }

  const StarSuperAlgebra& a_;
  std::vector<Vec> alt_;
  VarKind kind_;
  int m_;
  std::vector<LevelMode> modes_;
  const AnalysisConfig& cfg_;
  ModAlgebra mod_;
  std::vector<ModVec> alt_mod_;
  std::vector<ModVec> x_mod_;
  std::uint64_t evaluations_ = 0;
};

std::vector<LevelMode> modes_of(const CapelliDescriptor& d) {
  std::vector<LevelMode> modes;
  for (bool del : d.deleted) modes.push_back(del ? LevelMode::Skip : LevelMode::Keep);
  return modes;
}

WitnessReport check_rank(const StarSuperAlgebra& a, const std::vector<Vec>& alt, VarKind kind, int m, bool barred,
                         const AnalysisConfig& cfg) {
  std::vector<LevelMode> modes(static_cast<std::size_t>(m - 1), barred ? LevelMode::Both : LevelMode::Keep);
  return CapelliSearch(a, alt, kind, m, std::move(modes), cfg).run();
}

// --- generic polynomials --------------------------------------------------------------

// Groups of slots in which the polynomial is alternating (same kind, every
// transposition inside the group negates it). Remaining slots are singletons.
std::vector<std::vector<int>> alternating_groups(const MultilinearPoly& p) {
  std::vector<std::vector<int>> groups;
  const MultilinearPoly neg = p.negated();
  for (int s = 0; s < static_cast<int>(p.slot_count()); ++s) {
    bool placed = false;
    for (auto& g : groups) {
      if (p.slot_kinds()[static_cast<std::size_t>(g[0])] != p.slot_kinds()[static_cast<std::size_t>(s)]) continue;
      const bool alternating = std::all_of(g.begin(), g.end(), [&](int t) { return p.swapped_slots(t, s) == neg; });
      if (alternating) {
        g.push_back(s);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({s});
  }
  return groups;
}

}  // namespace

WitnessReport is_graded_identity(const StarSuperAlgebra& a, const CapelliDescriptor& d, const AnalysisConfig& cfg) {
  check_config(cfg);
  if (d.m < 1 || d.deleted.size() != static_cast<std::size_t>(d.m - 1)) {
    throw InvalidArgument("malformed Capelli descriptor");
  }
  return CapelliSearch(a, domain_basis(a, d.kind), d.kind, d.m, modes_of(d), cfg).run();
}

WitnessReport is_graded_identity(const StarSuperAlgebra& a, const MultilinearPoly& p, const AnalysisConfig& cfg) {
  check_config(cfg);
  WitnessReport report;
  if (p.terms().empty()) return report;
  const auto groups = alternating_groups(p);
  std::map<VarKind, std::vector<Vec>> domains;
  for (VarKind k : p.slot_kinds()) {
    if (!domains.count(k)) domains[k] = domain_basis(a, k);
  }
  std::uint64_t total = 1;
  for (const auto& g : groups) {
    const std::size_t dom = domains[p.slot_kinds()[static_cast<std::size_t>(g[0])]].size();
    const std::uint64_t c = binomial_capped(dom, g.size(), cfg.cap_evals);
    if (c == 0) return report;
    if (c > cfg.cap_evals || total > cfg.cap_evals / c) {
      throw SizeCapExceeded("identity check needs more than " + std::to_string(cfg.cap_evals) + " evaluations");
    }
    total *= c;
  }

  const auto witness_at = [&](const std::vector<Vec>& assignment, WitnessStage stage) -> std::optional<Witness> {
    ++report.evaluations;
    Vec v = evaluate(a, p, assignment);
    if (is_zero(v)) return std::nullopt;
    return Witness{std::nullopt, p, assignment, std::move(v), stage};
  };

  // Enumeration in canonical order: an increasing tuple per group, odometer
  // over groups (last group fastest).
  std::vector<std::vector<int>> tuples;
  for (const auto& g : groups) {
    std::vector<int> t(g.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
    tuples.push_back(std::move(t));
  }
  const auto assignment_of = [&]() {
    std::vector<Vec> asg(p.slot_count());
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& dom = domains[p.slot_kinds()[static_cast<std::size_t>(groups[gi][0])]];
      for (std::size_t i = 0; i < groups[gi].size(); ++i) {
        asg[static_cast<std::size_t>(groups[gi][i])] = dom[static_cast<std::size_t>(tuples[gi][i])];
      }
    }
    return asg;
  };
  const auto advance = [&]() {
    for (std::size_t gi = groups.size(); gi-- > 0;) {
      const int n = static_cast<int>(domains[p.slot_kinds()[static_cast<std::size_t>(groups[gi][0])]].size());
      if (next_combination(tuples[gi], n)) return true;
      for (std::size_t i = 0; i < tuples[gi].size(); ++i) tuples[gi][i] = static_cast<int>(i);
    }
    return false;
  };

  std::uint64_t visited = 0;
  bool more = true;
  // Stage 1: the first basis assignments in canonical order.
  while (more && visited < cfg.structured_budget) {
    if (auto w = witness_at(assignment_of(), WitnessStage::Structured)) {
      report.is_identity = false;
      report.witness = std::move(w);
      return report;
    }
    ++visited;
    more = advance();
  }
  if (!more) return report;
  // Stage 2: random combinations.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < cfg.random_trials; ++trial) {
    std::vector<Vec> asg;
    for (VarKind k : p.slot_kinds()) {
      Vec v(a.dim());
      for (const auto& b : domains[k]) axpy(v, Rational(coef(rng)), b);
      asg.push_back(std::move(v));
    }
    if (auto w = witness_at(asg, WitnessStage::Random)) {
      report.is_identity = false;
      report.witness = std::move(w);
      return report;
    }
  }
  // Stage 3: the rest of the enumeration.
  while (more) {
    if (auto w = witness_at(assignment_of(), WitnessStage::Exhaustive)) {
      report.is_identity = false;
      report.witness = std::move(w);
      return report;
    }
    more = advance();
  }
  return report;
}

WitnessReport satisfies_generator_set(const StarSuperAlgebra& a, const GeneratorSet& s, const AnalysisConfig& cfg) {
  check_config(cfg);
  if (s.empty()) throw InvalidArgument("generator set must be nonempty");
  // Complete barred sets are first checked together: if the union vanishes,
  // every member does.
  std::map<std::pair<int, VarKind>, std::size_t> members;
  for (const auto& g : s) {
    if (g.descriptor()) ++members[{g.descriptor()->m, g.descriptor()->kind}];
  }
  std::map<std::pair<int, VarKind>, bool> whole_set_identity;
  WitnessReport out;
  for (const auto& [key, count] : members) {
    if (count != (std::size_t{1} << (key.first - 1))) continue;
    const WitnessReport r = check_rank(a, domain_basis(a, key.second), key.second, key.first, true, cfg);
    out.evaluations += r.evaluations;
    whole_set_identity[key] = r.is_identity;
  }
  for (const auto& g : s) {
    if (g.descriptor()) {
      const auto it = whole_set_identity.find({g.descriptor()->m, g.descriptor()->kind});
      if (it != whole_set_identity.end() && it->second) continue;
    }
    const WitnessReport r = g.descriptor() ? is_graded_identity(a, *g.descriptor(), cfg) : is_graded_identity(a, g.poly(), cfg);
    out.evaluations += r.evaluations;
    if (!r.is_identity) {
      out.is_identity = false;
      out.witness = r.witness;
      return out;
    }
  }
  return out;
}

// --- thresholds ------------------------------------------------------------------

namespace {

ThresholdReport threshold_over(const StarSuperAlgebra& a, const std::vector<Vec>& alt, VarKind kind, int cap,
                               const AnalysisConfig& cfg, bool barred) {
  check_config(cfg);
  if (cap < 1) throw InvalidArgument("threshold cap must be at least 1");
  ThresholdReport rep;
  rep.kind = kind;
  rep.search_cap = cap;
  rep.barred = barred;
  std::optional<Witness> previous;
  for (int m = 1; m <= cap; ++m) {
    WitnessReport r = check_rank(a, alt, kind, m, barred, cfg);
    if (r.is_identity) {
      rep.threshold = m;
      rep.witness = std::move(previous);
      // Larger ranks must stay identities; beyond the domain size this is automatic.
      for (int k = m + 1; k <= std::min(cap, static_cast<int>(alt.size())); ++k) {
        if (!check_rank(a, alt, kind, k, barred, cfg).is_identity) {
          throw InternalInconsistency("Capelli identities are not monotone in the rank");
        }
      }
      return rep;
    }
    previous = std::move(r.witness);
  }
  throw SizeCapExceeded("no Capelli identity of kind " + to_string(kind) + " up to rank " + std::to_string(cap));
}

}  // namespace

ThresholdReport capelli_threshold(const StarSuperAlgebra& a, VarKind kind, int cap, const AnalysisConfig& cfg,
                                  bool barred) {
  if (kind == VarKind::Any) return ordinary_capelli_threshold(a, cap, cfg, barred);
  return threshold_over(a, domain_basis(a, kind), kind, cap, cfg, barred);
}

ThresholdReport ordinary_capelli_threshold(const StarSuperAlgebra& a, int cap, const AnalysisConfig& cfg,
                                           bool barred) {
  // In a semisimple algebra a tuple meeting two blocks evaluates to zero
  // (the blocks are ideals with zero mutual products), so the threshold is
  // the largest threshold over the blocks.
  std::vector<std::vector<Vec>> domains;
  if (a.dim() > 0 && jacobson_radical(a).is_zero()) {
    try {
      const auto idem = central_primitive_idempotents(a);
      if (idem.size() > 1) {
        for (const auto& e : idem) {
          Subspace block(a.dim());
          for (std::size_t i = 0; i < a.dim(); ++i) block.insert(a.multiply(unit_vec(a.dim(), i), e));
          domains.push_back(block.basis());
        }
      }
    } catch (const Refusal&) {
      domains.clear();
    }
  }
  if (domains.empty()) return threshold_over(a, domain_basis(a, VarKind::Any), VarKind::Any, cap, cfg, barred);
  std::optional<ThresholdReport> best;
  for (const auto& dom : domains) {
    ThresholdReport r = threshold_over(a, dom, VarKind::Any, cap, cfg, barred);
    if (!best || r.threshold > best->threshold) best = std::move(r);
  }
  return *best;
}

CaseTwoOffsets measure_case_two(const UtSpec& spec, const StarSuperAlgebra& ut, int cap, const AnalysisConfig& cfg) {
  CaseTwoOffsets out;
  out.m = static_cast<int>(spec.components.size());
  bool in_run = false;
  for (const auto& c : spec.components) {
    const bool trivial = c.trivially_graded();
    if (trivial) {
      ++out.m_bar;
      if (!in_run) ++out.m_tilde;
    }
    in_run = trivial;
    const HomDims h = hom_dims(build_family(c));
    out.d.m_plus += h.m_plus;
    out.d.m_minus += h.m_minus;
    out.d.l_plus += h.l_plus;
    out.d.l_minus += h.l_minus;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    out.thresholds[k] = capelli_threshold(ut, kGradedKinds[k], cap, cfg).threshold;
  }
  const int shift = (out.m - out.m_bar) + (out.m_tilde - 1) + 1;
  out.r0 = out.thresholds[0] - out.d.m_plus - shift;
  out.r0_skew = out.thresholds[1] - out.d.m_minus - shift;
  out.r1 = out.thresholds[2] - out.d.l_plus - shift;
  out.r1_skew = out.thresholds[3] - out.d.l_minus - shift;
  return out;
}

}  // namespace starsuper
