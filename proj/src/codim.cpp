#include "starsuper/analysis.hpp"

#include "starsuper/errors.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace starsuper {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Vec> kind_basis(const StarSuperAlgebra& a, const HomComponents& h, VarKind k) {
  switch (k) {
    case VarKind::YPlus: return h.even_sym.basis();
    case VarKind::YMinus: return h.even_skew.basis();
    case VarKind::ZPlus: return h.odd_sym.basis();
    case VarKind::ZMinus: return h.odd_skew.basis();
    case VarKind::Any: break;
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(unit_vec(a.dim(), i));
  return out;
}

// All products b_{w(1)} ... b_{w(n)}, words in lexicographic order.
void word_products(const StarSuperAlgebra& a, const std::vector<const Vec*>& b, std::vector<bool>& used,
                   const Vec& prefix, int depth, std::vector<Vec>& out) {
  const int n = static_cast<int>(b.size());
  if (depth == n) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    if (depth == 0) {
      word_products(a, b, used, *b[static_cast<std::size_t>(i)], 1, out);
    } else if (is_zero(prefix)) {
      // every extension vanishes; keep the word count right
      const std::size_t rest = factorial(n - depth - 1);
      for (std::size_t r = 0; r < rest; ++r) out.push_back(prefix);
    } else {
      word_products(a, b, used, a.multiply(prefix, *b[static_cast<std::size_t>(i)]), depth + 1, out);
    }
    used[static_cast<std::size_t>(i)] = false;
  }
}

KindRank rank_with_bases(const StarSuperAlgebra& a, const std::vector<std::vector<Vec>>& bases,
                         const std::vector<std::uint64_t>& primes, const AnalysisConfig& cfg) {
  const int n = static_cast<int>(bases.size());
  KindRank out;
  out.modular.assign(primes.size(), 0);
  std::uint64_t tuples = 1;
  for (const auto& b : bases) {
    if (b.empty()) return out;
    tuples *= b.size();
  }
  const std::uint64_t words = factorial(n);
  if (tuples > cfg.cap_evals / words) {
    throw SizeCapExceeded("codimension at n=" + std::to_string(n) + " needs " + std::to_string(tuples) + " x " +
                          std::to_string(words) + " word evaluations, above the cap");
  }
  ExactEchelon exact;
  std::vector<ModPEchelon> modular;
  for (auto p : primes) modular.emplace_back(words, p);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<const Vec*> b;
    for (int i = 0; i < n; ++i) b.push_back(&bases[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
    std::vector<Vec> prods;
    prods.reserve(words);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    word_products(a, b, used, Vec{}, 0, prods);
    for (std::size_t c = 0; c < a.dim(); ++c) {
      SparseVec col;
      for (std::size_t w = 0; w < prods.size(); ++w) {
        if (sgn(prods[w][c]) != 0) col.emplace_back(static_cast<std::uint32_t>(w), prods[w][c]);
      }
      if (col.empty()) continue;
      for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        std::vector<std::uint64_t> mv(words, 0);
        for (const auto& [w, val] : col) mv[w] = to_mod_p(val, primes[pi]);
        if (modular[pi].rank() < words) modular[pi].insert(std::move(mv));
      }
      if (exact.rank() < words) exact.insert(std::move(col));
    }
    bool done = exact.rank() == words;
    for (const auto& m : modular) done = done && m.rank() == words;
    if (done) break;
    int k = n - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == bases[static_cast<std::size_t>(k)].size()) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  out.exact = exact.rank();
  for (std::size_t pi = 0; pi < primes.size(); ++pi) out.modular[pi] = modular[pi].rank();
  return out;
}

void check_n(int n, const AnalysisConfig& cfg) {
  check_config(cfg);
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (n > cfg.cap_n) {
    throw SizeCapExceeded("n=" + std::to_string(n) + " exceeds --cap-n=" + std::to_string(cfg.cap_n));
  }
}

std::vector<KindContent> contents_of(int n) {
  std::vector<KindContent> out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      for (int c = 0; a + b + c <= n; ++c) out.push_back({a, b, c, n - a - b - c});
    }
  }
  return out;
}

std::uint64_t multinomial(const KindContent& c) {
  std::uint64_t r = 1;
  int total = 0;
  for (int part : c) {
    for (int i = 1; i <= part; ++i) {
      ++total;
      r = r * static_cast<std::uint64_t>(total) / static_cast<std::uint64_t>(i);
    }
  }
  return r;
}

std::size_t checked_rank(const StarSuperAlgebra& a, const HomComponents& h, const std::vector<VarKind>& kinds,
                         const AnalysisConfig& cfg) {
  std::vector<std::vector<Vec>> bases;
  for (VarKind k : kinds) bases.push_back(kind_basis(a, h, k));
  std::vector<std::uint64_t> primes;
  if (cfg.mod_p) primes.push_back(*cfg.mod_p);
  const KindRank r = rank_with_bases(a, bases, primes, cfg);
  if (!primes.empty() && r.modular[0] != r.exact) {
    throw InternalInconsistency("exact rank " + std::to_string(r.exact) + " differs from rank " +
                                std::to_string(r.modular[0]) + " modulo " + std::to_string(primes[0]));
  }
  return r.exact;
}

}  // namespace

KindRank kind_vector_rank(const StarSuperAlgebra& a, const std::vector<VarKind>& kinds,
                          const std::vector<std::uint64_t>& primes, const AnalysisConfig& cfg) {
  check_n(static_cast<int>(kinds.size()), cfg);
  const HomComponents h = hom_components(a);
  std::vector<std::vector<Vec>> bases;
  for (VarKind k : kinds) bases.push_back(kind_basis(a, h, k));
  return rank_with_bases(a, bases, primes, cfg);
}

CodimReport codim_graded(const StarSuperAlgebra& a, int n, const AnalysisConfig& cfg) {
  check_n(n, cfg);
  const HomComponents h = hom_components(a);
  const auto contents = contents_of(n);
  std::vector<std::size_t> ranks(contents.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next++;
      if (i >= contents.size()) return;
      try {
        std::vector<VarKind> kinds;
        for (std::size_t k = 0; k < 4; ++k) kinds.insert(kinds.end(), static_cast<std::size_t>(contents[i][k]), kGradedKinds[k]);
        ranks[i] = checked_rank(a, h, kinds, cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = contents.size();
        return;
      }
    }
  };
  const int threads = std::min<int>(cfg.threads, static_cast<int>(contents.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  CodimReport out;
  out.n = n;
  for (std::size_t i = 0; i < contents.size(); ++i) {
    out.per_kind_ranks[contents[i]] = ranks[i];
    out.value += multinomial(contents[i]) * ranks[i];
  }
  return out;
}

std::uint64_t codim_graded_bruteforce(const StarSuperAlgebra& a, int n, const AnalysisConfig& cfg) {
  check_n(n, cfg);
  const HomComponents h = hom_components(a);
  std::uint64_t total = 0;
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<VarKind> kinds;
    for (int c : code) kinds.push_back(kGradedKinds[static_cast<std::size_t>(c)]);
    total += checked_rank(a, h, kinds, cfg);
    int k = n - 1;
    while (k >= 0 && ++code[static_cast<std::size_t>(k)] == 4) {
      code[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return total;
}

std::uint64_t codim_ordinary(const StarSuperAlgebra& a, int n, const AnalysisConfig& cfg) {
  check_n(n, cfg);
  const HomComponents h = hom_components(a);
  return checked_rank(a, h, std::vector<VarKind>(static_cast<std::size_t>(n), VarKind::Any), cfg);
}

std::vector<CodimRow> codim_table(const StarSuperAlgebra& a, int n_max, const AnalysisConfig& cfg) {
  std::vector<CodimRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    CodimRow row;
    row.report = codim_graded(a, n, cfg);
    row.root = std::pow(static_cast<double>(row.report.value), 1.0 / n);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace starsuper
