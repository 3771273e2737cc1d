#include "starsuper/analysis.hpp"

#include "starsuper/errors.hpp"

namespace starsuper {

namespace {

struct ChainSearch {
  const StarSuperAlgebra& a;
  std::vector<Subspace> blocks;
  Subspace radical;
  int best = 0;
  bool all_blocks = false;

  void extend(const Subspace& chain, std::vector<bool>& used, int total, int count) {
    if (total > best) best = total;
    if (count == static_cast<int>(blocks.size())) all_blocks = true;
    const Subspace cj = subspace_product(a, chain, radical);
    if (cj.is_zero()) return;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (used[b]) continue;
      const Subspace next = subspace_product(a, cj, blocks[b]);
      if (next.is_zero()) continue;
      used[b] = true;
      extend(next, used, total + static_cast<int>(blocks[b].dim()), count + 1);
      used[b] = false;
    }
  }
};

ChainSearch run_chains(const StarSuperAlgebra& a) {
  ChainSearch s{a, block_subspaces(a), declared_radical(a)};
  std::vector<bool> used(s.blocks.size(), false);
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    if (s.blocks[b].is_zero()) continue;
    used[b] = true;
    s.extend(s.blocks[b], used, static_cast<int>(s.blocks[b].dim()), 1);
    used[b] = false;
  }
  return s;
}

}  // namespace

int admissible_exponent(const StarSuperAlgebra& a) { return run_chains(a).best; }

bool is_reduced(const StarSuperAlgebra& a) { return run_chains(a).all_blocks; }

}  // namespace starsuper
