#include "hn/random_subgroups.hpp"

#include <vector>

namespace hn {

Word RandomSubgroupSource::random_word(int max_length) {
  std::uniform_int_distribution<int> len_dist(1, max_length);
  std::uniform_int_distribution<int> gen_dist(1, rank_);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  while (true) {
    int len = len_dist(rng_);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
      letters.push_back(gen_dist(rng_) * (sign_dist(rng_) ? 1 : -1));
    }
    Word w = Word::reduce(letters, rank_);
    if (!w.empty()) return w;
  }
}

VoltageGraph RandomSubgroupSource::next_free_subgroup() {
  std::uniform_int_distribution<int> count_dist(2, 4);
  std::uniform_int_distribution<int> residue_dist(0, modulus_ - 1);
  while (true) {
    int count = count_dist(rng_);
    std::vector<std::pair<Word, int>> gens;
    for (int i = 0; i < count; ++i) {
      gens.push_back({random_word(6), residue_dist(rng_)});
    }
    VoltageGraph g = VoltageGraph::fold(gens, rank_, modulus_);
    if (g.is_free() && g.subgroup_rank() >= 1) return g;
  }
}

std::pair<VoltageGraph, VoltageGraph> RandomSubgroupSource::next_pair() {
  while (true) {
    VoltageGraph a = next_free_subgroup();
    VoltageGraph b = next_free_subgroup();
    if (VoltageGraph::fiber_product(a, b).subgroup_rank() >= 1) {
      return {std::move(a), std::move(b)};
    }
  }
}

}  // namespace hn
