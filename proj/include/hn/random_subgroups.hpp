#ifndef HN_RANDOM_SUBGROUPS_HPP_
#define HN_RANDOM_SUBGROUPS_HPP_

#include <cstdint>
#include <random>
#include <utility>

#include "hn/voltage.hpp"
#include "hn/word.hpp"

namespace hn {

// Seeded, reproducible source of random subgroups for the bound
// verification harness: 2..4 generators, nonempty reduced words of length
// <= 6, residues uniform mod n. Draws that are non-free, trivial, or have
// intersection rank 0 are discarded (those satisfy the bound vacuously).
class RandomSubgroupSource {
 public:
  RandomSubgroupSource(std::uint64_t seed, int rank, int modulus)
      : rng_(seed), rank_(rank), modulus_(modulus < 2 ? 1 : modulus) {}

  Word random_word(int max_length);

  // Free subgroup of rank >= 1.
  VoltageGraph next_free_subgroup();

  // Pair with intersection of rank >= 1.
  std::pair<VoltageGraph, VoltageGraph> next_pair();

 private:
  std::mt19937_64 rng_;
  int rank_;
  int modulus_;
};

}  // namespace hn

#endif  // HN_RANDOM_SUBGROUPS_HPP_
