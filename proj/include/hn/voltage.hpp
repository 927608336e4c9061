#ifndef HN_VOLTAGE_HPP_
#define HN_VOLTAGE_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hn/stallings.hpp"
#include "hn/word.hpp"

namespace hn {

// Finitely generated subgroup of F_k x Z/n as a core graph whose edges
// carry residues mod n. A closed base path spells the word w and sums the
// residue beta(w); the subgroup is { (w, beta(w) + defect) }. The defect
// is the intersection with {1} x Z/n, a cyclic subgroup stored by its
// generator d (a divisor of n; d == n means trivial, so the subgroup is
// free).
class VoltageGraph {
 public:
  // Folds <(w_i, c_i)>. Residues are reduced mod n; n >= 1.
  static VoltageGraph fold(std::span<const std::pair<Word, int>> generators,
                           int rank, int modulus);

  // Intersection of two free subgroups of the same F_k x Z/n. Throws
  // std::domain_error on non-free input, std::invalid_argument on ambient
  // mismatch.
  static VoltageGraph fiber_product(const VoltageGraph& a,
                                    const VoltageGraph& b);

  // The family on which the rank bound is attained exactly:
  //   A = < x^(k-1), x^i y x^-i (0 <= i <= k-2) >, all residues 0,
  //   B = < (y^(l-1), 1), (y^j x y^-j, 0) (0 <= j <= l-2) >
  // inside F_2 x Z/n. Requires k, l >= 2, n >= 1.
  static std::pair<VoltageGraph, VoltageGraph> extremal_family(int k, int l,
                                                               int n);

  int ambient_rank() const { return rank_; }
  int modulus() const { return modulus_; }
  const CoreGraph& underlying() const { return graph_; }
  // Residue per edge, aligned with underlying().edges().
  const std::vector<int>& voltages() const { return voltages_; }

  // Generator of the defect subgroup of Z/n; equals n when trivial.
  int defect_generator() const { return defect_; }
  bool is_free() const { return defect_ == modulus_; }

  // Free rank of the subgroup when free; rank of the projection otherwise.
  int subgroup_rank() const { return graph_.subgroup_rank(); }

  // Accumulated residue of a word labelling a closed base path. Throws
  // std::domain_error if w is not in the projection subgroup.
  int word_voltage(const Word& w) const;

  // (w, residue) in the subgroup: w closes at the base and the residue
  // differs from the path voltage by a defect element.
  bool contains(const Word& w, int residue) const;

 private:
  VoltageGraph(int rank, int modulus)
      : rank_(rank), modulus_(modulus), defect_(modulus),
        graph_(CoreGraph::fold_from_generators({}, rank)) {}

  int rank_;
  int modulus_;
  int defect_;
  CoreGraph graph_;
  std::vector<int> voltages_;
};

// Instantiation of the rank inequality for a pair of free subgroups of
// F_k x Z/n, with the two previously known bounds for comparison.
struct BoundReport {
  int rank_a = 0;
  int rank_b = 0;
  int rank_intersection = 0;
  std::int64_t lhs = 0;            // max(0, rank(A cap B) - 1)
  std::int64_t rhs_theorem = 0;    // n (rank A - 1)(rank B - 1)
  std::int64_t rhs_za14 = 0;       // 6 n (rank A - 1)(rank B - 1)
  std::int64_t rhs_ass15 = 0;      // n^2 (rank A - 1)(rank B - 1) + n - 1
  bool equality = false;
  bool holds = false;
};

// Computes the intersection rank and evaluates the bounds. Throws
// std::domain_error unless both inputs are free and nontrivial.
BoundReport verify_bound(const VoltageGraph& a, const VoltageGraph& b);

}  // namespace hn

#endif  // HN_VOLTAGE_HPP_
