#ifndef HN_STALLINGS_HPP_
#define HN_STALLINGS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hn/word.hpp"

namespace hn {

// Stallings core graph of a finitely generated subgroup of a free group:
// a folded, connected, base-pointed graph with generator-labelled edges.
// Instances are kept in a canonical form (vertices numbered by a BFS from
// the base visiting transitions in (generator, +/-) order), so two graphs
// compare equal iff they are isomorphic as based labelled graphs. The base
// vertex is always 0.
class CoreGraph {
 public:
  struct Edge {
    int source;
    int target;
    int label;  // generator index, 1..rank
    bool operator==(const Edge&) const = default;
  };

  // Folds the bouquet of loops spelled by `gens` at a common base. The
  // result represents <gens>; it does not depend on the order of the
  // generators. Empty input yields the one-vertex graph.
  static CoreGraph fold_from_generators(std::span<const Word> gens, int rank);

  // Builds a graph from explicit transition tables: out[v][i-1] is the
  // target of the x_i-edge leaving v, or -1 if absent. Base is vertex 0.
  // Throws std::invalid_argument if the data is not folded, connected and
  // core. Used for constructing covering graphs directly.
  static CoreGraph from_out_transitions(int rank,
                                        const std::vector<std::vector<int>>& out);

  // Pullback of the two graphs over the rose; its based component, cored.
  // Represents the intersection of the two subgroups.
  static CoreGraph fiber_product(const CoreGraph& a, const CoreGraph& b);

  int ambient_rank() const { return rank_; }
  int vertex_count() const { return nv_; }
  int edge_count() const;

  // true iff w labels a closed path at the base.
  bool contains(const Word& w) const;

  // Free rank of the represented subgroup: |E| - |V| + 1.
  int subgroup_rank() const;

  // |F : H| when the graph is a complete covering of the rose, nullopt
  // (infinite index) otherwise.
  std::optional<int> finite_index() const;

  // Deterministic edge list: vertices in order, labels ascending.
  std::vector<Edge> edges() const;

  // Ids (into edges()) of the BFS spanning tree from the base, transitions
  // visited in (generator, +/-) order.
  std::vector<int> spanning_tree_edges() const;

  // Free basis of the subgroup: one word per non-tree edge,
  // path(base -> source) * x_label * path(target -> base).
  std::vector<Word> basis() const;

  // Label of the word read along the tree path base -> v.
  Word path_from_base(int v) const;

  int out_target(int v, int label) const { return out_[v * rank_ + label - 1]; }
  int in_source(int v, int label) const { return in_[v * rank_ + label - 1]; }

  bool operator==(const CoreGraph&) const = default;

 private:
  CoreGraph(int rank) : rank_(rank), nv_(1), out_(rank, -1), in_(rank, -1) {}

  // Prunes hanging trees (keeping the base), renumbers canonically.
  static CoreGraph from_edge_list(int rank, int num_vertices, int base,
                                  std::vector<Edge> edges);

  int rank_;
  int nv_;
  std::vector<int> out_;  // nv_ x rank_, -1 = absent
  std::vector<int> in_;
};

}  // namespace hn

#endif  // HN_STALLINGS_HPP_
