#ifndef HN_GRAPH_RANK_HPP_
#define HN_GRAPH_RANK_HPP_

#include <vector>

namespace hn {

// Finite directed multigraph; loops and parallel edges allowed.
// Edge ids are positions in `edges`, assigned in input order.
struct FiniteGraph {
  struct Edge {
    int source;
    int target;
  };
  int vertices = 0;
  std::vector<Edge> edges;
};

// One Euler characteristic |V(K)| - |E(K)| per connected component
// (connectivity ignores direction), components ordered by their smallest
// vertex id. Throws std::invalid_argument on dangling endpoints.
std::vector<int> component_euler_characteristics(const FiniteGraph& g);

// Sum over components of max(0, -chi).
int reduced_rank(const FiniteGraph& g);

// A canonical maximal essential edge set: removing it drops the reduced
// rank to zero and its size equals reduced_rank(g). Per component, the
// non-tree edges of a BFS spanning tree (rooted at the smallest vertex)
// minus the lowest-id one. Returned ids ascending.
std::vector<int> max_essential_set(const FiniteGraph& g);

}  // namespace hn

#endif  // HN_GRAPH_RANK_HPP_
