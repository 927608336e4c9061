#ifndef HN_TREE_ACTION_HPP_
#define HN_TREE_ACTION_HPP_

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hn/word.hpp"

namespace hn {

// Element of F x Z/n acting on an induced forest: the word acts on tree
// vertices by left multiplication, the shift rotates the copy index.
// On a single-copy ball the shift must be 0.
struct GroupElement {
  Word word;
  int shift = 0;
};

struct VertexRef {
  int copy = 0;
  int id = 0;
  bool operator==(const VertexRef&) const = default;
  auto operator<=>(const VertexRef&) const = default;
};

struct EdgeRef {
  int copy = 0;
  int id = 0;
  bool operator==(const EdgeRef&) const = default;
  auto operator<=>(const EdgeRef&) const = default;
};

// Radius-R ball of the Cayley tree of F_k, possibly replicated into n
// ordered copies carrying the induced F x Z/n action. Vertices are reduced
// words of length <= R; the edge with id e joins anchor(e) and
// anchor(e) * x_gen(e). The edge order within a copy is
//   g.e_i < h.e_j  iff  g < h in the Magnus order, or g = h and i < j;
// edges in different copies are incomparable. All actions are truncated
// to the ball: images that leave it are reported as absent.
class ForestBall {
 public:
  struct Edge {
    int anchor;  // vertex id of g
    int gen;     // generator index i, edge {g, g x_i}
    int target;  // vertex id of g x_i
  };

  static ForestBall build_ball(int rank, int radius);

  // n-copy forest with the F x Z/n action; requires a single-copy ball.
  ForestBall induce(int copies) const;

  int rank() const { return rank_; }
  int radius() const { return radius_; }
  int copies() const { return copies_; }
  // 0 on a plain single-copy ball (no finite extension), n after induce(n).
  int action_modulus() const { return modulus_; }

  int vertices_per_copy() const { return static_cast<int>(words_.size()); }
  int edges_per_copy() const { return static_cast<int>(edges_.size()); }

  const Word& vertex_word(int id) const { return words_[id]; }
  std::optional<int> vertex_id(const Word& w) const;
  const Edge& edge(int id) const { return edges_[id]; }
  std::optional<int> edge_id(int anchor, int gen) const;
  // Position of the vertex in the Magnus order over the ball.
  int order_rank(int id) const { return order_rank_[id]; }

  // Neighbours of a vertex within one copy: (neighbour id, edge id).
  const std::vector<std::pair<int, int>>& neighbours(int id) const {
    return adjacency_[id];
  }

  // Truncated action; nullopt when the image leaves the ball. Throws
  // std::invalid_argument on rank mismatch or a nonzero shift on a plain
  // ball.
  std::optional<VertexRef> act(const GroupElement& g, VertexRef v) const;
  std::optional<EdgeRef> act(const GroupElement& g, EdgeRef e) const;

  // nullopt = incomparable (different copies); otherwise whether e < f.
  std::optional<bool> edge_less(EdgeRef e, EdgeRef f) const;

  std::vector<EdgeRef> all_edges() const;

 private:
  ForestBall() : rank_(0), radius_(0) {}
  int normalized_shift(const GroupElement& g) const;

  int rank_;
  int radius_;
  int copies_ = 1;
  int modulus_ = 0;
  std::vector<Word> words_;
  std::unordered_map<Word, int, WordHash> word_id_;
  std::vector<Edge> edges_;
  std::unordered_map<long long, int> edge_id_;  // anchor * rank + (gen-1)
  std::vector<int> order_rank_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Subforest of a ball, one vertex mask per copy. `truncated` records that
// some shift of an included vertex left the ball and was dropped.
struct Subforest {
  std::vector<std::vector<char>> vertices;  // [copy][vertex id]
  bool truncated = false;

  bool contains(VertexRef v) const {
    return vertices[v.copy][v.id] != 0;
  }
  std::vector<EdgeRef> edges(const ForestBall& ball) const;
};

// Smallest subforest containing the seed vertices, connected within each
// copy and closed under the (truncated) action of the generated subgroup.
// Throws std::invalid_argument if seeds is empty.
Subforest invariant_subforest(const ForestBall& ball,
                              std::span<const GroupElement> generators,
                              std::span<const VertexRef> seeds);

struct OrbitCount {
  int orbits = 0;
  // Some generator image of a ball edge fell outside the ball, so orbits
  // are identifications by generator products that stay inside it.
  bool truncated = false;
};

// Orbits of the edge set under the generated subgroup, computed inside the
// ball: edges are identified when a product of generators maps one to the
// other with every intermediate image still in the ball.
OrbitCount count_orbits(const ForestBall& ball,
                        std::span<const GroupElement> generators,
                        std::span<const EdgeRef> edge_set);

struct Certification {
  std::vector<EdgeRef> certified;        // every certified edge
  std::vector<EdgeRef> representatives;  // smallest edge per orbit
  bool truncated = false;
};

// Finite-depth certificate for order-essential edges: an edge e is
// certified if, inside the invariant subforest spanned by the base vertex
// of each copy, a simple path runs through e with `depth` edges strictly
// on each side, all of them <= e. A certificate witnesses a finite piece
// of a bi-infinite path; it is not a decision procedure. Throws
// std::invalid_argument if depth < 1 or depth > radius.
Certification certify_order_essential(const ForestBall& ball,
                                      std::span<const GroupElement> generators,
                                      int depth);

}  // namespace hn

#endif  // HN_TREE_ACTION_HPP_
