#include "hn/tree_action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hn/magnus.hpp"

namespace hn {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

std::vector<GroupElement> with_inverses(std::span<const GroupElement> gens) {
  std::vector<GroupElement> all(gens.begin(), gens.end());
  for (const GroupElement& g : gens) {
    all.push_back({g.word.inverse(), -g.shift});
  }
  return all;
}

}  // namespace

ForestBall ForestBall::build_ball(int rank, int radius) {
  if (rank < 1 || radius < 1) {
    throw std::invalid_argument("rank and radius must be positive");
  }
  ForestBall b;
  b.rank_ = rank;
  b.radius_ = radius;
  // Vertices by breadth-first sphere growth, letters in (+1,-1,+2,-2,...)
  // order for a deterministic numbering.
  b.words_.push_back(Word(rank));
  b.word_id_[b.words_[0]] = 0;
  std::size_t level_begin = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t level_end = b.words_.size();
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (int i = 1; i <= rank; ++i) {
        for (int sgn : {1, -1}) {
          Word w = b.words_[v] * Word::letter(sgn * i, rank);
          if (w.length() == static_cast<std::size_t>(r + 1) &&
          !b.word_id_.count(w)) {
            b.word_id_[w] = static_cast<int>(b.words_.size());
            b.words_.push_back(std::move(w));
          }
        }
      }
    }
    level_begin = level_end;
  }
  // Edges {g, g x_i}, both endpoints inside the ball.
  for (int v = 0; v < static_cast<int>(b.words_.size()); ++v) {
    for (int i = 1; i <= rank; ++i) {
      Word w = b.words_[v] * Word::letter(i, rank);
      auto it = b.word_id_.find(w);
      if (it == b.word_id_.end()) continue;
      b.edge_id_[static_cast<long long>(v) * rank + i - 1] =
          static_cast<int>(b.edges_.size());
      b.edges_.push_back({v, i, it->second});
    }
  }
  // Magnus order rank of each vertex word.
  std::vector<int> by_order(b.words_.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(), [&](int x, int y) {
    return compare(b.words_[x], b.words_[y]) == Ordering::less;
  });
  b.order_rank_.resize(b.words_.size());
  for (int pos = 0; pos < static_cast<int>(by_order.size()); ++pos) {
    b.order_rank_[by_order[pos]] = pos;
  }
  b.adjacency_.resize(b.words_.size());
  for (int e = 0; e < static_cast<int>(b.edges_.size()); ++e) {
    b.adjacency_[b.edges_[e].anchor].push_back({b.edges_[e].target, e});
    b.adjacency_[b.edges_[e].target].push_back({b.edges_[e].anchor, e});
  }
  return b;
}

ForestBall ForestBall::induce(int copies) const {
  if (copies_ != 1 || modulus_ != 0) {
    throw std::invalid_argument("induce expects a plain single-copy ball");
  }
  if (copies < 1) throw std::invalid_argument("copies must be positive");
  ForestBall b = *this;
  b.copies_ = copies;
  b.modulus_ = copies;
  return b;
}

std::optional<int> ForestBall::vertex_id(const Word& w) const {
  auto it = word_id_.find(w);
  if (it == word_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ForestBall::edge_id(int anchor, int gen) const {
  auto it = edge_id_.find(static_cast<long long>(anchor) * rank_ + gen - 1);
  if (it == edge_id_.end()) return std::nullopt;
  return it->second;
}

int ForestBall::normalized_shift(const GroupElement& g) const {
  if (g.word.rank() != rank_) {
    throw std::invalid_argument("group element rank mismatch");
  }
  if (modulus_ == 0) {
    if (g.shift != 0) {
      throw std::invalid_argument(
          "nonzero copy shift on a ball without finite extension");
    }
    return 0;
  }
  return ((g.shift % modulus_) + modulus_) % modulus_;
}

std::optional<VertexRef> ForestBall::act(const GroupElement& g,
                                         VertexRef v) const {
  int shift = normalized_shift(g);
  Word w = g.word * words_[v.id];
  auto id = vertex_id(w);
  if (!id) return std::nullopt;
  return VertexRef{(v.copy + shift) % copies_, *id};
}

std::optional<EdgeRef> ForestBall::act(const GroupElement& g,
                                       EdgeRef e) const {
  int shift = normalized_shift(g);
  Word w = g.word * words_[edges_[e.id].anchor];
  auto anchor = vertex_id(w);
  if (!anchor) return std::nullopt;
  auto id = edge_id(*anchor, edges_[e.id].gen);
  if (!id) return std::nullopt;
  return EdgeRef{(e.copy + shift) % copies_, *id};
}

std::optional<bool> ForestBall::edge_less(EdgeRef e, EdgeRef f) const {
  if (e.copy != f.copy) return std::nullopt;
  auto key = [&](EdgeRef x) {
    return std::pair{order_rank_[edges_[x.id].anchor], edges_[x.id].gen};
  };
  return key(e) < key(f);
}

std::vector<EdgeRef> ForestBall::all_edges() const {
  std::vector<EdgeRef> out;
  out.reserve(static_cast<std::size_t>(copies_) * edges_.size());
  for (int c = 0; c < copies_; ++c) {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      out.push_back({c, e});
    }
  }
  return out;
}

std::vector<EdgeRef> Subforest::edges(const ForestBall& ball) const {
  std::vector<EdgeRef> out;
  for (int c = 0; c < ball.copies(); ++c) {
    for (int e = 0; e < ball.edges_per_copy(); ++e) {
      if (vertices[c][ball.edge(e).anchor] && vertices[c][ball.edge(e).target]) {
        out.push_back({c, e});
      }
    }
  }
  return out;
}

Subforest invariant_subforest(const ForestBall& ball,
                              std::span<const GroupElement> generators,
                              std::span<const VertexRef> seeds) {
  if (seeds.empty()) throw std::invalid_argument("seed vertex set is empty");
  Subforest sub;
  sub.vertices.assign(ball.copies(),
                      std::vector<char>(ball.vertices_per_copy(), 0));
  for (VertexRef v : seeds) {
    if (v.copy < 0 || v.copy >= ball.copies() || v.id < 0 ||
        v.id >= ball.vertices_per_copy()) {
      throw std::invalid_argument("seed vertex outside the ball");
    }
    sub.vertices[v.copy][v.id] = 1;
  }
  auto all = with_inverses(generators);
  // Alternate joining (geodesics within each copy) and the truncated orbit
  // closure until stable. Geodesics between ball vertices stay in the
  // ball, so joining never truncates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < ball.copies(); ++c) {
      int hub = -1;
      for (int v = 0; v < ball.vertices_per_copy(); ++v) {
        if (!sub.vertices[c][v]) continue;
        if (hub == -1) {
          hub = v;
          continue;
        }
        // Walk the geodesic hub -> v, adding interior vertices.
        Word cur = ball.vertex_word(hub);
        Word rest = cur.inverse() * ball.vertex_word(v);
        for (int l : rest.letters()) {
          cur = cur * Word::letter(l, ball.rank());
          int id = *ball.vertex_id(cur);
          if (!sub.vertices[c][id]) {
            sub.vertices[c][id] = 1;
            changed = true;
          }
        }
      }
    }
    for (const GroupElement& g : all) {
      for (int c = 0; c < ball.copies(); ++c) {
        for (int v = 0; v < ball.vertices_per_copy(); ++v) {
          if (!sub.vertices[c][v]) continue;
          auto img = ball.act(g, VertexRef{c, v});
          if (!img) {
            sub.truncated = true;
          } else if (!sub.vertices[img->copy][img->id]) {
            sub.vertices[img->copy][img->id] = 1;
            changed = true;
          }
        }
      }
    }
  }
  return sub;
}

namespace {

// Union-find over all ball edges identifying generator images; the shared
// machinery behind orbit counting and certification.
struct EdgeOrbits {
  UnionFind uf;
  bool truncated = false;
  int epc;

  EdgeOrbits(const ForestBall& ball, std::span<const GroupElement> generators)
      : uf(ball.copies() * ball.edges_per_copy()),
        epc(ball.edges_per_copy()) {
    for (const GroupElement& g : with_inverses(generators)) {
      for (int c = 0; c < ball.copies(); ++c) {
        for (int e = 0; e < epc; ++e) {
          auto img = ball.act(g, EdgeRef{c, e});
          if (!img) {
            truncated = true;
          } else {
            uf.merge(c * epc + e, img->copy * epc + img->id);
          }
        }
      }
    }
  }
  int root(EdgeRef e) { return uf.find(e.copy * epc + e.id); }
};

}  // namespace

OrbitCount count_orbits(const ForestBall& ball,
                        std::span<const GroupElement> generators,
                        std::span<const EdgeRef> edge_set) {
  EdgeOrbits orbits(ball, generators);
  std::set<int> roots;
  for (EdgeRef e : edge_set) {
    if (e.copy < 0 || e.copy >= ball.copies() || e.id < 0 ||
        e.id >= ball.edges_per_copy()) {
      throw std::invalid_argument("edge outside the ball");
    }
    roots.insert(orbits.root(e));
  }
  return {static_cast<int>(roots.size()), orbits.truncated};
}

namespace {

// Non-backtracking path of `steps` edges from `from` (first step avoiding
// `banned`), inside the subforest copy, every edge <= the bound.
bool extendable(const ForestBall& ball, const std::vector<char>& mask,
                int from, int banned, int steps,
                std::pair<int, int> bound) {
  if (steps == 0) return true;
  for (auto [nb, e] : ball.neighbours(from)) {
    if (nb == banned || !mask[nb]) continue;
    std::pair<int, int> key{ball.order_rank(ball.edge(e).anchor),
                            ball.edge(e).gen};
    if (bound < key) continue;
    if (extendable(ball, mask, nb, from, steps - 1, bound)) return true;
  }
  return false;
}

}  // namespace

Certification certify_order_essential(const ForestBall& ball,
                                      std::span<const GroupElement> generators,
                                      int depth) {
  if (depth < 1 || depth > ball.radius()) {
    throw std::invalid_argument("depth must be in 1..radius");
  }
  std::vector<VertexRef> seeds;
  for (int c = 0; c < ball.copies(); ++c) seeds.push_back({c, 0});
  Subforest sub = invariant_subforest(ball, generators, seeds);

  Certification cert;
  cert.truncated = sub.truncated;
  for (EdgeRef e : sub.edges(ball)) {
    const auto& edge = ball.edge(e.id);
    std::pair<int, int> bound{ball.order_rank(edge.anchor), edge.gen};
    const auto& mask = sub.vertices[e.copy];
    if (extendable(ball, mask, edge.anchor, edge.target, depth, bound) &&
        extendable(ball, mask, edge.target, edge.anchor, depth, bound)) {
      cert.certified.push_back(e);
    }
  }
  EdgeOrbits orbits(ball, generators);
  cert.truncated |= orbits.truncated;
  std::map<int, EdgeRef> reps;
  for (EdgeRef e : cert.certified) {
    auto [it, fresh] = reps.try_emplace(orbits.root(e), e);
    if (!fresh && e < it->second) it->second = e;
  }
  for (auto& [root, e] : reps) cert.representatives.push_back(e);
  std::sort(cert.representatives.begin(), cert.representatives.end());
  return cert;
}

}  // namespace hn
