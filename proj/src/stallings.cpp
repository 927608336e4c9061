#include "hn/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace hn {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

CoreGraph CoreGraph::fold_from_generators(std::span<const Word> gens,
                                          int rank) {
  if (rank < 1) throw std::invalid_argument("ambient rank must be positive");
  for (const Word& g : gens) {
    if (g.rank() != rank) {
      throw std::invalid_argument("generator rank mismatch");
    }
  }
  // Bouquet of loops at the base, one path of fresh vertices per generator.
  std::vector<Edge> raw;
  int nv = 1;
  for (const Word& g : gens) {
    int cur = 0;
    const auto& ls = g.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int nxt = (i + 1 == ls.size()) ? 0 : nv++;
      int l = ls[i];
      if (l > 0) {
        raw.push_back({cur, nxt, l});
      } else {
        raw.push_back({nxt, cur, -l});
      }
      cur = nxt;
    }
  }

  // Fold: merge targets of equal-labelled edges sharing a source (and
  // sources sharing a target) until no conflict remains.
  UnionFind uf(nv);
  bool changed = true;
  while (changed) {
    changed = false;
    // Deduplicate under the current identification.
    std::map<std::tuple<int, int, int>, bool> seen;
    std::vector<Edge> dedup;
    for (const Edge& e : raw) {
      std::tuple<int, int, int> key{uf.find(e.source), uf.find(e.target),
                                    e.label};
      if (!seen.count(key)) {
        seen[key] = true;
        dedup.push_back({std::get<0>(key), std::get<1>(key), e.label});
      }
    }
    raw = std::move(dedup);
    std::map<std::pair<int, int>, int> out, in;
    for (const Edge& e : raw) {
      auto [oit, onew] = out.try_emplace({e.source, e.label}, e.target);
      if (!onew && oit->second != e.target) {
        changed |= uf.merge(oit->second, e.target);
        break;
      }
      auto [iit, inew] = in.try_emplace({e.target, e.label}, e.source);
      if (!inew && iit->second != e.source) {
        changed |= uf.merge(iit->second, e.source);
        break;
      }
    }
  }
  for (Edge& e : raw) {
    e.source = uf.find(e.source);
    e.target = uf.find(e.target);
  }
  return from_edge_list(rank, nv, uf.find(0), std::move(raw));
}

CoreGraph CoreGraph::from_out_transitions(
    int rank, const std::vector<std::vector<int>>& out) {
  if (rank < 1) throw std::invalid_argument("ambient rank must be positive");
  const int nv = static_cast<int>(out.size());
  if (nv == 0) throw std::invalid_argument("vertex set must be nonempty");
  std::vector<Edge> es;
  std::map<std::pair<int, int>, int> in;
  for (int v = 0; v < nv; ++v) {
    if (static_cast<int>(out[v].size()) != rank) {
      throw std::invalid_argument("transition row has wrong arity");
    }
    for (int i = 1; i <= rank; ++i) {
      int t = out[v][i - 1];
      if (t == -1) continue;
      if (t < 0 || t >= nv) throw std::invalid_argument("target out of range");
      if (!in.try_emplace({t, i}, v).second) {
        throw std::invalid_argument("not folded: duplicate incoming label");
      }
      es.push_back({v, t, i});
    }
  }
  // Connectivity and core checks.
  std::vector<int> degree(nv, 0);
  UnionFind uf(nv);
  for (const Edge& e : es) {
    degree[e.source]++;
    degree[e.target]++;
    uf.merge(e.source, e.target);
  }
  for (int v = 1; v < nv; ++v) {
    if (uf.find(v) != uf.find(0)) {
      throw std::invalid_argument("graph is not connected");
    }
    if (degree[v] < 2) throw std::invalid_argument("graph is not core");
  }
  return from_edge_list(rank, nv, 0, std::move(es));
}

CoreGraph CoreGraph::from_edge_list(int rank, int num_vertices, int base,
                                    std::vector<Edge> edges) {
  // Core-prune: drop non-base vertices of total degree <= 1 (loops count
  // twice). The base stays even when it hangs.
  std::vector<bool> removed(num_vertices, false);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<int> degree(num_vertices, 0);
    for (const Edge& e : edges) {
      degree[e.source]++;
      degree[e.target]++;
    }
    for (int v = 0; v < num_vertices; ++v) {
      if (v != base && !removed[v] && degree[v] <= 1) {
        removed[v] = true;
        pruned = true;
      }
    }
    if (pruned) {
      std::erase_if(edges, [&](const Edge& e) {
        return removed[e.source] || removed[e.target];
      });
    }
  }

  std::map<std::pair<int, int>, int> out, in;
  for (const Edge& e : edges) {
    out[{e.source, e.label}] = e.target;
    in[{e.target, e.label}] = e.source;
  }

  // Canonical renumbering: BFS from the base, transitions in
  // (generator, +/-) order.
  std::vector<int> newid(num_vertices, -1);
  std::vector<int> order;
  newid[base] = 0;
  order.push_back(base);
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        auto& table = dir == 0 ? out : in;
        auto it = table.find({v, i});
        if (it == table.end()) continue;
        int w = it->second;
        if (newid[w] == -1) {
          newid[w] = static_cast<int>(order.size());
          order.push_back(w);
          queue.push_back(w);
        }
      }
    }
  }

  CoreGraph g(rank);
  g.nv_ = static_cast<int>(order.size());
  g.out_.assign(static_cast<std::size_t>(g.nv_) * rank, -1);
  g.in_.assign(static_cast<std::size_t>(g.nv_) * rank, -1);
  for (const Edge& e : edges) {
    int u = newid[e.source], v = newid[e.target];
    g.out_[u * rank + e.label - 1] = v;
    g.in_[v * rank + e.label - 1] = u;
  }
  return g;
}

CoreGraph CoreGraph::fiber_product(const CoreGraph& a, const CoreGraph& b) {
  if (a.rank_ != b.rank_) {
    throw std::invalid_argument("rank mismatch in fiber product");
  }
  const int k = a.rank_;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> verts;
  auto intern = [&](int va, int vb) {
    auto [it, fresh] = id.try_emplace({va, vb}, static_cast<int>(verts.size()));
    if (fresh) verts.push_back({va, vb});
    return it->second;
  };
  std::vector<Edge> es;
  intern(0, 0);
  for (std::size_t head = 0; head < verts.size();) {
    auto [va, vb] = verts[head];
    int v = static_cast<int>(head++);
    for (int i = 1; i <= k; ++i) {
      int ta = a.out_target(va, i), tb = b.out_target(vb, i);
      if (ta != -1 && tb != -1) {
        es.push_back({v, intern(ta, tb), i});
      }
      int sa = a.in_source(va, i), sb = b.in_source(vb, i);
      if (sa != -1 && sb != -1) {
        intern(sa, sb);  // reachability only; the edge is added from its source
      }
    }
  }
  return from_edge_list(k, static_cast<int>(verts.size()), 0, std::move(es));
}

int CoreGraph::edge_count() const {
  int n = 0;
  for (int t : out_) {
    if (t != -1) ++n;
  }
  return n;
}

bool CoreGraph::contains(const Word& w) const {
  if (w.rank() != rank_) {
    throw std::invalid_argument("rank mismatch in membership test");
  }
  int v = 0;
  for (int l : w.letters()) {
    v = l > 0 ? out_target(v, l) : in_source(v, -l);
    if (v == -1) return false;
  }
  return v == 0;
}

int CoreGraph::subgroup_rank() const { return edge_count() - nv_ + 1; }

std::optional<int> CoreGraph::finite_index() const {
  for (int t : out_) {
    if (t == -1) return std::nullopt;
  }
  for (int s : in_) {
    if (s == -1) return std::nullopt;
  }
  return nv_;
}

std::vector<CoreGraph::Edge> CoreGraph::edges() const {
  std::vector<Edge> es;
  for (int v = 0; v < nv_; ++v) {
    for (int i = 1; i <= rank_; ++i) {
      int t = out_target(v, i);
      if (t != -1) es.push_back({v, t, i});
    }
  }
  return es;
}

std::vector<int> CoreGraph::spanning_tree_edges() const {
  // Edge ids indexed as in edges().
  std::vector<int> eid(static_cast<std::size_t>(nv_) * rank_, -1);
  int next = 0;
  for (int v = 0; v < nv_; ++v) {
    for (int i = 1; i <= rank_; ++i) {
      if (out_target(v, i) != -1) eid[v * rank_ + i - 1] = next++;
    }
  }
  std::vector<bool> visited(nv_, false);
  visited[0] = true;
  std::deque<int> queue{0};
  std::vector<int> tree;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank_; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        int w = dir == 0 ? out_target(v, i) : in_source(v, i);
        if (w == -1 || visited[w]) continue;
        visited[w] = true;
        int anchor = dir == 0 ? v : w;
        tree.push_back(eid[anchor * rank_ + i - 1]);
        queue.push_back(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

Word CoreGraph::path_from_base(int v) const {
  // Recompute the BFS tree with parent pointers.
  std::vector<int> parent(nv_, -1), letter(nv_, 0);
  std::vector<bool> visited(nv_, false);
  visited[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank_; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        int w = dir == 0 ? out_target(u, i) : in_source(u, i);
        if (w == -1 || visited[w]) continue;
        visited[w] = true;
        parent[w] = u;
        letter[w] = dir == 0 ? i : -i;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> ls;
  for (int u = v; u != 0; u = parent[u]) ls.push_back(letter[u]);
  std::reverse(ls.begin(), ls.end());
  return Word::reduce(ls, rank_);
}

std::vector<Word> CoreGraph::basis() const {
  auto es = edges();
  auto tree = spanning_tree_edges();
  std::vector<bool> in_tree(es.size(), false);
  for (int t : tree) in_tree[t] = true;
  std::vector<Word> result;
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (in_tree[e]) continue;
    Word w = path_from_base(es[e].source) *
             Word::letter(es[e].label, rank_) *
             path_from_base(es[e].target).inverse();
    result.push_back(std::move(w));
  }
  return result;
}

}  // namespace hn
