#include "hn/graph_rank.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hn {
namespace {

void validate(const FiniteGraph& g) {
  for (const auto& e : g.edges) {
    if (e.source < 0 || e.source >= g.vertices || e.target < 0 ||
        e.target >= g.vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

// component_of[v] = smallest vertex id in v's component.
std::vector<int> components(const FiniteGraph& g) {
  std::vector<int> parent(g.vertices);
  for (int v = 0; v < g.vertices; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges) {
    int a = find(e.source), b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> root(g.vertices);
  for (int v = 0; v < g.vertices; ++v) root[v] = find(v);
  return root;
}

}  // namespace

std::vector<int> component_euler_characteristics(const FiniteGraph& g) {
  validate(g);
  auto root = components(g);
  std::map<int, int> chi;  // root -> V - E, ordered by smallest vertex
  for (int v = 0; v < g.vertices; ++v) chi[root[v]] += 1;
  for (const auto& e : g.edges) chi[root[e.source]] -= 1;
  std::vector<int> out;
  out.reserve(chi.size());
  for (auto& [r, c] : chi) out.push_back(c);
  return out;
}

int reduced_rank(const FiniteGraph& g) {
  int r = 0;
  for (int chi : component_euler_characteristics(g)) {
    r += std::max(0, -chi);
  }
  return r;
}

std::vector<int> max_essential_set(const FiniteGraph& g) {
  validate(g);
  // BFS spanning forest, roots at the smallest vertex of each component,
  // neighbours scanned in ascending edge id order.
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertices);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[g.edges[e].source].push_back({g.edges[e].target, e});
    if (g.edges[e].source != g.edges[e].target) {
      adj[g.edges[e].target].push_back({g.edges[e].source, e});
    }
  }
  std::vector<bool> seen(g.vertices, false);
  std::vector<bool> tree(g.edges.size(), false);
  for (int r = 0; r < g.vertices; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [w, e] : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          tree[e] = true;
          queue.push_back(w);
        }
      }
    }
  }
  // Non-tree edges of a component are its independent cycles; keep the
  // lowest id in each component (leaving one circle), remove the rest.
  std::vector<int> result;
  auto root = components(g);
  std::map<int, std::vector<int>> nontree_by_component;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!tree[e]) nontree_by_component[root[g.edges[e].source]].push_back(e);
  }
  for (auto& [r, es] : nontree_by_component) {
    for (std::size_t i = 1; i < es.size(); ++i) result.push_back(es[i]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace hn
