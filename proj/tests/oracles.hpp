// Independent oracles used by the unit and acceptance suites. Everything
// here deliberately avoids the library's own algorithms: membership by
// breadth-first product enumeration, polynomial products by a naive
// convolution, random graphs by direct construction.

#ifndef HN_TESTS_ORACLES_HPP_
#define HN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hn/graph_rank.hpp"
#include "hn/magnus.hpp"
#include "hn/stallings.hpp"
#include "hn/word.hpp"

namespace hn::oracle {

// Subgroup elements of reduced length <= max_length, found by BFS over
// products of the generators and their inverses whose intermediate
// reduced lengths stay <= cap. The cap is grown until the answer set is
// stable twice in a row, so short elements reachable only through longer
// intermediate products are still found.
inline std::set<Word> subgroup_elements(const std::vector<Word>& gens,
                                        int max_length) {
  auto run = [&](int cap, std::size_t budget, bool& truncated) {
    std::set<Word> visited;
    std::vector<Word> queue;
    Word id(gens.empty() ? 1 : gens[0].rank());
    visited.insert(id);
    queue.push_back(id);
    std::vector<Word> steps;
    for (const Word& g : gens) {
      steps.push_back(g);
      steps.push_back(g.inverse());
    }
    std::size_t head = 0;
    for (; head < queue.size() && visited.size() < budget; ++head) {
      for (const Word& s : steps) {
        Word w = queue[head] * s;
        if (w.length() > static_cast<std::size_t>(cap)) continue;
        if (visited.insert(w).second) queue.push_back(w);
      }
    }
    truncated = head < queue.size();
    std::set<Word> result;
    for (const Word& w : visited) {
      if (w.length() <= static_cast<std::size_t>(max_length)) result.insert(w);
    }
    return result;
  };
  bool truncated = false;
  std::set<Word> prev = run(max_length, 1'500'000, truncated);
  int stable = 0;
  for (int cap = max_length + 2; cap <= max_length + 8; cap += 2) {
    std::set<Word> cur = run(cap, 1'500'000, truncated);
    // A budget-truncated run may have missed short elements; never let it
    // replace a complete earlier answer.
    if (truncated) break;
    if (cur == prev) {
      if (++stable == 2) break;
    } else {
      stable = 0;
      prev = std::move(cur);
    }
  }
  return prev;
}

// Same enumeration for subgroups of F_k x Z/n given as (word, residue)
// generators.
inline std::set<std::pair<Word, int>> extension_elements(
    const std::vector<std::pair<Word, int>>& gens, int modulus,
    int max_length) {
  auto run = [&](int cap, std::size_t budget, bool& truncated) {
    std::set<std::pair<Word, int>> visited;
    std::vector<std::pair<Word, int>> queue;
    std::pair<Word, int> id{Word(gens.empty() ? 1 : gens[0].first.rank()), 0};
    visited.insert(id);
    queue.push_back(id);
    std::vector<std::pair<Word, int>> steps;
    for (const auto& [g, c] : gens) {
      steps.push_back({g, c % modulus});
      steps.push_back({g.inverse(), (modulus - c % modulus) % modulus});
    }
    std::size_t head = 0;
    for (; head < queue.size() && visited.size() < budget; ++head) {
      for (const auto& [sw, sc] : steps) {
        std::pair<Word, int> next{queue[head].first * sw,
                                  (queue[head].second + sc) % modulus};
        if (next.first.length() > static_cast<std::size_t>(cap)) continue;
        if (visited.insert(next).second) queue.push_back(next);
      }
    }
    truncated = head < queue.size();
    std::set<std::pair<Word, int>> result;
    for (const auto& p : visited) {
      if (p.first.length() <= static_cast<std::size_t>(max_length)) {
        result.insert(p);
      }
    }
    return result;
  };
  bool truncated = false;
  auto prev = run(max_length, 1'500'000, truncated);
  int stable = 0;
  for (int cap = max_length + 2; cap <= max_length + 8; cap += 2) {
    auto cur = run(cap, 1'500'000, truncated);
    if (truncated) break;
    if (cur == prev) {
      if (++stable == 2) break;
    } else {
      stable = 0;
      prev = std::move(cur);
    }
  }
  return prev;
}

inline bool brute_member(const std::vector<Word>& gens, const Word& w) {
  auto members = subgroup_elements(gens, static_cast<int>(w.length()));
  return members.count(w) != 0;
}

// All reduced words of length <= max_length in F_rank, the empty word
// included.
inline std::vector<Word> all_reduced_words(int rank, int max_length) {
  std::vector<Word> out{Word(rank)};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int g = 1; g <= rank; ++g) {
        for (int sgn : {1, -1}) {
          const auto& ls = out[i].letters();
          if (!ls.empty() && ls.back() == -sgn * g) continue;
          std::vector<int> next(ls);
          next.push_back(sgn * g);
          out.push_back(Word::reduce(next, rank));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

// Naive truncated product of Magnus term maps, for checking the library's
// polynomial arithmetic against an independent route.
using TermMap = std::map<std::vector<int>, std::int64_t>;

inline TermMap naive_product(const TermMap& a, const TermMap& b, int degree) {
  TermMap r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (static_cast<int>(ma.size() + mb.size()) > degree) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r[m] += ca * cb;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline TermMap naive_expand(const Word& w, int degree) {
  TermMap p{{{}, 1}};
  for (int l : w.letters()) {
    TermMap f{{{}, 1}};
    if (l > 0) {
      f[{l}] = 1;
    } else {
      std::vector<int> m;
      std::int64_t c = 1;
      for (int d = 1; d <= degree; ++d) {
        m.push_back(-l);
        c = -c;
        f[m] = c;
      }
    }
    p = naive_product(p, f, degree);
  }
  return p;
}

inline TermMap terms_of(const MagnusPolynomial& p) {
  TermMap t;
  for (const auto& [m, c] : p.terms()) t[m] = c;
  return t;
}

inline Word random_reduced_word(std::mt19937_64& rng, int rank,
                                int max_length, bool allow_empty = false) {
  std::uniform_int_distribution<int> len_dist(allow_empty ? 0 : 1, max_length);
  std::uniform_int_distribution<int> gen_dist(1, rank);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  while (true) {
    int len = len_dist(rng);
    std::vector<int> ls;
    for (int i = 0; i < len; ++i) {
      ls.push_back(gen_dist(rng) * (sign_dist(rng) ? 1 : -1));
    }
    Word w = Word::reduce(ls, rank);
    if (allow_empty || !w.empty()) return w;
  }
}

// Random connected complete core graph over F_rank: one permutation of
// the vertex set per generator; resampled until connected.
inline CoreGraph random_complete_core_graph(std::mt19937_64& rng, int rank,
                                            int vertices) {
  while (true) {
    std::vector<std::vector<int>> out(vertices, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i) {
      std::vector<int> perm(vertices);
      for (int v = 0; v < vertices; ++v) perm[v] = v;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int v = 0; v < vertices; ++v) out[v][i] = perm[v];
    }
    // Connectivity check before handing to the validating constructor.
    std::vector<bool> seen(vertices, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int found = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int i = 0; i < rank; ++i) {
        for (int w : {out[v][i],
                      [&] {
                        for (int u = 0; u < vertices; ++u) {
                          if (out[u][i] == v) return u;
                        }
                        return -1;
                      }()}) {
          if (w >= 0 && !seen[w]) {
            seen[w] = true;
            ++found;
            stack.push_back(w);
          }
        }
      }
    }
    if (found == vertices) return CoreGraph::from_out_transitions(rank, out);
  }
}

inline FiniteGraph random_multigraph(std::mt19937_64& rng, int max_vertices,
                                     int max_edges) {
  std::uniform_int_distribution<int> v_dist(1, max_vertices);
  FiniteGraph g;
  g.vertices = v_dist(rng);
  std::uniform_int_distribution<int> e_dist(0, max_edges);
  std::uniform_int_distribution<int> vert(0, g.vertices - 1);
  int edges = e_dist(rng);
  for (int e = 0; e < edges; ++e) g.edges.push_back({vert(rng), vert(rng)});
  return g;
}

}  // namespace hn::oracle

#endif  // HN_TESTS_ORACLES_HPP_
