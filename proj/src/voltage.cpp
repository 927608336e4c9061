#include "hn/voltage.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hn {
namespace {

int mod(long long x, int n) {
  return static_cast<int>(((x % n) + n) % n);
}

// Signed trace of a word through a core graph: calls visit(edge_id, sign)
// per step. Returns false if the path leaves the graph or does not close
// at the base.
template <typename Visit>
bool trace(const CoreGraph& g, const Word& w, Visit visit) {
  // Edge ids as in g.edges(): (source, label) is unique since folded.
  std::map<std::pair<int, int>, int> eid;
  auto es = g.edges();
  for (int e = 0; e < static_cast<int>(es.size()); ++e) {
    eid[{es[e].source, es[e].label}] = e;
  }
  int v = 0;
  for (int l : w.letters()) {
    if (l > 0) {
      int t = g.out_target(v, l);
      if (t == -1) return false;
      visit(eid[{v, l}], +1);
      v = t;
    } else {
      int s = g.in_source(v, -l);
      if (s == -1) return false;
      visit(eid[{s, -l}], -1);
      v = s;
    }
  }
  return v == 0;
}

}  // namespace

VoltageGraph VoltageGraph::fold(
    std::span<const std::pair<Word, int>> generators, int rank, int modulus) {
  if (rank < 1) throw std::invalid_argument("ambient rank must be positive");
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<Word> words;
  for (const auto& [w, c] : generators) {
    if (w.rank() != rank) throw std::invalid_argument("generator rank mismatch");
    words.push_back(w);
  }

  VoltageGraph vg(rank, modulus);
  vg.graph_ = CoreGraph::fold_from_generators(words, rank);

  auto es = vg.graph_.edges();
  auto tree = vg.graph_.spanning_tree_edges();
  std::vector<int> basis_index(es.size(), -1);
  {
    std::vector<bool> in_tree(es.size(), false);
    for (int t : tree) in_tree[t] = true;
    int j = 0;
    for (std::size_t e = 0; e < es.size(); ++e) {
      if (!in_tree[e]) basis_index[e] = j++;
    }
  }
  const int r = vg.graph_.subgroup_rank();

  // Each generator w_i abelianises over the graph basis to a row m_i; its
  // residue c_i gives the augmented column. The defect is generated by the
  // residue combinations attached to relations (rows with zero word part),
  // and the voltages solve M beta = c modulo the defect.
  std::vector<std::vector<long long>> rows;
  for (const auto& [w, c] : generators) {
    std::vector<long long> row(r + 1, 0);
    bool ok = trace(vg.graph_, w, [&](int e, int sgn) {
      if (basis_index[e] != -1) row[basis_index[e]] += sgn;
    });
    if (!ok) throw std::logic_error("generator does not close in its own graph");
    row[r] = mod(c, modulus);
    rows.push_back(std::move(row));
  }

  // Integer row echelon by unimodular operations. The rows span Z^r (the
  // basis words are products of the generators), so every pivot ends up
  // being +-1.
  int pivot_row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < r && pivot_row < static_cast<int>(rows.size());
       ++col) {
    // Reduce the column below pivot_row to a single nonzero entry.
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][col] != 0 &&
            (best == -1 ||
             std::abs(rows[i][col]) < std::abs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == -1) break;
      std::swap(rows[pivot_row], rows[best]);
      bool cleared = true;
      for (int i = pivot_row + 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[pivot_row][col];
        for (int j = 0; j <= r; ++j) rows[i][j] -= q * rows[pivot_row][j];
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[pivot_row][col] != 0) {
      pivot_col.push_back(col);
      ++pivot_row;
    }
  }

  long long defect = modulus;
  for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i) {
    defect = std::gcd(defect, std::abs(rows[i][r]));
  }
  vg.defect_ = defect == 0 ? modulus : static_cast<int>(defect);

  // Back substitution mod n; tree edges carry voltage 0.
  std::vector<long long> beta(r, 0);
  for (int t = pivot_row - 1; t >= 0; --t) {
    int col = pivot_col[t];
    long long piv = rows[t][col];
    if (piv != 1 && piv != -1) {
      throw std::logic_error("non-unimodular pivot in voltage solve");
    }
    long long rhs = rows[t][r];
    for (int j = col + 1; j < r; ++j) rhs -= rows[t][j] * beta[j];
    beta[col] = mod(rhs * piv, modulus);
  }
  vg.voltages_.assign(es.size(), 0);
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (basis_index[e] != -1) {
      vg.voltages_[e] = static_cast<int>(beta[basis_index[e]]);
    }
  }
  return vg;
}

int VoltageGraph::word_voltage(const Word& w) const {
  long long sum = 0;
  bool ok = trace(graph_, w, [&](int e, int sgn) {
    sum += sgn * voltages_[e];
  });
  if (!ok) throw std::domain_error("word is not in the projection subgroup");
  return mod(sum, modulus_);
}

bool VoltageGraph::contains(const Word& w, int residue) const {
  long long sum = 0;
  bool ok = trace(graph_, w, [&](int e, int sgn) {
    sum += sgn * voltages_[e];
  });
  if (!ok) return false;
  return mod(residue - sum, modulus_) % defect_ == 0;
}

VoltageGraph VoltageGraph::fiber_product(const VoltageGraph& a,
                                         const VoltageGraph& b) {
  if (a.rank_ != b.rank_ || a.modulus_ != b.modulus_) {
    throw std::invalid_argument("ambient mismatch in voltage fiber product");
  }
  if (!a.is_free() || !b.is_free()) {
    throw std::domain_error("voltage fiber product requires free inputs");
  }
  const int k = a.rank_, n = a.modulus_;

  auto edge_voltage = [](const VoltageGraph& g) {
    std::map<std::pair<int, int>, int> m;  // (source, label) -> voltage
    auto es = g.graph_.edges();
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
      m[{es[e].source, es[e].label}] = g.voltages_[e];
    }
    return m;
  };
  auto va_volt = edge_voltage(a), vb_volt = edge_voltage(b);

  // Product over vertex pairs with a third coordinate tracking the
  // voltage difference; closed base paths are exactly the words on which
  // the two residue functions agree.
  struct Triple {
    int va, vb, t;
    auto operator<=>(const Triple&) const = default;
  };
  std::map<Triple, int> id;
  std::vector<Triple> verts;
  auto intern = [&](Triple x) {
    auto [it, fresh] = id.try_emplace(x, static_cast<int>(verts.size()));
    if (fresh) verts.push_back(x);
    return it->second;
  };
  // Spanning-tree BFS with path words; non-tree edges give a generating
  // set of the intersection, refolded below.
  std::vector<Word> path;
  intern({0, 0, 0});
  path.push_back(Word(k));
  // The product automaton is folded, so (source, label) identifies an
  // edge; tree_keys marks BFS discovery edges.
  std::set<std::pair<int, int>> tree_keys;
  std::vector<std::pair<Word, int>> gens;
  for (std::size_t head = 0; head < verts.size(); ++head) {
    Triple cur = verts[head];
    for (int i = 1; i <= k; ++i) {
      for (int dir : {+1, -1}) {
        Triple nxt;
        if (dir > 0) {
          int ta = a.graph_.out_target(cur.va, i);
          int tb = b.graph_.out_target(cur.vb, i);
          if (ta == -1 || tb == -1) continue;
          nxt = {ta, tb,
                 mod(cur.t + va_volt[{cur.va, i}] - vb_volt[{cur.vb, i}], n)};
        } else {
          int sa = a.graph_.in_source(cur.va, i);
          int sb = b.graph_.in_source(cur.vb, i);
          if (sa == -1 || sb == -1) continue;
          nxt = {sa, sb,
                 mod(cur.t - va_volt[{sa, i}] + vb_volt[{sb, i}], n)};
        }
        std::size_t before = verts.size();
        int nid = intern(nxt);
        Word step = path[head] * Word::letter(dir * i, k);
        if (verts.size() > before) {
          path.push_back(step);
          tree_keys.insert(dir > 0 ? std::pair{static_cast<int>(head), i}
                                   : std::pair{nid, i});
        } else if (dir > 0 && !tree_keys.count({static_cast<int>(head), i})) {
          // Non-tree edge: one intersection generator per independent loop.
          Word loop = step * path[nid].inverse();
          gens.push_back({loop, a.word_voltage(loop)});
        }
      }
    }
  }
  return fold(gens, k, n);
}

std::pair<VoltageGraph, VoltageGraph> VoltageGraph::extremal_family(int k,
                                                                    int l,
                                                                    int n) {
  if (k < 2 || l < 2 || n < 1) {
    throw std::invalid_argument("extremal family needs k, l >= 2 and n >= 1");
  }
  const int rank = 2;
  auto power = [&](int letter, int e) {
    std::vector<int> ls(e, letter);
    return Word::reduce(ls, rank);
  };
  auto conj = [&](int outer, int e, int inner) {
    std::vector<int> ls;
    for (int i = 0; i < e; ++i) ls.push_back(outer);
    ls.push_back(inner);
    for (int i = 0; i < e; ++i) ls.push_back(-outer);
    return Word::reduce(ls, rank);
  };
  std::vector<std::pair<Word, int>> agens{{power(1, k - 1), 0}};
  for (int i = 0; i <= k - 2; ++i) agens.push_back({conj(1, i, 2), 0});
  std::vector<std::pair<Word, int>> bgens{{power(2, l - 1), 1}};
  for (int j = 0; j <= l - 2; ++j) bgens.push_back({conj(2, j, 1), 0});
  return {fold(agens, rank, n), fold(bgens, rank, n)};
}

BoundReport verify_bound(const VoltageGraph& a, const VoltageGraph& b) {
  if (!a.is_free() || !b.is_free()) {
    throw std::domain_error("bound verification requires free subgroups");
  }
  if (a.subgroup_rank() < 1 || b.subgroup_rank() < 1) {
    throw std::domain_error("bound verification requires nontrivial subgroups");
  }
  VoltageGraph inter = VoltageGraph::fiber_product(a, b);
  BoundReport rep;
  rep.rank_a = a.subgroup_rank();
  rep.rank_b = b.subgroup_rank();
  rep.rank_intersection = inter.subgroup_rank();
  const std::int64_t n = a.modulus();
  const std::int64_t ra = rep.rank_a - 1, rb = rep.rank_b - 1;
  rep.lhs = std::max(0, rep.rank_intersection - 1);
  rep.rhs_theorem = n * ra * rb;
  rep.rhs_za14 = 6 * rep.rhs_theorem;
  rep.rhs_ass15 = n * n * ra * rb + n - 1;
  rep.equality = rep.lhs == rep.rhs_theorem;
  rep.holds = rep.lhs <= rep.rhs_theorem;
  return rep;
}

}  // namespace hn
