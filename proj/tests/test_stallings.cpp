#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hn/parse.hpp"
#include "hn/stallings.hpp"
#include "oracles.hpp"

using hn::CoreGraph;
using hn::Word;

namespace {

Word W(const std::string& s, int rank = 2) {
  return hn::parse_word(s, rank, hn::WordSyntax::compact);
}

CoreGraph graph_of(const std::vector<std::string>& gens, int rank = 2) {
  std::vector<Word> ws;
  for (const auto& g : gens) ws.push_back(W(g, rank));
  return CoreGraph::fold_from_generators(ws, rank);
}

}  // namespace

TEST_CASE("folding basic shapes") {
  CoreGraph bouquet = graph_of({"x", "y"});
  CHECK(bouquet.vertex_count() == 1);
  CHECK(bouquet.edge_count() == 2);
  CHECK(bouquet.subgroup_rank() == 2);

  // Index-2 subgroup of F_2: complete two-sheeted cover.
  CoreGraph a = graph_of({"xx", "y", "xyX"});
  CHECK(a.vertex_count() == 2);
  CHECK(a.edge_count() == 4);
  CHECK(a.subgroup_rank() == 3);
  CHECK(a.finite_index() == 2);

  // A single commutator: one loop of length 4.
  CoreGraph c = graph_of({"xyXY"});
  CHECK(c.subgroup_rank() == 1);
  CHECK(c.vertex_count() == 4);
  CHECK(c.edge_count() == 4);

  CoreGraph trivial = graph_of({});
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edge_count() == 0);
  CHECK(trivial.subgroup_rank() == 0);
}

TEST_CASE("membership") {
  CoreGraph g = graph_of({"xx", "y"});
  CHECK(g.contains(W("xx")));
  CHECK(!g.contains(W("x")));
  CHECK(g.contains(Word(2)));
  CHECK(g.contains(W("xxyXX")));
  CHECK_THROWS_AS(g.contains(Word(3)), std::invalid_argument);
}

TEST_CASE("index") {
  CHECK(graph_of({"xx", "y", "xyX"}).finite_index() == 2);
  CHECK(!graph_of({"x"}).finite_index().has_value());
  CHECK(graph_of({"x", "y"}).finite_index() == 1);
}

TEST_CASE("fiber product examples") {
  CoreGraph a = graph_of({"xx", "y"});
  CoreGraph b = graph_of({"x", "yy"});
  CoreGraph p = CoreGraph::fiber_product(a, b);
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 4);
  CHECK(p.subgroup_rank() == 2);
  CHECK(p.contains(W("xx")));
  CHECK(p.contains(W("yy")));
  CHECK(!p.contains(W("x")));
  CHECK(!p.contains(W("y")));

  CHECK(CoreGraph::fiber_product(a, a) == a);

  CoreGraph q = CoreGraph::fiber_product(graph_of({"x"}), graph_of({"y"}));
  CHECK(q.subgroup_rank() == 0);
  CHECK(q.vertex_count() == 1);
}

TEST_CASE("fiber product vs enumeration to length 8") {
  // <xx, y> cap <x, yy> = <xx, yy>: every short intersection element is
  // generated by the fiber product's basis.
  CoreGraph a = graph_of({"xx", "y"});
  CoreGraph b = graph_of({"x", "yy"});
  CoreGraph p = CoreGraph::fiber_product(a, b);
  auto in_a = hn::oracle::subgroup_elements({W("xx"), W("y")}, 8);
  auto in_b = hn::oracle::subgroup_elements({W("x"), W("yy")}, 8);
  auto in_p = hn::oracle::subgroup_elements(p.basis(), 8);
  for (const Word& w : hn::oracle::all_reduced_words(2, 8)) {
    bool inter = in_a.count(w) && in_b.count(w);
    CHECK(inter == (in_p.count(w) != 0));
    CHECK(inter == p.contains(w));
  }
}

TEST_CASE("basis") {
  auto basis = graph_of({"x", "y"}).basis();
  REQUIRE(basis.size() == 2);
  CHECK(std::count(basis.begin(), basis.end(), W("x")) == 1);
  CHECK(std::count(basis.begin(), basis.end(), W("y")) == 1);

  CoreGraph g = graph_of({"xx", "y"});
  auto gb = g.basis();
  REQUIRE(static_cast<int>(gb.size()) == g.subgroup_rank());
  for (const Word& w : gb) CHECK(g.contains(w));

  CHECK(graph_of({}).basis().empty());
}

TEST_CASE("folding confluence under generator permutation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> gens;
    int count = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      gens.push_back(hn::oracle::random_reduced_word(rng, 2, 6));
    }
    CoreGraph g = CoreGraph::fold_from_generators(gens, 2);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(CoreGraph::fold_from_generators(gens, 2) == g);
  }
}

TEST_CASE("membership agrees with brute-force search") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Word> gens;
    for (int i = 0; i < 2; ++i) {
      gens.push_back(hn::oracle::random_reduced_word(rng, 2, 4));
    }
    CoreGraph g = CoreGraph::fold_from_generators(gens, 2);
    auto members = hn::oracle::subgroup_elements(gens, 6);
    for (const Word& w : hn::oracle::all_reduced_words(2, 6)) {
      CHECK(g.contains(w) == (members.count(w) != 0));
    }
  }
}

TEST_CASE("Schreier identity on random covers") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 2);
    int vertices = 1 + static_cast<int>(rng() % 6);
    CoreGraph g = hn::oracle::random_complete_core_graph(rng, rank, vertices);
    REQUIRE(g.finite_index() == vertices);
    CHECK(g.subgroup_rank() - 1 == vertices * (rank - 1));
  }
}

TEST_CASE("Hanna Neumann base case on random pairs") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> ga, gb;
    for (int i = 0; i < 2; ++i) {
      ga.push_back(hn::oracle::random_reduced_word(rng, rank, 5));
      gb.push_back(hn::oracle::random_reduced_word(rng, rank, 5));
    }
    CoreGraph a = CoreGraph::fold_from_generators(ga, rank);
    CoreGraph b = CoreGraph::fold_from_generators(gb, rank);
    if (a.subgroup_rank() < 1 || b.subgroup_rank() < 1) continue;
    CoreGraph p = CoreGraph::fiber_product(a, b);
    CHECK(std::max(0, p.subgroup_rank() - 1) <=
          (a.subgroup_rank() - 1) * (b.subgroup_rank() - 1));
  }
}

TEST_CASE("basis regenerates the graph") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      gens.push_back(hn::oracle::random_reduced_word(rng, 2, 6));
    }
    CoreGraph g = CoreGraph::fold_from_generators(gens, 2);
    CHECK(CoreGraph::fold_from_generators(g.basis(), 2) == g);
  }
}
