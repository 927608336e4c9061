#include <random>

#include "doctest.h"
#include "hn/parse.hpp"
#include "hn/tree_action.hpp"
#include "oracles.hpp"

using hn::EdgeRef;
using hn::ForestBall;
using hn::GroupElement;
using hn::VertexRef;
using hn::Word;

namespace {
Word W(const std::string& s, int rank = 2) {
  return hn::parse_word(s, rank, hn::WordSyntax::compact);
}
}  // namespace

TEST_CASE("ball sizes") {
  ForestBall b1 = ForestBall::build_ball(2, 1);
  CHECK(b1.vertices_per_copy() == 5);
  CHECK(b1.edges_per_copy() == 4);

  ForestBall b2 = ForestBall::build_ball(2, 2);
  CHECK(b2.vertices_per_copy() == 17);
  CHECK(b2.edges_per_copy() == 16);

  ForestBall c1 = ForestBall::build_ball(3, 1);
  CHECK(c1.vertices_per_copy() == 7);
  CHECK(c1.edges_per_copy() == 6);
}

TEST_CASE("vertex lookup and order rank") {
  ForestBall b = ForestBall::build_ball(2, 1);
  auto base = b.vertex_id(Word(2));
  REQUIRE(base.has_value());
  CHECK(b.vertex_word(*base).empty());
  CHECK(!b.vertex_id(W("xx")).has_value());

  // Ball of radius 1 in Magnus order: x^-1 < y^-1 < 1 < y < x.
  CHECK(b.order_rank(*b.vertex_id(W("X"))) == 0);
  CHECK(b.order_rank(*b.vertex_id(W("Y"))) == 1);
  CHECK(b.order_rank(*base) == 2);
  CHECK(b.order_rank(*b.vertex_id(W("y"))) == 3);
  CHECK(b.order_rank(*b.vertex_id(W("x"))) == 4);
}

TEST_CASE("edge order") {
  ForestBall b = ForestBall::build_ball(2, 2);
  int base = *b.vertex_id(Word(2));
  int vy = *b.vertex_id(W("Y"));
  EdgeRef e1{0, *b.edge_id(base, 1)};
  EdgeRef e2{0, *b.edge_id(base, 2)};
  EdgeRef f1{0, *b.edge_id(vy, 1)};

  // Same anchor: generator index decides.
  CHECK(b.edge_less(e1, e2) == true);
  CHECK(b.edge_less(e2, e1) == false);
  // Anchor y^-1 precedes the base in the Magnus order.
  CHECK(b.edge_less(f1, e1) == true);
  CHECK(b.edge_less(e1, e1) == false);

  ForestBall two = b.induce(2);
  CHECK(!two.edge_less(EdgeRef{0, e1.id}, EdgeRef{1, e1.id}).has_value());
  CHECK(two.edge_less(EdgeRef{1, e1.id}, EdgeRef{1, e2.id}) == true);
}

TEST_CASE("truncated action on a plain ball") {
  ForestBall b = ForestBall::build_ball(2, 2);
  VertexRef base{0, *b.vertex_id(Word(2))};
  auto img = b.act(GroupElement{W("xy"), 0}, base);
  REQUIRE(img.has_value());
  CHECK(b.vertex_word(img->id) == W("xy"));

  // Image of x.x falls outside radius 2 only when it does not reduce.
  VertexRef vx{0, *b.vertex_id(W("x"))};
  CHECK(b.act(GroupElement{W("xx"), 0}, vx) == std::nullopt);
  auto back = b.act(GroupElement{W("X"), 0}, vx);
  REQUIRE(back.has_value());
  CHECK(back->id == base.id);

  CHECK_THROWS_AS(b.act(GroupElement{W("x"), 1}, base), std::invalid_argument);
  CHECK_THROWS_AS(b.act(GroupElement{Word(3), 0}, base),
                  std::invalid_argument);
}

TEST_CASE("induced action rotates copies") {
  ForestBall two = ForestBall::build_ball(2, 2).induce(3);
  CHECK(two.copies() == 3);
  CHECK(two.action_modulus() == 3);
  VertexRef base{0, *two.vertex_id(Word(2))};
  auto img = two.act(GroupElement{W("x"), 1}, base);
  REQUIRE(img.has_value());
  CHECK(img->copy == 1);
  CHECK(two.vertex_word(img->id) == W("x"));

  auto wrap = two.act(GroupElement{Word(2), 2}, VertexRef{2, base.id});
  REQUIRE(wrap.has_value());
  CHECK(wrap->copy == 1);
  CHECK(wrap->id == base.id);
}

TEST_CASE("action preserves the edge order") {
  ForestBall b = ForestBall::build_ball(2, 3);
  std::mt19937_64 rng(67);
  auto edges = b.all_edges();
  for (int trial = 0; trial < 300; ++trial) {
    GroupElement g{hn::oracle::random_reduced_word(rng, 2, 3, true), 0};
    EdgeRef e = edges[rng() % edges.size()];
    EdgeRef f = edges[rng() % edges.size()];
    auto ge = b.act(g, e);
    auto gf = b.act(g, f);
    if (!ge || !gf) continue;
    CHECK(b.edge_less(e, f) == b.edge_less(*ge, *gf));
  }
}

TEST_CASE("the group acts freely on edges") {
  ForestBall b = ForestBall::build_ball(2, 3);
  std::mt19937_64 rng(71);
  auto edges = b.all_edges();
  for (int trial = 0; trial < 300; ++trial) {
    GroupElement g{hn::oracle::random_reduced_word(rng, 2, 4, true), 0};
    if (g.word.empty()) continue;
    EdgeRef e = edges[rng() % edges.size()];
    auto ge = b.act(g, e);
    if (ge) CHECK(*ge != e);
  }
}

TEST_CASE("invariant subforest of the x axis") {
  ForestBall b = ForestBall::build_ball(2, 3);
  std::vector<GroupElement> gens{{W("x"), 0}};
  std::vector<VertexRef> seeds{{0, *b.vertex_id(Word(2))}};
  hn::Subforest sub = invariant_subforest(b, gens, seeds);
  CHECK(sub.truncated);
  int kept = 0;
  for (int v = 0; v < b.vertices_per_copy(); ++v) {
    if (!sub.vertices[0][v]) continue;
    ++kept;
    const Word& w = b.vertex_word(v);
    for (int letter : w.letters()) CHECK(std::abs(letter) == 1);
  }
  CHECK(kept == 7);  // x^-3 .. x^3
  CHECK(sub.edges(b).size() == 6);

  CHECK_THROWS_AS(invariant_subforest(b, gens, std::vector<VertexRef>{}),
                  std::invalid_argument);
}

TEST_CASE("orbit counting") {
  ForestBall b = ForestBall::build_ball(2, 3);
  std::vector<GroupElement> gens{{W("x"), 0}, {W("y"), 0}};
  auto edges = b.all_edges();
  hn::OrbitCount all = count_orbits(b, gens, edges);
  CHECK(all.orbits == 2);  // one orbit per generator label
  CHECK(all.truncated);

  hn::OrbitCount none = count_orbits(b, gens, std::vector<EdgeRef>{});
  CHECK(none.orbits == 0);

  // A shift generator fuses corresponding edges across copies.
  ForestBall two = ForestBall::build_ball(2, 3).induce(2);
  std::vector<GroupElement> shift{{Word(2), 1}};
  int e = *two.edge_id(*two.vertex_id(Word(2)), 1);
  std::vector<EdgeRef> pair{{0, e}, {1, e}};
  CHECK(count_orbits(two, shift, pair).orbits == 1);
}

TEST_CASE("order-essential certificates") {
  ForestBall b = ForestBall::build_ball(2, 5);

  std::vector<GroupElement> axis{{W("x"), 0}};
  hn::Certification cx = certify_order_essential(b, axis, 2);
  CHECK(cx.certified.empty());
  CHECK(cx.representatives.empty());

  std::vector<GroupElement> free2{{W("x"), 0}, {W("y"), 0}};
  hn::Certification cf = certify_order_essential(b, free2, 2);
  CHECK(cf.representatives.size() == 1);
  CHECK(!cf.certified.empty());

  std::vector<GroupElement> index2{{W("xx"), 0}, {W("y"), 0}, {W("xyX"), 0}};
  hn::Certification ci = certify_order_essential(b, index2, 2);
  CHECK(ci.representatives.size() == 2);

  CHECK_THROWS_AS(certify_order_essential(b, free2, 0), std::invalid_argument);
  CHECK_THROWS_AS(certify_order_essential(b, free2, 6), std::invalid_argument);
}
