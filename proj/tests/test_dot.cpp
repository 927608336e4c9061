#include <vector>

#include "doctest.h"
#include "hn/dot.hpp"
#include "hn/parse.hpp"

using hn::Word;

TEST_CASE("core graph dot") {
  std::vector<Word> gens{hn::parse_word("xx", 2, hn::WordSyntax::compact),
                         hn::parse_word("y", 2, hn::WordSyntax::compact)};
  hn::CoreGraph g = hn::CoreGraph::fold_from_generators(gens, 2);
  std::string dot = hn::core_graph_dot(g);
  CHECK(dot == hn::core_graph_dot(g));
  CHECK(dot.rfind("digraph core {", 0) == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"x\"") != std::string::npos);
  CHECK(dot.find("label=\"y\"") != std::string::npos);
  CHECK(dot.find("style=dashed") == std::string::npos);
}

TEST_CASE("finite graph dot highlights removed edges") {
  hn::FiniteGraph g{1, {{0, 0}, {0, 0}}};
  std::vector<int> removed{1};
  std::string dot = hn::finite_graph_dot(g, removed);
  CHECK(dot.find("label=\"e0\"]") != std::string::npos);
  CHECK(dot.find("label=\"e1\", style=dashed]") != std::string::npos);
}

TEST_CASE("forest ball dot") {
  hn::ForestBall ball = hn::ForestBall::build_ball(2, 1);
  std::string dot = hn::forest_ball_dot(ball);
  CHECK(dot == hn::forest_ball_dot(ball));
  CHECK(dot.find("label=\"1\", shape=doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"X\"") != std::string::npos);

  hn::ForestBall two = ball.induce(2);
  std::string dot2 = hn::forest_ball_dot(two);
  CHECK(dot2.find("\"1:0\"") != std::string::npos);
}
