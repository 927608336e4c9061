#ifndef HN_DOT_HPP_
#define HN_DOT_HPP_

#include <span>
#include <string>

#include "hn/graph_rank.hpp"
#include "hn/stallings.hpp"
#include "hn/tree_action.hpp"

namespace hn {

// DOT renderers. Output is byte-stable for identical inputs: fixed node
// numbering, edges in id order. Highlighted edges (removed / certified)
// are drawn dashed.

std::string core_graph_dot(const CoreGraph& g,
                           std::span<const int> highlighted_edges = {});

std::string finite_graph_dot(const FiniteGraph& g,
                             std::span<const int> highlighted_edges = {});

std::string forest_ball_dot(const ForestBall& ball,
                            std::span<const EdgeRef> highlighted_edges = {});

}  // namespace hn

#endif  // HN_DOT_HPP_
