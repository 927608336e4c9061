#include "hn/dot.hpp"

#include <set>
#include <sstream>

#include "hn/parse.hpp"

namespace hn {
namespace {

std::string gen_label(int index, int rank) {
  if (rank <= 26) return print_word(Word::letter(index, rank), WordSyntax::compact);
  return print_word(Word::letter(index, rank), WordSyntax::indexed);
}

}  // namespace

std::string core_graph_dot(const CoreGraph& g,
                           std::span<const int> highlighted_edges) {
  std::set<int> hl(highlighted_edges.begin(), highlighted_edges.end());
  std::ostringstream out;
  out << "digraph core {\n";
  out << "  0 [shape=doublecircle];\n";
  for (int v = 1; v < g.vertex_count(); ++v) {
    out << "  " << v << " [shape=circle];\n";
  }
  auto es = g.edges();
  for (int e = 0; e < static_cast<int>(es.size()); ++e) {
    out << "  " << es[e].source << " -> " << es[e].target << " [label=\""
        << gen_label(es[e].label, g.ambient_rank()) << "\"";
    if (hl.count(e)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string finite_graph_dot(const FiniteGraph& g,
                             std::span<const int> highlighted_edges) {
  std::set<int> hl(highlighted_edges.begin(), highlighted_edges.end());
  std::ostringstream out;
  out << "digraph graph_rank {\n";
  for (int v = 0; v < g.vertices; ++v) {
    out << "  " << v << ";\n";
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    out << "  " << g.edges[e].source << " -> " << g.edges[e].target
        << " [label=\"e" << e << "\"";
    if (hl.count(e)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string forest_ball_dot(const ForestBall& ball,
                            std::span<const EdgeRef> highlighted_edges) {
  std::set<EdgeRef> hl(highlighted_edges.begin(), highlighted_edges.end());
  const bool compact = ball.rank() <= 26;
  std::ostringstream out;
  out << "digraph ball {\n";
  for (int c = 0; c < ball.copies(); ++c) {
    for (int v = 0; v < ball.vertices_per_copy(); ++v) {
      const Word& w = ball.vertex_word(v);
      std::string label = w.empty()
          ? "1"
          : print_word(w, compact ? WordSyntax::compact : WordSyntax::indexed);
      out << "  \"" << c << ":" << v << "\" [label=\"" << label << "\"";
      if (v == 0) out << ", shape=doublecircle";
      out << "];\n";
    }
    for (int e = 0; e < ball.edges_per_copy(); ++e) {
      const auto& edge = ball.edge(e);
      out << "  \"" << c << ":" << edge.anchor << "\" -> \"" << c << ":"
          << edge.target << "\" [label=\""
          << gen_label(edge.gen, ball.rank()) << "\"";
      if (hl.count({c, e})) out << ", style=dashed";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hn
