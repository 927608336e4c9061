#include "hn/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hn/dot.hpp"
#include "hn/graph_rank.hpp"
#include "hn/magnus.hpp"
#include "hn/parse.hpp"
#include "hn/random_subgroups.hpp"
#include "hn/stallings.hpp"
#include "hn/tree_action.hpp"
#include "hn/voltage.hpp"

namespace hn {
namespace {

using nlohmann::json;

struct BoundViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WordSyntax parse_syntax(const std::string& name) {
  if (name == "compact") return WordSyntax::compact;
  if (name == "indexed") return WordSyntax::indexed;
  throw ParseError("unknown syntax '" + name + "'");
}

// One subgroup given inline (-g) or as a JSON file.
struct SubgroupInput {
  std::string inline_gens;
  std::string file;
};

SubgroupSpec load_spec(const SubgroupInput& in, int rank, int modulus) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw ParseError("cannot open subgroup file " + in.file);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_subgroup_json(buf.str());
  }
  if (rank < 1) throw ParseError("ambient rank (-k) is required");
  return parse_inline_generators(in.inline_gens, rank, modulus);
}

VoltageGraph load_subgroup(const SubgroupInput& in, int rank, int modulus,
                           WordSyntax syntax) {
  SubgroupSpec spec = load_spec(in, rank, modulus);
  auto gens = resolve_generators(spec, syntax);
  int n = spec.modulus >= 2 ? spec.modulus : 1;
  return VoltageGraph::fold(gens, spec.ambient_rank, n);
}

FiniteGraph parse_finite_graph(int vertices, const std::string& edge_text) {
  FiniteGraph g;
  g.vertices = vertices;
  std::istringstream in(edge_text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw ParseError("edge '" + item + "' is not of the form u-v");
    }
    try {
      g.edges.push_back({std::stoi(item.substr(0, dash)),
                         std::stoi(item.substr(dash + 1))});
    } catch (const std::exception&) {
      throw ParseError("edge '" + item + "' is not of the form u-v");
    }
  }
  if (vertices < 1) throw ParseError("vertex count must be positive");
  for (const auto& e : g.edges) {
    if (e.source < 0 || e.source >= vertices || e.target < 0 ||
        e.target >= vertices) {
      throw ParseError("edge endpoint out of range");
    }
  }
  return g;
}

json bound_report_json(const BoundReport& rep) {
  return json{{"rankA", rep.rank_a},
              {"rankB", rep.rank_b},
              {"rankIntersection", rep.rank_intersection},
              {"lhs", rep.lhs},
              {"rhsTheorem1", rep.rhs_theorem},
              {"rhsZa14", rep.rhs_za14},
              {"rhsASS15", rep.rhs_ass15},
              {"equality", rep.equality},
              {"holds", rep.holds}};
}

void print_bound_report(std::ostream& out, const BoundReport& rep) {
  out << "rank(A)=" << rep.rank_a << " rank(B)=" << rep.rank_b
      << " rank(A∩B)=" << rep.rank_intersection << "\n";
  out << "lhs=" << rep.lhs << " rhsTheorem1=" << rep.rhs_theorem
      << " rhsZa14=" << rep.rhs_za14 << " rhsASS15=" << rep.rhs_ass15 << " "
      << (rep.holds ? (rep.equality ? "EQUALITY" : "HOLDS") : "VIOLATED")
      << "\n";
}

json with_schema(json doc) {
  doc["schemaVersion"] = 1;
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"rank and intersection calculator for subgroups of free "
               "groups and their finite cyclic extensions"};
  app.require_subcommand(1);

  std::string syntax_name = "compact";
  app.add_option("--syntax", syntax_name,
                 "word syntax: compact (letters x y z a..w, uppercase "
                 "inverse) or indexed (x1 X2 ...)")
      ->capture_default_str();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  int rank = 0, modulus = 0;
  SubgroupInput in_a, in_b;
  std::string word_u, word_v, member_word;
  int member_residue = 0;
  bool want_dot = false;

  int ext_k = 2, ext_l = 2, ext_n = 1;
  bool ext_verify = false;

  std::uint64_t seed = 0;
  int count = 100;
  bool random_mode = false;

  int vertices = 0;
  std::string edge_text;

  int radius = 3, depth = 2, copies = 1;

  auto add_subgroup = [&](CLI::App* cmd) {
    cmd->add_option("-g,--generators", in_a.inline_gens,
                    "comma-separated generators, each optionally :residue");
    cmd->add_option("--file", in_a.file, "subgroup JSON file");
    cmd->add_option("-k,--rank", rank, "ambient free rank");
    cmd->add_option("-n,--modulus", modulus,
                    "order of the cyclic factor (0 or 1: plain free group)");
  };
  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("-a,--subgroup-a", in_a.inline_gens, "generators of A");
    cmd->add_option("--file-a", in_a.file, "subgroup A JSON file");
    cmd->add_option("-b,--subgroup-b", in_b.inline_gens, "generators of B");
    cmd->add_option("--file-b", in_b.file, "subgroup B JSON file");
    cmd->add_option("-k,--rank", rank, "ambient free rank");
    cmd->add_option("-n,--modulus", modulus,
                    "order of the cyclic factor (0 or 1: plain free group)");
  };

  auto* cmd_rank = app.add_subcommand("rank", "rank of a subgroup");
  add_subgroup(cmd_rank);

  auto* cmd_index =
      app.add_subcommand("index", "index of a subgroup of the free group");
  add_subgroup(cmd_index);

  auto* cmd_member = app.add_subcommand("member", "membership test");
  add_subgroup(cmd_member);
  cmd_member->add_option("-w,--word", member_word, "word to test")->required();
  cmd_member->add_option("-c,--residue", member_residue,
                         "residue of the tested element");

  auto* cmd_intersect =
      app.add_subcommand("intersect", "intersection of two subgroups");
  add_pair(cmd_intersect);
  cmd_intersect->add_flag("--dot", want_dot, "emit the intersection graph");

  auto* cmd_verify =
      app.add_subcommand("verify", "check the intersection rank bound");
  add_pair(cmd_verify);
  cmd_verify->add_flag("--random", random_mode,
                       "verify seeded random subgroup pairs instead");
  cmd_verify->add_option("--seed", seed, "random seed")->capture_default_str();
  cmd_verify->add_option("--count", count, "number of random pairs")
      ->capture_default_str();

  auto* cmd_extremal = app.add_subcommand(
      "extremal", "the family attaining the bound with equality");
  cmd_extremal->add_option("-k", ext_k, "rank of A")->capture_default_str();
  cmd_extremal->add_option("-l", ext_l, "rank of B")->capture_default_str();
  cmd_extremal->add_option("-n", ext_n, "index |G:F|")->capture_default_str();
  cmd_extremal->add_flag("--verify", ext_verify, "also verify the bound");

  auto* cmd_rrank =
      app.add_subcommand("reduced-rank", "reduced rank of a multigraph");
  cmd_rrank->add_option("--vertices", vertices, "vertex count")->required();
  cmd_rrank->add_option("--edges", edge_text, "edges u-v, comma separated");

  auto* cmd_ess = app.add_subcommand("essential-set",
                                     "canonical maximal essential edge set");
  cmd_ess->add_option("--vertices", vertices, "vertex count")->required();
  cmd_ess->add_option("--edges", edge_text, "edges u-v, comma separated");
  cmd_ess->add_flag("--dot", want_dot, "emit the graph, removed edges dashed");

  auto* cmd_order =
      app.add_subcommand("order", "compare two words in the Magnus order");
  cmd_order->add_option("-u", word_u, "left word")->required();
  cmd_order->add_option("-v", word_v, "right word")->required();
  cmd_order->add_option("-k,--rank", rank, "ambient rank (default: inferred)");

  auto* cmd_ball = app.add_subcommand("ball", "ball of the Cayley tree");
  cmd_ball->add_option("-k,--rank", rank, "free rank")->required();
  cmd_ball->add_option("-R,--radius", radius, "radius")->capture_default_str();
  cmd_ball->add_option("--copies", copies, "induced forest copies")
      ->capture_default_str();
  cmd_ball->add_flag("--dot", want_dot, "emit the ball as DOT");

  auto* cmd_certify = app.add_subcommand(
      "certify", "finite-depth certification of order-essential edges");
  add_subgroup(cmd_certify);
  cmd_certify->add_option("-R,--radius", radius, "ball radius")
      ->capture_default_str();
  cmd_certify->add_option("--depth", depth, "certification depth")
      ->capture_default_str();
  cmd_certify->add_option("--copies", copies, "induced forest copies")
      ->capture_default_str();

  try {
    std::vector<const char*> argv;
    argv.push_back("hnrank");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    WordSyntax syntax = parse_syntax(syntax_name);
    json doc;

    if (cmd_rank->parsed()) {
      VoltageGraph g = load_subgroup(in_a, rank, modulus, syntax);
      if (!g.is_free()) {
        throw std::domain_error("subgroup is not free (nontrivial defect)");
      }
      doc["rank"] = g.subgroup_rank();
      if (!as_json) out << g.subgroup_rank() << "\n";
    } else if (cmd_index->parsed()) {
      VoltageGraph g = load_subgroup(in_a, rank, modulus, syntax);
      auto idx = g.underlying().finite_index();
      doc["index"] = idx ? json(*idx) : json("infinite");
      if (!as_json) {
        if (idx) {
          out << *idx << "\n";
        } else {
          out << "infinite\n";
        }
      }
    } else if (cmd_member->parsed()) {
      VoltageGraph g = load_subgroup(in_a, rank, modulus, syntax);
      Word w = parse_word(member_word, g.ambient_rank(), syntax);
      bool member = g.contains(w, member_residue);
      doc["member"] = member;
      if (!as_json) out << (member ? "true" : "false") << "\n";
    } else if (cmd_intersect->parsed()) {
      VoltageGraph a = load_subgroup(in_a, rank, modulus, syntax);
      VoltageGraph b = load_subgroup(in_b, rank, modulus, syntax);
      VoltageGraph inter = VoltageGraph::fiber_product(a, b);
      doc["rank"] = inter.subgroup_rank();
      doc["vertices"] = inter.underlying().vertex_count();
      doc["edges"] = inter.underlying().edge_count();
      json basis = json::array();
      for (const Word& w : inter.underlying().basis()) {
        basis.push_back(print_word(w, syntax));
      }
      doc["basis"] = basis;
      if (want_dot) {
        out << core_graph_dot(inter.underlying());
      } else if (!as_json) {
        out << "rank " << inter.subgroup_rank() << "\n";
        out << "vertices " << inter.underlying().vertex_count() << " edges "
            << inter.underlying().edge_count() << "\n";
        out << "basis";
        for (const auto& w : doc["basis"]) {
          out << " " << w.get<std::string>();
        }
        out << "\n";
      }
    } else if (cmd_verify->parsed()) {
      std::vector<BoundReport> reports;
      if (random_mode) {
        RandomSubgroupSource source(seed, rank < 1 ? 2 : rank,
                                    modulus < 2 ? 1 : modulus);
        for (int i = 0; i < count; ++i) {
          auto [a, b] = source.next_pair();
          reports.push_back(verify_bound(a, b));
        }
      } else {
        VoltageGraph a = load_subgroup(in_a, rank, modulus, syntax);
        VoltageGraph b = load_subgroup(in_b, rank, modulus, syntax);
        reports.push_back(verify_bound(a, b));
      }
      doc["reports"] = json::array();
      bool violated = false;
      for (const auto& rep : reports) {
        doc["reports"].push_back(bound_report_json(rep));
        if (!as_json) print_bound_report(out, rep);
        violated |= !rep.holds;
      }
      if (as_json) out << with_schema(doc).dump(2) << "\n";
      if (violated) {
        err << "bound violated\n";
        return 3;
      }
      return 0;
    } else if (cmd_extremal->parsed()) {
      auto [a, b] = VoltageGraph::extremal_family(ext_k, ext_l, ext_n);
      doc["rankA"] = a.subgroup_rank();
      doc["rankB"] = b.subgroup_rank();
      if (!as_json) {
        out << "rank(A)=" << a.subgroup_rank()
            << " rank(B)=" << b.subgroup_rank() << "\n";
      }
      if (ext_verify) {
        BoundReport rep = verify_bound(a, b);
        doc.update(bound_report_json(rep));
        if (!as_json) print_bound_report(out, rep);
        if (!rep.holds) {
          err << "bound violated\n";
          return 3;
        }
      }
    } else if (cmd_rrank->parsed()) {
      FiniteGraph g = parse_finite_graph(vertices, edge_text);
      doc["reducedRank"] = reduced_rank(g);
      if (!as_json) out << reduced_rank(g) << "\n";
    } else if (cmd_ess->parsed()) {
      FiniteGraph g = parse_finite_graph(vertices, edge_text);
      auto removed = max_essential_set(g);
      doc["removedEdges"] = removed;
      doc["reducedRank"] = reduced_rank(g);
      if (want_dot) {
        out << finite_graph_dot(g, removed);
      } else if (!as_json) {
        out << "edges";
        for (int e : removed) out << " " << e;
        out << "\n";
      }
    } else if (cmd_order->parsed()) {
      int k = rank;
      if (k < 1) {
        Word probe_u = parse_word(word_u, 26, syntax);
        Word probe_v = parse_word(word_v, 26, syntax);
        k = 1;
        for (int l : probe_u.letters()) k = std::max(k, std::abs(l));
        for (int l : probe_v.letters()) k = std::max(k, std::abs(l));
      }
      Word u = parse_word(word_u, k, syntax);
      Word v = parse_word(word_v, k, syntax);
      Ordering o = compare(u, v);
      const char* name = o == Ordering::less      ? "LESS"
                         : o == Ordering::greater ? "GREATER"
                                                  : "EQUAL";
      doc["comparison"] = name;
      if (!as_json) out << name << "\n";
    } else if (cmd_ball->parsed()) {
      ForestBall ball = ForestBall::build_ball(rank, radius);
      if (copies > 1) ball = ball.induce(copies);
      doc["verticesPerCopy"] = ball.vertices_per_copy();
      doc["edgesPerCopy"] = ball.edges_per_copy();
      doc["copies"] = ball.copies();
      if (want_dot) {
        out << forest_ball_dot(ball);
      } else if (!as_json) {
        out << "vertices " << ball.vertices_per_copy() << " edges "
            << ball.edges_per_copy() << " copies " << ball.copies() << "\n";
      }
    } else if (cmd_certify->parsed()) {
      SubgroupSpec spec = load_spec(in_a, rank, copies);
      auto gens = resolve_generators(spec, syntax);
      ForestBall ball =
          ForestBall::build_ball(spec.ambient_rank, radius).induce(copies);
      std::vector<GroupElement> elements;
      for (auto& [w, c] : gens) elements.push_back({w, c});
      Certification cert = certify_order_essential(ball, elements, depth);
      doc["certifiedEdges"] = cert.certified.size();
      doc["orbits"] = cert.representatives.size();
      doc["truncated"] = cert.truncated;
      if (!as_json) {
        out << "certified " << cert.certified.size() << " orbits "
            << cert.representatives.size() << " truncated "
            << (cert.truncated ? "true" : "false") << "\n";
      }
    }

    if (as_json) out << with_schema(doc).dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hn
