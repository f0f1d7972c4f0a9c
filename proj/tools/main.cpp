// Command-line front end: conflicts | subgraphs | count | enumerate | check.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "projtree/conflict.hpp"
#include "projtree/digraph.hpp"
#include "projtree/growth.hpp"
#include "projtree/laplacian.hpp"
#include "projtree/mis.hpp"
#include "projtree/oracle.hpp"

namespace {

using namespace projtree;

struct Options {
  std::string input = "-";
  std::string format = "arc-list";
  int root = 0;
  std::string strategy = "direct";
  std::size_t limit = 1000000;
  bool projective = false;
  bool dot = false;
  bool json = false;
  bool oracle = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Digraph load_graph(const Options& o) {
  const std::string text = read_input(o.input);
  return o.format == "matrix" ? parse_adjacency_matrix(text)
                              : parse_arc_list(text);
}

Strategy parse_strategy(const std::string& s) {
  return s == "via-subgraphs" ? Strategy::via_subgraphs : Strategy::direct;
}

std::string arc_list_line(const std::vector<Arc>& arcs) {
  std::string line;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) line += ", ";
    line += std::to_string(arcs[i].tail) + " " + std::to_string(arcs[i].head);
  }
  return line;
}

bool head_tail_less(Arc a, Arc b) {
  return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
}

// Trees as canonical (head, tail)-sorted arc lists, canonically ordered.
std::vector<std::vector<Arc>> collect_trees(const Digraph& g,
                                            const Options& o) {
  std::vector<std::vector<Arc>> trees;
  if (o.oracle) {
    for (const ArcSet& t : brute_force_projective_arborescences(g, o.root)) {
      std::vector<Arc> arcs = g.arcs_of(t);
      std::sort(arcs.begin(), arcs.end(), head_tail_less);
      trees.push_back(std::move(arcs));
    }
    std::sort(trees.begin(), trees.end(),
              [](const std::vector<Arc>& a, const std::vector<Arc>& b) {
                return std::lexicographical_compare(a.begin(), a.end(),
                                                    b.begin(), b.end(),
                                                    head_tail_less);
              });
    if (o.limit != 0 && trees.size() > o.limit)
      throw LimitExceeded("tree enumeration exceeded limit of " +
                          std::to_string(o.limit) + " trees");
  } else {
    for (const PreTree& t : enumerate_projective_arborescences(
             g, o.root, parse_strategy(o.strategy), o.limit))
      trees.push_back(t.canonical_arcs());
  }
  return trees;
}

int cmd_conflicts(const Options& o) {
  const Digraph g = load_graph(o);
  const ConflictGraph cg = build_conflict_graph(g);
  std::cout << "arcs " << cg.arc_count() << "\n";
  for (std::size_t i = 0; i < cg.arc_count(); ++i) {
    const Arc a = cg.arc_at(i);
    std::cout << (i + 1) << " " << a.tail << " " << a.head << "\n";
  }
  const auto pairs = cg.conflicting_pairs();
  std::cout << "conflicts " << pairs.size() << "\n";
  for (auto [i, j] : pairs) std::cout << (i + 1) << " " << (j + 1) << "\n";
  return 0;
}

int cmd_subgraphs(const Options& o) {
  const Digraph g = load_graph(o);
  std::vector<ArcSet> sets;
  if (o.oracle) {
    sets = brute_force_maximal_independent_sets(build_conflict_graph(g));
    if (o.limit != 0 && sets.size() > o.limit)
      throw LimitExceeded("maximal set enumeration exceeded limit of " +
                          std::to_string(o.limit) + " sets");
  } else {
    sets = enumerate_maximal_projective_subgraphs(g, o.limit);
  }
  for (const ArcSet& s : sets)
    std::cout << arc_list_line(g.arcs_of(s)) << "\n";
  return 0;
}

int cmd_count(const Options& o) {
  const Digraph g = load_graph(o);
  if (o.projective) {
    std::cout << collect_trees(g, o).size() << "\n";
  } else if (o.oracle) {
    std::cout << brute_force_arborescences(g, o.root).size() << "\n";
  } else {
    std::cout << count_arborescences(g, o.root).get_str() << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const Digraph g = load_graph(o);
  const auto trees = collect_trees(g, o);
  for (const std::vector<Arc>& arcs : trees) {
    if (o.dot) {
      std::cout << to_dot(g, arcs);
    } else if (o.json) {
      nlohmann::ordered_json j;
      j["root"] = o.root;
      auto& list = j["arcs"] = nlohmann::ordered_json::array();
      for (Arc a : arcs) list.push_back({a.tail, a.head});
      std::cout << j.dump() << "\n";
    } else {
      std::cout << arc_list_line(arcs) << "\n";
    }
  }
  return 0;
}

int cmd_check(const Options& o) {
  const Digraph g = load_graph(o);
  const bool exists = o.oracle ? !brute_force_arborescences(g, o.root).empty()
                               : has_arborescence(g, o.root);
  std::cout << (exists ? "yes" : "no") << "\n";
  return exists ? 0 : 1;
}

void add_input_options(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "input file, or \"-\" for stdin");
  sub->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"arc-list", "matrix"}))
      ->capture_default_str();
}

void add_root_option(CLI::App* sub, Options& o) {
  sub->add_option("--root", o.root, "root vertex (1-based)")->required();
}

void add_limit_option(CLI::App* sub, Options& o) {
  sub->add_option("--limit", o.limit,
                  "abort after this many results (0 = unlimited)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate projective spanning arborescences of a digraph"};
  app.require_subcommand(1);

  Options o;

  CLI::App* conflicts = app.add_subcommand(
      "conflicts", "print the ordered arc list and all crossing arc pairs");
  add_input_options(conflicts, o);

  CLI::App* subgraphs = app.add_subcommand(
      "subgraphs", "enumerate the maximal projective subgraphs");
  add_input_options(subgraphs, o);
  add_limit_option(subgraphs, o);
  subgraphs->add_flag("--oracle", o.oracle,
                      "use the exponential brute-force reference");

  CLI::App* count = app.add_subcommand(
      "count", "count spanning arborescences with the given root");
  add_input_options(count, o);
  add_root_option(count, o);
  add_limit_option(count, o);
  count->add_flag("--projective", o.projective,
                  "count projective spanning arborescences instead");
  count->add_option("--strategy", o.strategy, "projective enumeration strategy")
      ->check(CLI::IsMember({"direct", "via-subgraphs"}))
      ->capture_default_str();
  count->add_flag("--oracle", o.oracle,
                  "use the exponential brute-force reference");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all projective spanning arborescences");
  add_input_options(enumerate, o);
  add_root_option(enumerate, o);
  add_limit_option(enumerate, o);
  enumerate->add_option("--strategy", o.strategy, "enumeration strategy")
      ->check(CLI::IsMember({"direct", "via-subgraphs"}))
      ->capture_default_str();
  auto* dot_flag =
      enumerate->add_flag("--dot", o.dot, "emit one DOT graph per tree");
  enumerate->add_flag("--json", o.json, "emit one JSON object per tree")
      ->excludes(dot_flag);
  enumerate->add_flag("--oracle", o.oracle,
                      "use the exponential brute-force reference");

  CLI::App* check = app.add_subcommand(
      "check", "report whether any spanning arborescence exists");
  add_input_options(check, o);
  add_root_option(check, o);
  check->add_flag("--oracle", o.oracle,
                  "use the exponential brute-force reference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(conflicts)) return cmd_conflicts(o);
    if (app.got_subcommand(subgraphs)) return cmd_subgraphs(o);
    if (app.got_subcommand(count)) return cmd_count(o);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
    if (app.got_subcommand(check)) return cmd_check(o);
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "; output is incomplete\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
