#include "projtree/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

namespace projtree {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  return toks;
}

bool parse_int(const std::string& tok, int& out) {
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string arc_str(int tail, int head) {
  return std::to_string(tail) + " -> " + std::to_string(head);
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs, std::optional<int> root)
    : label_bound_(n), arcs_(std::move(arcs)), root_(root) {
  if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
  vertices_.resize(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) vertices_[static_cast<std::size_t>(v - 1)] = v;
  validate_and_index();
}

Digraph::Digraph(int label_bound, std::vector<int> vertices,
                 std::vector<Arc> arcs, std::optional<int> root)
    : label_bound_(label_bound),
      vertices_(std::move(vertices)),
      arcs_(std::move(arcs)),
      root_(root) {
  if (label_bound < 0) throw std::invalid_argument("Digraph: negative label bound");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("Digraph: duplicate vertex label");
  validate_and_index();
}

void Digraph::validate_and_index() {
  active_.assign(static_cast<std::size_t>(label_bound_) + 1, false);
  for (int v : vertices_) {
    if (v < 1 || v > label_bound_)
      throw std::invalid_argument("Digraph: vertex label " + std::to_string(v) +
                                  " outside 1.." + std::to_string(label_bound_));
    active_[static_cast<std::size_t>(v)] = true;
  }
  for (Arc a : arcs_) {
    if (!has_vertex(a.tail) || !has_vertex(a.head))
      throw std::invalid_argument("Digraph: arc " + arc_str(a.tail, a.head) +
                                  " has an endpoint that is not a vertex");
    if (a.tail == a.head)
      throw std::invalid_argument("Digraph: loop arc " + arc_str(a.tail, a.head));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw std::invalid_argument("Digraph: duplicate arc");
  if (root_ && !has_vertex(*root_))
    throw std::invalid_argument("Digraph: root " + std::to_string(*root_) +
                                " is not a vertex");
  out_.assign(static_cast<std::size_t>(label_bound_) + 1, {});
  in_degree_.assign(static_cast<std::size_t>(label_bound_) + 1, 0);
  for (Arc a : arcs_) {
    out_[static_cast<std::size_t>(a.tail)].push_back(a);
    ++in_degree_[static_cast<std::size_t>(a.head)];
  }
}

bool Digraph::has_arc(Arc a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

std::size_t Digraph::arc_index(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a)
    throw std::invalid_argument("Digraph: arc " + arc_str(a.tail, a.head) +
                                " is not present");
  return static_cast<std::size_t>(it - arcs_.begin());
}

std::span<const Arc> Digraph::out_arcs(int v) const {
  if (!has_vertex(v))
    throw std::out_of_range("Digraph: vertex " + std::to_string(v) +
                            " is not present");
  return out_[static_cast<std::size_t>(v)];
}

int Digraph::in_degree(int v) const {
  if (!has_vertex(v))
    throw std::out_of_range("Digraph: vertex " + std::to_string(v) +
                            " is not present");
  return in_degree_[static_cast<std::size_t>(v)];
}

ArcSet Digraph::arc_subset(const std::vector<Arc>& subset) const {
  ArcSet s(arcs_.size());
  for (Arc a : subset) s.set(arc_index(a));
  return s;
}

std::vector<Arc> Digraph::arcs_of(const ArcSet& subset) const {
  if (subset.universe_size() != arcs_.size())
    throw std::invalid_argument("Digraph: arc set universe mismatch");
  std::vector<Arc> out;
  out.reserve(subset.count());
  for (std::size_t i : subset.indices()) out.push_back(arcs_[i]);
  return out;
}

Digraph parse_arc_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::optional<int> root;
  std::vector<Arc> arcs;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks[0] != "n" || (toks.size() != 2 && toks.size() != 4))
        throw ParseError(line_no, "expected header \"n <count> [root <r>]\"");
      if (!parse_int(toks[1], n) || n < 0)
        throw ParseError(line_no, "invalid vertex count \"" + toks[1] + "\"");
      if (toks.size() == 4) {
        int r = 0;
        if (toks[2] != "root" || !parse_int(toks[3], r))
          throw ParseError(line_no, "expected header \"n <count> [root <r>]\"");
        if (r < 1 || r > n)
          throw ParseError(line_no, "root " + toks[3] + " out of range 1.." +
                                        std::to_string(n));
        root = r;
      }
      have_header = true;
      continue;
    }
    int tail = 0, head = 0;
    if (toks.size() != 2 || !parse_int(toks[0], tail) || !parse_int(toks[1], head))
      throw ParseError(line_no, "malformed arc line (expected \"<tail> <head>\")");
    for (int v : {tail, head})
      if (v < 1 || v > n)
        throw ParseError(line_no, "vertex index " + std::to_string(v) +
                                      " out of range 1.." + std::to_string(n));
    if (tail == head)
      throw ParseError(line_no, "loop arc " + arc_str(tail, head));
    if (!seen.insert({tail, head}).second)
      throw ParseError(line_no, "duplicate arc " + arc_str(tail, head));
    arcs.push_back(Arc{tail, head});
  }
  if (!have_header)
    throw ParseError(line_no > 0 ? line_no : 1, "missing header \"n <count>\"");
  return Digraph(n, std::move(arcs), root);
}

Digraph parse_adjacency_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::size_t n = 0;
  std::size_t row = 0;
  std::vector<Arc> arcs;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (n == 0) {
      n = toks.size();
    } else if (row >= n) {
      throw ParseError(line_no, "non-square matrix: more than " +
                                    std::to_string(n) + " rows");
    }
    if (toks.size() != n)
      throw ParseError(line_no, "non-square matrix: row " +
                                    std::to_string(row + 1) + " has " +
                                    std::to_string(toks.size()) +
                                    " entries, expected " + std::to_string(n));
    for (std::size_t col = 0; col < n; ++col) {
      int v = 0;
      if (!parse_int(toks[col], v) || (v != 0 && v != 1))
        throw ParseError(line_no, "entry \"" + toks[col] + "\" at row " +
                                      std::to_string(row + 1) + ", column " +
                                      std::to_string(col + 1) +
                                      " is not 0 or 1");
      if (v == 1) {
        if (col == row)
          throw ParseError(line_no, "nonzero diagonal at row " +
                                        std::to_string(row + 1));
        arcs.push_back(Arc{static_cast<int>(row + 1), static_cast<int>(col + 1)});
      }
    }
    ++row;
  }
  if (n == 0) throw ParseError(1, "empty matrix");
  if (row != n)
    throw ParseError(line_no > 0 ? line_no : 1,
                     "non-square matrix: " + std::to_string(row) + " rows of " +
                         std::to_string(n) + " columns");
  return Digraph(static_cast<int>(n), std::move(arcs));
}

std::string to_arc_list(const Digraph& g) {
  if (!g.contiguous())
    throw std::invalid_argument(
        "to_arc_list: arc-list format requires vertices 1..n");
  std::string out = "n " + std::to_string(g.label_bound());
  if (g.root()) out += " root " + std::to_string(*g.root());
  out += '\n';
  for (Arc a : g.arcs())
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& keep) {
  std::vector<bool> kept(static_cast<std::size_t>(g.label_bound()) + 1, false);
  std::vector<int> verts;
  for (int v : keep) {
    if (!g.has_vertex(v))
      throw std::out_of_range("induced_subgraph: " + std::to_string(v) +
                              " is not a vertex of the digraph");
    if (!kept[static_cast<std::size_t>(v)]) {
      kept[static_cast<std::size_t>(v)] = true;
      verts.push_back(v);
    }
  }
  std::vector<Arc> arcs;
  for (Arc a : g.arcs())
    if (kept[static_cast<std::size_t>(a.tail)] &&
        kept[static_cast<std::size_t>(a.head)])
      arcs.push_back(a);
  std::optional<int> root;
  if (g.root() && kept[static_cast<std::size_t>(*g.root())]) root = g.root();
  return Digraph(g.label_bound(), std::move(verts), std::move(arcs), root);
}

Digraph subgraph_with_arcs(const Digraph& g, const std::vector<Arc>& arcs) {
  for (Arc a : arcs)
    if (!g.has_arc(a))
      throw std::invalid_argument("subgraph_with_arcs: arc " +
                                  arc_str(a.tail, a.head) + " is not present");
  return Digraph(g.label_bound(), g.vertices(), arcs, g.root());
}

Digraph subgraph_with_arcs(const Digraph& g, const ArcSet& arcs) {
  return subgraph_with_arcs(g, g.arcs_of(arcs));
}

std::string to_dot(const Digraph& g, const std::vector<Arc>& highlight) {
  ArcSet marked = g.arc_subset(highlight);
  std::string out = "digraph G {\n  rankdir=LR;\n";
  for (int v : g.vertices()) out += "  " + std::to_string(v) + ";\n";
  const auto& arcs = g.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out += "  " + std::to_string(arcs[i].tail) + " -> " +
           std::to_string(arcs[i].head);
    if (marked.test(i)) out += " [color=red,penwidth=2]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_dot(const Digraph& g, const ArcSet& highlight) {
  return to_dot(g, g.arcs_of(highlight));
}

}  // namespace projtree
