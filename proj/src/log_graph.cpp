#include "logkit/log_graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace logkit {

std::string to_string(const Edge& e) {
  return "(" + e.source + "|" + e.label + "|" + e.target + ")";
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Interval: return "interval";
    case Shape::Tree: return "tree";
    case Shape::Forest: return "forest";
    case Shape::HasCycle: return "has-cycle";
  }
  return "?";
}

LabeledOrientedGraph::LabeledOrientedGraph(std::vector<std::string> vertices,
                                           std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], static_cast<int>(i)).second)
      fail(Errc::duplicate_vertex, "duplicate vertex name: " + vertices_[i]);
  }
  std::set<std::array<std::string, 3>> seen;
  for (const Edge& e : edges_) {
    for (const std::string* name : {&e.source, &e.label, &e.target})
      if (!index_.count(*name))
        fail(Errc::unknown_vertex, "edge " + to_string(e) + " uses unknown vertex " + *name);
    if (!seen.insert({e.source, e.label, e.target}).second)
      fail(Errc::duplicate_edge, "duplicate edge " + to_string(e));
  }
}

LabeledOrientedGraph LabeledOrientedGraph::from_edges(const std::vector<Edge>& edges) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> seen;
  for (const Edge& e : edges)
    for (const std::string* name : {&e.source, &e.label, &e.target})
      if (seen.emplace(*name, 1).second) vertices.push_back(*name);
  return LabeledOrientedGraph(std::move(vertices), edges);
}

int LabeledOrientedGraph::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool valid_token(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (c == '|' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

LabeledOrientedGraph parse_log(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
      size_t bar = t.find('|', pos);
      if (bar == std::string::npos) {
        parts.push_back(trim(t.substr(pos)));
        break;
      }
      parts.push_back(trim(t.substr(pos, bar - pos)));
      pos = bar + 1;
    }
    if (parts.size() != 3 || !valid_token(parts[0]) || !valid_token(parts[1]) ||
        !valid_token(parts[2]))
      fail(Errc::malformed_line,
           "line " + std::to_string(lineno) + ": expected `source | label | target`, got: " + t);
    edges.push_back(Edge{parts[0], parts[1], parts[2]});
  }
  if (edges.empty()) fail(Errc::empty_input, "no edges in input");
  return LabeledOrientedGraph::from_edges(edges);
}

LabeledOrientedGraph parse_log(const std::string& text) {
  std::istringstream in(text);
  return parse_log(in);
}

std::string serialize(const LabeledOrientedGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += e.source;
    out += " | ";
    out += e.label;
    out += " | ";
    out += e.target;
    out += "\n";
  }
  return out;
}

ValidationReport validate(const LabeledOrientedGraph& g) {
  ValidationReport r;
  for (const Edge& e : g.edges())
    if (e.label == e.source || e.label == e.target) r.compression_violations.push_back(e);
  r.compressed = r.compression_violations.empty();

  std::unordered_map<std::string, int> label_uses;
  for (const Edge& e : g.edges()) ++label_uses[e.label];
  for (const std::string& v : g.vertices())
    if (auto it = label_uses.find(v); it != label_uses.end() && it->second > 1)
      r.repeated_labels.push_back(v);
  r.injective = r.repeated_labels.empty();

  // Shape of the underlying undirected multigraph, labels ignored.
  const size_t n = g.vertices().size();
  std::vector<int> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  size_t components = n;
  bool cycle = false;
  std::vector<int> degree(n, 0);
  for (const Edge& e : g.edges()) {
    int a = g.vertex_index(e.source), b = g.vertex_index(e.target);
    ++degree[a];
    ++degree[b];
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      cycle = true;  // covers self-loops and parallel edges too
    } else {
      parent[ra] = rb;
      --components;
    }
  }
  r.connected = (components == 1);
  if (cycle) {
    r.shape = Shape::HasCycle;
  } else if (!r.connected) {
    r.shape = Shape::Forest;
  } else {
    bool path = std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
    r.shape = path ? Shape::Interval : Shape::Tree;
  }
  return r;
}

LabeledOrientedGraph cyclic_shift_family(int n) {
  if (n < 2) fail(Errc::invalid_parameter, "cyclic shift family needs n >= 2");
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back(Edge{std::to_string(i), std::to_string((i + 3) % n), std::to_string(i + 1)});
  return LabeledOrientedGraph(std::move(vertices), std::move(edges));
}

std::vector<Edge> collapse_order(const LabeledOrientedGraph& tree, const std::string& z) {
  ValidationReport v = validate(tree);
  if (v.shape != Shape::Tree && v.shape != Shape::Interval)
    fail(Errc::not_a_tree, "collapse order requires a tree, got " + to_string(v.shape));
  if (!tree.has_vertex(z)) fail(Errc::unknown_vertex, "unknown vertex " + z);

  std::vector<Edge> remaining = tree.edges();
  std::vector<Edge> order;
  while (!remaining.empty()) {
    std::unordered_map<std::string, int> degree;
    for (const Edge& e : remaining) {
      ++degree[e.source];
      ++degree[e.target];
    }
    bool removed = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
      const Edge& e = remaining[i];
      if ((degree[e.source] == 1 && e.source != z) || (degree[e.target] == 1 && e.target != z)) {
        order.push_back(e);
        remaining.erase(remaining.begin() + static_cast<long>(i));
        removed = true;
        break;
      }
    }
    if (!removed) fail(Errc::not_a_tree, "no removable leaf edge; graph is not a tree");
  }
  return order;
}

}  // namespace logkit
