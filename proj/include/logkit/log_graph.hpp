#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "logkit/error.hpp"

namespace logkit {

// One labeled oriented edge (source|label|target).  The label names a vertex;
// whether it may coincide with an endpoint is a checked property (compressed),
// not a construction constraint.
struct Edge {
  std::string source;
  std::string label;
  std::string target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "(a|b|c)"

// Immutable labeled oriented graph.  Vertices keep their given order; edges
// keep insertion order.  Names are opaque strings, so "0" and "a" are equally
// good vertices.
class LabeledOrientedGraph {
 public:
  LabeledOrientedGraph() = default;
  LabeledOrientedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  // Vertex set inferred from the edges in first-appearance order
  // (source, label, target per edge).  Label-only names become vertices too.
  static LabeledOrientedGraph from_edges(const std::vector<Edge>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_index(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return vertex_index(name) >= 0; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> index_;
};

enum class Shape { Interval, Tree, Forest, HasCycle };

std::string to_string(Shape s);

struct ValidationReport {
  bool compressed = true;
  std::vector<Edge> compression_violations;  // edges labeled by an endpoint
  bool injective = true;
  std::vector<std::string> repeated_labels;  // names used more than once as labels
  Shape shape = Shape::Forest;
  bool connected = false;
};

// Text format: one edge per line as `source | label | target`, `#` starts a
// comment line, blank lines ignored.
LabeledOrientedGraph parse_log(std::istream& in);
LabeledOrientedGraph parse_log(const std::string& text);

// Canonical serialization: one space around each `|`, edges in stored order.
// Vertices that appear in no edge have no representation in this format.
std::string serialize(const LabeledOrientedGraph& g);

ValidationReport validate(const LabeledOrientedGraph& g);

// Interval on vertices 0..n-1 where the edge from i to i+1 is labeled
// (i+3) mod n.
LabeledOrientedGraph cyclic_shift_family(int n);

// Order in which the tree collapses onto z: each removed edge has an endpoint
// that is a leaf (degree one) distinct from z at the time of removal.
std::vector<Edge> collapse_order(const LabeledOrientedGraph& tree, const std::string& z);

}  // namespace logkit
