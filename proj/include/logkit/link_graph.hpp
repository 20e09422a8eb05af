#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "logkit/log_graph.hpp"
#include "logkit/presentation.hpp"

namespace logkit {

// Forbidden edge combinations.  Edges are referred to by index into
// LabeledOrientedGraph::edges().  Orientation is ignored throughout.
struct PatternReport {
  // {e,f}: label of each lies among the endpoints of the other.  Pairs are
  // unordered and stored with the smaller index first.
  std::vector<std::array<int, 2>> fig1;
  // (e,f,h): label(e) in endpoints(f), label(f) in endpoints(h), label(h) in
  // endpoints(e).  Stored rotated so the smallest index comes first.
  std::vector<std::array<int, 3>> fig2;
  // (e,f): e and f share an endpoint and label(e) is an endpoint of f.
  // Ordered: the labeled edge first.
  std::vector<std::array<int, 2>> fig3;
};

// Requires a compressed graph; the predicates match the figure
// configurations only under that hypothesis.
PatternReport find_forbidden_patterns(const LabeledOrientedGraph& g);

// Vertex link of the presentation complex: two nodes per generator (start
// and terminal end), one arc per corner of each relator.  A multigraph;
// loops permitted.
struct LinkGraph {
  struct Arc {
    int u, v;     // node ids
    int relator;  // relator index
    int corner;   // corner position within the relator
  };
  int generator_count = 0;
  std::vector<Arc> arcs;

  int node_count() const { return 2 * generator_count; }
  static int start_node(int gen) { return 2 * gen; }
  static int terminal_node(int gen) { return 2 * gen + 1; }
};

std::string node_name(const LinkGraph& l, const Presentation& p, int node);

// Relators must be cyclically reduced.
LinkGraph build_link_graph(const Presentation& p);

// Length of the shortest cycle; a loop is a 1-cycle, a parallel pair a
// 2-cycle.  Empty optional when the graph is a forest.
std::optional<int> girth(const LinkGraph& l);

struct Verdict {
  bool npc = false;
  bool theorem2_applicable = false;
  struct Reason {
    std::string clause;
    std::string witness;
  };
  std::vector<Reason> reasons;  // one entry per failed hypothesis
};

Verdict verdict(const LabeledOrientedGraph& g);

nlohmann::json to_json(const Verdict& v);

}  // namespace logkit
