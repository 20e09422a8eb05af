#include "logkit/search.hpp"

#include <algorithm>

#include "logkit/link_graph.hpp"
#include "logkit/presentation.hpp"

namespace logkit {

namespace {

constexpr int kMaxSweepVertices = 7;  // 7^6 * 2^6 labelings; beyond that, refuse

// Instance on k vertices: labels[i] and orient[i] describe the edge between
// path vertices i and i+1; orient 0 points i -> i+1.
struct Instance {
  int k;
  std::vector<int> labels;
  std::vector<int> orient;
};

std::vector<int> encode(const Instance& in) {
  std::vector<int> code = in.labels;
  code.insert(code.end(), in.orient.begin(), in.orient.end());
  return code;
}

Instance reversed(const Instance& in) {
  Instance out{in.k, in.labels, in.orient};
  const int m = in.k - 1;
  for (int j = 0; j < m; ++j) {
    out.labels[static_cast<size_t>(j)] = in.k - 1 - in.labels[static_cast<size_t>(m - 1 - j)];
    out.orient[static_cast<size_t>(j)] = 1 - in.orient[static_cast<size_t>(m - 1 - j)];
  }
  return out;
}

LabeledOrientedGraph realize(const Instance& in) {
  std::vector<std::string> vertices;
  for (int i = 0; i < in.k; ++i) vertices.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < in.k; ++i) {
    std::string a = std::to_string(i), b = std::to_string(i + 1);
    std::string l = std::to_string(in.labels[static_cast<size_t>(i)]);
    if (in.orient[static_cast<size_t>(i)] == 0)
      edges.push_back(Edge{a, l, b});
    else
      edges.push_back(Edge{b, l, a});
  }
  return LabeledOrientedGraph(std::move(vertices), std::move(edges));
}

}  // namespace

SearchResult search_small_lois(int max_vertices) {
  if (max_vertices < 2) fail(Errc::invalid_parameter, "need at least 2 vertices");
  if (max_vertices > kMaxSweepVertices)
    fail(Errc::invalid_parameter,
         "sweep bound " + std::to_string(max_vertices) + " exceeds the ceiling of " +
             std::to_string(kMaxSweepVertices));

  SearchResult result;
  for (int k = 2; k <= max_vertices; ++k) {
    SearchRow row;
    row.vertices = k;
    const int m = k - 1;
    Instance in{k, std::vector<int>(static_cast<size_t>(m), 0),
                std::vector<int>(static_cast<size_t>(m), 0)};
    while (true) {
      if (encode(in) <= encode(reversed(in))) {
        ++row.canonical;
        bool compressed = true, injective = true;
        std::vector<char> used(static_cast<size_t>(k), 0);
        for (int i = 0; i < m; ++i) {
          int l = in.labels[static_cast<size_t>(i)];
          if (l == i || l == i + 1) compressed = false;
          if (used[static_cast<size_t>(l)]) injective = false;
          used[static_cast<size_t>(l)] = 1;
        }
        if (compressed && injective) {
          ++row.compressed_injective;
          LabeledOrientedGraph g = realize(in);
          Verdict v = verdict(g);
          if (v.npc) ++row.npc;
          if (v.theorem2_applicable) ++row.theorem2;
          auto gr = girth(build_link_graph(log_presentation(g)));
          bool oracle_npc = !gr.has_value() || *gr >= 4;
          ++row.oracle_checked;
          if (oracle_npc != v.npc) ++row.oracle_disagreements;
        }
      }
      // mixed-radix increment: labels in base k, then orientation bits
      int pos = 0;
      for (; pos < m; ++pos) {
        if (++in.labels[static_cast<size_t>(pos)] < k) break;
        in.labels[static_cast<size_t>(pos)] = 0;
      }
      if (pos < m) continue;
      for (pos = 0; pos < m; ++pos) {
        if (++in.orient[static_cast<size_t>(pos)] < 2) break;
        in.orient[static_cast<size_t>(pos)] = 0;
      }
      if (pos >= m) break;
    }
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace logkit
