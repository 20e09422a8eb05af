#include "logkit/link_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace logkit {

namespace {

bool is_endpoint(const Edge& e, const std::string& v) { return e.source == v || e.target == v; }

bool share_endpoint(const Edge& e, const Edge& f) {
  return is_endpoint(f, e.source) || is_endpoint(f, e.target);
}

}  // namespace

PatternReport find_forbidden_patterns(const LabeledOrientedGraph& g) {
  ValidationReport v = validate(g);
  if (!v.compressed)
    fail(Errc::not_compressed,
         "pattern scan requires a compressed graph; offending edge " +
             to_string(v.compression_violations.front()));

  PatternReport r;
  const auto& es = g.edges();
  const int m = static_cast<int>(es.size());
  auto hits = [&](int a, int b) {  // label(a) among endpoints(b)
    return is_endpoint(es[static_cast<size_t>(b)], es[static_cast<size_t>(a)].label);
  };

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (hits(i, j) && hits(j, i)) r.fig1.push_back({i, j});

  std::set<std::array<int, 3>> fig2;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        if (hits(i, j) && hits(j, k) && hits(k, i)) {
          std::array<int, 3> t{i, j, k};
          while (t[0] != std::min({t[0], t[1], t[2]})) t = {t[1], t[2], t[0]};
          fig2.insert(t);
        }
      }
  r.fig2.assign(fig2.begin(), fig2.end());

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && share_endpoint(es[static_cast<size_t>(i)], es[static_cast<size_t>(j)]) &&
          hits(i, j))
        r.fig3.push_back({i, j});
  return r;
}

LinkGraph build_link_graph(const Presentation& p) {
  LinkGraph l;
  l.generator_count = static_cast<int>(p.generators().size());
  for (size_t ri = 0; ri < p.relators().size(); ++ri) {
    const Word& r = p.relators()[ri];
    if (!is_cyclically_reduced(r))
      fail(Errc::not_cyclically_reduced,
           "relator " + to_string(r) + " is not cyclically reduced");
    const int len = static_cast<int>(r.size());
    for (int c = 0; c < len; ++c) {
      const Letter& u = r[static_cast<size_t>(c)];
      const Letter& w = r[static_cast<size_t>((c + 1) % len)];
      int gu = p.generator_index(u.gen), gw = p.generator_index(w.gen);
      int end_u = u.sign > 0 ? LinkGraph::terminal_node(gu) : LinkGraph::start_node(gu);
      int start_w = w.sign > 0 ? LinkGraph::start_node(gw) : LinkGraph::terminal_node(gw);
      l.arcs.push_back({end_u, start_w, static_cast<int>(ri), c});
    }
  }
  return l;
}

std::string node_name(const LinkGraph&, const Presentation& p, int node) {
  return p.generators()[static_cast<size_t>(node / 2)] + (node % 2 ? "_t" : "_s");
}

std::optional<int> girth(const LinkGraph& l) {
  const int n = l.node_count();
  std::map<std::pair<int, int>, int> simple;  // undirected pair -> multiplicity
  int best = -1;
  for (const auto& a : l.arcs) {
    if (a.u == a.v) return 1;
    ++simple[{std::min(a.u, a.v), std::max(a.u, a.v)}];
  }
  for (const auto& [_, count] : simple)
    if (count >= 2) return 2;

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [pair, _] : simple) {
    adj[static_cast<size_t>(pair.first)].push_back(pair.second);
    adj[static_cast<size_t>(pair.second)].push_back(pair.first);
  }
  // BFS from every node; the first non-tree edge seen closes a shortest
  // cycle through the root.
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<size_t>(n), -1), from(static_cast<size_t>(n), -1);
    std::deque<int> q{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[static_cast<size_t>(u)]) {
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          from[static_cast<size_t>(w)] = u;
          q.push_back(w);
        } else if (w != from[static_cast<size_t>(u)]) {
          int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Verdict verdict(const LabeledOrientedGraph& g) {
  Verdict out;
  ValidationReport v = validate(g);
  const auto& es = g.edges();
  auto edge_str = [&](int i) { return to_string(es[static_cast<size_t>(i)]); };

  if (!v.compressed) {
    for (const Edge& e : v.compression_violations)
      out.reasons.push_back({"compressed", to_string(e)});
  }
  if (!v.injective) {
    for (const std::string& name : v.repeated_labels) out.reasons.push_back({"injective", name});
  }

  bool fig1_empty = true, fig2_empty = true, fig3_empty = true;
  if (v.compressed) {
    PatternReport pr = find_forbidden_patterns(g);
    fig1_empty = pr.fig1.empty();
    fig2_empty = pr.fig2.empty();
    fig3_empty = pr.fig3.empty();
    for (const auto& [a, b] : pr.fig1)
      out.reasons.push_back({"fig1", "{" + edge_str(a) + ", " + edge_str(b) + "}"});
    for (const auto& t : pr.fig2)
      out.reasons.push_back(
          {"fig2", "(" + edge_str(t[0]) + ", " + edge_str(t[1]) + ", " + edge_str(t[2]) + ")"});
    for (const auto& [a, b] : pr.fig3)
      out.reasons.push_back({"fig3", "(" + edge_str(a) + ", " + edge_str(b) + ")"});
  }

  out.npc = v.compressed && v.injective && fig1_empty && fig2_empty;
  bool tree = v.shape == Shape::Tree || v.shape == Shape::Interval;
  if (!tree) out.reasons.push_back({"tree", to_string(v.shape)});
  out.theorem2_applicable = out.npc && fig3_empty && tree;
  return out;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json reasons = nlohmann::json::array();
  for (const auto& r : v.reasons) reasons.push_back({{"clause", r.clause}, {"witness", r.witness}});
  return {{"npc", v.npc},
          {"theorem2_applicable", v.theorem2_applicable},
          {"reasons", reasons}};
}

}  // namespace logkit
