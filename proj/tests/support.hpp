#pragma once

// Shared test helpers: small random generators and independent oracles kept
// deliberately separate from the library implementations they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "logkit/abelian.hpp"
#include "logkit/diagram.hpp"
#include "logkit/link_graph.hpp"
#include "logkit/log_graph.hpp"
#include "logkit/presentation.hpp"

namespace testkit {

using logkit::Edge;
using logkit::Int;
using logkit::IntMatrix;
using logkit::LabeledOrientedGraph;
using logkit::Rational;
using logkit::SurfaceDiagram;
using logkit::Word;

// ---- graphs ----------------------------------------------------------

inline LabeledOrientedGraph rename(const LabeledOrientedGraph& g,
                                   const std::map<std::string, std::string>& map) {
  std::vector<std::string> vertices;
  for (const std::string& v : g.vertices()) vertices.push_back(map.at(v));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back(Edge{map.at(e.source), map.at(e.label), map.at(e.target)});
  return LabeledOrientedGraph(std::move(vertices), std::move(edges));
}

// Random labeled oriented tree on k vertices named v0..v{k-1}: random
// attachment tree, arbitrary labels and orientations.
inline LabeledOrientedGraph random_lot(std::mt19937& rng, int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1), label(0, k - 1), flip(0, 1);
    std::string a = names[static_cast<size_t>(parent(rng))];
    std::string b = names[static_cast<size_t>(i)];
    if (flip(rng)) std::swap(a, b);
    edges.push_back(Edge{a, names[static_cast<size_t>(label(rng))], b});
  }
  return LabeledOrientedGraph(names, edges);
}

// Random compressed LOT: labels avoid both endpoints (needs k >= 3).
inline LabeledOrientedGraph random_compressed_lot(std::mt19937& rng, int k) {
  while (true) {
    LabeledOrientedGraph g = random_lot(rng, k);
    if (logkit::validate(g).compressed) return g;
  }
}

// ---- independent girth oracle ---------------------------------------

// Shortest cycle by exhaustive DFS over simple cycles; loops count 1,
// parallel arcs 2.  Quadratic-ish and only for tiny graphs.
inline std::optional<int> girth_by_enumeration(const logkit::LinkGraph& l) {
  int n = l.node_count();
  std::map<std::pair<int, int>, int> mult;
  for (const auto& a : l.arcs) {
    if (a.u == a.v) return 1;
    ++mult[{std::min(a.u, a.v), std::max(a.u, a.v)}];
  }
  for (const auto& [_, m] : mult)
    if (m >= 2) return 2;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [p, _] : mult) {
    adj[static_cast<size_t>(p.first)].push_back(p.second);
    adj[static_cast<size_t>(p.second)].push_back(p.first);
  }
  int best = -1;
  std::vector<int> path;
  std::vector<char> on(static_cast<size_t>(n), 0);
  auto dfs = [&](auto&& self, int start, int u, int prev, int depth) -> void {
    for (int w : adj[static_cast<size_t>(u)]) {
      if (w == prev) continue;
      if (w == start && depth >= 3) {
        if (best < 0 || depth < best) best = depth;
      } else if (!on[static_cast<size_t>(w)] && w > start) {
        on[static_cast<size_t>(w)] = 1;
        self(self, start, w, u, depth + 1);
        on[static_cast<size_t>(w)] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[static_cast<size_t>(s)] = 1;
    dfs(dfs, s, s, -1, 1);
    on[static_cast<size_t>(s)] = 0;
  }
  if (best < 0) return std::nullopt;
  return best;
}

// ---- exact linear algebra oracles ------------------------------------

// Determinant via cofactor expansion; fine for the tiny matrices in tests.
inline Int determinant(const IntMatrix& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Int det = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    IntMatrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Int term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// Determinantal-divisor oracle for the Smith form: d_k = D_k / D_{k-1}
// where D_k is the gcd of all k x k minors.
inline std::vector<Int> smith_by_minor_gcds(const IntMatrix& m) {
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  size_t bound = std::min(rows, cols);
  std::vector<Int> divisors;  // D_1, D_2, ...
  for (size_t k = 1; k <= bound; ++k) {
    // all k-subsets of rows and columns
    std::vector<size_t> ri(k), ci(k);
    std::iota(ri.begin(), ri.end(), 0);
    Int g = 0;
    auto next_subset = [](std::vector<size_t>& v, size_t n) {
      size_t k2 = v.size();
      for (size_t i = k2; i-- > 0;) {
        if (v[i] + (k2 - i) < n) {
          ++v[i];
          for (size_t j = i + 1; j < k2; ++j) v[j] = v[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      std::iota(ci.begin(), ci.end(), 0);
      do {
        IntMatrix sub;
        for (size_t i : ri) {
          std::vector<Int> row;
          for (size_t j : ci) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        Int d = determinant(sub);
        g = boost::multiprecision::gcd(g, d < 0 ? Int(-d) : d);
      } while (next_subset(ci, cols));
    } while (next_subset(ri, rows));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Int> out;
  Int prev = 1;
  for (const Int& d : divisors) {
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

// ---- random closed diagrams ------------------------------------------

// Mirror-balanced face pairing: for each picked relator a face reading it
// clockwise and one reading its inverse; positive and negative letter slots
// are matched at random per generator.  Any such pairing closes up into a
// closed orientable complex whose vertices are the corner orbits, so only
// connectivity needs to be retried.
inline std::optional<SurfaceDiagram> try_random_closed_diagram(
    std::mt19937& rng, const std::vector<Word>& relator_pool) {
  std::uniform_int_distribution<size_t> pick(0, relator_pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  int pairs = count(rng);
  std::vector<Word> words;     // clockwise boundary words
  std::vector<int> signs;
  for (int i = 0; i < pairs; ++i) {
    const Word& r = relator_pool[pick(rng)];
    words.push_back(r);
    signs.push_back(1);
    words.push_back(logkit::inverse(r));
    signs.push_back(-1);
  }

  struct Slot {
    int face;
    int pos;
  };
  std::map<std::string, std::vector<Slot>> positive, negative;
  for (size_t f = 0; f < words.size(); ++f)
    for (size_t p = 0; p < words[f].size(); ++p) {
      const logkit::Letter& l = words[f][p];
      (l.sign > 0 ? positive : negative)[l.gen].push_back(
          {static_cast<int>(f), static_cast<int>(p)});
    }

  // edge per matched slot pair
  std::map<std::pair<int, int>, std::pair<int, int>> edge_of_slot;  // slot -> (edge, dir)
  int edge_count = 0;
  std::vector<std::string> edge_label;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edge_slots;
  for (auto& [gen, pos_slots] : positive) {
    auto& neg_slots = negative[gen];
    if (pos_slots.size() != neg_slots.size()) return std::nullopt;  // cannot happen
    std::shuffle(neg_slots.begin(), neg_slots.end(), rng);
    for (size_t i = 0; i < pos_slots.size(); ++i) {
      int e = edge_count++;
      edge_label.push_back(gen);
      edge_of_slot[{pos_slots[i].face, pos_slots[i].pos}] = {e, 1};
      edge_of_slot[{neg_slots[i].face, neg_slots[i].pos}] = {e, -1};
      edge_slots.push_back({{pos_slots[i].face, pos_slots[i].pos},
                            {neg_slots[i].face, neg_slots[i].pos}});
    }
  }

  // vertices = corner orbits; corner marker 2*(slot index) = tail, +1 = head
  auto slot_index = [&](int f, int p) {
    int idx = 0;
    for (int ff = 0; ff < f; ++ff) idx += static_cast<int>(words[static_cast<size_t>(ff)].size());
    return idx + p;
  };
  int total_slots = 0;
  for (const Word& w : words) total_slots += static_cast<int>(w.size());
  std::vector<int> up(static_cast<size_t>(2 * total_slots));
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int x) {
    while (up[static_cast<size_t>(x)] != x)
      x = up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (size_t f = 0; f < words.size(); ++f) {
    int m = static_cast<int>(words[f].size());
    for (int p = 0; p < m; ++p)
      unite(2 * slot_index(static_cast<int>(f), p) + 1,
            2 * slot_index(static_cast<int>(f), (p + 1) % m));
  }
  for (const auto& [sp, sn] : edge_slots) {
    // the positive slot traverses the edge forward, the negative one backward
    unite(2 * slot_index(sp.first, sp.second), 2 * slot_index(sn.first, sn.second) + 1);
    unite(2 * slot_index(sp.first, sp.second) + 1, 2 * slot_index(sn.first, sn.second));
  }

  SurfaceDiagram s;
  std::set<int> vertex_ids;
  for (int i = 0; i < 2 * total_slots; ++i) vertex_ids.insert(find(i));
  for (int v : vertex_ids) s.vertices.push_back(v);
  for (int e = 0; e < edge_count; ++e) {
    const auto& [sp, sn] = edge_slots[static_cast<size_t>(e)];
    int from = find(2 * slot_index(sp.first, sp.second));
    int to = find(2 * slot_index(sp.first, sp.second) + 1);
    s.edges.push_back({e, edge_label[static_cast<size_t>(e)], from, to});
  }
  for (size_t f = 0; f < words.size(); ++f) {
    logkit::DiagFace face{static_cast<int>(f), {}, signs[f], 0};
    for (size_t p = 0; p < words[f].size(); ++p) {
      auto [e, dir] = edge_of_slot[{static_cast<int>(f), static_cast<int>(p)}];
      face.boundary.push_back({e, dir});
    }
    s.faces.push_back(std::move(face));
  }

  if (!logkit::check_structure(s).ok) return std::nullopt;  // disconnected, retry
  return s;
}

inline SurfaceDiagram random_closed_diagram(std::mt19937& rng,
                                            const std::vector<Word>& relator_pool) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto s = try_random_closed_diagram(rng, relator_pool);
    if (s) return *s;
  }
  return logkit::canonical_power_sphere("g", 3);
}

// Relators worth gluing: a couple of LOG relators and small powers.
inline std::vector<Word> default_relator_pool() {
  using logkit::neg;
  using logkit::pos;
  return {
      Word{pos("a"), pos("b"), neg("c"), neg("b")},
      Word{pos("b"), pos("c"), neg("a"), neg("c")},
      Word{pos("x"), pos("x")},
      Word{pos("x"), pos("x"), pos("x")},
      Word{pos("a"), pos("a"), pos("a"), pos("a")},
  };
}

inline logkit::AngleAssignment random_angles(std::mt19937& rng, const SurfaceDiagram& s) {
  logkit::AngleAssignment a;
  std::uniform_int_distribution<int> num(-5, 5), den(1, 9);
  for (const auto& f : s.faces)
    for (size_t i = 0; i < f.boundary.size(); ++i)
      a.angles[{f.id, static_cast<int>(i)}] = Rational(num(rng), den(rng));
  return a;
}

}  // namespace testkit
