#include "logkit/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace logkit {

const DiagEdge* SurfaceDiagram::edge(int id) const {
  for (const DiagEdge& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

const DiagFace* SurfaceDiagram::face(int id) const {
  for (const DiagFace& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

int step_tail(const SurfaceDiagram& s, const BoundaryStep& st) {
  const DiagEdge* e = s.edge(st.edge);
  return st.dir > 0 ? e->from : e->to;
}

int step_head(const SurfaceDiagram& s, const BoundaryStep& st) {
  const DiagEdge* e = s.edge(st.edge);
  return st.dir > 0 ? e->to : e->from;
}

Word face_word(const SurfaceDiagram& s, const DiagFace& f) {
  Word w;
  const size_t m = f.boundary.size();
  for (size_t k = 0; k < m; ++k) {
    const BoundaryStep& st = f.boundary[(static_cast<size_t>(f.basepoint) + k) % m];
    w.push_back(Letter{s.edge(st.edge)->label, st.dir});
  }
  return w;
}

namespace {

// A face is a power cell when its boundary spells g^{+-n}, n >= 2.
bool is_power_face(const SurfaceDiagram& s, const DiagFace& f) {
  if (f.boundary.size() < 2) return false;
  const DiagEdge* first = s.edge(f.boundary[0].edge);
  for (const BoundaryStep& st : f.boundary) {
    const DiagEdge* e = s.edge(st.edge);
    if (e->label != first->label || st.dir != f.boundary[0].dir) return false;
  }
  return true;
}

struct EdgeUse {
  int face_idx;
  int pos;
  int dir;
};

// (edge id, end): 0 = the `from` end, 1 = the `to` end
using EdgeEnd = std::pair<int, int>;

int tail_end(const BoundaryStep& st) { return st.dir > 0 ? 0 : 1; }
int head_end(const BoundaryStep& st) { return st.dir > 0 ? 1 : 0; }

}  // namespace

DiagramCheck check_structure(const SurfaceDiagram& s) {
  DiagramCheck out;
  auto failed = [&](std::string msg) {
    out.ok = false;
    out.failures.push_back(std::move(msg));
  };
  if (s.empty()) return out;

  std::set<int> vset(s.vertices.begin(), s.vertices.end());
  if (vset.size() != s.vertices.size()) failed("duplicate vertex id");
  std::set<int> eids;
  for (const DiagEdge& e : s.edges) {
    if (!eids.insert(e.id).second) failed("duplicate edge id " + std::to_string(e.id));
    if (!vset.count(e.from) || !vset.count(e.to))
      failed("edge " + std::to_string(e.id) + " references an unknown vertex");
  }
  std::set<int> fids;
  for (const DiagFace& f : s.faces) {
    if (!fids.insert(f.id).second) failed("duplicate face id " + std::to_string(f.id));
    if (f.boundary.empty()) failed("face " + std::to_string(f.id) + " has an empty boundary");
    if (f.sign != 1 && f.sign != -1) failed("face " + std::to_string(f.id) + " has a bad sign");
    if (f.basepoint < 0 || static_cast<size_t>(f.basepoint) >= f.boundary.size())
      failed("face " + std::to_string(f.id) + " basepoint out of range");
    for (const BoundaryStep& st : f.boundary) {
      if (!eids.count(st.edge))
        failed("face " + std::to_string(f.id) + " references unknown edge " +
               std::to_string(st.edge));
      if (st.dir != 1 && st.dir != -1)
        failed("face " + std::to_string(f.id) + " has a bad step direction");
    }
  }
  if (!out.ok) return out;

  // boundary walks must close up
  for (const DiagFace& f : s.faces) {
    const size_t m = f.boundary.size();
    for (size_t i = 0; i < m; ++i)
      if (step_head(s, f.boundary[i]) != step_tail(s, f.boundary[(i + 1) % m])) {
        failed("face " + std::to_string(f.id) + " boundary is not a closed walk at position " +
               std::to_string(i));
        break;
      }
  }
  if (!out.ok) return out;

  // every edge side used once (boundary) or twice in opposite directions
  std::map<int, std::vector<EdgeUse>> uses;
  for (size_t fi = 0; fi < s.faces.size(); ++fi)
    for (size_t i = 0; i < s.faces[fi].boundary.size(); ++i)
      uses[s.faces[fi].boundary[i].edge].push_back(
          {static_cast<int>(fi), static_cast<int>(i), s.faces[fi].boundary[i].dir});
  std::set<int> boundary_edges;
  for (const DiagEdge& e : s.edges) {
    auto it = uses.find(e.id);
    const size_t count = it == uses.end() ? 0 : it->second.size();
    if (count == 0) {
      failed("edge " + std::to_string(e.id) + " lies on no face");
    } else if (count == 1) {
      boundary_edges.insert(e.id);
    } else if (count == 2) {
      if (it->second[0].dir == it->second[1].dir)
        failed("edge " + std::to_string(e.id) + " is traversed twice in the same direction");
    } else {
      failed("edge " + std::to_string(e.id) + " is used " + std::to_string(count) + " times");
    }
  }
  if (!out.ok) return out;
  out.closed = boundary_edges.empty();

  // vertex links: glue corners and demand one cycle (interior) or one arc
  // (boundary vertex)
  std::map<int, std::map<EdgeEnd, int>> degree;      // vertex -> link node -> degree
  std::map<int, std::vector<std::pair<EdgeEnd, EdgeEnd>>> corners;
  for (const DiagFace& f : s.faces) {
    const size_t m = f.boundary.size();
    for (size_t i = 0; i < m; ++i) {
      const BoundaryStep& in = f.boundary[(i + m - 1) % m];
      const BoundaryStep& outst = f.boundary[i];
      int v = step_tail(s, outst);
      EdgeEnd a{in.edge, head_end(in)};
      EdgeEnd b{outst.edge, tail_end(outst)};
      corners[v].push_back({a, b});
      ++degree[v][a];
      ++degree[v][b];
    }
  }
  for (int v : s.vertices) {
    auto it = corners.find(v);
    if (it == corners.end()) {
      failed("vertex " + std::to_string(v) + " meets no face corner");
      continue;
    }
    // connectivity of the link via union-find over its nodes
    std::map<EdgeEnd, EdgeEnd> up;
    auto find = [&](EdgeEnd x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    for (const auto& [a, b] : it->second) {
      if (!up.count(a)) up[a] = a;
      if (!up.count(b)) up[b] = b;
      EdgeEnd ra = find(a), rb = find(b);
      if (ra != rb) up[ra] = rb;
    }
    std::set<EdgeEnd> roots;
    for (const auto& [node, _] : up) roots.insert(find(node));
    if (roots.size() != 1) {
      failed("link of vertex " + std::to_string(v) + " is not connected (pinch point)");
      continue;
    }
    int odd = 0;
    for (const auto& [node, d] : degree[v]) {
      if (d > 2) failed("link of vertex " + std::to_string(v) + " has a node of degree > 2");
      if (d == 1) ++odd;
    }
    if (odd != 0 && odd != 2)
      failed("link of vertex " + std::to_string(v) + " is neither a cycle nor an arc");
  }
  if (!out.ok) return out;

  // connected 1-skeleton
  std::map<int, std::vector<int>> adj;
  for (const DiagEdge& e : s.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::set<int> seen{s.vertices.front()};
  std::vector<int> stack{s.vertices.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != s.vertices.size()) failed("diagram is not connected");
  return out;
}

DiagramValidity validate_diagram(const SurfaceDiagram& s, const Presentation& p) {
  DiagramValidity out;
  DiagramCheck base = check_structure(s);
  out.ok = base.ok;
  out.closed = base.closed;
  out.failures = base.failures;
  for (const DiagFace& f : s.faces) {
    FaceClass cls = FaceClass::Other;
    int matched = -1;
    if (base.ok) {
      Word w = face_word(s, f);
      Word target = f.sign > 0 ? w : inverse(w);
      for (size_t ri = 0; ri < p.relators().size(); ++ri)
        if (p.relators()[ri] == target) {
          matched = static_cast<int>(ri);
          break;
        }
      if (matched < 0) {
        out.ok = false;
        out.failures.push_back("face " + std::to_string(f.id) + " reads " + to_string(w) +
                               ", which is not a relator" +
                               std::string(f.sign > 0 ? "" : " inverse"));
      } else if (is_power_face(s, f)) {
        cls = FaceClass::Power;
      } else if (f.boundary.size() == 4) {
        cls = FaceClass::Square;
      }
    }
    out.face_classes.push_back(cls);
    out.matched_relator.push_back(matched);
  }
  return out;
}

AngleAssignment paper_scheme(const SurfaceDiagram& s) {
  AngleAssignment a;
  for (const DiagFace& f : s.faces) {
    const long m = static_cast<long>(f.boundary.size());
    Rational angle(m - 2, m);
    for (long i = 0; i < m; ++i) a.angles[{f.id, static_cast<int>(i)}] = angle;
  }
  return a;
}

CurvatureReport curvature_report(const SurfaceDiagram& s, const AngleAssignment& angles) {
  DiagramCheck base = check_structure(s);
  if (!base.ok)
    fail(Errc::invalid_parameter, "curvature report requires a valid diagram: " +
                                      (base.failures.empty() ? "" : base.failures.front()));
  CurvatureReport rep;
  rep.chi = static_cast<long>(s.vertices.size()) - static_cast<long>(s.edges.size()) +
            static_cast<long>(s.faces.size());

  std::map<int, Rational> vertex_angle_sum;
  std::map<int, std::set<int>> power_at;  // vertex -> power face ids
  std::map<int, int> valency;
  std::set<int> boundary_vertices;

  std::map<int, int> side_uses;
  for (const DiagFace& f : s.faces)
    for (const BoundaryStep& st : f.boundary) ++side_uses[st.edge];
  for (const DiagEdge& e : s.edges) {
    ++valency[e.from];
    ++valency[e.to];
    if (side_uses[e.id] == 1) {
      boundary_vertices.insert(e.from);
      boundary_vertices.insert(e.to);
    }
  }

  for (const DiagFace& f : s.faces) {
    Rational sum = 0;
    bool power = is_power_face(s, f);
    for (size_t i = 0; i < f.boundary.size(); ++i) {
      auto it = angles.angles.find({f.id, static_cast<int>(i)});
      if (it == angles.angles.end())
        fail(Errc::missing_angle, "no angle for face " + std::to_string(f.id) + " corner " +
                                      std::to_string(i));
      sum += it->second;
      int v = step_tail(s, f.boundary[i]);
      vertex_angle_sum[v] += it->second;
      if (power) power_at[v].insert(f.id);
    }
    Rational kappa = sum - Rational(static_cast<long>(f.boundary.size()) - 2);
    rep.per_face.push_back({f.id, static_cast<int>(f.boundary.size()), kappa});
    rep.face_total += kappa;
  }

  for (int v : s.vertices) {
    bool interior = !boundary_vertices.count(v);
    Rational kappa = Rational(interior ? 2 : 1) - vertex_angle_sum[v];
    int k = static_cast<int>(power_at[v].size());
    CurvatureReport::VertexLine line{v, valency[v], interior, k, kappa, std::nullopt};
    if (k > 0) line.kappa_tilde = kappa / k;
    rep.per_vertex.push_back(line);
    rep.vertex_total += kappa;
  }
  rep.total = rep.vertex_total + rep.face_total;
  rep.gauss_bonnet_holds = (rep.total == Rational(2 * rep.chi));
  return rep;
}

CurvatureReport curvature_report(const SurfaceDiagram& s) {
  return curvature_report(s, paper_scheme(s));
}

SurfaceDiagram canonical_power_sphere(const std::string& gen, int n) {
  if (n < 2) fail(Errc::degenerate, "power sphere needs n >= 2; a 1-gon face has no cell model");
  SurfaceDiagram s;
  for (int i = 0; i < n; ++i) s.vertices.push_back(i);
  for (int i = 0; i < n; ++i) s.edges.push_back({i, gen, i, (i + 1) % n});
  DiagFace plus{0, {}, 1, 0};
  for (int i = 0; i < n; ++i) plus.boundary.push_back({i, 1});
  DiagFace minus{1, {}, -1, 0};
  minus.boundary.push_back({0, -1});
  for (int i = n - 1; i >= 1; --i) minus.boundary.push_back({i, -1});
  s.faces.push_back(std::move(plus));
  s.faces.push_back(std::move(minus));
  return s;
}

SurfaceDiagram canonical_edge_sphere(const Edge& e, int n) {
  if (n < 2) fail(Errc::invalid_parameter, "edge sphere needs n >= 2");
  if (e.label == e.source || e.label == e.target)
    fail(Errc::degenerate, "edge " + to_string(e) + " is labeled by one of its endpoints");
  SurfaceDiagram s;
  // inner a-cycle on vertices 0..n-1, outer c-cycle on n..2n-1
  for (int i = 0; i < 2 * n; ++i) s.vertices.push_back(i);
  for (int i = 0; i < n; ++i) s.edges.push_back({i, e.source, i, (i + 1) % n});
  for (int i = 0; i < n; ++i) s.edges.push_back({n + i, e.label, i, n + i});
  for (int i = 0; i < n; ++i) s.edges.push_back({2 * n + i, e.target, n + i, n + (i + 1) % n});
  for (int i = 0; i < n; ++i) {
    DiagFace sq{i, {}, 1, 0};
    sq.boundary.push_back({i, 1});                    // a: u_i -> u_{i+1}
    sq.boundary.push_back({n + (i + 1) % n, 1});      // b: u_{i+1} -> w_{i+1}
    sq.boundary.push_back({2 * n + i, -1});           // c^-1: w_{i+1} -> w_i
    sq.boundary.push_back({n + i, -1});               // b^-1: w_i -> u_i
    s.faces.push_back(std::move(sq));
  }
  DiagFace bottom{n, {}, -1, 0};  // reads a^-n, the inverse of a^n
  bottom.boundary.push_back({0, -1});
  for (int i = n - 1; i >= 1; --i) bottom.boundary.push_back({i, -1});
  s.faces.push_back(std::move(bottom));
  DiagFace top{n + 1, {}, 1, 0};  // reads c^n
  for (int i = 0; i < n; ++i) top.boundary.push_back({2 * n + i, 1});
  s.faces.push_back(std::move(top));
  return s;
}

namespace {

Word clockwise_from(const SurfaceDiagram& s, const DiagFace& f, size_t pos) {
  Word w;
  const size_t m = f.boundary.size();
  for (size_t k = 0; k < m; ++k) {
    const BoundaryStep& st = f.boundary[(pos + k) % m];
    w.push_back(Letter{s.edge(st.edge)->label, st.dir});
  }
  return w;
}

Word anticlockwise_from(const SurfaceDiagram& s, const DiagFace& f, size_t pos) {
  Word w;
  const size_t m = f.boundary.size();
  for (size_t k = 1; k <= m; ++k) {
    const BoundaryStep& st = f.boundary[(pos + m - k) % m];
    w.push_back(Letter{s.edge(st.edge)->label, -st.dir});
  }
  return w;
}

}  // namespace

std::vector<CancellationPair> find_cancellation_pairs(const SurfaceDiagram& s) {
  DiagramCheck base = check_structure(s);
  if (!base.ok || !base.closed)
    fail(Errc::invalid_parameter, "cancellation search requires a valid closed diagram");
  std::vector<CancellationPair> out;
  for (size_t a = 0; a < s.faces.size(); ++a) {
    for (size_t b = a + 1; b < s.faces.size(); ++b) {
      const DiagFace& fa = s.faces[a];
      const DiagFace& fb = s.faces[b];
      if (fa.boundary.size() != fb.boundary.size()) continue;
      std::set<int> hits;
      for (size_t i = 0; i < fa.boundary.size(); ++i) {
        int v = step_tail(s, fa.boundary[i]);
        if (hits.count(v)) continue;
        Word cw = clockwise_from(s, fa, i);
        for (size_t j = 0; j < fb.boundary.size(); ++j) {
          if (step_tail(s, fb.boundary[j]) != v) continue;
          if (anticlockwise_from(s, fb, j) == cw) {
            hits.insert(v);
            break;
          }
        }
      }
      for (int v : hits) out.push_back({fa.id, fb.id, v});
    }
  }
  return out;
}

CancellationOutcome apply_cancellation(const SurfaceDiagram& s, const CancellationPair& pair) {
  CancellationOutcome out;
  out.diagram = s;
  const DiagFace* fa = s.face(pair.face_a);
  const DiagFace* fb = s.face(pair.face_b);
  if (!fa || !fb || fa == fb)
    fail(Errc::invalid_parameter, "cancellation pair does not name two distinct faces");
  const size_t m = fa->boundary.size();

  // recover the first matching pair of starting positions at the vertex
  size_t ia = m, jb = m;
  for (size_t i = 0; i < m && ia == m; ++i) {
    if (step_tail(s, fa->boundary[i]) != pair.vertex) continue;
    Word cw = clockwise_from(s, *fa, i);
    for (size_t j = 0; j < fb->boundary.size(); ++j) {
      if (step_tail(s, fb->boundary[j]) != pair.vertex) continue;
      if (anticlockwise_from(s, *fb, j) == cw) {
        ia = i;
        jb = j;
        break;
      }
    }
  }
  if (ia == m) fail(Errc::invalid_parameter, "pair was not produced by find_cancellation_pairs");

  // parallel walks: P clockwise around face_a, Q anticlockwise around face_b
  std::unordered_map<int, int> vrep, erep;
  for (int v : s.vertices) vrep[v] = v;
  for (const DiagEdge& e : s.edges) erep[e.id] = e.id;
  auto find = [](std::unordered_map<int, int>& up, int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  auto unite = [&](std::unordered_map<int, int>& up, int x, int y) {
    x = find(up, x);
    y = find(up, y);
    if (x != y) up[std::max(x, y)] = std::min(x, y);
  };

  for (size_t k = 0; k < m; ++k) {
    const BoundaryStep& pstep = fa->boundary[(ia + k) % m];
    const BoundaryStep& qstep = fb->boundary[(jb + m - 1 - k) % m];
    unite(erep, pstep.edge, qstep.edge);
    unite(vrep, step_head(s, pstep), step_tail(s, qstep));
    unite(vrep, step_tail(s, pstep), step_head(s, qstep));
  }

  // rebuild the quotient without the two faces
  SurfaceDiagram q;
  std::set<int> used_edges;
  for (const DiagFace& f : s.faces) {
    if (f.id == fa->id || f.id == fb->id) continue;
    DiagFace nf{f.id, {}, f.sign, f.basepoint};
    for (const BoundaryStep& st : f.boundary) {
      int e = find(erep, st.edge);
      nf.boundary.push_back({e, st.dir});
      used_edges.insert(e);
    }
    q.faces.push_back(std::move(nf));
  }
  std::set<int> used_vertices;
  for (const DiagEdge& e : s.edges) {
    if (find(erep, e.id) != e.id || !used_edges.count(e.id)) continue;
    DiagEdge ne{e.id, e.label, find(vrep, e.from), find(vrep, e.to)};
    used_vertices.insert(ne.from);
    used_vertices.insert(ne.to);
    q.edges.push_back(ne);
  }
  for (int v : s.vertices)
    if (find(vrep, v) == v && used_vertices.count(v)) q.vertices.push_back(v);

  DiagramCheck chk = check_structure(q);
  if (!chk.ok || !chk.closed) {
    out.reason = chk.failures.empty() ? "result is not closed" : chk.failures.front();
    return out;
  }
  long chi_before = static_cast<long>(s.vertices.size()) - static_cast<long>(s.edges.size()) +
                    static_cast<long>(s.faces.size());
  long chi_after = static_cast<long>(q.vertices.size()) - static_cast<long>(q.edges.size()) +
                   static_cast<long>(q.faces.size());
  if (!q.empty() && chi_after != chi_before) {
    out.reason = "sewing would change the Euler characteristic";
    return out;
  }
  out.applied = true;
  out.diagram = std::move(q);
  return out;
}

nlohmann::json to_json(const SurfaceDiagram& s) {
  SurfaceDiagram c = s;
  std::sort(c.vertices.begin(), c.vertices.end());
  std::sort(c.edges.begin(), c.edges.end(),
            [](const DiagEdge& a, const DiagEdge& b) { return a.id < b.id; });
  std::sort(c.faces.begin(), c.faces.end(),
            [](const DiagFace& a, const DiagFace& b) { return a.id < b.id; });
  nlohmann::json edges = nlohmann::json::array();
  for (const DiagEdge& e : c.edges)
    edges.push_back({{"id", e.id}, {"label", e.label}, {"from", e.from}, {"to", e.to}});
  nlohmann::json faces = nlohmann::json::array();
  for (const DiagFace& f : c.faces) {
    nlohmann::json boundary = nlohmann::json::array();
    for (const BoundaryStep& st : f.boundary)
      boundary.push_back({{"edge", st.edge}, {"dir", st.dir}});
    faces.push_back({{"id", f.id},
                     {"boundary", boundary},
                     {"sign", f.sign},
                     {"basepoint", f.basepoint}});
  }
  return {{"vertices", c.vertices}, {"edges", edges}, {"faces", faces}};
}

SurfaceDiagram diagram_from_json(const nlohmann::json& j) {
  SurfaceDiagram s;
  try {
    for (const auto& v : j.at("vertices")) s.vertices.push_back(v.get<int>());
    for (const auto& e : j.at("edges"))
      s.edges.push_back({e.at("id").get<int>(), e.at("label").get<std::string>(),
                         e.at("from").get<int>(), e.at("to").get<int>()});
    for (const auto& f : j.at("faces")) {
      DiagFace face{f.at("id").get<int>(), {}, f.at("sign").get<int>(),
                    f.at("basepoint").get<int>()};
      for (const auto& st : f.at("boundary"))
        face.boundary.push_back({st.at("edge").get<int>(), st.at("dir").get<int>()});
      s.faces.push_back(std::move(face));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_format, std::string("bad diagram JSON: ") + e.what());
  }
  return s;
}

}  // namespace logkit
