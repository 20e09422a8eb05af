#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "logkit/log_graph.hpp"
#include "logkit/presentation.hpp"

namespace logkit {

using Rational = boost::multiprecision::cpp_rational;

struct DiagEdge {
  int id;
  std::string label;  // generator
  int from, to;       // vertex ids
};

// dir +1 traverses from->to and reads the label; -1 traverses to->from and
// reads its inverse.
struct BoundaryStep {
  int edge;
  int dir;

  friend bool operator==(const BoundaryStep&, const BoundaryStep&) = default;
};

struct DiagFace {
  int id;
  std::vector<BoundaryStep> boundary;  // clockwise closed walk
  int sign;                            // +1: word is a relator, -1: an inverse
  int basepoint;                       // index into boundary where reading starts
};

// Cell structure of a compact orientable surface with labeled oriented
// edges.  Plain data; algorithms never mutate their input.
struct SurfaceDiagram {
  std::vector<int> vertices;
  std::vector<DiagEdge> edges;
  std::vector<DiagFace> faces;

  bool empty() const { return vertices.empty() && edges.empty() && faces.empty(); }
  const DiagEdge* edge(int id) const;
  const DiagFace* face(int id) const;
};

// Vertex a step leaves from / arrives at.
int step_tail(const SurfaceDiagram& s, const BoundaryStep& st);
int step_head(const SurfaceDiagram& s, const BoundaryStep& st);

// Boundary word read clockwise from the basepoint.
Word face_word(const SurfaceDiagram& s, const DiagFace& f);

// Cell-structure conditions that do not involve a presentation: sane
// references, closed boundary walks, every edge side used once or twice
// (twice in opposite directions), vertex links a single cycle or arc, and a
// connected complex.  The empty diagram counts as valid and closed.
struct DiagramCheck {
  bool ok = true;
  bool closed = true;
  std::vector<std::string> failures;
};

DiagramCheck check_structure(const SurfaceDiagram& s);

enum class FaceClass { Square, Power, Other };

struct DiagramValidity {
  bool ok = true;
  bool closed = true;
  std::vector<std::string> failures;
  std::vector<FaceClass> face_classes;     // parallel to faces
  std::vector<int> matched_relator;        // relator index per face, -1 when none
};

DiagramValidity validate_diagram(const SurfaceDiagram& s, const Presentation& p);

// Exact rational interior angles, one per corner.  Corner i of a face sits
// at the tail of boundary step i (raw index, not basepoint-relative).
struct AngleAssignment {
  std::map<std::pair<int, int>, Rational> angles;  // (face id, corner index)
};

// 1/2 on square corners, (n-2)/n on the corners of power cells with n
// sides; uniformly (m-2)/m for an m-gon, which covers both and makes every
// face flat.
AngleAssignment paper_scheme(const SurfaceDiagram& s);

struct CurvatureReport {
  struct VertexLine {
    int vertex;
    int valency;
    bool interior;
    int power_faces;                        // k(v): distinct power cells at v
    Rational kappa;
    std::optional<Rational> kappa_tilde;    // kappa/k(v) when k(v) > 0
  };
  struct FaceLine {
    int face;
    int sides;
    Rational kappa;
  };
  std::vector<VertexLine> per_vertex;
  std::vector<FaceLine> per_face;
  Rational vertex_total, face_total, total;
  long chi = 0;  // V - E + F
  bool gauss_bonnet_holds = false;
};

CurvatureReport curvature_report(const SurfaceDiagram& s, const AngleAssignment& angles);
CurvatureReport curvature_report(const SurfaceDiagram& s);  // paper scheme

// Two n-gon faces reading g^n, glued along the whole cycle, basepoints one
// edge apart.
SurfaceDiagram canonical_power_sphere(const std::string& gen, int n);

// Power cell a^n at the bottom, c^n at the top, a gallery of n squares
// reading a b c^-1 b^-1 in between.
SurfaceDiagram canonical_edge_sphere(const Edge& e, int n);

struct CancellationPair {
  int face_a, face_b;  // face ids, face_a < face_b
  int vertex;

  friend bool operator==(const CancellationPair&, const CancellationPair&) = default;
};

// All (d, d', v) with v on both faces and the clockwise word of d from v
// equal to the anticlockwise word of d' from v.  Requires a valid closed
// diagram.
std::vector<CancellationPair> find_cancellation_pairs(const SurfaceDiagram& s);

struct CancellationOutcome {
  bool applied = false;
  SurfaceDiagram diagram;  // result when applied, the input otherwise
  std::string reason;      // why the move was rejected
};

// Removes the two faces and sews the hole along the shared word.  Rejected
// (diagram unchanged) when the sewn complex is no longer a closed connected
// surface of the same Euler characteristic; the empty diagram is an allowed
// result.
CancellationOutcome apply_cancellation(const SurfaceDiagram& s, const CancellationPair& pair);

nlohmann::json to_json(const SurfaceDiagram& s);
SurfaceDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace logkit
