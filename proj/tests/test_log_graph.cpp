#include <doctest.h>

#include <random>

#include "logkit/log_graph.hpp"
#include "support.hpp"

using namespace logkit;

TEST_CASE("parse_log reads edges and infers vertices in appearance order") {
  LabeledOrientedGraph g = parse_log("0|3|1\n1|4|2");
  CHECK(g.edges().size() == 2);
  CHECK(g.vertices() == std::vector<std::string>{"0", "3", "1", "4", "2"});
  CHECK(g.edges()[0] == Edge{"0", "3", "1"});
}

TEST_CASE("parse_log does not enforce compressedness") {
  LabeledOrientedGraph g = parse_log("a|a|b");
  CHECK(g.edges().size() == 1);
  CHECK_FALSE(validate(g).compressed);
}

TEST_CASE("parse_log rejects degenerate input") {
  CHECK_THROWS_WITH_AS(parse_log(""), "no edges in input", Error);
  CHECK_THROWS_AS(parse_log("# only a comment\n\n"), Error);
  CHECK_THROWS_AS(parse_log("a|b"), Error);
  CHECK_THROWS_AS(parse_log("a|b|c|d"), Error);
  CHECK_THROWS_AS(parse_log("a||c"), Error);
  CHECK_THROWS_AS(parse_log("a|b|c\na|b|c"), Error);  // duplicate triple
}

TEST_CASE("parse_log skips comments, blank lines, and stray spaces") {
  LabeledOrientedGraph g = parse_log("# family\n\n  a | b | c  \nb|d|a\n");
  CHECK(g.edges().size() == 2);
  CHECK(g.edges()[1] == Edge{"b", "d", "a"});
}

TEST_CASE("serialize round-trips through parse_log") {
  LabeledOrientedGraph g = cyclic_shift_family(11);
  LabeledOrientedGraph h = parse_log(serialize(g));
  CHECK(h.edges() == g.edges());
  CHECK(serialize(h) == serialize(g));
  std::vector<std::string> gv = g.vertices(), hv = h.vertices();
  std::sort(gv.begin(), gv.end());
  std::sort(hv.begin(), hv.end());
  CHECK(gv == hv);  // vertex order re-canonicalizes to first appearance

  // graphs that came from text round-trip identically
  LabeledOrientedGraph parsed = parse_log("p|q|r\nr|s|p");
  LabeledOrientedGraph again = parse_log(serialize(parsed));
  CHECK(again.vertices() == parsed.vertices());
  CHECK(again.edges() == parsed.edges());
}

TEST_CASE("serialize round-trip on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    LabeledOrientedGraph g = testkit::random_lot(rng, 2 + static_cast<int>(rng() % 7));
    LabeledOrientedGraph h = parse_log(serialize(g));
    CHECK(h.edges() == g.edges());
  }
}

TEST_CASE("validate flags compression violations with witnesses") {
  LabeledOrientedGraph g = parse_log("a|a|b");
  ValidationReport r = validate(g);
  CHECK_FALSE(r.compressed);
  REQUIRE(r.compression_violations.size() == 1);
  CHECK(r.compression_violations[0] == Edge{"a", "a", "b"});
}

TEST_CASE("validate flags repeated labels") {
  LabeledOrientedGraph g = parse_log("a|x|b\nb|x|c");
  ValidationReport r = validate(g);
  CHECK_FALSE(r.injective);
  REQUIRE(r.repeated_labels.size() == 1);
  CHECK(r.repeated_labels[0] == "x");
}

TEST_CASE("validate computes shapes on the underlying undirected graph") {
  CHECK(validate(cyclic_shift_family(11)).shape == Shape::Interval);
  CHECK(validate(cyclic_shift_family(11)).connected);

  // star on four leaves is a tree but not an interval (labels drawn from
  // the star's own vertices so no isolated label-only vertex appears)
  LabeledOrientedGraph star = parse_log("c|l2|l1\nc|l3|l2\nc|l4|l3\nc|l1|l4");
  CHECK(validate(star).shape == Shape::Tree);

  // label-only names become isolated vertices and break connectivity
  LabeledOrientedGraph labeled_away = parse_log("a|x|b");
  CHECK(validate(labeled_away).shape == Shape::Forest);
  CHECK_FALSE(validate(labeled_away).connected);

  // two components
  LabeledOrientedGraph forest = parse_log("a|x|b\nc|x|d");
  ValidationReport fr = validate(forest);
  CHECK(fr.shape == Shape::Forest);
  CHECK_FALSE(fr.connected);

  // parallel edges and loops are cycles
  CHECK(validate(parse_log("a|x|b\nb|y|a")).shape == Shape::HasCycle);
  CHECK(validate(parse_log("a|b|a")).shape == Shape::HasCycle);

  // a single vertex with no edges is an interval
  LabeledOrientedGraph point({"z"}, {});
  ValidationReport pr = validate(point);
  CHECK(pr.shape == Shape::Interval);
  CHECK(pr.connected);
}

TEST_CASE("validate is equivariant under vertex renaming") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledOrientedGraph g = testkit::random_lot(rng, 6);
    std::map<std::string, std::string> map;
    std::vector<std::string> names = g.vertices();
    std::shuffle(names.begin(), names.end(), rng);
    for (size_t i = 0; i < names.size(); ++i) map[g.vertices()[i]] = "w" + names[i];
    LabeledOrientedGraph h = testkit::rename(g, map);
    ValidationReport rg = validate(g), rh = validate(h);
    CHECK(rg.compressed == rh.compressed);
    CHECK(rg.injective == rh.injective);
    CHECK(rg.shape == rh.shape);
    CHECK(rg.compression_violations.size() == rh.compression_violations.size());
    std::vector<std::string> mapped;
    for (const std::string& v : rg.repeated_labels) mapped.push_back(map[v]);
    CHECK(mapped == rh.repeated_labels);
  }
}

TEST_CASE("cyclic_shift_family matches the modular description") {
  LabeledOrientedGraph g11 = cyclic_shift_family(11);
  CHECK(g11.vertices().size() == 11);
  CHECK(g11.edges().size() == 10);
  std::vector<std::string> labels;
  for (const Edge& e : g11.edges()) labels.push_back(e.label);
  CHECK(labels ==
        std::vector<std::string>{"3", "4", "5", "6", "7", "8", "9", "10", "0", "1"});

  LabeledOrientedGraph g4 = cyclic_shift_family(4);
  CHECK(g4.edges() == std::vector<Edge>{{"0", "3", "1"}, {"1", "0", "2"}, {"2", "1", "3"}});

  LabeledOrientedGraph g3 = cyclic_shift_family(3);
  CHECK(g3.edges()[0] == Edge{"0", "0", "1"});
  CHECK_FALSE(validate(g3).compressed);

  CHECK_THROWS_AS(cyclic_shift_family(1), Error);
}

TEST_CASE("cyclic_shift_family is always a path") {
  for (int n = 2; n <= 30; ++n) {
    LabeledOrientedGraph g = cyclic_shift_family(n);
    CHECK(g.vertices().size() == static_cast<size_t>(n));
    CHECK(g.edges().size() == static_cast<size_t>(n - 1));
    CHECK(validate(g).shape == Shape::Interval);
  }
}

namespace {

// Contract check: removing the edges in order always deletes a current leaf
// distinct from z, and what remains is a tree containing z.
void check_collapse_contract(const LabeledOrientedGraph& t, const std::string& z,
                             const std::vector<Edge>& order) {
  REQUIRE(order.size() == t.edges().size());
  std::vector<Edge> remaining = t.edges();
  for (const Edge& e : order) {
    std::map<std::string, int> degree;
    for (const Edge& r : remaining) {
      ++degree[r.source];
      ++degree[r.target];
    }
    bool source_leaf = degree[e.source] == 1 && e.source != z;
    bool target_leaf = degree[e.target] == 1 && e.target != z;
    CHECK((source_leaf || target_leaf));
    auto it = std::find(remaining.begin(), remaining.end(), e);
    REQUIRE(it != remaining.end());
    remaining.erase(it);
  }
  CHECK(remaining.empty());
}

}  // namespace

TEST_CASE("collapse_order collapses the far leaf first on the 4-family") {
  LabeledOrientedGraph g = cyclic_shift_family(4);
  std::vector<Edge> order = collapse_order(g, "0");
  REQUIRE(order.size() == 3);
  CHECK(order[0] == g.edges()[2]);
  CHECK(order[1] == g.edges()[1]);
  CHECK(order[2] == g.edges()[0]);
  check_collapse_contract(g, "0", order);
}

TEST_CASE("collapse_order from the middle of a path") {
  LabeledOrientedGraph g = parse_log("a|c|b\nb|a|c");
  std::vector<Edge> order = collapse_order(g, "b");
  check_collapse_contract(g, "b", order);
}

TEST_CASE("collapse_order on a single vertex is empty") {
  LabeledOrientedGraph point({"z"}, {});
  CHECK(collapse_order(point, "z").empty());
}

TEST_CASE("collapse_order rejects non-trees and unknown roots") {
  CHECK_THROWS_AS(collapse_order(parse_log("a|x|b\nb|y|a"), "a"), Error);
  CHECK_THROWS_AS(collapse_order(cyclic_shift_family(4), "9"), Error);
}

TEST_CASE("collapse_order satisfies its contract on random trees") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    LabeledOrientedGraph t = testkit::random_lot(rng, 2 + static_cast<int>(rng() % 8));
    const std::string z = t.vertices()[rng() % t.vertices().size()];
    check_collapse_contract(t, z, collapse_order(t, z));
  }
}

TEST_CASE("graph constructor enforces its invariants") {
  CHECK_THROWS_AS(LabeledOrientedGraph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(LabeledOrientedGraph({"a", "b"}, {Edge{"a", "q", "b"}}), Error);
  CHECK_THROWS_AS(
      LabeledOrientedGraph({"a", "b"}, {Edge{"a", "b", "b"}, Edge{"a", "b", "b"}}), Error);
}
