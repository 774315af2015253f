#include "doctest.h"

#include "holeplex/graph.hpp"
#include "test_util.hpp"

#include <sstream>

using namespace holeplex;

TEST_CASE("add_node assigns sequential ids and rejects duplicate labels") {
  LabeledGraph g;
  CHECK(g.add_node("a") == 0);
  CHECK(g.add_node("b") == 1);
  CHECK_THROWS_AS(g.add_node("a"), std::invalid_argument);
  CHECK(g.node_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.find_node("b") == NodeId{1});
  CHECK_FALSE(g.find_node("zzz").has_value());
}

TEST_CASE("add_edge keeps adjacency sorted and validates input") {
  LabeledGraph g;
  for (int i = 0; i < 4; ++i) g.add_node("v" + std::to_string(i));
  g.add_edge(2, 0, EdgeColor::Blue);
  g.add_edge(0, 3, EdgeColor::Red);
  g.add_edge(0, 1, EdgeColor::Blue);
  const auto& nbrs = g.neighbors(0);
  CHECK(nbrs == std::vector<NodeId>{1, 2, 3});
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
  CHECK(g.are_adjacent(3, 0));
  CHECK_FALSE(g.are_adjacent(1, 2));
  CHECK(g.edge_color(3, 0) == EdgeColor::Red);
  CHECK_THROWS_AS(g.add_edge(1, 1, EdgeColor::Blue), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1, EdgeColor::Red), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 9, EdgeColor::Blue), std::invalid_argument);
  CHECK(g.edge_color(1, 2) == std::nullopt);  // valid nodes, no edge
}

TEST_CASE("has_fill_edges reports fill presence") {
  auto g = testutil::cycle_graph(5);
  CHECK_FALSE(g.has_fill_edges());
  g.add_edge(0, 2, EdgeColor::Fill);
  CHECK(g.has_fill_edges());
}

TEST_CASE("is_chordless_cycle on hand-checked examples") {
  auto c5 = testutil::cycle_graph(5);
  CHECK(is_chordless_cycle(c5, std::vector<NodeId>{0, 1, 2, 3, 4}));
  CHECK(is_chordless_cycle(c5, std::vector<NodeId>{2, 1, 0, 4, 3}));
  CHECK_FALSE(is_chordless_cycle(c5, std::vector<NodeId>{0, 1, 2, 4, 3}));

  auto chorded = testutil::cycle_graph(5);
  chorded.add_edge(0, 2, EdgeColor::Blue);
  CHECK_FALSE(is_chordless_cycle(chorded, std::vector<NodeId>{0, 1, 2, 3, 4}));
  CHECK(is_chordless_cycle(chorded, std::vector<NodeId>{0, 2, 3, 4}));

  CHECK_THROWS_AS(is_chordless_cycle(c5, std::vector<NodeId>{0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_chordless_cycle(c5, std::vector<NodeId>{0, 1, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_chordless_cycle(c5, std::vector<NodeId>{0, 1, 2, 99}),
                  std::invalid_argument);
}

TEST_CASE("is_chordless_cycle agrees with the definitional check on random graphs") {
  int cycles_seen = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 4 + seed % 7;  // up to 10 nodes
    const auto g = testutil::random_graph(seed, n, 0.35);
    for (const auto& cyc : testutil::all_simple_cycles(g, 4)) {
      ++cycles_seen;
      CHECK(is_chordless_cycle(g, cyc) == testutil::chordless_by_definition(g, cyc));
    }
  }
  CHECK(cycles_seen > 100);  // the sweep actually exercised something
}

TEST_CASE("canonical_cycle rotates to the minimum and fixes direction") {
  CHECK(canonical_cycle(std::vector<NodeId>{3, 4, 0, 1, 2}) ==
        std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(canonical_cycle(std::vector<NodeId>{2, 1, 0, 4, 3}) ==
        std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(canonical_cycle(std::vector<NodeId>{0, 4, 3, 2, 1}) ==
        std::vector<NodeId>{0, 1, 2, 3, 4});
  // all rotations and reflections of one cycle map to a single form
  const std::vector<NodeId> base{5, 2, 9, 4, 7, 3};
  const auto expect = canonical_cycle(base);
  std::vector<NodeId> rot = base;
  for (std::size_t r = 0; r < base.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    CHECK(canonical_cycle(rot) == expect);
    auto rev = rot;
    std::reverse(rev.begin(), rev.end());
    CHECK(canonical_cycle(rev) == expect);
  }
}

TEST_CASE("export_dot emits a parseable skeleton with color attributes") {
  LabeledGraph g;
  g.add_node("u");
  g.add_node("c1.1");
  g.add_node("t \"q\"");
  g.add_edge(0, 1, EdgeColor::Blue);
  g.add_edge(1, 2, EdgeColor::Red);
  g.add_edge(0, 2, EdgeColor::Fill);
  const auto dot = export_dot(g);
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot.find("\"u\";") != std::string::npos);
  CHECK(dot.find("\"u\" -- \"c1.1\" [color=blue];") != std::string::npos);
  CHECK(dot.find("[color=red, penwidth=2];") != std::string::npos);
  CHECK(dot.find("[color=green];") != std::string::npos);
  CHECK(dot.find("\\\"q\\\"") != std::string::npos);  // quotes escaped
  CHECK(dot.back() == '\n');
  CHECK(dot.find("}\n") == dot.size() - 2);
}

TEST_CASE("graph json round-trips") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = testutil::random_graph(seed, 8, 0.4);
    const auto j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);
    CHECK(graph_to_json(graph_from_json(j)) == j);
  }
}

TEST_CASE("graph json round-trips all edge colors") {
  LabeledGraph g;
  g.add_node("a");
  g.add_node("b");
  g.add_node("c");
  g.add_edge(0, 1, EdgeColor::Blue);
  g.add_edge(1, 2, EdgeColor::Red);
  g.add_edge(0, 2, EdgeColor::Fill);
  const auto back = graph_from_json(graph_to_json(g));
  CHECK(back.edge_color(0, 1) == EdgeColor::Blue);
  CHECK(back.edge_color(1, 2) == EdgeColor::Red);
  CHECK(back.edge_color(0, 2) == EdgeColor::Fill);
}

TEST_CASE("graph json rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json("{}"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes": [], "edges": 3})"),
                  std::runtime_error);
  // node ids must match their position
  CHECK_THROWS_AS(graph_from_json(
                      R"({"nodes": [{"id": 1, "label": "a"}], "edges": []})"),
                  std::runtime_error);
  // unknown color
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"nodes": [{"id": 0, "label": "a"}, {"id": 1, "label": "b"}],
              "edges": [{"a": 0, "b": 1, "color": "mauve"}]})"),
      std::runtime_error);
  // duplicate label
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"nodes": [{"id": 0, "label": "a"}, {"id": 1, "label": "a"}],
              "edges": []})"),
      std::runtime_error);
  // edge endpoint out of range
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"nodes": [{"id": 0, "label": "a"}],
              "edges": [{"a": 0, "b": 5, "color": "blue"}]})"),
      std::runtime_error);
}

TEST_CASE("edge color names round-trip through strings") {
  for (auto color : {EdgeColor::Blue, EdgeColor::Red, EdgeColor::Fill}) {
    CHECK(edge_color_from_string(to_string(color)) == color);
  }
  CHECK_FALSE(edge_color_from_string("chartreuse").has_value());
}
