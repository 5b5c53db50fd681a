#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "gnum/graph.hpp"
#include "gnum/holder.hpp"

using namespace gnum;

namespace {

HolderGraph graph_of(std::uint64_t n) { return build_graph(factorize(n)); }

int vertex(const HolderGraph& g, std::uint64_t p) {
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (g.vertices[i].p == p) return i;
  return -1;
}

}  // namespace

TEST_CASE("build_graph figure and spot cases") {
  const HolderGraph g1827 = graph_of(1827);  // 3^2 * 7 * 29
  REQUIRE(g1827.edges.size() == 2);
  const GraphEdge* weak = g1827.find_edge(vertex(g1827, 3), vertex(g1827, 7));
  const GraphEdge* strong =
      g1827.find_edge(vertex(g1827, 7), vertex(g1827, 29));
  REQUIRE(weak != nullptr);
  REQUIRE(strong != nullptr);
  CHECK(edge_strength(g1827, *weak) == Strength::weak);

  CHECK(graph_of(255).edges.empty());  // 3 * 5 * 17

  const HolderGraph g30 = graph_of(30);
  CHECK(g30.edges.size() == 2);
  CHECK(g30.has_edge(vertex(g30, 2), vertex(g30, 3)));
  CHECK(g30.has_edge(vertex(g30, 2), vertex(g30, 5)));
  CHECK_FALSE(g30.has_edge(vertex(g30, 3), vertex(g30, 5)));
}

TEST_CASE("edge strength on square-incident edges") {
  const HolderGraph g7575 = graph_of(7575);  // 3 * 5^2 * 101
  const GraphEdge* e =
      g7575.find_edge(vertex(g7575, 5), vertex(g7575, 101));
  REQUIRE(e != nullptr);
  CHECK(edge_strength(g7575, *e) == Strength::strong);  // 25 | 100

  const HolderGraph g75 = graph_of(75);  // 3 * 5^2
  const GraphEdge* into = g75.find_edge(vertex(g75, 3), vertex(g75, 5));
  REQUIRE(into != nullptr);
  CHECK(edge_strength(g75, *into) == Strength::weak);  // 3 | 6, 3 not| 4

  // A single-single edge has no weak/strong reading.
  const HolderGraph g6 = graph_of(6);
  CHECK_THROWS_AS(edge_strength(g6, g6.edges[0]), std::invalid_argument);
}

TEST_CASE("edge profiles are downward closed and nonempty") {
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    for (const auto& e : graph_of(n).edges) {
      CHECK_FALSE(e.profile.pairs.empty());
      for (const auto& [i, j] : e.profile.pairs)
        if (i > 1) CHECK(e.profile.contains(i - 1, j));
    }
  }
}

TEST_CASE("decompose") {
  const Decomposition d1155 = decompose(graph_of(1155));  // 3*5*7*11
  REQUIRE(d1155.components.size() == 2);
  CHECK(d1155.cyclic_part() == 1);

  const Decomposition d255 = decompose(graph_of(255));
  CHECK(d255.components.empty());
  CHECK(d255.cyclic_part() == 255);

  const Decomposition d1827 = decompose(graph_of(1827));
  CHECK(d1827.components.size() == 1);
  CHECK(d1827.cyclic_part() == 1);
}

TEST_CASE("decompose reassembles n") {
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    const Decomposition d = decompose(graph_of(n));
    std::uint64_t prod = d.cyclic_part();
    for (const auto& c : d.components) prod *= c.n();
    CHECK(prod == n);
  }
}

TEST_CASE("central subsets") {
  auto masks30 = central_subsets(graph_of(30));
  CHECK(masks30.size() == 2);  // {2,3,5} and {3,5}

  auto masks7 = central_subsets(graph_of(7));
  CHECK(masks7 == std::vector<std::uint32_t>{1});

  auto masks6 = central_subsets(graph_of(6));  // 2 -> 3
  CHECK(masks6.size() == 2);                   // {2,3} and {3}

  CHECK_THROWS_AS(central_subsets(graph_of(75)), std::invalid_argument);
}

TEST_CASE("central subset count equals g for regular square-free graphs") {
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    const HolderGraph g = graph_of(n);
    if (!g.square_free()) continue;
    bool regular = true;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      if (g.out_degree(v) > 1) regular = false;
    if (!regular) continue;
    CHECK(central_subsets(g).size() == g_holder(g));
  }
}

TEST_CASE("degrees and the reversed initial/terminal naming") {
  const HolderGraph g30 = graph_of(30);
  const int two = vertex(g30, 2);
  CHECK(g30.in_degree(two) == 0);
  CHECK(g30.out_degree(two) == 2);
  // Out-degree 0 is "initial", in-degree 0 is "terminal" here.
  auto term30 = terminal_vertices(g30);
  CHECK(std::find(term30.begin(), term30.end(), two) != term30.end());

  const HolderGraph g7 = graph_of(7);
  CHECK(initial_vertices(g7) == std::vector<int>{0});
  CHECK(terminal_vertices(g7) == std::vector<int>{0});

  const HolderGraph g1827 = graph_of(1827);
  const int v29 = vertex(g1827, 29);
  CHECK(g1827.in_degree(v29) == 1);
  CHECK(g1827.out_degree(v29) == 0);
  auto init = initial_vertices(g1827);
  CHECK(std::find(init.begin(), init.end(), v29) != init.end());
}

TEST_CASE("dot output") {
  const std::string dot6 = to_dot(graph_of(6));
  CHECK(dot6.find("->") != std::string::npos);
  CHECK(dot6.find("dashed") == std::string::npos);

  const std::string dot1827 = to_dot(graph_of(1827));
  CHECK(dot1827.find("style=dashed") != std::string::npos);
  // Exactly one dashed and one solid arrow.
  std::size_t arrows = 0;
  for (std::size_t at = dot1827.find("->"); at != std::string::npos;
       at = dot1827.find("->", at + 1))
    ++arrows;
  CHECK(arrows == 2);

  const std::string dot255 = to_dot(graph_of(255));
  CHECK(dot255.find("->") == std::string::npos);
  CHECK(dot255.find("\"3\"") != std::string::npos);
}

TEST_CASE("json serialization") {
  const auto j = nlohmann::json::parse(to_json(graph_of(1827)));
  CHECK(j["n"] == 1827);
  REQUIRE(j["vertices"].size() == 3);
  CHECK(j["vertices"][0]["p"] == 3);
  CHECK(j["vertices"][0]["a"] == 2);
  REQUIRE(j["edges"].size() == 2);
  bool saw_weak = false, saw_plain = false;
  for (const auto& e : j["edges"]) {
    if (e["strength"] == "weak") saw_weak = true;
    if (e["strength"] == "n/a") saw_plain = true;  // the 7 -> 29 edge
  }
  CHECK(saw_weak);
  CHECK(saw_plain);
}

TEST_CASE("independent parts keep their edges") {
  // 45 = 3^2 * 5 and 29 * 59 are arithmetically independent.
  const HolderGraph whole = graph_of(45 * 29 * 59);
  const HolderGraph left = graph_of(45);
  const HolderGraph right = graph_of(29 * 59);
  CHECK(whole.edges.size() == left.edges.size() + right.edges.size());
}
