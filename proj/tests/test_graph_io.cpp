#include <gtest/gtest.h>

#include <sstream>

#include "support/graph_enum.hpp"
#include "tperfect/generators.hpp"
#include "tperfect/graph_io.hpp"
#include "tperfect/planar.hpp"

using namespace tperfect;
using namespace tperfect::testing;

namespace {

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

}  // namespace

// Reference strings produced by an independent graph6 encoder.
TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  const Graph octahedral(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                            {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_EQ(to_graph6(octahedral), "E}lw");
  EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
  const auto long_path = to_graph6(path_graph(70));
  EXPECT_EQ(long_path.size(), 407u);
  EXPECT_EQ(long_path.substr(0, 6), "~?@EhC");
}

TEST(Graph6, DecodesKnownEncodings) {
  EXPECT_EQ(from_graph6("C~"), complete_graph(4));
  EXPECT_EQ(from_graph6("IheA@GUAo"), petersen());
  EXPECT_EQ(from_graph6(to_graph6(path_graph(70))), path_graph(70));
}

TEST(Graph6, RoundTripsAllSmallGraphsAndRandomOnes) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) EXPECT_EQ(from_graph6(to_graph6(g)), g);
  for (int seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(20 + seed * 3, 10, seed);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);       // body missing
  EXPECT_THROW(from_graph6("C~~"), ParseError);     // body too long
  EXPECT_THROW(from_graph6("Bx"), ParseError);      // padding bit set
  EXPECT_THROW(from_graph6(":Fa@x^"), ParseError);  // sparse6
  EXPECT_THROW(from_graph6("C\x01"), ParseError);
}

TEST(Graph6, StreamSkipsHeaderAndBlankLines) {
  std::istringstream in(">>graph6<<C~\n\nDhc\n");
  const auto graphs = read_graph6(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0], complete_graph(4));
  EXPECT_EQ(graphs[1], cycle_graph(5));
}

TEST(Json, RoundTripAndShape) {
  const Graph g = path_graph(3);
  const auto j = to_json(g);
  EXPECT_EQ(j.dump(), R"({"edges":[[0,1],[1,2]],"n":3})");
  EXPECT_EQ(graph_from_json(j), g);
  for (int seed = 0; seed < 30; ++seed) {
    const Graph h = random_graph(12, 30, seed);
    EXPECT_EQ(graph_from_json(nlohmann::json::parse(to_json(h).dump())), h);
  }
}

TEST(Json, ReadsObjectArrayAndLines) {
  std::istringstream one(R"({"n": 2, "edges": [[0, 1]]})");
  EXPECT_EQ(read_json_graphs(one).size(), 1u);
  std::istringstream array(R"([{"n": 2, "edges": []}, {"n": 3, "edges": [[0, 2]]}])");
  EXPECT_EQ(read_json_graphs(array).size(), 2u);
  std::istringstream lines("{\"n\": 1, \"edges\": []}\n{\"n\": 3,\n \"edges\": [[0, 1]]}\n");
  const auto graphs = read_json_graphs(lines);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[1], Graph(3, {{0, 1}}));
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")), ParseError);
  std::istringstream broken(R"({"n": 2, "edges": [[0, 1]])");
  EXPECT_THROW(read_json_graphs(broken), ParseError);
}

TEST(PlanarCode, ReadsHandWrittenK4) {
  // K4 with each neighbour list in clockwise order, one-byte entries.
  const std::string bytes = std::string(">>planar_code<<") +
                            std::string("\x04\x02\x03\x04\x00\x01\x04\x03\x00"
                                        "\x01\x02\x04\x00\x01\x03\x02\x00",
                                        17);
  std::istringstream in(bytes);
  const auto graphs = read_planar_code(in);
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0].graph, complete_graph(4));
  EXPECT_EQ(graphs[0].rotation[0], (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(is_valid_planar_rotation(graphs[0].graph, RotationSystem{graphs[0].rotation}));
}

TEST(PlanarCode, TwoByteEntriesInBothByteOrders) {
  // K3 written with the leading 0 that selects two-byte entries.
  const std::string le("\x00\x03\x00\x02\x00\x03\x00\x00\x00\x03\x00\x01\x00\x00\x00"
                       "\x01\x00\x02\x00\x00\x00",
                       21);
  std::istringstream in_le(">>planar_code le<<" + le);
  EXPECT_EQ(read_planar_code(in_le).at(0).graph, complete_graph(3));
  const std::string be("\x00\x00\x03\x00\x02\x00\x03\x00\x00\x00\x03\x00\x01\x00\x00"
                       "\x00\x01\x00\x02\x00\x00",
                       21);
  std::istringstream in_be(">>planar_code be<<" + be);
  EXPECT_EQ(read_planar_code(in_be).at(0).graph, complete_graph(3));
}

TEST(PlanarCode, RoundTripsEmbeddedTriangulations) {
  std::vector<PlaneGraph> plane;
  for (int seed = 0; seed < 20; ++seed) {
    const Graph g = random_plane_triangulation(6 + seed % 10, 40, seed);
    plane.push_back({g, embed_planar(g)->order});
  }
  std::ostringstream out;
  write_planar_code(out, plane);
  std::istringstream in(out.str());
  EXPECT_EQ(sniff_format(in), GraphFormat::planar_code);
  const auto back = read_planar_code(in);
  ASSERT_EQ(back.size(), plane.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].graph, plane[i].graph);
    EXPECT_EQ(back[i].rotation, plane[i].rotation);
  }
}

TEST(PlanarCode, WideGraphsRoundTrip) {
  const Graph g = cycle_graph(300);
  std::ostringstream out;
  write_planar_code(out, {{g, embed_planar(g)->order}});
  std::istringstream in(out.str());
  EXPECT_EQ(read_planar_code(in).at(0).graph, g);
}

TEST(PlanarCode, RejectsBrokenInput) {
  std::istringstream asym(std::string("\x02\x02\x00\x00", 4));
  EXPECT_THROW(read_planar_code(asym), ParseError);
  std::istringstream range(std::string("\x02\x05\x00\x01\x00", 5));
  EXPECT_THROW(read_planar_code(range), ParseError);
  std::istringstream truncated(std::string("\x03\x02\x00", 3));
  EXPECT_THROW(read_planar_code(truncated), ParseError);
  std::istringstream header(">>planar_code xx<<");
  EXPECT_THROW(read_planar_code(header), ParseError);
}

TEST(Formats, SniffAndParseNames) {
  std::istringstream g6("C~\n"), json(" {\"n\":1,\"edges\":[]}");
  EXPECT_EQ(sniff_format(g6), GraphFormat::graph6);
  EXPECT_EQ(sniff_format(json), GraphFormat::json);
  EXPECT_EQ(read_graphs(json, GraphFormat::json).size(), 1u);
  EXPECT_EQ(parse_format("g6"), GraphFormat::graph6);
  EXPECT_EQ(parse_format("json"), GraphFormat::json);
  EXPECT_EQ(parse_format("planarcode"), GraphFormat::planar_code);
  EXPECT_THROW(parse_format("dot"), std::invalid_argument);
}
