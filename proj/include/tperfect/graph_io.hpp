#ifndef TPERFECT_GRAPH_IO_HPP
#define TPERFECT_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tperfect/graph.hpp"

namespace tperfect {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
// each byte offset by 63. No trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

/// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6(std::istream& in);

// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Accepts a single object, an array of objects, or JSON lines.
std::vector<Graph> read_json_graphs(std::istream& in);

/// A plane graph read from planar code: the graph plus each vertex's
/// neighbour list in the stored (clockwise) order.
struct PlaneGraph {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;
};

// planar code: optional ">>planar_code<<" / ">>planar_code le<<" /
// ">>planar_code be<<" header, then per graph the vertex count followed by
// each vertex's 1-based neighbours, every list closed by 0. Entries are one
// byte; a leading 0 byte switches the graph to two-byte entries
// (little-endian unless the header says be).
std::vector<PlaneGraph> read_planar_code(std::istream& in);

/// Writes the ">>planar_code<<" header once, then one-byte entries when
/// n < 256 and the two-byte little-endian form otherwise.
void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs);

enum class GraphFormat { graph6, json, planar_code };

GraphFormat parse_format(std::string_view name);

/// Picks a format from the first bytes of the stream without consuming them.
GraphFormat sniff_format(std::istream& in);

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

}  // namespace tperfect

#endif  // TPERFECT_GRAPH_IO_HPP
