#include "tperfect/graph_io.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace tperfect {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kPlanarCodeHeader = ">>planar_code";

void append_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int graph6_digit(char c) {
  const int d = static_cast<unsigned char>(c) - 63;
  if (d < 0 || d > 63) throw ParseError(std::string("invalid graph6 byte '") + c + "'");
  return d;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError("empty graph6 string");
  if (line.front() == ':' || line.front() == '&')
    throw ParseError("sparse6/digraph6 input is not supported");
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = graph6_digit(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw ParseError("truncated graph6 size field");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | graph6_digit(line[k]);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("truncated graph6 size field");
    for (int k = 2; k <= 7; ++k) n = (n << 6) | graph6_digit(line[k]);
    pos = 8;
  }
  const long pairs = n * (n - 1) / 2;
  const long expected = (pairs + 5) / 6;
  if (static_cast<long>(line.size() - pos) != expected)
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                     std::to_string(expected));
  std::vector<Edge> edges;
  long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int digit = graph6_digit(line[pos + k / 6]);
      if (digit & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  if (k % 6 != 0 && (graph6_digit(line[pos + k / 6]) & ((1 << (6 - k % 6)) - 1)) != 0)
    throw ParseError("graph6 padding bits are not zero");
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    auto view = trim(line);
    if (view.starts_with(kGraph6Header)) view.remove_prefix(kGraph6Header.size());
    if (view.empty()) continue;
    out.push_back(from_graph6(view));
  }
  return out;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed JSON graph: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid JSON graph: ") + ex.what());
  }
}

std::vector<Graph> read_json_graphs(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<Graph> out;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return out;
  try {
    if (text[first] == '[') {
      for (const auto& item : nlohmann::json::parse(text)) out.push_back(graph_from_json(item));
      return out;
    }
    std::istringstream lines(text);
    std::string line;
    std::string pending;
    // Objects may span several lines; accumulate until the text parses.
    while (std::getline(lines, line)) {
      pending += line;
      pending += '\n';
      if (trim(pending).empty()) {
        pending.clear();
        continue;
      }
      auto parsed = nlohmann::json::parse(pending, nullptr, false);
      if (parsed.is_discarded()) continue;
      out.push_back(graph_from_json(parsed));
      pending.clear();
    }
    if (!trim(pending).empty()) throw ParseError("trailing unparseable JSON input");
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed JSON input: ") + ex.what());
  }
  return out;
}

std::vector<PlaneGraph> read_planar_code(std::istream& in) {
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  bool big_endian = false;
  if (std::string_view(data).starts_with(kPlanarCodeHeader)) {
    const auto close = data.find("<<", kPlanarCodeHeader.size());
    if (close == std::string::npos) throw ParseError("unterminated planar_code header");
    const auto tag = trim(std::string_view(data).substr(kPlanarCodeHeader.size(),
                                                         close - kPlanarCodeHeader.size()));
    if (tag == "be") big_endian = true;
    else if (!tag.empty() && tag != "le") throw ParseError("unknown planar_code header tag");
    pos = close + 2;
  }

  auto byte = [&]() -> unsigned {
    if (pos >= data.size()) throw ParseError("truncated planar code");
    return static_cast<unsigned char>(data[pos++]);
  };

  std::vector<PlaneGraph> out;
  while (pos < data.size()) {
    bool wide = false;
    unsigned n = byte();
    if (n == 0) {
      wide = true;
      const unsigned a = byte(), b = byte();
      n = big_endian ? (a << 8) | b : (b << 8) | a;
    }
    auto entry = [&]() -> unsigned {
      if (!wide) return byte();
      const unsigned a = byte(), b = byte();
      return big_endian ? (a << 8) | b : (b << 8) | a;
    };
    PlaneGraph pg;
    pg.rotation.resize(n);
    std::vector<Edge> edges;
    for (unsigned v = 0; v < n; ++v) {
      for (unsigned w = entry(); w != 0; w = entry()) {
        if (w > n) throw ParseError("planar code neighbour " + std::to_string(w) + " out of range");
        pg.rotation[v].push_back(static_cast<Vertex>(w - 1));
        if (v < w - 1) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w - 1));
      }
    }
    for (unsigned v = 0; v < n; ++v)
      for (Vertex w : pg.rotation[v]) {
        const auto& back = pg.rotation[w];
        if (std::find(back.begin(), back.end(), static_cast<Vertex>(v)) == back.end())
          throw ParseError("planar code adjacency is not symmetric");
      }
    try {
      pg.graph = Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("planar code does not describe a simple graph: ") + ex.what());
    }
    out.push_back(std::move(pg));
  }
  return out;
}

void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs) {
  out << ">>planar_code<<";
  for (const auto& pg : graphs) {
    const int n = pg.graph.vertex_count();
    const bool wide = n >= 256;
    auto put = [&](unsigned value) {
      if (wide) {
        out.put(static_cast<char>(value & 0xff));
        out.put(static_cast<char>(value >> 8));
      } else {
        out.put(static_cast<char>(value));
      }
    };
    if (wide) out.put(0);
    put(static_cast<unsigned>(n));
    for (int v = 0; v < n; ++v) {
      for (Vertex w : pg.rotation[v]) put(static_cast<unsigned>(w + 1));
      put(0);
    }
  }
}

GraphFormat parse_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  if (name == "json") return GraphFormat::json;
  if (name == "planarcode" || name == "planar_code" || name == "pc") return GraphFormat::planar_code;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

GraphFormat sniff_format(std::istream& in) {
  std::string head;
  const auto start = in.tellg();
  char c;
  while (head.size() < kPlanarCodeHeader.size() && in.get(c)) head.push_back(c);
  in.clear();
  in.seekg(start);
  if (std::string_view(head).starts_with(kPlanarCodeHeader)) return GraphFormat::planar_code;
  auto first = head.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (head[first] == '{' || head[first] == '['))
    return GraphFormat::json;
  return GraphFormat::graph6;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return read_graph6(in);
    case GraphFormat::json:
      return read_json_graphs(in);
    case GraphFormat::planar_code: {
      std::vector<Graph> out;
      for (auto& pg : read_planar_code(in)) out.push_back(std::move(pg.graph));
      return out;
    }
  }
  return {};
}

}  // namespace tperfect
