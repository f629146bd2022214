// tperfect: classify planar graphs for perfection, h-perfection and
// t-perfection, cross-check the triangulation characterizations over generated corpora,
// dump stable set relaxations, and generate corpora.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tperfect/classify.hpp"
#include "tperfect/corpus.hpp"
#include "tperfect/generators.hpp"
#include "tperfect/graph_io.hpp"
#include "tperfect/planar.hpp"
#include "tperfect/polytope.hpp"

using namespace tperfect;

namespace {

constexpr int kInputError = 1;
constexpr int kMismatch = 2;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  std::vector<std::string> named;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Graph file, or - for stdin");
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "g6", "json", "planarcode"}));
  cmd->add_option("--named", in.named, "Built-in graph (k4, c5, w5, figure1, octahedron, ...)");
}

std::vector<Graph> load_graphs(const InputOptions& in) {
  std::vector<Graph> graphs;
  for (const auto& name : in.named) graphs.push_back(named_graph(name));
  if (in.path.empty()) {
    if (graphs.empty()) throw std::invalid_argument("no input: give a path, - or --named");
    return graphs;
  }
  std::stringstream buffer;
  if (in.path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + in.path + "'");
    buffer << file.rdbuf();
  }
  const GraphFormat format = in.format == "auto" ? sniff_format(buffer) : parse_format(in.format);
  for (auto& g : read_graphs(buffer, format)) graphs.push_back(std::move(g));
  return graphs;
}

void write_graphs(std::ostream& out, const std::vector<Graph>& graphs, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      for (const auto& g : graphs) out << to_graph6(g) << '\n';
      break;
    case GraphFormat::json:
      for (const auto& g : graphs) out << to_json(g).dump() << '\n';
      break;
    case GraphFormat::planar_code: {
      std::vector<PlaneGraph> plane;
      for (const auto& g : graphs) {
        auto rotation = embed_planar(g);
        if (!rotation) throw std::invalid_argument("planar code needs planar graphs");
        plane.push_back({g, rotation->order});
      }
      write_planar_code(out, plane);
      break;
    }
  }
}

CheckOptions check_options(const std::string& flavor, int max_oracle_n, const std::string& certs) {
  CheckOptions o;
  o.perfect = flavor == "all" || flavor == "perfect";
  o.h = flavor == "all" || flavor == "h";
  o.t = flavor == "all" || flavor == "t";
  o.max_oracle_n = max_oracle_n;
  o.certificates = certs == "on";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfection, h-perfection and t-perfection of planar graphs"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (default: runtime choice)");

  // check
  auto* check = app.add_subcommand("check", "Classify each input graph; one JSON report per line");
  InputOptions check_in;
  std::string check_flavor = "all";
  std::string certificates = "on";
  int check_max_n = 14;
  add_input_options(check, check_in);
  check->add_option("--flavor", check_flavor)->check(CLI::IsMember({"t", "h", "perfect", "all"}));
  check->add_option("--max-oracle-n", check_max_n, "Polytope oracle vertex bound");
  check->add_option("--certificates", certificates)->check(CLI::IsMember({"on", "off"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check the triangulation characterizations over a corpus");
  CorpusSpec spec;
  std::string kind = "mixed";
  InputOptions verify_in;
  bool include_named = false;
  bool records = false;
  int verify_max_n = 14;
  verify->add_option("--n-min", spec.n_min);
  verify->add_option("--n-max", spec.n_max);
  verify->add_option("--count", spec.count);
  verify->add_option("--seed", spec.seed);
  verify->add_option("--flips", spec.flips, "Flip attempts per graph (-1: random per graph)");
  verify->add_option("--kind", kind)
      ->check(CLI::IsMember({"random", "stacked", "mindeg4", "mixed"}));
  verify->add_option("--max-oracle-n", verify_max_n);
  verify->add_flag("--include-named", include_named, "Add the built-in triangulations");
  verify->add_flag("--records", records, "Print one JSON record per graph");
  verify->add_option("--input", verify_in.path, "Verify graphs from a file instead of generating");
  verify->add_option("--format", verify_in.format)
      ->check(CLI::IsMember({"auto", "g6", "json", "planarcode"}));
  verify->add_option("--named", verify_in.named, "Verify built-in graphs instead of generating");

  // polytope
  auto* polytope = app.add_subcommand("polytope", "Dump a relaxation and its vertices as JSON");
  InputOptions poly_in;
  std::string poly_flavor = "t";
  int poly_max_n = 14;
  add_input_options(polytope, poly_in);
  polytope->add_option("--flavor", poly_flavor)->check(CLI::IsMember({"t", "h", "perfect"}));
  polytope->add_option("--max-oracle-n", poly_max_n);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a corpus with a manifest");
  CorpusSpec gen_spec;
  std::string gen_kind = "mixed";
  std::string gen_format = "g6";
  std::string output;
  std::string manifest_path;
  std::vector<std::string> gen_named;
  gen->add_option("--kind", gen_kind)
      ->check(CLI::IsMember({"random", "stacked", "mindeg4", "mixed", "named"}));
  gen->add_option("--named", gen_named, "Built-in graphs (with --kind named)");
  gen->add_option("--n-min", gen_spec.n_min);
  gen->add_option("--n-max", gen_spec.n_max);
  gen->add_option("--count", gen_spec.count);
  gen->add_option("--seed", gen_spec.seed);
  gen->add_option("--flips", gen_spec.flips);
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"g6", "json", "planarcode"}));
  gen->add_option("-o,--output", output, "Corpus file (default: stdout)");
  gen->add_option("--manifest", manifest_path, "Manifest file (default: <output>.manifest.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is an input error
    return app.exit(e) == 0 ? 0 : kInputError;
  }
  set_thread_count(threads);

  try {
    if (*check) {
      const auto graphs = load_graphs(check_in);
      const auto reports = classify_corpus(
          graphs, check_options(check_flavor, check_max_n, certificates), Execution::parallel);
      return write_reports(reports, std::cout, std::cerr);
    }

    if (*verify) {
      spec.kind = parse_corpus_kind(kind);
      std::vector<Graph> graphs;
      if (!verify_in.path.empty() || !verify_in.named.empty()) graphs = load_graphs(verify_in);
      else graphs = generate_corpus(spec);
      if (include_named)
        for (const auto& name : named_triangulations()) graphs.push_back(named_graph(name));
      const auto start = std::chrono::steady_clock::now();
      const auto results =
          verify_corpus(graphs, VerifyOptions{OracleOptions{verify_max_n}}, Execution::parallel);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (records)
        for (const auto& r : results) std::cout << to_json(r).dump() << '\n';
      const auto summary = summarize(results);
      auto j = to_json(summary);
      j["seconds"] = seconds;
      std::cout << j.dump() << '\n';
      for (auto i : summary.violating) std::cerr << to_json(results[i]).dump() << '\n';
      return summary.violations == 0 ? 0 : kMismatch;
    }

    if (*polytope) {
      const auto flavor = parse_flavor(poly_flavor);
      for (const auto& g : load_graphs(poly_in)) {
        if (g.vertex_count() > poly_max_n)
          throw OracleSizeExceeded("graph exceeds --max-oracle-n " + std::to_string(poly_max_n));
        const auto system = build_system(g, flavor);
        const auto vertices = enumerate_vertices(system);
        const auto verdict = is_integral(vertices);
        nlohmann::json j;
        j["graph6"] = to_graph6(g);
        j["flavor"] = to_string(flavor);
        j["system"] = to_json(system);
        j["vertices"] = to_json(vertices)["vertices"];
        j["integral"] = verdict.integral;
        j["fractional_witness"] = verdict.witness ? to_json(*verdict.witness) : nlohmann::json();
        std::cout << j.dump() << '\n';
      }
      return 0;
    }

    if (*gen) {
      std::vector<Graph> graphs;
      if (gen_kind == "named") {
        for (const auto& name : gen_named) graphs.push_back(named_graph(name));
      } else {
        gen_spec.kind = parse_corpus_kind(gen_kind);
        graphs = generate_corpus(gen_spec);
      }
      const auto format = parse_format(gen_format);
      if (output.empty()) {
        write_graphs(std::cout, graphs, format);
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot write '" + output + "'");
        write_graphs(file, graphs, format);
        if (manifest_path.empty()) manifest_path = output + ".manifest.json";
      }
      if (!manifest_path.empty()) {
        auto m = manifest(gen_spec, graphs.size());
        if (gen_kind == "named") {
          m["generator"] = "named";
          m["names"] = gen_named;
        }
        m["format"] = gen_format;
        std::ofstream(manifest_path) << m.dump(2) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInputError;
  }
  return 0;
}
