// Copyright 2026 The orbitkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// orbitkit: vertex orbits, transitivity numbers, graph products and
// orbit-accelerated vertex properties from the command line.
//
// Exit codes: 0 success, 1 usage or other operational error, 2 parse error,
// 3 automorphism search budget exceeded, 4 product size limit,
// 5 unknown property, 6 disconnected graph for a distance property.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbitkit/automorphism.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/graph.hpp"
#include "orbitkit/invariants.hpp"
#include "orbitkit/io.hpp"
#include "orbitkit/orbits.hpp"
#include "orbitkit/products.hpp"
#include "orbitkit/theorems.hpp"

namespace {

using namespace orbitkit;
using Json = nlohmann::ordered_json;

enum class InputFormat { kGraph6, kEdgeList };
enum class OutputFormat { kJson, kTable, kGraph6 };

struct CliConfig {
  InputFormat input = InputFormat::kEdgeList;
  OutputFormat output = OutputFormat::kJson;
  bool output_given = false;
  std::int64_t node_budget = SearchOptions{}.node_budget;
  std::int64_t product_limit = ProductOptions{}.max_vertices;

  SearchOptions search() const { return {node_budget}; }
  OutputFormat output_or(OutputFormat fallback) const {
    return output_given ? output : fallback;
  }
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path, const CliConfig& config) {
  std::string text = read_input(path);
  if (config.input == InputFormat::kGraph6) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' ')) {
      text.pop_back();
    }
    return parse_graph6(text);
  }
  return parse_edge_list(text);
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void run_orbits(const std::string& input, const CliConfig& config) {
  const Graph g = load_graph(input, config);
  const OrbitPartition orbits = compute_orbits(g, config.search());
  if (config.output_or(OutputFormat::kJson) == OutputFormat::kTable) {
    std::cout << to_table(orbits);
  } else {
    emit_json(to_json(orbits));
  }
}

void run_tnumber(const std::string& input, const CliConfig& config) {
  const Graph g = load_graph(input, config);
  std::cout << transitivity_number(g, config.search()) << "\n";
}

void run_product(const std::string& kind_name, const std::string& g_path,
                 const std::string& h_path, const CliConfig& config) {
  auto kind = parse_product_kind(kind_name);
  if (!kind) throw InputError("unknown product kind '" + kind_name + "'");
  const Graph g = load_graph(g_path, config);
  const Graph h = load_graph(h_path, config);
  const ProductGraph product =
      make_product(*kind, g, h, ProductOptions{config.product_limit});

  const OutputFormat out = config.output_or(OutputFormat::kGraph6);
  if (out == OutputFormat::kJson) {
    Json j;
    j["kind"] = to_string(*kind);
    j["n"] = product.graph.num_vertices();
    j["m"] = product.graph.num_edges();
    j["graph6"] = to_graph6(product.graph);
    auto& legend = j["legend"] = Json::array();
    for (Vertex v = 0; v < product.graph.num_vertices(); ++v) {
      legend.push_back(product.map.label(v));
    }
    emit_json(j);
    return;
  }
  if (out == OutputFormat::kTable) {
    std::cout << to_edge_list(product.graph);
  } else {
    std::cout << to_graph6(product.graph) << "\n";
  }
  // The legend goes to stderr so stdout stays a parseable graph.
  for (Vertex v = 0; v < product.graph.num_vertices(); ++v) {
    std::cerr << "# " << v << " = " << product.map.label(v) << "\n";
  }
}

void run_property(const std::string& input, const std::string& name, bool fast,
                  const CliConfig& config) {
  find_property(name);  // unknown names fail before any search
  const Graph g = load_graph(input, config);
  const OrbitPartition orbits = compute_orbits(g, config.search());
  const PropertyTable table = fast ? evaluate_property_fast(g, orbits, name)
                                   : evaluate_property_naive(g, orbits, name);
  if (config.output_or(OutputFormat::kJson) == OutputFormat::kTable) {
    std::cout << "property " << table.property_name << "\nr " << orbits.r()
              << "\ndistinct_values " << distinct_value_count(table) << "\n";
    for (const auto& [rep, value] : table.per_orbit) {
      std::cout << rep << " " << value.to_string() << "\n";
    }
  } else {
    emit_json(property_report(table, orbits.r()));
  }
}

void run_verify(const std::string& theorem, int max, const std::string& kinds,
                const std::string& corpus_dir, const CliConfig& config) {
  auto id = parse_theorem_id(theorem);
  if (!id) throw InputError("unknown theorem id '" + theorem + "'");
  HarnessOptions options;
  options.search = config.search();

  std::vector<TheoremReport> reports;
  switch (*id) {
    case TheoremId::kPathProduct:
      reports.push_back(verify_path_product(max > 0 ? max : 7, options));
      break;
    case TheoremId::kPathSquare:
      reports.push_back(verify_path_square(max > 0 ? max : 7, options));
      break;
    case TheoremId::kProductGeneral: {
      const int bound = max > 0 ? max : 5;
      const auto corpus = load_corpus(corpus_dir, bound);
      for (auto kind : {ProductKind::kCartesian, ProductKind::kStrong}) {
        if (kinds != "both" && kinds != to_string(kind)) continue;
        reports.push_back(counterexample_search(corpus, bound, kind, options));
      }
      break;
    }
    case TheoremId::kProductIsomorphic: {
      const int bound = max > 0 ? max : 5;
      const auto corpus = load_corpus(corpus_dir, bound);
      reports.push_back(verify_product_isomorphic(corpus, bound, options));
      break;
    }
  }

  if (config.output_or(OutputFormat::kTable) == OutputFormat::kJson) {
    if (reports.size() == 1) {
      emit_json(to_json(reports.front()));
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      emit_json(all);
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) std::cout << "\n";
      std::cout << to_table(reports[i]);
    }
  }
}

void run_bench(const std::string& input, const std::string& name, int repeat,
               const CliConfig& config) {
  find_property(name);
  const Graph g = load_graph(input, config);
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  const OrbitPartition orbits = compute_orbits(g, config.search());
  auto t1 = Clock::now();
  PropertyTable naive;
  PropertyTable fast;
  for (int i = 0; i < repeat; ++i) naive = evaluate_property_naive(g, orbits, name);
  auto t2 = Clock::now();
  for (int i = 0; i < repeat; ++i) fast = evaluate_property_fast(g, orbits, name);
  auto t3 = Clock::now();

  Json j;
  j["property"] = name;
  j["n"] = g.num_vertices();
  j["r"] = orbits.r();
  j["r_over_n"] = std::to_string(orbits.r()) + "/" +
                  std::to_string(g.num_vertices());
  j["naive_evaluations"] = naive.evaluations;
  j["fast_evaluations"] = fast.evaluations;
  j["outputs_equal"] = naive.expanded == fast.expanded;
  emit_json(j);

  // Timings vary run to run, so they stay off stdout.
  auto ms = [](auto d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  std::cerr << "orbit search " << ms(t1 - t0) << " ms; naive "
            << ms(t2 - t1) / repeat << " ms; fast " << ms(t3 - t2) / repeat
            << " ms; speedup " << (ms(t2 - t1) / std::max(ms(t3 - t2), 1e-9))
            << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex orbits, transitivity numbers and graph products"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "edgelist";
  std::string out = "json";
  app.add_option("--format", format, "Input graph format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  app.add_option("--out", out, "Output format")
      ->check(CLI::IsMember({"json", "table", "graph6"}));
  app.add_option("--node-budget", config.node_budget,
                 "Automorphism search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--product-limit", config.product_limit,
                 "Maximum product vertex count")
      ->check(CLI::PositiveNumber);

  std::string input = "-";
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit partition V/Aut(G)");
  orbits_cmd->add_option("input", input, "Graph file, - for stdin");

  auto* tnumber_cmd = app.add_subcommand("tnumber", "Transitivity number r");
  tnumber_cmd->add_option("input", input, "Graph file, - for stdin");

  std::string kind;
  std::string g_path;
  std::string h_path;
  auto* product_cmd = app.add_subcommand("product", "Build a graph product");
  product_cmd->add_option("kind", kind, "cartesian | strong | corona | join")
      ->required();
  product_cmd->add_option("first", g_path, "First factor file")->required();
  product_cmd->add_option("second", h_path, "Second factor file")->required();

  std::string property;
  bool fast = false;
  auto* property_cmd =
      app.add_subcommand("property", "Automorphism-invariant vertex property");
  property_cmd->add_option("input", input, "Graph file, - for stdin")
      ->required();
  property_cmd->add_option("name", property,
                           "degree | eccentricity | total_distance | "
                           "betweenness")
      ->required();
  property_cmd->add_flag("--fast", fast,
                         "Evaluate once per orbit representative");

  std::string theorem;
  int max = 0;
  std::string kinds = "both";
  std::string corpus_dir = ORBITKIT_CORPUS_DIR;
  if (const char* env = std::getenv("ORBITKIT_CORPUS_DIR")) corpus_dir = env;
  auto* verify_cmd = app.add_subcommand("verify", "Check product theorems");
  verify_cmd
      ->add_option("theorem", theorem,
                   "path-product | path-square | product-general | "
                   "product-isomorphic")
      ->required();
  verify_cmd->add_option("--max", max,
                         "Largest path or factor size (vertices)");
  verify_cmd->add_option("--kind", kinds, "cartesian | strong | both")
      ->check(CLI::IsMember({"cartesian", "strong", "both"}));
  verify_cmd->add_option("--corpus", corpus_dir, "Directory of graph6 corpus");

  int repeat = 1;
  auto* bench_cmd =
      app.add_subcommand("bench", "Naive versus per-representative evaluation");
  bench_cmd->add_option("input", input, "Graph file, - for stdin")->required();
  bench_cmd->add_option("name", property, "Property name")->required();
  bench_cmd->add_option("--repeat", repeat, "Timing repetitions")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors map to the generic code.
    return app.exit(e) == 0 ? 0 : 1;
  }

  config.input = format == "graph6" ? InputFormat::kGraph6 : InputFormat::kEdgeList;
  config.output = out == "table"    ? OutputFormat::kTable
                  : out == "graph6" ? OutputFormat::kGraph6
                                    : OutputFormat::kJson;
  config.output_given = app.count("--out") > 0;

  try {
    if (*orbits_cmd) run_orbits(input, config);
    if (*tnumber_cmd) run_tnumber(input, config);
    if (*product_cmd) run_product(kind, g_path, h_path, config);
    if (*property_cmd) run_property(input, property, fast, config);
    if (*verify_cmd) run_verify(theorem, max, kinds, corpus_dir, config);
    if (*bench_cmd) run_bench(input, property, repeat, config);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const UnknownPropertyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
