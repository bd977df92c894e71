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

#include "orbitkit/theorems.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "orbitkit/generators.hpp"
#include "orbitkit/io.hpp"
#include "orbitkit/isomorphism.hpp"
#include "orbitkit/orbits.hpp"

namespace orbitkit {
namespace {

std::int64_t path_r(int n) { return (n + 1) / 2; }

std::string path_name(int n) { return "P_" + std::to_string(n); }

TheoremInstance evaluate_product(const Graph& g, const Graph& h,
                                 ProductKind kind, std::string factors,
                                 std::int64_t predicted,
                                 const HarnessOptions& options) {
  ProductOptions product_options;
  product_options.max_vertices = kMaxVertices;
  const Graph product = make_product(kind, g, h, product_options).graph;

  TheoremInstance out;
  out.factors = std::move(factors);
  out.kind = kind;
  out.predicted = predicted;
  out.computed = compute_orbits(product, options.search).r();
  if (product.num_vertices() <= options.oracle_max_vertices) {
    const auto group = all_automorphisms(product);
    out.oracle = orbit_partition(product.num_vertices(), group).r();
    if (*out.oracle != out.computed) {
      out.note = "oracle disagrees with generator-based orbits";
    }
  }
  out.pass = out.computed == out.predicted;
  out.within_bound = out.computed <= out.predicted;
  return out;
}

void require_grid_kind(ProductKind kind) {
  if (kind != ProductKind::kCartesian && kind != ProductKind::kStrong) {
    throw std::invalid_argument("product theorems cover cartesian and strong "
                                "products only");
  }
}

void append_note(std::string& note, const std::string& text) {
  if (!note.empty()) note += "; ";
  note += text;
}

std::string join_names(const std::string& a, const std::string& b) {
  return a + " x " + b;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kPathProduct:
      return "path-product";
    case TheoremId::kPathSquare:
      return "path-square";
    case TheoremId::kProductGeneral:
      return "product-general";
    case TheoremId::kProductIsomorphic:
      return "product-isomorphic";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (auto id : {TheoremId::kPathProduct, TheoremId::kPathSquare,
                  TheoremId::kProductGeneral, TheoremId::kProductIsomorphic}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<TheoremInstance> TheoremReport::counterexamples() const {
  std::vector<TheoremInstance> out;
  for (const auto& instance : instances) {
    if (!instance.pass) out.push_back(instance);
  }
  return out;
}

int TheoremReport::pass_count() const {
  return static_cast<int>(std::count_if(
      instances.begin(), instances.end(),
      [](const TheoremInstance& i) { return i.pass; }));
}

TheoremInstance check_path_product(int m, int n,
                                   const HarnessOptions& options) {
  if (m < 1 || n < 1 || m == n) {
    throw std::invalid_argument("path product needs distinct sizes >= 1");
  }
  auto out = evaluate_product(make_path(m), make_path(n), ProductKind::kCartesian,
                              join_names(path_name(m), path_name(n)),
                              path_r(m) * path_r(n), options);
  append_note(out.note, out.within_bound ? "r <= r_m r_n holds"
                                         : "r <= r_m r_n violated");
  return out;
}

TheoremInstance check_path_square(int n, const HarnessOptions& options) {
  if (n < 1) throw std::invalid_argument("path size must be >= 1");
  const std::int64_t r = path_r(n);
  return evaluate_product(make_path(n), make_path(n), ProductKind::kCartesian,
                          join_names(path_name(n), path_name(n)),
                          r * (r + 1) / 2, options);
}

TheoremInstance check_product_theorem(const NamedGraph& g, const NamedGraph& h,
                                      ProductKind kind,
                                      const HarnessOptions& options) {
  require_grid_kind(kind);
  if (!is_connected(g.graph) || !is_connected(h.graph)) {
    throw DisconnectedGraphError("check_product_theorem");
  }
  const std::int64_t m = transitivity_number(g.graph, options.search);
  const std::int64_t n = transitivity_number(h.graph, options.search);
  auto out = evaluate_product(g.graph, h.graph, kind, join_names(g.name, h.name),
                              m * n, options);
  auto iso = are_isomorphic(g.graph, h.graph, options.search);
  append_note(out.note, !iso.has_value() ? "factor isomorphism undecided"
                        : *iso           ? "factors isomorphic"
                                         : "factors non-isomorphic");
  return out;
}

std::vector<TheoremInstance> check_isomorphic_corollary(
    const NamedGraph& g, const HarnessOptions& options) {
  if (!is_connected(g.graph)) {
    throw DisconnectedGraphError("check_isomorphic_corollary");
  }
  const std::int64_t r = transitivity_number(g.graph, options.search);
  std::vector<TheoremInstance> out;
  for (auto kind : {ProductKind::kCartesian, ProductKind::kStrong}) {
    out.push_back(evaluate_product(g.graph, g.graph, kind,
                                   join_names(g.name, g.name), r * (r + 1) / 2,
                                   options));
  }
  return out;
}

TheoremReport counterexample_search(std::span<const NamedGraph> corpus,
                                    int max_factor_vertices, ProductKind kind,
                                    const HarnessOptions& options) {
  require_grid_kind(kind);
  if (max_factor_vertices < 1 || max_factor_vertices > kMaxSearchFactorVertices) {
    throw std::invalid_argument("factor bound must be in 1.." +
                                std::to_string(kMaxSearchFactorVertices));
  }
  TheoremReport report;
  report.id = TheoremId::kProductGeneral;

  std::vector<const NamedGraph*> factors;
  for (const auto& entry : corpus) {
    if (entry.graph.num_vertices() <= max_factor_vertices &&
        is_connected(entry.graph)) {
      factors.push_back(&entry);
    }
  }
  std::vector<std::int64_t> r;
  std::vector<GraphFingerprint> prints;
  for (const NamedGraph* f : factors) {
    prints.push_back(fingerprint(f->graph, options.search));
    r.push_back(static_cast<std::int64_t>(prints.back().orbit_sizes.size()));
  }

  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      const std::string name = join_names(factors[i]->name, factors[j]->name);
      if (fingerprints_match(prints[i], prints[j])) {
        const Graph& a = factors[i]->graph;
        if (a.num_vertices() > kBruteForceMaxVertices) {
          report.skipped.push_back(name + ": isomorphism undecided");
          continue;
        }
        if (find_isomorphism(a, factors[j]->graph)) {
          report.skipped.push_back(name + ": factors isomorphic");
          continue;
        }
      }
      report.instances.push_back(evaluate_product(factors[i]->graph,
                                                  factors[j]->graph, kind, name,
                                                  r[i] * r[j], options));
    }
  }
  return report;
}

TheoremReport verify_path_product(int max_n, const HarnessOptions& options) {
  TheoremReport report;
  report.id = TheoremId::kPathProduct;
  for (int m = 1; m <= max_n; ++m) {
    for (int n = m + 1; n <= max_n; ++n) {
      report.instances.push_back(check_path_product(m, n, options));
    }
  }
  return report;
}

TheoremReport verify_path_square(int max_n, const HarnessOptions& options) {
  TheoremReport report;
  report.id = TheoremId::kPathSquare;
  for (int n = 1; n <= max_n; ++n) {
    report.instances.push_back(check_path_square(n, options));
  }
  return report;
}

TheoremReport verify_product_isomorphic(std::span<const NamedGraph> corpus,
                                        int max_factor_vertices,
                                        const HarnessOptions& options) {
  TheoremReport report;
  report.id = TheoremId::kProductIsomorphic;
  for (const auto& entry : corpus) {
    if (entry.graph.num_vertices() > max_factor_vertices ||
        !is_connected(entry.graph)) {
      continue;
    }
    for (auto& instance : check_isomorphic_corollary(entry, options)) {
      report.instances.push_back(std::move(instance));
    }
  }
  return report;
}

std::vector<NamedGraph> load_corpus(const std::filesystem::path& dir,
                                    int max_n) {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto path = dir / ("connected_" + std::to_string(n) + ".g6");
    std::ifstream in(path);
    if (!in) throw CorpusError("corpus file not found: " + path.string());
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      out.push_back({line, parse_graph6(line)});
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const TheoremReport& report) {
  nlohmann::ordered_json out;
  out["theorem"] = to_string(report.id);
  auto& instances = out["instances"] = nlohmann::ordered_json::array();
  int bound_violations = 0;
  for (const auto& i : report.instances) {
    nlohmann::ordered_json entry;
    entry["factors"] = i.factors;
    entry["kind"] = to_string(i.kind);
    entry["predicted"] = i.predicted;
    entry["computed"] = i.computed;
    entry["oracle"] = i.oracle ? nlohmann::ordered_json(*i.oracle)
                               : nlohmann::ordered_json(nullptr);
    entry["verdict"] = i.pass ? "PASS" : "FAIL";
    entry["within_bound"] = i.within_bound;
    entry["note"] = i.note;
    instances.push_back(std::move(entry));
    if (!i.within_bound) ++bound_violations;
  }
  const int pass = report.pass_count();
  out["summary"] = {
      {"instances", report.instances.size()},
      {"pass", pass},
      {"fail", static_cast<int>(report.instances.size()) - pass},
      {"bound_violations", bound_violations},
  };
  auto& counterexamples = out["counterexamples"] =
      nlohmann::ordered_json::array();
  for (const auto& i : report.counterexamples()) {
    counterexamples.push_back(i.factors + " (" + std::string(to_string(i.kind)) +
                              "): predicted " + std::to_string(i.predicted) +
                              ", computed " + std::to_string(i.computed));
  }
  out["skipped"] = report.skipped;
  return out;
}

std::string to_table(const TheoremReport& report) {
  std::vector<std::vector<std::string>> rows = {
      {"factors", "kind", "predicted", "computed", "oracle", "verdict",
       "bound", "note"}};
  int bound_violations = 0;
  for (const auto& i : report.instances) {
    rows.push_back({i.factors, std::string(to_string(i.kind)),
                    std::to_string(i.predicted), std::to_string(i.computed),
                    i.oracle ? std::to_string(*i.oracle) : "-",
                    i.pass ? "PASS" : "FAIL", i.within_bound ? "ok" : "VIOLATED",
                    i.note});
    if (!i.within_bound) ++bound_violations;
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }

  std::ostringstream out;
  out << "theorem " << to_string(report.id) << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  const int pass = report.pass_count();
  out << "instances " << report.instances.size() << ", pass " << pass
      << ", fail " << report.instances.size() - pass << ", bound violations "
      << bound_violations << "\n";
  for (const auto& i : report.counterexamples()) {
    out << "counterexample: " << i.factors << " (" << to_string(i.kind)
        << ") predicted " << i.predicted << ", computed " << i.computed << "\n";
  }
  for (const auto& s : report.skipped) out << "skipped: " << s << "\n";
  return out.str();
}

}  // namespace orbitkit
