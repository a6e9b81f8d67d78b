// Copyright 2026 The HyperImmerse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hyperimmerse: command line front end.
//
// Exit codes: 0 yes, 1 no, 2 unknown (budget or qubit limit), 64 usage,
// 65 malformed input, 66 unreadable input.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperimmerse/hyperimmerse.hpp"

namespace hi = hyperimmerse;
using nlohmann::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kDataErr = 65;
constexpr int kNoInput = 66;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ParseError messages read "line:column: text"; prefix the file name.
hi::ParseError in_file(const std::string& path, const hi::ParseError& e) {
  const std::string what = e.what();
  return hi::ParseError(e.line(), e.column(), path + ": " + what.substr(what.find(": ") + 2));
}

hi::Hypergraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return hi::parse_hypergraph(text);
  } catch (const hi::ParseError& e) {
    throw in_file(path, e);
  }
}

json load_document(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return hi::parse_json(text);
  } catch (const hi::ParseError& e) {
    throw in_file(path, e);
  }
}

int exit_for(hi::SearchStatus s) {
  switch (s) {
    case hi::SearchStatus::found: return kYes;
    case hi::SearchStatus::absent: return kNo;
    case hi::SearchStatus::budget_exhausted: return kUnknown;
  }
  return kUnknown;
}

std::uint64_t pick_budget(std::uint64_t flag) {
  // The environment variable wins over the flag.
  if (std::getenv("HYPERIMMERSE_BUDGET")) return hi::default_budget();
  return flag == 0 ? hi::default_budget() : flag;
}

json verdict(hi::SearchStatus status, const json& witness, const hi::SearchStats& stats) {
  return {{"status", hi::status_word(status)}, {"witness", witness}, {"stats", hi::to_json(stats)}, {"version", hi::kVersion}};
}

json immersion_witness(const hi::Hypergraph& h, const hi::Hypergraph& g, const hi::ImmersionMap& w) {
  json j = hi::to_json(w);
  try {
    j["derivation"] = hi::to_json(hi::immersion_to_derivation(h, g, w));
  } catch (const std::invalid_argument&) {
    j["derivation"] = nullptr;
  }
  return j;
}

void print_immersion(const hi::ImmersionMap& w) {
  for (const auto& [hv, gv] : w.vertex_map) std::cout << "vertex " << hv << " -> " << gv << "\n";
  for (const auto& [he, ids] : w.edge_map) {
    std::cout << "edge " << he << " ->";
    for (const auto& id : ids) std::cout << " " << id;
    std::cout << "\n";
  }
}

void print_derivation(const hi::DerivationSequence& seq) {
  std::cout << "start vertices";
  for (const auto& v : seq.initial_vertices) std::cout << " " << v;
  std::cout << "\nstart edges";
  for (const auto& e : seq.initial_edges) std::cout << " " << e;
  std::cout << "\n";
  for (const auto& s : seq.steps) {
    if (const auto* c = std::get_if<hi::CoalesceStep>(&s))
      std::cout << "coalesce " << c->first << " " << c->second << "\n";
    else
      std::cout << "dewet " << std::get<hi::DewetStep>(s).edge << " " << std::get<hi::DewetStep>(s).vertex << "\n";
  }
  for (const auto& [hv, xv] : seq.vertex_map) std::cout << "vertex " << hv << " -> " << xv << "\n";
}

void print_stats(const hi::SearchStats& s) {
  std::cout << "nodes " << s.nodes << " members " << s.members_examined << " seconds " << s.seconds << "\n";
}

void write_document(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

int report(const hi::Hypergraph& h, const hi::Hypergraph& g, const hi::ImmersionResult& r, bool as_json,
           const std::string& witness_out) {
  json witness = r.witness ? immersion_witness(h, g, *r.witness) : json(nullptr);
  const json doc = verdict(r.status, witness, r.stats);
  if (!witness_out.empty()) write_document(witness_out, doc);
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << hi::status_word(r.status) << "\n";
    if (r.witness) print_immersion(*r.witness);
    print_stats(r.stats);
  }
  return exit_for(r.status);
}

// A derivation from a document: bare, nested under "witness", or rebuilt
// from an immersion when h is known.
hi::DerivationSequence derivation_of(const json& doc, const hi::Hypergraph* h, const hi::Hypergraph& g) {
  const json* d = &doc;
  if (d->contains("witness")) d = &d->at("witness");
  if (d->is_null()) throw std::invalid_argument("document carries no witness");
  if (d->contains("steps")) return hi::derivation_from_json(*d);
  if (d->contains("derivation") && !d->at("derivation").is_null()) return hi::derivation_from_json(d->at("derivation"));
  if (h && d->contains("edge_map")) return hi::immersion_to_derivation(*h, g, hi::immersion_from_json(*d));
  throw std::invalid_argument("document has no derivation");
}

hi::Hypergraph generate(const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw UsageError("family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (family == "honeycomb") {
    need(1);
    return hi::honeycomb_patch(params[0]).as_hypergraph();
  }
  if (family == "double_edge_cycle") {
    need(1);
    return hi::double_edge_cycle(params[0]).as_hypergraph();
  }
  if (family == "honeycomb_hyper") {
    need(1);
    return hi::honeycomb_hyperlattice_patch(params[0]);
  }
  if (family == "cuboid_full") {
    need(1);
    return hi::cuboid_lattice(params[0], hi::CuboidMode::full);
  }
  if (family == "cuboid_alternating") {
    need(1);
    return hi::cuboid_lattice(params[0], hi::CuboidMode::alternating);
  }
  if (family == "complete") {
    need(2);
    return hi::complete_hypergraph(params[0], params[1]);
  }
  throw UsageError("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph immersion for multipartite entanglement routing"};
  app.set_version_flag("--version", std::string("hyperimmerse ") + hi::kVersion);
  app.require_subcommand(1);

  std::string h_path, g_path, method = "auto", witness_out, replay_path, out_path, family, seq_path;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  bool as_json = false;
  int n = 0, r = 0;
  std::vector<int> params;

  auto* check = app.add_subcommand("check", "Decide whether H immerses in G");
  check->add_option("H", h_path, "Guest hypergraph")->required();
  check->add_option("G", g_path, "Host hypergraph")->required();
  check->add_option("--method", method, "brute, table1 or auto")->check(CLI::IsMember({"brute", "table1", "auto"}));
  check->add_option("--budget", budget, "Node budget");
  check->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--json", as_json, "JSON on stdout");
  check->add_option("--witness-out", witness_out, "Write the verdict document here");

  auto* derive = app.add_subcommand("derive", "Find or replay a derivation of H from G");
  derive->add_option("H", h_path, "Target hypergraph")->required();
  derive->add_option("G", g_path, "Source hypergraph")->required();
  derive->add_option("--replay", replay_path, "Derivation or witness document to replay");
  derive->add_option("-o,--output", out_path, "Write the derivation document here");
  derive->add_option("--budget", budget, "Node budget");
  derive->add_flag("--json", as_json, "JSON on stdout");

  auto* gen = app.add_subcommand("gen", "Generate a lattice or complete hypergraph");
  gen->add_option("family", family,
                  "honeycomb, double_edge_cycle, honeycomb_hyper, cuboid_full, cuboid_alternating or complete")
      ->required();
  gen->add_option("params", params, "Size parameters")->required();
  gen->add_option("-o,--output", out_path, "Output file")->required();

  auto* table1 = app.add_subcommand("table1", "Decide K_n^r immersion with the row decider");
  table1->add_option("--n", n, "n")->required();
  table1->add_option("--r", r, "r")->required();
  table1->add_option("G", g_path, "Host hypergraph")->required();
  table1->add_option("--budget", budget, "Node budget");
  table1->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  table1->add_flag("--json", as_json, "JSON on stdout");
  table1->add_option("--witness-out", witness_out, "Write the verdict document here");

  auto* qverify = app.add_subcommand("qverify", "Replay a derivation on GHZ states");
  qverify->add_option("G", g_path, "Source hypergraph")->required();
  qverify->add_option("seq", seq_path, "Derivation or witness document")->required();
  qverify->add_flag("--json", as_json, "JSON on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    hi::SearchOptions options;
    options.budget = pick_budget(budget);
    options.jobs = jobs;

    if (*check) {
      const auto h = load_graph(h_path);
      const auto g = load_graph(g_path);
      return report(h, g, hi::decide_immersion(h, g, hi::parse_method(method), options), as_json, witness_out);
    }

    if (*table1) {
      if (!hi::knr_supported(n, r)) throw UsageError("table1 needs 1 <= r <= n <= 4");
      const auto g = load_graph(g_path);
      const auto h = hi::complete_hypergraph(n, r);
      return report(h, g, hi::check_knr(g, n, r, options), as_json, witness_out);
    }

    if (*derive) {
      const auto h = load_graph(h_path);
      const auto g = load_graph(g_path);
      if (!replay_path.empty()) {
        const auto seq = derivation_of(load_document(replay_path), &h, g);
        const auto err = hi::derivation_error(h, g, seq);
        if (as_json) {
          std::cout << json{{"status", err ? "no" : "yes"}, {"witness", hi::to_json(seq)}, {"stats", hi::to_json(hi::SearchStats{})},
                            {"version", hi::kVersion}, {"error", err ? json(*err) : json(nullptr)}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << (err ? "invalid: " + *err : std::string("valid")) << "\n";
        }
        return err ? kNo : kYes;
      }
      const auto res = hi::find_derivation(h, g, options.budget);
      const json witness = res.derivation ? hi::to_json(*res.derivation) : json(nullptr);
      const json doc = verdict(res.status, witness, res.stats);
      if (!out_path.empty()) write_document(out_path, doc);
      if (as_json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << hi::status_word(res.status) << "\n";
        if (res.derivation) print_derivation(*res.derivation);
        print_stats(res.stats);
      }
      return exit_for(res.status);
    }

    if (*gen) {
      hi::Hypergraph g;
      try {
        g = generate(family, params);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::ofstream out(out_path);
      if (!out) throw InputError("cannot write '" + out_path + "'");
      out << "# " << family;
      for (int p : params) out << " " << p;
      out << "\n" << hi::serialize(g);
      return kYes;
    }

    if (*qverify) {
      const auto g = load_graph(g_path);
      const auto seq = derivation_of(load_document(seq_path), nullptr, g);
      const auto rep = hi::simulate_derivation(g, seq);
      if (as_json) {
        json steps = json::array();
        for (const auto& s : rep.steps)
          steps.push_back({{"step", s.description}, {"qubits", s.qubits}, {"weight", s.weight}, {"ghz", s.factorizes}});
        std::cout << json{{"status", rep.ok ? "yes" : "no"}, {"steps", steps}, {"final_qubits", rep.final_state.n_qubits},
                          {"final_hypergraph", hi::serialize(rep.final_hypergraph)}, {"version", hi::kVersion}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << std::left << std::setw(4) << "#" << std::setw(36) << "step" << std::setw(8) << "qubits"
                  << std::setw(14) << "weight" << "ghz\n";
        for (std::size_t i = 0; i < rep.steps.size(); ++i) {
          const auto& s = rep.steps[i];
          std::cout << std::left << std::setw(4) << i << std::setw(36) << s.description << std::setw(8) << s.qubits
                    << std::setw(14) << s.weight << (s.factorizes && s.weight > 0 ? "pass" : "FAIL") << "\n";
        }
        std::cout << "final: " << rep.final_state.n_qubits << " qubits, " << rep.final_hypergraph.edge_count()
                  << " GHZ edge(s): " << (rep.ok ? "pass" : "FAIL") << "\n";
      }
      return rep.ok ? kYes : kNo;
    }
  } catch (const hi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kDataErr;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataErr;
  } catch (const std::length_error& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNo;
  }
  return kUsage;
}
