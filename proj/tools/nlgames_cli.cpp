// Copyright 2026 The nlgames authors
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

// Command line front end. Exit codes: 0 success, 1 verification failure
// (an input strategy is not perfect or a protocol answer is not
// deterministic), 2 malformed input or violated precondition.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlgames/commsim.hpp"
#include "nlgames/games.hpp"
#include "nlgames/json_io.hpp"
#include "nlgames/linalg.hpp"
#include "nlgames/strategies.hpp"

namespace {

using namespace nlgames;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

Party parse_party(const std::string& name) {
  if (name == "alice") return Party::Alice;
  if (name == "bob") return Party::Bob;
  throw Error(ErrorCode::MalformedInput, "party must be alice or bob");
}

std::vector<ParityConstraint> constraints_from_file(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    throw Error(ErrorCode::MalformedInput,
                "constraints file must be a JSON array");
  }
  std::vector<ParityConstraint> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("vars") ||
        !item.contains("rhs") || !item["vars"].is_array() ||
        !item["rhs"].is_number_integer()) {
      throw Error(ErrorCode::MalformedInput,
                  "constraint must be {\"vars\":[...],\"rhs\":0|1}");
    }
    ParityConstraint c;
    for (const auto& v : item["vars"]) {
      if (!v.is_number_integer()) {
        throw Error(ErrorCode::MalformedInput, "variable ids must be integers");
      }
      c.vars.push_back(v.get<int>());
    }
    c.rhs = item["rhs"].get<int>();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> coloring_from_file(const std::string& path, const Graph& x) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::MalformedInput, "coloring file is not valid JSON");
  }
  const nlohmann::json* pairs = &j;
  if (j.is_object() && j.contains("coloring")) pairs = &j["coloring"];
  if (!pairs->is_array()) {
    throw Error(ErrorCode::MalformedInput,
                "coloring must be [[vertex,color],...]");
  }
  std::vector<int> coloring(x.vertices.size(), -1);
  for (const auto& entry : *pairs) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_number_integer()) {
      throw Error(ErrorCode::MalformedInput,
                  "coloring entry must be [vertex,color]");
    }
    coloring[x.vertex_index(entry[0].get<std::string>())] =
        entry[1].get<int>();
  }
  for (size_t v = 0; v < coloring.size(); ++v) {
    if (coloring[v] < 0) {
      throw Error(ErrorCode::ImproperColoring,
                  "no color for vertex " + x.vertices[v]);
    }
  }
  return coloring;
}

struct Options {
  double eps = 1e-9;
  double budget = 1e8;
  int chromatic_budget = 64;
  int jobs = 1;
  unsigned long long seed = 0;
  std::string out;
  bool strict_support = false;

  std::string game_path, strategy_path, graph_path, protocol_path;
  std::string x_path, y_path, constraints_path, coloring_path;
  std::string party = "bob";
  std::string perturb_question;
  double perturb_magnitude = 1e-3;
  int n = 4;
  int colors = 2;
  int dim = 1;
  double p = 0.5;
  bool magic_square = false;
  bool optimal = false;
  bool restrict_support = false;
  std::string protocol_out;
};

int g_exit = 0;

void add_common(CLI::App* cmd, Options* o) {
  cmd->add_option("--eps", o->eps, "numerical tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o->out, "write the JSON report to this path");
}

NonlocalGame load_game(const Options& o) {
  return game_from_json(read_text_file(o.game_path));
}
QuantumStrategy load_strategy(const Options& o) {
  return strategy_from_json(read_text_file(o.strategy_path));
}
Graph load_graph(const Options& o) {
  return graph_from_json(read_text_file(o.graph_path));
}

void build_cli(CLI::App& app, Options& o) {
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate games, graphs, strategies");
  gen->require_subcommand(1);

  auto* hadamard = gen->add_subcommand("hadamard-graph",
                                       "bit strings joined at distance n/2");
  hadamard->add_option("--n", o.n, "number of bits")->required();
  add_common(hadamard, &o);
  hadamard->callback([&o] {
    deliver(graph_to_json(hadamard_graph(o.n)), o.out);
  });

  auto* coloring_game = gen->add_subcommand(
      "coloring-game", "players must answer a proper coloring");
  coloring_game->add_option("--graph", o.graph_path, "graph JSON")->required();
  coloring_game->add_option("--colors", o.colors, "palette size")->required();
  add_common(coloring_game, &o);
  coloring_game->callback([&o] {
    deliver(game_to_json(make_coloring_game(load_graph(o), o.colors)), o.out);
  });

  auto* homomorphism = gen->add_subcommand(
      "homomorphism-game", "players must answer a graph homomorphism");
  homomorphism->add_option("--x", o.x_path, "source graph JSON")->required();
  homomorphism->add_option("--y", o.y_path, "target graph JSON")->required();
  add_common(homomorphism, &o);
  homomorphism->callback([&o] {
    Graph x = graph_from_json(read_text_file(o.x_path));
    Graph y = graph_from_json(read_text_file(o.y_path));
    deliver(game_to_json(make_homomorphism_game(x, y)), o.out);
  });

  auto* bcs = gen->add_subcommand("bcs-game",
                                  "parity constraint satisfaction game");
  auto* ms_flag = bcs->add_flag("--magic-square", o.magic_square,
                                "use the 3x3 parity square");
  bcs->add_option("--constraints", o.constraints_path,
                  "JSON array of {vars,rhs}")
      ->excludes(ms_flag);
  add_common(bcs, &o);
  bcs->callback([&o] {
    std::vector<ParityConstraint> constraints;
    if (o.magic_square) {
      constraints = magic_square_constraints();
    } else if (!o.constraints_path.empty()) {
      constraints = constraints_from_file(o.constraints_path);
    } else {
      throw Error(ErrorCode::MalformedInput,
                  "give --magic-square or --constraints");
    }
    deliver(game_to_json(make_bcs_game(constraints)), o.out);
  });

  auto* fourier = gen->add_subcommand(
      "fourier-strategy", "perfect strategy for the distance-n/2 game");
  fourier->add_option("--n", o.n, "number of bits")->required();
  add_common(fourier, &o);
  fourier->callback([&o] {
    deliver(strategy_to_json(fourier_strategy_hadamard(o.n)), o.out);
  });

  auto* ms_strategy = gen->add_subcommand(
      "magic-square-strategy", "perfect two-qubit-pair parity strategy");
  add_common(ms_strategy, &o);
  ms_strategy->callback([&o] {
    deliver(strategy_to_json(magic_square_strategy()), o.out);
  });

  auto* blocksum = gen->add_subcommand(
      "blocksum-strategy", "two weighted copies on a doubled space");
  blocksum->add_option("--strategy", o.strategy_path, "strategy JSON")
      ->required();
  blocksum->add_option("--p", o.p, "weight of the first copy")->required();
  add_common(blocksum, &o);
  blocksum->callback([&o] {
    deliver(strategy_to_json(block_direct_sum_strategy(load_strategy(o), o.p)),
            o.out);
  });

  auto* game_cmd = app.add_subcommand("game", "analyze a game");
  game_cmd->require_subcommand(1);

  auto* classical = game_cmd->add_subcommand(
      "classical-value", "best deterministic winning probability");
  classical->add_option("game,--game", o.game_path, "game JSON")->required();
  classical->add_option("--budget", o.budget,
                        "largest tolerated search size")
      ->check(CLI::PositiveNumber);
  add_common(classical, &o);
  classical->callback([&o] {
    NonlocalGame g = load_game(o);
    ClassicalValueResult r = classical_value(g, o.budget);
    std::cout << format_number(r.value) << "\n";
    if (!o.out.empty()) write_text_file(o.out, classical_value_to_json(g, r));
  });

  auto* detect = game_cmd->add_subcommand(
      "detect-projection", "find answer-determining partner questions");
  detect->add_option("--game", o.game_path, "game JSON")->required();
  detect->add_flag("--strict-support", o.strict_support,
                   "only report parties with a witness");
  add_common(detect, &o);
  detect->callback([&o] {
    NonlocalGame g = load_game(o);
    WeakProjectionReport r = detect_weak_projection(g, o.strict_support);
    std::cout << "weak projection witnesses: " << r.witnesses.size()
              << (r.projection_game ? " (projection game)" : "") << "\n";
    if (!o.out.empty()) write_text_file(o.out, detection_to_json(g, r));
  });

  auto* tilde = game_cmd->add_subcommand(
      "tilde", "append consistency questions for one party");
  tilde->add_option("--game", o.game_path, "game JSON")->required();
  tilde->add_option("--party", o.party, "alice or bob")
      ->check(CLI::IsMember({"alice", "bob"}));
  add_common(tilde, &o);
  tilde->callback([&o] {
    deliver(game_to_json(tilde_transform(load_game(o), parse_party(o.party))),
            o.out);
  });

  auto* strategy_cmd = app.add_subcommand("strategy", "analyze a strategy");
  strategy_cmd->require_subcommand(1);

  auto* verify = strategy_cmd->add_subcommand(
      "verify", "check a strategy wins every supported pair");
  verify->add_option("--game", o.game_path, "game JSON")->required();
  verify->add_option("--strategy", o.strategy_path, "strategy JSON")
      ->required();
  add_common(verify, &o);
  verify->callback([&o] {
    NonlocalGame g = load_game(o);
    PerfectionLedger ledger = is_perfect(g, load_strategy(o), o.eps);
    if (ledger.perfect) {
      std::cout << "perfect within " << o.eps << " (winning probability "
                << format_number(ledger.winning_probability) << ")\n";
    } else {
      std::cout << "not perfect: " << ledger.violations.size()
                << " rejecting pairs above " << o.eps << ", largest "
                << format_number(ledger.max_violation) << "\n";
      g_exit = 1;
    }
    if (!o.out.empty()) write_text_file(o.out, perfection_to_json(g, ledger));
  });

  auto* substitute = strategy_cmd->add_subcommand(
      "substitute-me",
      "replace the shared state with the maximally entangled one");
  substitute->add_option("--game", o.game_path, "game JSON")->required();
  substitute->add_option("--strategy", o.strategy_path, "strategy JSON")
      ->required();
  substitute->add_flag("--restrict-support", o.restrict_support,
                       "first cut the state's kernel out of both sides");
  add_common(substitute, &o);
  substitute->callback([&o] {
    NonlocalGame g = load_game(o);
    deliver(strategy_to_json(substitute_max_entangled(
                g, load_strategy(o), o.eps, o.restrict_support)),
            o.out);
  });

  auto* structure = strategy_cmd->add_subcommand(
      "structure-report",
      "residuals showing measurements respect the state's block structure");
  structure->add_option("--game", o.game_path, "game JSON")->required();
  structure->add_option("--strategy", o.strategy_path, "strategy JSON")
      ->required();
  structure->add_option("--perturb", o.perturb_question,
                        "add noise to this Bob question first");
  structure->add_option("--magnitude", o.perturb_magnitude,
                        "noise size for --perturb")
      ->check(CLI::PositiveNumber);
  structure->add_option("--seed", o.seed, "noise seed");
  add_common(structure, &o);
  structure->callback([&o] {
    NonlocalGame g = load_game(o);
    QuantumStrategy st = load_strategy(o);
    if (!o.perturb_question.empty()) {
      st = perturb_bob_povm(st, o.perturb_question, o.perturb_magnitude,
                            o.seed);
    }
    StructureReport r = structure_report(g, st, o.eps);
    std::cout << (r.perfect ? "perfect" : "not perfect")
              << "; max projectivity "
              << format_number(r.max_projectivity()) << ", max commutator "
              << format_number(r.max_commutator()) << ", max off-block "
              << format_number(r.max_off_block()) << "\n";
    if (!o.out.empty()) write_text_file(o.out, structure_to_json(r));
  });

  auto* lift = strategy_cmd->add_subcommand(
      "lift-tilde", "extend a perfect strategy to the consistency game");
  lift->add_option("--game", o.game_path, "game JSON")->required();
  lift->add_option("--strategy", o.strategy_path, "strategy JSON")->required();
  lift->add_option("--party", o.party, "alice or bob")
      ->check(CLI::IsMember({"alice", "bob"}));
  add_common(lift, &o);
  lift->callback([&o] {
    NonlocalGame g = load_game(o);
    deliver(strategy_to_json(lift_strategy_tilde(g, load_strategy(o),
                                                 parse_party(o.party), o.eps)),
            o.out);
  });

  auto* comm = app.add_subcommand("comm", "one-way communication protocols");
  comm->require_subcommand(1);

  auto* from_strategy = comm->add_subcommand(
      "from-strategy", "wrap a perfect coloring strategy as a protocol");
  from_strategy->add_option("--graph", o.graph_path, "graph JSON")->required();
  from_strategy->add_option("--strategy", o.strategy_path, "strategy JSON")
      ->required();
  add_common(from_strategy, &o);
  from_strategy->callback([&o] {
    Protocol p = strategy_to_protocol(load_graph(o), load_strategy(o), o.eps);
    std::cout << "classical bits " << p.classical_bits << ", qubits "
              << p.qubits << "\n";
    if (!o.out.empty()) write_text_file(o.out, protocol_to_json(p));
  });

  auto* simulate = comm->add_subcommand(
      "simulate", "run a protocol on every promised input pair");
  simulate->add_option("--protocol", o.protocol_path, "protocol JSON")
      ->required();
  add_common(simulate, &o);
  simulate->callback([&o] {
    Protocol p = protocol_from_json(read_text_file(o.protocol_path));
    SimulationResult r = simulate_protocol(p, o.eps);
    std::cout << r.summary.correct << "/" << r.summary.pairs_checked
              << " pairs correct, max deviation "
              << format_number(r.summary.max_deviation) << "\n";
    if (!o.out.empty()) {
      write_text_file(o.out, simulation_summary_to_json(r.summary));
    }
  });

  auto* coloring_p = comm->add_subcommand(
      "coloring-protocol", "classical protocol from a proper coloring");
  coloring_p->add_option("--graph", o.graph_path, "graph JSON")->required();
  auto* optimal_flag = coloring_p->add_flag(
      "--optimal", o.optimal, "search for a minimum coloring first");
  coloring_p->add_option("--coloring", o.coloring_path,
                         "coloring JSON ([[vertex,color],...])")
      ->excludes(optimal_flag);
  coloring_p->add_option("--protocol-out", o.protocol_out,
                         "also write the embedded protocol here");
  add_common(coloring_p, &o);
  coloring_p->callback([&o] {
    Graph x = load_graph(o);
    std::vector<int> coloring;
    if (o.optimal) {
      coloring = chromatic_number(x, o.chromatic_budget, o.jobs).coloring;
    } else if (!o.coloring_path.empty()) {
      coloring = coloring_from_file(o.coloring_path, x);
    } else {
      throw Error(ErrorCode::MalformedInput,
                  "give --optimal or --coloring");
    }
    DeterministicProtocol dp = coloring_protocol(x, coloring);
    std::cout << dp.protocol.colors << " colors, "
              << dp.cost.deterministic_bits << " bits\n";
    if (!o.out.empty()) write_text_file(o.out, cost_report_to_json(dp.cost));
    if (!o.protocol_out.empty()) {
      write_text_file(o.protocol_out, protocol_to_json(dp.protocol));
    }
  });

  auto* chromatic = comm->add_subcommand("chromatic",
                                         "exact chromatic number");
  chromatic->add_option("--graph", o.graph_path, "graph JSON")->required();
  chromatic->add_option("--budget", o.chromatic_budget,
                        "largest vertex count accepted")
      ->check(CLI::PositiveNumber);
  chromatic->add_option("--jobs", o.jobs, "solve components concurrently")
      ->check(CLI::PositiveNumber);
  add_common(chromatic, &o);
  chromatic->callback([&o] {
    Graph x = load_graph(o);
    ChromaticResult r = chromatic_number(x, o.chromatic_budget, o.jobs);
    std::cout << r.chi << "\n";
    if (!o.out.empty()) write_text_file(o.out, chromatic_to_json(x, r));
  });

  auto* bounds = comm->add_subcommand(
      "bounds", "cost arithmetic for palette-based protocols");
  bounds->add_option("--n", o.n, "input length")->required();
  bounds->add_option("--d", o.dim, "blocks per part")->required();
  add_common(bounds, &o);
  bounds->callback([&o] {
    CostBoundReport r = cost_bounds(o.n, o.dim);
    std::cout << "per-part palette bound " << format_number(
                     r.per_part_chromatic_bound)
              << (r.exceeds_printed ? " exceeds " : " stays below ")
              << format_number(r.printed_bound)
              << "; deterministic cost "
              << format_number(r.composed_deterministic_bits)
              << " bits, quantum floor "
              << format_number(r.quantum_floor_bits) << " qubits\n";
    if (!o.out.empty()) write_text_file(o.out, cost_bounds_to_json(r));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-party one-round nonlocal game toolkit"};
  Options options;
  build_cli(app, options);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::NotPerfect ||
                   e.code() == ErrorCode::NondeterministicAnswer
               ? 1
               : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
