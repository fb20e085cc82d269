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

#include <cmath>
#include <random>

#include "doctest.h"
#include "nlgames/commsim.hpp"
#include "support.hpp"

using namespace nlgames;
using namespace nlgames::testing;

namespace {

Graph path_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

Graph star_graph(int leaves) {
  Graph g;
  g.vertices.push_back("c");
  for (int i = 0; i < leaves; ++i) {
    g.vertices.push_back("l" + std::to_string(i));
    g.edges.push_back({0, i + 1});
  }
  return g;
}

Graph random_graph(Rng& rng, int n, double p) {
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.edges.push_back({u, v});
    }
  }
  return g;
}

bool proper(const Graph& x, const std::vector<int>& coloring) {
  for (auto [u, v] : x.edges) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("message lengths round up to whole bits") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK(error_code_of([] { ceil_log2(0); }) == ErrorCode::MalformedInput);
}

TEST_CASE("perfect coloring strategies run as exact protocols") {
  Graph x = hadamard_graph(4);
  QuantumStrategy st = fourier_strategy_hadamard(4);
  Protocol p = strategy_to_protocol(x, st);
  CHECK(p.colors == 4);
  CHECK(p.classical_bits == 2);
  CHECK(p.qubits == 2);

  SimulationResult r = simulate_protocol(p);
  CHECK(r.summary.pairs_checked == 16 + 2 * 48);
  CHECK(r.summary.correct == r.summary.pairs_checked);
  CHECK(r.summary.max_deviation <= 1e-9);
  CHECK(r.summary.classical_bits == 2);
  CHECK(r.summary.qubits == 2);
  // Every outcome fires on every pair, and equal pairs answer "equal".
  CHECK(r.transcripts.size() ==
        static_cast<size_t>(r.summary.pairs_checked) * 4);
  for (const auto& tr : r.transcripts) {
    CHECK(tr.correct);
    CHECK(tr.probability > 0.2);
    CHECK(tr.quantum_dim == 4);
    if (tr.s == tr.t) CHECK(tr.says_equal);
  }
}

TEST_CASE("classical pairs degenerate to the color-sending protocol") {
  Graph k2 = complete_graph(2);
  NonlocalGame g = make_coloring_game(k2, 2);
  QuantumStrategy st = classical_embedded_strategy(g, {0, 1}, {0, 1});
  Protocol p = strategy_to_protocol(k2, st);
  CHECK(p.classical_bits == 1);
  CHECK(p.qubits == 0);
  SimulationResult r = simulate_protocol(p);
  CHECK(r.summary.pairs_checked == 4);
  CHECK(r.summary.correct == 4);

  DeterministicProtocol dp = coloring_protocol(k2, {0, 1});
  CHECK(dp.cost.classical_bits == 1);
  CHECK(dp.cost.qubits == 0);
  CHECK(dp.cost.deterministic_bits == 1);
  SimulationResult rc = simulate_protocol(dp.protocol);
  CHECK(rc.summary.correct == rc.summary.pairs_checked);
}

TEST_CASE("protocols require perfect strategies") {
  CHECK(error_code_of([] {
          strategy_to_protocol(complete_graph(2), chsh_optimal_strategy());
        }) == ErrorCode::NotPerfect);
}

TEST_CASE("imperfect strategies forced into a protocol fail the simulation") {
  Protocol p;
  p.graph = complete_graph(2);
  p.game = make_coloring_game(p.graph, 2);
  p.strategy = chsh_optimal_strategy();
  p.colors = 2;
  p.classical_bits = 1;
  p.qubits = 1;
  CHECK(error_code_of([&] { simulate_protocol(p); }) ==
        ErrorCode::NondeterministicAnswer);
}

TEST_CASE("coloring protocol input guards") {
  Graph k2 = complete_graph(2);
  CHECK(error_code_of([&] { coloring_protocol(k2, {0}); }) ==
        ErrorCode::ImproperColoring);
  CHECK(error_code_of([&] { coloring_protocol(k2, {0, 0}); }) ==
        ErrorCode::ImproperColoring);
  CHECK(error_code_of([&] { coloring_protocol(k2, {0, -1}); }) ==
        ErrorCode::ImproperColoring);
  // Sparse palettes are canonicalized before sizing the message.
  DeterministicProtocol dp = coloring_protocol(k2, {5, 9});
  CHECK(dp.cost.classical_bits == 1);
  SimulationResult r = simulate_protocol(dp.protocol);
  CHECK(r.summary.correct == r.summary.pairs_checked);
}

TEST_CASE("chromatic numbers of fixed graphs") {
  for (int n = 1; n <= 5; ++n) {
    auto r = chromatic_number(complete_graph(n));
    CHECK(r.chi == n);
    CHECK(proper(complete_graph(n), r.coloring));
  }
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(cycle_graph(6)).chi == 2);
  CHECK(chromatic_number(hadamard_graph(2)).chi == 2);
  CHECK(chromatic_number(path_graph(4)).chi == 2);
  CHECK(chromatic_number(star_graph(5)).chi == 2);
  Graph loose = path_graph(3);
  loose.edges.clear();
  CHECK(chromatic_number(loose).chi == 1);

  auto h4 = chromatic_number(hadamard_graph(4));
  CHECK(h4.chi == 4);
  CHECK(proper(hadamard_graph(4), h4.coloring));
}

TEST_CASE("chromatic number agrees with exhaustive search") {
  Rng rng(311);
  for (int rep = 0; rep < 6; ++rep) {
    Graph x = random_graph(rng, 7, 0.4);
    if (x.edges.empty()) continue;
    auto r = chromatic_number(x);
    CHECK(r.chi == naive_chromatic(x));
    CHECK(proper(x, r.coloring));
    CHECK(static_cast<int>(r.coloring.size()) == 7);
  }
}

TEST_CASE("chromatic number guards and concurrency") {
  CHECK(error_code_of([] { chromatic_number(hadamard_graph(4), 8); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(error_code_of([] { chromatic_number(complete_graph(3), 0); }) ==
        ErrorCode::MalformedInput);
  Graph empty;
  CHECK(error_code_of([&] { chromatic_number(empty); }) ==
        ErrorCode::MalformedInput);

  auto serial = chromatic_number(hadamard_graph(4), 64, 1);
  auto parallel = chromatic_number(hadamard_graph(4), 64, 4);
  CHECK(serial.chi == parallel.chi);
  CHECK(serial.coloring == parallel.coloring);
}

TEST_CASE("orthogonal representation of the hadamard graph") {
  for (int n : {4, 8}) {
    Graph x = hadamard_graph(n);
    auto rep = orthogonal_representation_hadamard(n);
    REQUIRE(rep.size() == x.vertices.size());
    for (const auto& v : rep) {
      CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    }
    for (auto [u, v] : x.edges) {
      CHECK(std::abs(rep[u].dot(rep[v])) <= 1e-12);
    }
  }
  // Concrete value: 0000 vs 0011 differ in the last two coordinates.
  auto rep4 = orthogonal_representation_hadamard(4);
  Graph h4 = hadamard_graph(4);
  int s = h4.vertex_index("0000");
  int t = h4.vertex_index("0011");
  CHECK(std::abs(rep4[s].dot(rep4[t])) <= 1e-15);

  CHECK(error_code_of([] { orthogonal_representation_hadamard(2); }) ==
        ErrorCode::BadN);
  CHECK(error_code_of([] { orthogonal_representation_hadamard(3); }) ==
        ErrorCode::BadN);
  CHECK(error_code_of([] { orthogonal_representation_hadamard(6); }) ==
        ErrorCode::BadN);
}

TEST_CASE("the representation is the zero-color column of the strategy") {
  QuantumStrategy st = fourier_strategy_hadamard(4);
  auto rep = orthogonal_representation_hadamard(4);
  Graph x = hadamard_graph(4);
  for (size_t v = 0; v < x.vertices.size(); ++v) {
    const Matrix& e0 = st.alice.at(x.vertices[v])[0];
    Matrix want = rep[v] * rep[v].adjoint();
    CHECK((e0 - want).norm() <= 1e-12);
  }
}

TEST_CASE("cost arithmetic for composed protocols") {
  CostBoundReport r = cost_bounds(4, 1);
  CHECK(r.per_part_chromatic_bound == 9.0 + 4.0 * std::sqrt(2.0));
  CHECK(r.printed_bound == 14.0);
  CHECK(r.exceeds_printed);
  CHECK(r.quantum_floor_bits == 2.0);

  CostBoundReport r2 = cost_bounds(16, 16);
  CHECK(r2.composed_deterministic_bits ==
        doctest::Approx(4.0 + 48.0).epsilon(1e-12));
  CHECK(r2.quantum_floor_bits == 4.0);
  CHECK(r2.exceeds_printed);
  CHECK(r2.per_part_chromatic_bound ==
        doctest::Approx(std::pow(9.0 + 4.0 * std::sqrt(2.0), 16))
            .epsilon(1e-12));

  CHECK(error_code_of([] { cost_bounds(0, 1); }) == ErrorCode::MalformedInput);
  CHECK(error_code_of([] { cost_bounds(4, 0); }) == ErrorCode::MalformedInput);
}

TEST_CASE("protocol cost report includes the chromatic baseline") {
  Graph x = hadamard_graph(4);
  Protocol p = strategy_to_protocol(x, fourier_strategy_hadamard(4));
  CostReport c = protocol_cost_report(p);
  CHECK(c.classical_bits == 2);
  CHECK(c.qubits == 2);
  CHECK(c.deterministic_bits == 2);
}

TEST_CASE("coloring game value one exactly when the palette suffices") {
  struct Entry {
    Graph graph;
    int chi;
  };
  std::vector<Entry> corpus;
  corpus.push_back({complete_graph(2), 0});
  corpus.push_back({complete_graph(3), 0});
  corpus.push_back({complete_graph(4), 0});
  corpus.push_back({cycle_graph(5), 0});
  corpus.push_back({cycle_graph(6), 0});
  corpus.push_back({path_graph(4), 0});
  corpus.push_back({star_graph(4), 0});
  corpus.push_back({hadamard_graph(2), 0});
  for (auto& entry : corpus) {
    entry.chi = chromatic_number(entry.graph).chi;
    CHECK(entry.chi == naive_chromatic(entry.graph));
    double at_chi =
        classical_value(make_coloring_game(entry.graph, entry.chi)).value;
    CHECK(at_chi == doctest::Approx(1.0).epsilon(1e-12));
    if (entry.chi > 1) {
      double below =
          classical_value(make_coloring_game(entry.graph, entry.chi - 1))
              .value;
      CHECK(below < 1.0 - 1e-12);
    }
  }
}
