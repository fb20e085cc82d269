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

// One-way communication protocols for the promise-equality problem on a
// graph: inputs s, t are vertices promised to be equal or adjacent, Alice
// sends one message, Bob decides which case holds. A perfect quantum
// strategy for the coloring game on the graph yields an exact protocol
// whose messages are the measurement outcome plus Alice's half of the
// shared state; a proper coloring yields the classical counterpart.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlgames/games.hpp"
#include "nlgames/strategies.hpp"

namespace nlgames {

// Smallest b >= 0 with 2^b >= k. Requires k >= 1.
int ceil_log2(long long k);

// One branch of a protocol run: promise pair (s,t), Alice's observed
// outcome (her classical message), and Bob's verdict on that branch.
struct ProtocolTranscript {
  std::string s;
  std::string t;
  int message = 0;
  Index quantum_dim = 0;   // dimension of the register Alice sends
  double probability = 0;  // chance Alice observes this outcome
  bool says_equal = false;
  bool correct = false;
  double deviation = 0;  // distance of Bob's verdict probability from 0/1
};

struct SimulationSummary {
  long long pairs_checked = 0;
  long long correct = 0;
  double max_deviation = 0.0;
  int classical_bits = 0;
  int qubits = 0;
};

struct SimulationResult {
  std::vector<ProtocolTranscript> transcripts;
  SimulationSummary summary;
};

struct CostReport {
  int classical_bits = 0;      // ceil(log2 of message alphabet)
  int qubits = 0;              // ceil(log2 of quantum register dimension)
  int deterministic_bits = 0;  // ceil(log2 of palette size)
};

struct Protocol {
  Graph graph;
  NonlocalGame game;  // coloring game the strategy plays
  QuantumStrategy strategy;
  int colors = 0;
  int classical_bits = 0;
  int qubits = 0;
};

struct DeterministicProtocol {
  Protocol protocol;  // color-sending protocol embedded as dimension-1 quantum
  CostReport cost;
};

struct ChromaticResult {
  int chi = 0;
  std::vector<int> coloring;  // indexed like Graph::vertices
};

// Wraps a perfect strategy for the coloring game on x (palette size inferred
// from the strategy's outcome count) as a one-way protocol: on input s Alice
// measures her register with E^s, sends the outcome and her post-measurement
// register; on input t Bob measures it with F^t and announces "equal" exactly
// when his outcome matches the message.
Protocol strategy_to_protocol(const Graph& x, const QuantumStrategy& st,
                              double eps = kDefaultEps);

// Runs the protocol on every promise pair (all equal pairs, both orders of
// every edge) with exact state-vector arithmetic. Every Alice outcome of
// probability above eps must lead to a deterministic, correct verdict;
// otherwise throws NondeterministicAnswer.
SimulationResult simulate_protocol(const Protocol& p, double eps = kDefaultEps);

// Classical protocol from a proper coloring: Alice sends her vertex's color,
// Bob says "equal" exactly when his vertex has that color. Returned as a
// dimension-1 quantum protocol plus its cost.
DeterministicProtocol coloring_protocol(const Graph& x,
                                        const std::vector<int>& coloring);

// Exact chromatic number with witness coloring, via per-component
// branch-and-bound under a greedy clique lower bound. jobs > 1 solves
// components concurrently; the result is identical either way.
ChromaticResult chromatic_number(const Graph& x, int budget = 64,
                                 int jobs = 1);

// Unit vectors indexed like hadamard_graph(n).vertices with adjacent
// vertices orthogonal: coordinate i of vector s is (-1)^{s_i}/sqrt(n).
std::vector<Vector> orthogonal_representation_hadamard(int n);

// Cost arithmetic for composing per-part palette bounds into one-way
// protocol costs at concrete n and d. per_part_chromatic_bound is
// (9+4*sqrt(2))^d, which exceeds the simpler 14^d bound already at d=1;
// exceeds_printed records that comparison.
struct CostBoundReport {
  double per_part_chromatic_bound = 0;
  double printed_bound = 0;
  bool exceeds_printed = false;
  double composed_deterministic_bits = 0;
  double quantum_floor_bits = 0;
};

CostBoundReport cost_bounds(int n, int d);

// Message costs of a protocol, with the deterministic baseline from the
// graph's exact chromatic number.
CostReport protocol_cost_report(const Protocol& p);

}  // namespace nlgames
