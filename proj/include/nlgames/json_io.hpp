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

// JSON serialization for every value the command line reads or writes.
// Output is byte-stable: keys sorted, floats printed with 17 significant
// digits, no whitespace, one trailing newline. Matrices are row-major
// {"rows","cols","entries":[[re,im],...]}; states are n-by-1 matrices.

#pragma once

#include <string>

#include "nlgames/commsim.hpp"
#include "nlgames/games.hpp"
#include "nlgames/strategies.hpp"

namespace nlgames {

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// {"S","T","A","B","pi":[[s,t,p],...],"V":[[s,t,a,b],...]} with label
// tuples; V lists accepting tuples only, pi lists nonzero weights only,
// both in question/answer index order.
std::string game_to_json(const NonlocalGame& g);
NonlocalGame game_from_json(const std::string& text);

// {"dA","dB","psi":matrix,"alice":{question:[matrix,...]},"bob":{...}}
std::string strategy_to_json(const QuantumStrategy& st);
QuantumStrategy strategy_from_json(const std::string& text);

std::string protocol_to_json(const Protocol& p);
Protocol protocol_from_json(const std::string& text);

std::string classical_value_to_json(const NonlocalGame& g,
                                    const ClassicalValueResult& r);
std::string detection_to_json(const NonlocalGame& g,
                              const WeakProjectionReport& r);
std::string perfection_to_json(const NonlocalGame& g,
                               const PerfectionLedger& r);
std::string structure_to_json(const StructureReport& r);
std::string simulation_summary_to_json(const SimulationSummary& r);
std::string chromatic_to_json(const Graph& g, const ChromaticResult& r);
std::string cost_report_to_json(const CostReport& r);
std::string cost_bounds_to_json(const CostBoundReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nlgames
