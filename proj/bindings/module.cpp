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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlgames/commsim.hpp"
#include "nlgames/games.hpp"
#include "nlgames/json_io.hpp"
#include "nlgames/linalg.hpp"
#include "nlgames/strategies.hpp"

namespace py = pybind11;
using namespace nlgames;

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-party one-round nonlocal games: evaluation, structure "
            "verification, and one-way communication protocols";

  py::enum_<Party>(m, "Party")
      .value("ALICE", Party::Alice)
      .value("BOB", Party::Bob);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_readwrite("vertices", &Graph::vertices)
      .def_readwrite("edges", &Graph::edges)
      .def("vertex_index", &Graph::vertex_index)
      .def("validate", &Graph::validate);

  py::class_<NonlocalGame>(m, "NonlocalGame")
      .def(py::init<>())
      .def_readwrite("S", &NonlocalGame::S)
      .def_readwrite("T", &NonlocalGame::T)
      .def_readwrite("A", &NonlocalGame::A)
      .def_readwrite("B", &NonlocalGame::B)
      .def("init_tables", &NonlocalGame::init_tables)
      .def("pi_at",
           [](const NonlocalGame& g, int s, int t) { return g.pi_at(s, t); })
      .def("set_pi",
           [](NonlocalGame& g, int s, int t, double p) { g.pi_at(s, t) = p; })
      .def("accepts", &NonlocalGame::accepts)
      .def("set_accepts", &NonlocalGame::set_accepts)
      .def("s_index", &NonlocalGame::s_index)
      .def("t_index", &NonlocalGame::t_index)
      .def("a_index", &NonlocalGame::a_index)
      .def("b_index", &NonlocalGame::b_index)
      .def("validate", &NonlocalGame::validate,
           py::arg("eps") = kDefaultEps);

  py::class_<ClassicalValueResult>(m, "ClassicalValueResult")
      .def_readonly("value", &ClassicalValueResult::value)
      .def_readonly("alice_answers", &ClassicalValueResult::alice_answers)
      .def_readonly("bob_answers", &ClassicalValueResult::bob_answers);

  py::class_<WeakProjectionWitness>(m, "WeakProjectionWitness")
      .def_readonly("party", &WeakProjectionWitness::party)
      .def_readonly("partner", &WeakProjectionWitness::partner)
      .def_readonly("f", &WeakProjectionWitness::f);

  py::class_<WeakProjectionReport>(m, "WeakProjectionReport")
      .def_readonly("witnesses", &WeakProjectionReport::witnesses)
      .def_readonly("projection_game", &WeakProjectionReport::projection_game);

  py::class_<ParityConstraint>(m, "ParityConstraint")
      .def(py::init([](std::vector<int> vars, int rhs) {
             ParityConstraint c;
             c.vars = std::move(vars);
             c.rhs = rhs;
             return c;
           }),
           py::arg("vars"), py::arg("rhs"))
      .def_readonly("vars", &ParityConstraint::vars)
      .def_readonly("rhs", &ParityConstraint::rhs);

  py::class_<SchmidtDecomposition>(m, "SchmidtDecomposition")
      .def_readonly("d_a", &SchmidtDecomposition::d_a)
      .def_readonly("d_b", &SchmidtDecomposition::d_b)
      .def_readonly("coefficients", &SchmidtDecomposition::coefficients)
      .def_readonly("left_basis", &SchmidtDecomposition::left_basis)
      .def_readonly("right_basis", &SchmidtDecomposition::right_basis)
      .def_readonly("rank", &SchmidtDecomposition::rank)
      .def("full_schmidt_rank", &SchmidtDecomposition::full_schmidt_rank)
      .def("reconstruct", &SchmidtDecomposition::reconstruct)
      .def("reduced_root", &SchmidtDecomposition::reduced_root);

  py::class_<QuantumStrategy>(m, "QuantumStrategy")
      .def(py::init<>())
      .def_readwrite("d_a", &QuantumStrategy::d_a)
      .def_readwrite("d_b", &QuantumStrategy::d_b)
      .def_readwrite("psi", &QuantumStrategy::psi)
      .def_readwrite("alice", &QuantumStrategy::alice)
      .def_readwrite("bob", &QuantumStrategy::bob);

  py::class_<LossEntry>(m, "LossEntry")
      .def_readonly("s", &LossEntry::s)
      .def_readonly("t", &LossEntry::t)
      .def_readonly("a", &LossEntry::a)
      .def_readonly("b", &LossEntry::b)
      .def_readonly("magnitude", &LossEntry::magnitude);

  py::class_<PerfectionLedger>(m, "PerfectionLedger")
      .def_readonly("perfect", &PerfectionLedger::perfect)
      .def_readonly("winning_probability",
                    &PerfectionLedger::winning_probability)
      .def_readonly("total_loss", &PerfectionLedger::total_loss)
      .def_readonly("max_violation", &PerfectionLedger::max_violation)
      .def_readonly("violations", &PerfectionLedger::violations);

  py::class_<ResidualEntry>(m, "ResidualEntry")
      .def_readonly("label", &ResidualEntry::label)
      .def_readonly("value", &ResidualEntry::value);

  py::class_<StructureReport>(m, "StructureReport")
      .def_readonly("schmidt_coefficients",
                    &StructureReport::schmidt_coefficients)
      .def_readonly("schmidt_classes", &StructureReport::schmidt_classes)
      .def_readonly("projectivity", &StructureReport::projectivity)
      .def_readonly("commutator", &StructureReport::commutator)
      .def_readonly("off_block_mass", &StructureReport::off_block_mass)
      .def_readonly("perfect", &StructureReport::perfect)
      .def_readonly("total_loss", &StructureReport::total_loss)
      .def("max_projectivity", &StructureReport::max_projectivity)
      .def("max_commutator", &StructureReport::max_commutator)
      .def("max_off_block", &StructureReport::max_off_block);

  py::class_<ProtocolTranscript>(m, "ProtocolTranscript")
      .def_readonly("s", &ProtocolTranscript::s)
      .def_readonly("t", &ProtocolTranscript::t)
      .def_readonly("message", &ProtocolTranscript::message)
      .def_readonly("quantum_dim", &ProtocolTranscript::quantum_dim)
      .def_readonly("probability", &ProtocolTranscript::probability)
      .def_readonly("says_equal", &ProtocolTranscript::says_equal)
      .def_readonly("correct", &ProtocolTranscript::correct)
      .def_readonly("deviation", &ProtocolTranscript::deviation);

  py::class_<SimulationSummary>(m, "SimulationSummary")
      .def_readonly("pairs_checked", &SimulationSummary::pairs_checked)
      .def_readonly("correct", &SimulationSummary::correct)
      .def_readonly("max_deviation", &SimulationSummary::max_deviation)
      .def_readonly("classical_bits", &SimulationSummary::classical_bits)
      .def_readonly("qubits", &SimulationSummary::qubits);

  py::class_<SimulationResult>(m, "SimulationResult")
      .def_readonly("transcripts", &SimulationResult::transcripts)
      .def_readonly("summary", &SimulationResult::summary);

  py::class_<CostReport>(m, "CostReport")
      .def_readonly("classical_bits", &CostReport::classical_bits)
      .def_readonly("qubits", &CostReport::qubits)
      .def_readonly("deterministic_bits", &CostReport::deterministic_bits);

  py::class_<Protocol>(m, "Protocol")
      .def_readonly("graph", &Protocol::graph)
      .def_readonly("game", &Protocol::game)
      .def_readonly("strategy", &Protocol::strategy)
      .def_readonly("colors", &Protocol::colors)
      .def_readonly("classical_bits", &Protocol::classical_bits)
      .def_readonly("qubits", &Protocol::qubits);

  py::class_<DeterministicProtocol>(m, "DeterministicProtocol")
      .def_readonly("protocol", &DeterministicProtocol::protocol)
      .def_readonly("cost", &DeterministicProtocol::cost);

  py::class_<ChromaticResult>(m, "ChromaticResult")
      .def_readonly("chi", &ChromaticResult::chi)
      .def_readonly("coloring", &ChromaticResult::coloring);

  py::class_<CostBoundReport>(m, "CostBoundReport")
      .def_readonly("per_part_chromatic_bound",
                    &CostBoundReport::per_part_chromatic_bound)
      .def_readonly("printed_bound", &CostBoundReport::printed_bound)
      .def_readonly("exceeds_printed", &CostBoundReport::exceeds_printed)
      .def_readonly("composed_deterministic_bits",
                    &CostBoundReport::composed_deterministic_bits)
      .def_readonly("quantum_floor_bits", &CostBoundReport::quantum_floor_bits);

  // linear algebra
  m.def("kron", &kron);
  m.def("vec", &vec_map);
  m.def("unvec", &unvec);
  m.def("max_entangled_state", &max_entangled_state);
  m.def("bipartite_expectation", &bipartite_expectation);
  m.def("schmidt_decompose", &schmidt_decompose, py::arg("psi"),
        py::arg("d_a"), py::arg("d_b"), py::arg("eps") = kDefaultEps);

  // games and graphs
  m.def("hadamard_graph", &hadamard_graph);
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("chsh_game", &chsh_game);
  m.def("magic_square_constraints", &magic_square_constraints);
  m.def("make_bcs_game", &make_bcs_game);
  m.def("make_coloring_game", &make_coloring_game);
  m.def("make_homomorphism_game", &make_homomorphism_game);
  m.def("swap_parties", &swap_parties);
  m.def("classical_value", &classical_value, py::arg("game"),
        py::arg("budget") = 1e8);
  m.def("detect_weak_projection", &detect_weak_projection, py::arg("game"),
        py::arg("strict_support") = false);
  m.def("tilde_transform", &tilde_transform);

  // strategies
  m.def("validate_strategy", &validate_strategy, py::arg("game"),
        py::arg("strategy"), py::arg("eps") = kDefaultEps);
  m.def("swap_strategy", &swap_strategy);
  m.def("winning_probability", &winning_probability, py::arg("game"),
        py::arg("strategy"), py::arg("eps") = kDefaultEps);
  m.def("is_perfect", &is_perfect, py::arg("game"), py::arg("strategy"),
        py::arg("eps") = kDefaultEps);
  m.def("verify_correlated_measurements", &verify_correlated_measurements, py::arg("e"), py::arg("f"),
        py::arg("psi"), py::arg("eps") = kDefaultEps);
  m.def("verify_grouped_measurements", &verify_grouped_measurements, py::arg("e"), py::arg("f"),
        py::arg("f_map"), py::arg("psi"), py::arg("eps") = kDefaultEps);
  m.def("substitute_max_entangled", &substitute_max_entangled,
        py::arg("game"), py::arg("strategy"), py::arg("eps") = kDefaultEps,
        py::arg("restrict_support") = false);
  m.def("restrict_to_schmidt_support", &restrict_to_schmidt_support,
        py::arg("strategy"), py::arg("eps") = kDefaultEps);
  m.def("block_direct_sum_strategy", &block_direct_sum_strategy);
  m.def("fourier_strategy_hadamard", &fourier_strategy_hadamard);
  m.def("magic_square_strategy", &magic_square_strategy);
  m.def("chsh_optimal_strategy", &chsh_optimal_strategy);
  m.def("classical_embedded_strategy", &classical_embedded_strategy);
  m.def("lift_strategy_tilde", &lift_strategy_tilde, py::arg("game"),
        py::arg("strategy"), py::arg("party"), py::arg("eps") = kDefaultEps);
  m.def("restrict_strategy_from_tilde", &restrict_strategy_from_tilde);
  m.def("structure_report", &structure_report, py::arg("game"),
        py::arg("strategy"), py::arg("eps") = kDefaultEps);
  m.def("perturb_bob_povm", &perturb_bob_povm, py::arg("strategy"),
        py::arg("question"), py::arg("magnitude"), py::arg("seed") = 0ull);

  // protocols
  m.def("ceil_log2", &ceil_log2);
  m.def("strategy_to_protocol", &strategy_to_protocol, py::arg("graph"),
        py::arg("strategy"), py::arg("eps") = kDefaultEps);
  m.def("simulate_protocol", &simulate_protocol, py::arg("protocol"),
        py::arg("eps") = kDefaultEps);
  m.def("coloring_protocol", &coloring_protocol);
  m.def("chromatic_number", &chromatic_number, py::arg("graph"),
        py::arg("budget") = 64, py::arg("jobs") = 1);
  m.def("orthogonal_representation_hadamard",
        &orthogonal_representation_hadamard);
  m.def("cost_bounds", &cost_bounds);
  m.def("protocol_cost_report", &protocol_cost_report);

  // JSON round trips
  m.def("graph_to_json", &graph_to_json);
  m.def("graph_from_json", &graph_from_json);
  m.def("game_to_json", &game_to_json);
  m.def("game_from_json", &game_from_json);
  m.def("strategy_to_json", &strategy_to_json);
  m.def("strategy_from_json", &strategy_from_json);
  m.def("protocol_to_json", &protocol_to_json);
  m.def("protocol_from_json", &protocol_from_json);
}
