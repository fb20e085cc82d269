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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlgames/games.hpp"
#include "nlgames/linalg.hpp"

namespace nlgames {

// ---- strategy data model -------------------------------------------------

struct QuantumStrategy {
  Index d_a = 0;
  Index d_b = 0;
  Vector psi;
  // Question label -> POVM, elements aligned with the game's answer order.
  std::map<std::string, std::vector<Matrix>> alice;
  std::map<std::string, std::vector<Matrix>> bob;
};

// POVM well formed: every element PSD within eps, sum = identity within eps.
void validate_povm(const std::vector<Matrix>& povm, Index dim, double eps,
                   const std::string& who);

// Questions/answer counts/dimensions line up with the game, psi is a unit
// vector, every POVM is valid. Throws ShapeMismatch / NotUnitVector /
// InvalidMeasurement.
void validate_strategy(const NonlocalGame& g, const QuantumStrategy& st,
                       double eps = kDefaultEps);

// Exchanges the roles: psi gets its tensor factors swapped, Alice's and
// Bob's POVMs trade places.
QuantumStrategy swap_strategy(const QuantumStrategy& st);

// |A| x |B| table of tr(E^s_a (x) F^t_b |psi><psi|) for one question pair.
Matrix expectation_grid(const NonlocalGame& g, const QuantumStrategy& st,
                        int s, int t);

// ---- evaluation ------------------------------------------------------------

// sum_{s,t} pi(s,t) sum_{accepting (a,b)} tr(E^s_a (x) F^t_b |psi><psi|).
// Raw value (may stray from [0,1] by rounding noise); clip when reporting.
double winning_probability(const NonlocalGame& g, const QuantumStrategy& st,
                           double eps = kDefaultEps);

struct LossEntry {
  int s, t, a, b;
  double magnitude;
};

struct PerfectionLedger {
  bool perfect = true;
  double winning_probability = 0.0;
  double total_loss = 0.0;     // 1 - winning probability
  double max_violation = 0.0;  // largest rejecting-tuple expectation
  std::vector<LossEntry> violations;
};

// Perfect iff every rejecting (a,b) on every pi-supported pair has
// expectation magnitude <= eps. The ledger lists all violating tuples.
PerfectionLedger is_perfect(const NonlocalGame& g, const QuantumStrategy& st,
                            double eps = kDefaultEps);

// ---- structure verification --------------------------------------------------

struct ResidualEntry {
  std::string label;
  double value = 0.0;
};

struct StructureReport {
  std::vector<double> schmidt_coefficients;        // descending
  std::vector<std::vector<int>> schmidt_classes;   // partition of [d] by value
  std::vector<ResidualEntry> projectivity;         // ||M^2 - M||_F
  std::vector<ResidualEntry> commutator;           // ||[D, M]||_F
  std::vector<ResidualEntry> off_block_mass;       // weight across classes
  bool perfect = true;      // filled by structure_report
  double total_loss = 0.0;  // filled by structure_report

  double max_projectivity() const;
  double max_commutator() const;
  double max_off_block() const;
};

// Partition of {0..n-1} grouping descending coefficients whose consecutive
// gap is <= eps.
std::vector<std::vector<int>> schmidt_classes(
    const std::vector<double>& coefficients, double eps = kDefaultEps);

// For two n-outcome measurements whose cross expectations on a full-rank
// state all vanish, every operator must be a projector commuting with the
// reduced-state root; this measures those residuals (the caller asserts).
// E and F elements are also re-expressed in the Schmidt bases and their mass
// outside the coefficient-class diagonal blocks is reported.
StructureReport verify_correlated_measurements(const std::vector<Matrix>& e,
                              const std::vector<Matrix>& f, const Vector& psi,
                              double eps = kDefaultEps);

// Groups e by f_map (answers with f_map[i] = j merge into E'_j; grouped sums
// preserve completeness exactly) and measures the same residuals on
// ({E'_j}, {F_j}). The cross-expectation hypothesis is checked per original
// outcome: for all i and j != f_map[i].
StructureReport verify_grouped_measurements(const std::vector<Matrix>& e,
                                  const std::vector<Matrix>& f,
                                  const std::vector<int>& f_map,
                                  const Vector& psi,
                                  double eps = kDefaultEps);

// ---- transforms ---------------------------------------------------------------

// Replaces psi by the maximally entangled state over its own Schmidt bases,
// (1/sqrt(d)) sum_i |alpha_i>|beta_i>, keeping all measurements. Requires a
// weak-projection witness on pi-supported pairs, a perfect input strategy,
// and full Schmidt rank; under those the output stays perfect and Bob's
// operators are projectors. restrict_support first truncates both local
// spaces to the Schmidt support (opt-in; default rejects rank-deficient
// states instead).
QuantumStrategy substitute_max_entangled(const NonlocalGame& g,
                                         const QuantumStrategy& st,
                                         double eps = kDefaultEps,
                                         bool restrict_support = false);

// Conjugates the strategy into its Schmidt bases truncated to the Schmidt
// rank: psi keeps only its nonzero coefficients, POVM elements are
// compressed to the support. Identity on full-rank strategies up to basis.
QuantumStrategy restrict_to_schmidt_support(const QuantumStrategy& st,
                                            double eps = kDefaultEps);

// Doubles both local dimensions: new state sqrt(p) psi (+) sqrt(1-p) psi
// across two diagonal blocks, every POVM element becomes E (+) E. Winning
// probabilities are preserved for every game; p != 1/2 yields two distinct
// Schmidt-coefficient classes.
QuantumStrategy block_direct_sum_strategy(const QuantumStrategy& st, double p);

// ---- fixtures -------------------------------------------------------------------

// Strategy for the n-coloring game on the Hadamard graph with 2^n vertices:
// shared state |Psi_n>, Alice's projector for color a on vertex s is onto
// u_{s,a} = (1/sqrt(n)) sum_i (-1)^{s_i} w^{a i} |i>, w = e^{2 pi i / n};
// Bob uses the entrywise conjugates. Perfect whenever 4 | n. The a=0 column
// is the real orthogonal representation of the graph.
QuantumStrategy fourier_strategy_hadamard(int n);

// The standard two-qubit-pair strategy for the 3x3 parity grid: Alice
// measures the joint eigenbasis of the three commuting observables of her
// row or column, Bob measures the conjugated single-cell observable, on
// |Psi_4>. Perfect for make_bcs_game(magic_square_constraints()).
QuantumStrategy magic_square_strategy();

// Rotated-basis one-ebit strategy winning the CHSH game with probability
// cos^2(pi/8).
QuantumStrategy chsh_optimal_strategy();

// Deterministic classical pair embedded with d_a = d_b = 1: the answer
// picked by the map gets the [1] element, everything else [0].
QuantumStrategy classical_embedded_strategy(const NonlocalGame& g,
                                            const std::vector<int>& alice_map,
                                            const std::vector<int>& bob_map);

// ---- consistency-question lifting -------------------------------------------------

// Builds a strategy for tilde_transform(g, party) out of a perfect strategy
// for g. Homomorphism-shaped games (S = T, A = B, diagonal pairs supported
// and accepting exactly equal answers): Alice reuses E^s on (s,0) and E^t on
// (t,1). BCS-shaped games (variable questions "x<k>", bit answers for Bob,
// canonical assignment answer labels): Alice answers (t,1) by measuring the
// lowest-index constraint containing x_t and reporting its bit for x_t
// (answers not addressing x_t route to bit 0; they never occur). Anything
// else: UnsupportedGameShape.
QuantumStrategy lift_strategy_tilde(const NonlocalGame& g,
                                    const QuantumStrategy& st, Party party,
                                    double eps = kDefaultEps);

// Inverse direction: a strategy for the tilde game restricted back to the
// base game. The (s,0) measurements are kept; operator mass on answers
// outside the base answer set is folded into the first answer (it never
// fires for perfect strategies), so POVMs stay complete and perfection is
// preserved.
QuantumStrategy restrict_strategy_from_tilde(const NonlocalGame& g,
                                             const QuantumStrategy& tilde_st,
                                             Party party);

// ---- structure of perfect strategies ------------------------------------------------

// Schmidt-class partition plus off-block mass of every Bob operator and
// every witness-grouped Alice operator, measured in the Schmidt bases. For a
// perfect strategy these masses vanish; the report also carries the
// perfection verdict so probes on perturbed strategies can see both effects.
StructureReport structure_report(const NonlocalGame& g,
                                 const QuantumStrategy& st,
                                 double eps = kDefaultEps);

// Adds a seeded Hermitian perturbation of the given Frobenius magnitude to
// each element of one of Bob's POVMs, then projects back to a valid POVM
// (eigenvalue clipping and completeness renormalization).
QuantumStrategy perturb_bob_povm(const QuantumStrategy& st,
                                 const std::string& question, double magnitude,
                                 unsigned long long seed);

}  // namespace nlgames
