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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nlgames/error.hpp"
#include "nlgames/linalg.hpp"

namespace nlgames {

enum class Party { Alice, Bob };

inline const char* party_name(Party p) {
  return p == Party::Alice ? "alice" : "bob";
}

// ---- graphs ------------------------------------------------------------

struct Graph {
  std::vector<std::string> vertices;
  // Index pairs (u, v) with u < v, sorted; no loops, no duplicates.
  std::vector<std::pair<int, int>> edges;

  int vertex_index(const std::string& label) const;
  std::vector<std::vector<int>> adjacency_lists() const;
  void validate() const;
};

// 2^n vertices labeled by n-bit strings; edges between strings at Hamming
// distance exactly n/2. n must be even (odd n has no edges).
Graph hadamard_graph(int n);
// Vertices "0".."n-1", all pairs adjacent.
Graph complete_graph(int n);
// Vertices "0".."n-1", edges i ~ i+1 mod n.
Graph cycle_graph(int n);

// ---- the game data model ------------------------------------------------

struct NonlocalGame {
  std::vector<std::string> S, T, A, B;
  std::vector<double> pi;     // |S|*|T|, index s*|T()|+t
  std::vector<uint8_t> V;     // |S|*|T|*|A|*|B|

  double pi_at(int s, int t) const { return pi[s * T.size() + t]; }
  double& pi_at(int s, int t) { return pi[s * T.size() + t]; }
  bool accepts(int s, int t, int a, int b) const {
    return V[((static_cast<size_t>(s) * T.size() + t) * A.size() + a) *
                 B.size() +
             b] != 0;
  }
  void set_accepts(int s, int t, int a, int b, bool val) {
    V[((static_cast<size_t>(s) * T.size() + t) * A.size() + a) * B.size() +
      b] = val ? 1 : 0;
  }
  void init_tables() {
    pi.assign(S.size() * T.size(), 0.0);
    V.assign(S.size() * T.size() * A.size() * B.size(), 0);
  }

  int s_index(const std::string& label) const;
  int t_index(const std::string& label) const;
  int a_index(const std::string& label) const;
  int b_index(const std::string& label) const;

  // Checks label uniqueness, pi normalization/non-negativity, nonempty
  // support, and table sizes.
  void validate(double eps = kDefaultEps) const;
};

// Roles exchanged: S' = T, A' = B, pi'(t,s) = pi(s,t), V'(b,a|t,s) = V(a,b|s,t).
NonlocalGame swap_parties(const NonlocalGame& g);

// ---- classical value -----------------------------------------------------

struct ClassicalValueResult {
  double value = 0.0;
  std::vector<int> alice_answers;  // answer index per question in S order
  std::vector<int> bob_answers;    // per question in T order
};

// Exact maximum of sum_{s,t} pi(s,t) V(g(s),h(t)|s,t) over deterministic
// pairs (g,h). One side is enumerated (the one with the smaller strategy
// space after dropping pointwise-dominated answers, which cannot change the
// maximum); the other side is best-responded per question. Deterministic:
// the first maximizer in lexicographic enumeration order is returned.
// budget caps the number of verification-table lookups the scan would need.
ClassicalValueResult classical_value(const NonlocalGame& g,
                                     double budget = 1e8);

// ---- weak projection detection -------------------------------------------

struct WeakProjectionWitness {
  Party party = Party::Bob;
  // For party = Bob: per question t of Bob, the partner question s(t) and the
  // map f[t] over Alice's answers: f[t][a] = the unique b accepted at
  // (s(t), t), or -1 for answers that lose against every b there (such
  // answers never occur in a perfect strategy). Mirrored for party = Alice.
  std::vector<int> partner;
  std::vector<std::vector<int>> f;
};

struct WeakProjectionReport {
  std::vector<WeakProjectionWitness> witnesses;  // Bob first if present
  // Every (s,t) pair individually admits such a function from Alice's
  // answers to Bob's.
  bool projection_game = false;

  const WeakProjectionWitness* for_party(Party p) const {
    for (const auto& w : witnesses) {
      if (w.party == p) return &w;
    }
    return nullptr;
  }
};

// strict_support restricts the partner search to pairs with pi(s(t), t) > 0,
// which is what the maximally-entangled substitution consumes.
WeakProjectionReport detect_weak_projection(const NonlocalGame& g,
                                            bool strict_support = false);

// ---- consistency-check transform ------------------------------------------

inline std::string tilde_question_label(const std::string& q, int tag) {
  return "(" + q + "," + (tag ? "1" : "0") + ")";
}

// For party = Bob: Alice's question set becomes {(s,0)} + {(t,1)}, her answer
// set becomes the label-set union A + (B minus A), the i=0 rows copy V, and
// the i=1 rows accept exactly answer pairs with equal labels. The
// distribution halves: pi((s,0),t) = pi(s,t)/2 and pi((t,1),t) =
// (T-marginal of t)/2, so cross pairs ((t',1),t) carry no mass. The result
// is weakly projective for the named party. Mirrored for party = Alice.
NonlocalGame tilde_transform(const NonlocalGame& g, Party party);

// ---- generators ------------------------------------------------------------

// S = T = vertices, A = B = {"0".."c-1"}; uniform pi on {s=t or s~t};
// accept iff (s=t implies a=b) and (s~t implies a!=b). Pairs outside the
// support satisfy both implications vacuously and accept everything.
NonlocalGame make_coloring_game(const Graph& x, int c);

// Questions = V(X), answers = V(Y); uniform pi on {s=t or s~_X t};
// accept iff (s=t implies a=b) and (s~_X t implies a~_Y b).
NonlocalGame make_homomorphism_game(const Graph& x, const Graph& y);

struct ParityConstraint {
  std::vector<int> vars;  // distinct positive variable ids, x<k>
  int rhs = 0;            // sum of assigned bits mod 2 must equal rhs
};

// S = constraints "c1".."cm", T = occurring variables "x<k>" ascending,
// B = {"0","1"}; A = all assignment labels "x<i>=<bit>,..." (variables
// ascending) over each constraint's variable set, deduplicated. pi uniform
// on incident (constraint, variable) pairs. Accept iff Alice's answer
// addresses exactly the variables of c_s, satisfies the parity, and agrees
// with Bob's bit whenever x_t occurs in c_s.
NonlocalGame make_bcs_game(const std::vector<ParityConstraint>& constraints);

// 3x3 grid of variables x1..x9: rows sum to 0 mod 2, columns to 1 mod 2.
// No assignment satisfies all six, yet 17 of the 18 checks are winnable.
std::vector<ParityConstraint> magic_square_constraints();

// Uniform questions on {0,1}^2, answers {0,1}; win iff a xor b = s and t.
NonlocalGame chsh_game();

}  // namespace nlgames
