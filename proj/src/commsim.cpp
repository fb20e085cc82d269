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

#include "nlgames/commsim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

namespace nlgames {

int ceil_log2(long long k) {
  if (k < 1) {
    throw Error(ErrorCode::MalformedInput,
                "ceil_log2 needs a positive argument");
  }
  int b = 0;
  while ((1LL << b) < k) ++b;
  return b;
}

Protocol strategy_to_protocol(const Graph& x, const QuantumStrategy& st,
                              double eps) {
  if (st.alice.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "strategy has no measurements");
  }
  int colors = static_cast<int>(st.alice.begin()->second.size());
  if (colors < 1) {
    throw Error(ErrorCode::ShapeMismatch, "strategy has no outcomes");
  }
  Protocol p;
  p.graph = x;
  p.game = make_coloring_game(x, colors);
  PerfectionLedger ledger = is_perfect(p.game, st, eps);
  if (!ledger.perfect) {
    throw Error(ErrorCode::NotPerfect,
                "largest rejecting expectation " +
                    std::to_string(ledger.max_violation));
  }
  p.strategy = st;
  p.colors = colors;
  p.classical_bits = ceil_log2(colors);
  p.qubits = ceil_log2(st.d_b);
  return p;
}

namespace {

// Appends the transcripts for one ordered promise pair and reports whether
// every branch was correct. Bob's verdict probability on each branch must be
// within eps of the promised 0/1 value.
bool run_pair(const Protocol& p, int s, int t, double eps,
              std::vector<ProtocolTranscript>* transcripts,
              double* max_deviation) {
  const QuantumStrategy& st = p.strategy;
  const auto& es = st.alice.at(p.graph.vertices[s]);
  const auto& fs = st.bob.at(p.graph.vertices[t]);
  bool equal_pair = s == t;
  bool pair_ok = true;
  for (size_t a = 0; a < es.size(); ++a) {
    Vector phi = vec_map(es[a] * unvec(st.psi, st.d_a, st.d_b));
    double prob = phi.squaredNorm();
    if (prob <= eps) continue;
    phi /= phi.norm();
    Matrix m = unvec(phi, st.d_a, st.d_b);
    Matrix gram = m.adjoint() * m;  // <phi|(I x F)|phi> = sum_ij gram_ij F_ij
    double q_equal = gram.cwiseProduct(fs[a]).sum().real();
    double ideal = equal_pair ? 1.0 : 0.0;
    double deviation = std::abs(q_equal - ideal);
    *max_deviation = std::max(*max_deviation, deviation);
    if (deviation > eps) {
      throw Error(ErrorCode::NondeterministicAnswer,
                  "pair (" + p.graph.vertices[s] + "," + p.graph.vertices[t] +
                      "), message " + std::to_string(a) +
                      ": verdict probability " + std::to_string(q_equal));
    }
    ProtocolTranscript tr;
    tr.s = p.graph.vertices[s];
    tr.t = p.graph.vertices[t];
    tr.message = static_cast<int>(a);
    tr.quantum_dim = st.d_b;
    tr.probability = prob;
    tr.says_equal = q_equal > 0.5;
    tr.correct = tr.says_equal == equal_pair;
    tr.deviation = deviation;
    pair_ok = pair_ok && tr.correct;
    transcripts->push_back(tr);
  }
  return pair_ok;
}

}  // namespace

SimulationResult simulate_protocol(const Protocol& p, double eps) {
  SimulationResult result;
  result.summary.classical_bits = p.classical_bits;
  result.summary.qubits = p.qubits;
  int n = static_cast<int>(p.graph.vertices.size());
  for (int v = 0; v < n; ++v) {
    bool ok = run_pair(p, v, v, eps, &result.transcripts,
                       &result.summary.max_deviation);
    ++result.summary.pairs_checked;
    result.summary.correct += ok ? 1 : 0;
  }
  for (auto [u, v] : p.graph.edges) {
    for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
      bool ok = run_pair(p, s, t, eps, &result.transcripts,
                         &result.summary.max_deviation);
      ++result.summary.pairs_checked;
      result.summary.correct += ok ? 1 : 0;
    }
  }
  return result;
}

DeterministicProtocol coloring_protocol(const Graph& x,
                                        const std::vector<int>& coloring) {
  x.validate();
  if (coloring.size() != x.vertices.size()) {
    throw Error(ErrorCode::ImproperColoring,
                "coloring covers " + std::to_string(coloring.size()) + " of " +
                    std::to_string(x.vertices.size()) + " vertices");
  }
  for (int c : coloring) {
    if (c < 0) {
      throw Error(ErrorCode::ImproperColoring, "negative color");
    }
  }
  for (auto [u, v] : x.edges) {
    if (coloring[u] == coloring[v]) {
      throw Error(ErrorCode::ImproperColoring,
                  "vertices " + x.vertices[u] + " and " + x.vertices[v] +
                      " share color " + std::to_string(coloring[u]));
    }
  }
  // Canonicalize the palette to 0..k-1, keeping the colors' relative order.
  std::set<int> used(coloring.begin(), coloring.end());
  std::vector<int> palette(used.begin(), used.end());
  std::vector<int> canonical(coloring.size());
  for (size_t v = 0; v < coloring.size(); ++v) {
    canonical[v] = static_cast<int>(
        std::lower_bound(palette.begin(), palette.end(), coloring[v]) -
        palette.begin());
  }
  int k = static_cast<int>(palette.size());

  NonlocalGame game = make_coloring_game(x, k);
  QuantumStrategy st = classical_embedded_strategy(game, canonical, canonical);

  DeterministicProtocol out;
  out.protocol.graph = x;
  out.protocol.game = std::move(game);
  out.protocol.strategy = std::move(st);
  out.protocol.colors = k;
  out.protocol.classical_bits = ceil_log2(k);
  out.protocol.qubits = 0;
  out.cost.classical_bits = out.protocol.classical_bits;
  out.cost.qubits = 0;
  out.cost.deterministic_bits = out.protocol.classical_bits;
  return out;
}

// ---- exact chromatic number ------------------------------------------------

namespace {

struct ColoringSearch {
  const std::vector<std::vector<int>>& adj;
  const std::vector<int>& order;
  int k;
  std::vector<int> color;

  bool assign(size_t pos, int max_used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    std::vector<bool> forbidden(k, false);
    for (int u : adj[v]) {
      if (color[u] >= 0) forbidden[color[u]] = true;
    }
    // Allowing at most one fresh color per step rules out palette
    // permutations without losing any coloring.
    int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (forbidden[c]) continue;
      color[v] = c;
      if (assign(pos + 1, std::max(max_used, c))) return true;
      color[v] = -1;
    }
    return false;
  }
};

// Exact minimum coloring of one connected component given by local
// adjacency lists. Deterministic: vertices are processed in degree-descending
// order (ties by index) and colors by first use.
std::vector<int> solve_component(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });

  std::vector<int> clique;
  for (int v : order) {
    bool extends = true;
    for (int u : clique) {
      if (!std::binary_search(adj[v].begin(), adj[v].end(), u)) {
        extends = false;
        break;
      }
    }
    if (extends) clique.push_back(v);
  }
  int lower = static_cast<int>(clique.size());

  std::vector<int> greedy(n, -1);
  int upper = 0;
  for (int v : order) {
    std::vector<bool> forbidden(n, false);
    for (int u : adj[v]) {
      if (greedy[u] >= 0) forbidden[greedy[u]] = true;
    }
    int c = 0;
    while (forbidden[c]) ++c;
    greedy[v] = c;
    upper = std::max(upper, c + 1);
  }

  for (int k = lower; k < upper; ++k) {
    ColoringSearch search{adj, order, k, std::vector<int>(n, -1)};
    if (search.assign(0, -1)) return search.color;
  }
  return greedy;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& x, int budget, int jobs) {
  x.validate();
  if (budget < 1) {
    throw Error(ErrorCode::MalformedInput, "budget must be positive");
  }
  int n = static_cast<int>(x.vertices.size());
  if (n > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(n) + " vertices exceeds budget " +
                    std::to_string(budget));
  }
  ChromaticResult result;
  result.coloring.assign(n, -1);
  if (n == 0) return result;

  auto adj = x.adjacency_lists();
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<int> comp_id(n, -1);
  std::vector<std::vector<int>> members;  // global vertex ids per component
  for (int start = 0; start < n; ++start) {
    if (comp_id[start] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.push_back({});
    std::vector<int> stack{start};
    comp_id[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (int u : adj[v]) {
        if (comp_id[u] < 0) {
          comp_id[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  auto solve = [&](const std::vector<int>& verts) {
    std::vector<int> local_of(n, -1);
    for (size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> local_adj(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
      for (int u : adj[verts[i]]) local_adj[i].push_back(local_of[u]);
      std::sort(local_adj[i].begin(), local_adj[i].end());
    }
    return solve_component(local_adj);
  };

  std::vector<std::vector<int>> solutions(members.size());
  if (jobs > 1 && members.size() > 1) {
    std::vector<std::future<std::vector<int>>> futures;
    for (const auto& verts : members) {
      futures.push_back(
          std::async(std::launch::async, [&solve, &verts] { return solve(verts); }));
    }
    for (size_t i = 0; i < futures.size(); ++i) solutions[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < members.size(); ++i) solutions[i] = solve(members[i]);
  }

  for (size_t i = 0; i < members.size(); ++i) {
    int used = 0;
    for (size_t j = 0; j < members[i].size(); ++j) {
      result.coloring[members[i][j]] = solutions[i][j];
      used = std::max(used, solutions[i][j] + 1);
    }
    result.chi = std::max(result.chi, used);
  }
  return result;
}

std::vector<Vector> orthogonal_representation_hadamard(int n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorCode::BadN,
                "need n divisible by 4, got " + std::to_string(n));
  }
  Graph x = hadamard_graph(n);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Vector> rep;
  rep.reserve(x.vertices.size());
  for (const auto& label : x.vertices) {
    Vector v(n);
    for (int i = 0; i < n; ++i) {
      v(i) = label[i] == '1' ? -scale : scale;
    }
    rep.push_back(std::move(v));
  }
  return rep;
}

CostBoundReport cost_bounds(int n, int d) {
  if (n < 1 || d < 1) {
    throw Error(ErrorCode::MalformedInput, "n and d must be positive");
  }
  CostBoundReport r;
  double base = 9.0 + 4.0 * std::sqrt(2.0);  // (1 + 2*sqrt(2))^2
  r.per_part_chromatic_bound = std::pow(base, d);
  r.printed_bound = std::pow(14.0, d);
  r.exceeds_printed = r.per_part_chromatic_bound > r.printed_bound;
  r.composed_deterministic_bits = std::log2(static_cast<double>(n)) + 3.0 * d;
  r.quantum_floor_bits = std::log2(static_cast<double>(n));
  return r;
}

CostReport protocol_cost_report(const Protocol& p) {
  CostReport report;
  report.classical_bits = p.classical_bits;
  report.qubits = p.qubits;
  ChromaticResult chi = chromatic_number(p.graph);
  report.deterministic_bits = chi.chi > 0 ? ceil_log2(chi.chi) : 0;
  return report;
}

}  // namespace nlgames
