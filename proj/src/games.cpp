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

#include "nlgames/games.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace nlgames {

namespace {

int find_label(const std::vector<std::string>& labels,
               const std::string& label, const char* role) {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw Error(ErrorCode::MalformedInput,
              std::string("unknown ") + role + " label '" + label + "'");
}

void require_unique(const std::vector<std::string>& labels, const char* role) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::MalformedInput,
                  std::string("duplicate ") + role + " label '" + l + "'");
    }
  }
  if (labels.empty()) {
    throw Error(ErrorCode::MalformedInput,
                std::string(role) + " label list is empty");
  }
}

}  // namespace

// ---- graphs ------------------------------------------------------------

int Graph::vertex_index(const std::string& label) const {
  return find_label(vertices, label, "vertex");
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

void Graph::validate() const {
  require_unique(vertices, "vertex");
  int n = static_cast<int>(vertices.size());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::MalformedInput,
                  "loop at vertex '" + vertices[u] + "'");
    }
    if (u > v) {
      throw Error(ErrorCode::MalformedInput, "edge pair not in (u < v) order");
    }
    if (!seen.insert({u, v}).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate edge");
    }
  }
}

Graph hadamard_graph(int n) {
  if (n < 1) {
    throw Error(ErrorCode::BadN, "hadamard_graph: n must be positive");
  }
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddN,
                "hadamard_graph: odd n has no pairs at distance n/2");
  }
  if (n > 16) {
    throw Error(ErrorCode::BudgetExceeded,
                "hadamard_graph: 2^n vertices with n > 16 is out of budget");
  }
  Graph g;
  unsigned count = 1u << n;
  g.vertices.reserve(count);
  for (unsigned v = 0; v < count; ++v) {
    std::string label(n, '0');
    for (int i = 0; i < n; ++i) {
      if ((v >> (n - 1 - i)) & 1u) label[i] = '1';
    }
    g.vertices.push_back(std::move(label));
  }
  unsigned half = static_cast<unsigned>(n) / 2;
  for (unsigned u = 0; u < count; ++u) {
    for (unsigned v = u + 1; v < count; ++v) {
      if (std::popcount(u ^ v) == static_cast<int>(half)) {
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) {
    throw Error(ErrorCode::BadN, "complete_graph: n must be positive");
  }
  Graph g;
  for (int v = 0; v < n; ++v) g.vertices.push_back(std::to_string(v));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw Error(ErrorCode::BadN, "cycle_graph: n must be at least 3");
  }
  Graph g;
  for (int v = 0; v < n; ++v) g.vertices.push_back(std::to_string(v));
  for (int v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
  g.edges.emplace_back(0, n - 1);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// ---- the game data model -------------------------------------------------

int NonlocalGame::s_index(const std::string& label) const {
  return find_label(S, label, "question (S)");
}
int NonlocalGame::t_index(const std::string& label) const {
  return find_label(T, label, "question (T)");
}
int NonlocalGame::a_index(const std::string& label) const {
  return find_label(A, label, "answer (A)");
}
int NonlocalGame::b_index(const std::string& label) const {
  return find_label(B, label, "answer (B)");
}

void NonlocalGame::validate(double eps) const {
  require_unique(S, "S");
  require_unique(T, "T");
  require_unique(A, "A");
  require_unique(B, "B");
  if (pi.size() != S.size() * T.size()) {
    throw Error(ErrorCode::MalformedInput, "pi table has wrong size");
  }
  if (V.size() != S.size() * T.size() * A.size() * B.size()) {
    throw Error(ErrorCode::MalformedInput, "verification table has wrong size");
  }
  double total = 0.0;
  bool support = false;
  for (double p : pi) {
    if (p < 0.0) {
      throw Error(ErrorCode::MalformedInput, "negative question probability");
    }
    if (p > 0.0) support = true;
    total += p;
  }
  if (std::abs(total - 1.0) > eps) {
    throw Error(ErrorCode::MalformedInput,
                "question distribution sums to " + std::to_string(total));
  }
  if (!support) {
    throw Error(ErrorCode::MalformedInput, "question distribution is empty");
  }
}

NonlocalGame swap_parties(const NonlocalGame& g) {
  NonlocalGame w;
  w.S = g.T;
  w.T = g.S;
  w.A = g.B;
  w.B = g.A;
  w.init_tables();
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      w.pi_at(static_cast<int>(t), static_cast<int>(s)) =
          g.pi_at(static_cast<int>(s), static_cast<int>(t));
      for (size_t a = 0; a < g.A.size(); ++a) {
        for (size_t b = 0; b < g.B.size(); ++b) {
          w.set_accepts(static_cast<int>(t), static_cast<int>(s),
                        static_cast<int>(b), static_cast<int>(a),
                        g.accepts(static_cast<int>(s), static_cast<int>(t),
                                  static_cast<int>(a), static_cast<int>(b)));
        }
      }
    }
  }
  return w;
}

// ---- classical value -------------------------------------------------------

namespace {

// Answers of the row player (Alice if alice_side) that survive pointwise
// dominance at question q: an answer is dropped when another answer does at
// least as well against every supported partner question and answer, with a
// strict improvement somewhere or a smaller index on full ties. Dropping
// them cannot lower the maximum.
std::vector<int> undominated_answers(const NonlocalGame& g, bool alice_side,
                                     int q,
                                     const std::vector<int>& partners) {
  int n_own = static_cast<int>(alice_side ? g.A.size() : g.B.size());
  int n_other = static_cast<int>(alice_side ? g.B.size() : g.A.size());
  auto wins = [&](int own, int partner_q, int other) {
    return alice_side ? g.accepts(q, partner_q, own, other)
                      : g.accepts(partner_q, q, other, own);
  };
  std::vector<int> keep;
  for (int a = 0; a < n_own; ++a) {
    bool dominated = false;
    for (int a2 = 0; a2 < n_own && !dominated; ++a2) {
      if (a2 == a) continue;
      bool geq = true;
      bool strict = false;
      for (int pq : partners) {
        for (int o = 0; o < n_other; ++o) {
          bool w2 = wins(a2, pq, o);
          bool w1 = wins(a, pq, o);
          if (w2 < w1) {
            geq = false;
            break;
          }
          if (w2 > w1) strict = true;
        }
        if (!geq) break;
      }
      dominated = geq && (strict || a2 < a);
    }
    if (!dominated) keep.push_back(a);
  }
  return keep;
}

// Enumerates Bob's reduced strategy space in lexicographic order and
// best-responds for Alice per question. Exact: Alice's per-question choices
// are independent once Bob's assignment is fixed.
ClassicalValueResult enumerate_bob_side(
    const NonlocalGame& g, const std::vector<std::vector<int>>& dom_a,
    const std::vector<std::vector<int>>& dom_b,
    const std::vector<std::vector<int>>& sup_t_for_s) {
  int n_s = static_cast<int>(g.S.size());
  int n_t = static_cast<int>(g.T.size());

  std::vector<size_t> pick(n_t, 0);
  std::vector<int> h(n_t);
  ClassicalValueResult best;
  best.value = -1.0;

  while (true) {
    for (int t = 0; t < n_t; ++t) h[t] = dom_b[t][pick[t]];

    double value = 0.0;
    std::vector<int> reply(n_s);
    for (int s = 0; s < n_s; ++s) {
      double best_a = -1.0;
      int arg = dom_a[s][0];
      for (int a : dom_a[s]) {
        double w = 0.0;
        for (int t : sup_t_for_s[s]) {
          if (g.accepts(s, t, a, h[t])) w += g.pi_at(s, t);
        }
        if (w > best_a) {
          best_a = w;
          arg = a;
        }
      }
      value += best_a;
      reply[s] = arg;
    }
    if (value > best.value) {
      best.value = value;
      best.alice_answers = reply;
      best.bob_answers = h;
    }

    int t = n_t - 1;
    while (t >= 0 && pick[t] + 1 == dom_b[t].size()) {
      pick[t] = 0;
      --t;
    }
    if (t < 0) break;
    ++pick[t];
  }
  return best;
}

}  // namespace

ClassicalValueResult classical_value(const NonlocalGame& g, double budget) {
  g.validate();
  int n_s = static_cast<int>(g.S.size());
  int n_t = static_cast<int>(g.T.size());

  std::vector<std::vector<int>> sup_t_for_s(n_s), sup_s_for_t(n_t);
  for (int s = 0; s < n_s; ++s) {
    for (int t = 0; t < n_t; ++t) {
      if (g.pi_at(s, t) > 0.0) {
        sup_t_for_s[s].push_back(t);
        sup_s_for_t[t].push_back(s);
      }
    }
  }

  std::vector<std::vector<int>> dom_a(n_s), dom_b(n_t);
  for (int s = 0; s < n_s; ++s) {
    dom_a[s] = undominated_answers(g, true, s, sup_t_for_s[s]);
  }
  for (int t = 0; t < n_t; ++t) {
    dom_b[t] = undominated_answers(g, false, t, sup_s_for_t[t]);
  }

  auto space = [](const std::vector<std::vector<int>>& dom) {
    double c = 1.0;
    for (const auto& d : dom) {
      c *= static_cast<double>(d.size());
      if (c > 1e300) return std::numeric_limits<double>::infinity();
    }
    return c;
  };
  double cost_enum_bob = space(dom_b);
  double cost_enum_alice = space(dom_a);

  bool enumerate_bob = cost_enum_bob <= cost_enum_alice;
  double inner = 0.0;
  if (enumerate_bob) {
    for (int s = 0; s < n_s; ++s) {
      inner += static_cast<double>(dom_a[s].size()) * sup_t_for_s[s].size();
    }
  } else {
    for (int t = 0; t < n_t; ++t) {
      inner += static_cast<double>(dom_b[t].size()) * sup_s_for_t[t].size();
    }
  }
  double evals = std::min(cost_enum_bob, cost_enum_alice) * std::max(inner, 1.0);
  if (!(evals <= budget)) {
    throw Error(ErrorCode::BudgetExceeded,
                "classical_value: the scan needs about " +
                    std::to_string(evals) + " table lookups, budget is " +
                    std::to_string(budget));
  }

  if (enumerate_bob) {
    return enumerate_bob_side(g, dom_a, dom_b, sup_t_for_s);
  }
  NonlocalGame w = swap_parties(g);
  std::vector<std::vector<int>> sup_w(n_t);
  for (int t = 0; t < n_t; ++t) sup_w[t] = sup_s_for_t[t];
  ClassicalValueResult r = enumerate_bob_side(w, dom_b, dom_a, sup_w);
  ClassicalValueResult out;
  out.value = r.value;
  out.alice_answers = r.bob_answers;
  out.bob_answers = r.alice_answers;
  return out;
}

// ---- weak projection detection ---------------------------------------------

namespace {

// If the accepting set of row (s,t) has at most one b per a, fills f
// (f[a] = -1 where no b accepts) and returns true.
bool row_partial_function(const NonlocalGame& g, int s, int t,
                          std::vector<int>* f) {
  int n_a = static_cast<int>(g.A.size());
  int n_b = static_cast<int>(g.B.size());
  f->assign(n_a, -1);
  for (int a = 0; a < n_a; ++a) {
    for (int b = 0; b < n_b; ++b) {
      if (!g.accepts(s, t, a, b)) continue;
      if ((*f)[a] != -1) return false;
      (*f)[a] = b;
    }
  }
  return true;
}

bool witness_for(const NonlocalGame& g, bool strict, Party party,
                 WeakProjectionWitness* w) {
  const NonlocalGame* gp = &g;
  NonlocalGame swapped;
  if (party == Party::Alice) {
    swapped = swap_parties(g);
    gp = &swapped;
  }
  int n_t = static_cast<int>(gp->T.size());
  int n_s = static_cast<int>(gp->S.size());
  w->party = party;
  w->partner.assign(n_t, -1);
  w->f.assign(n_t, {});
  std::vector<int> f;
  for (int t = 0; t < n_t; ++t) {
    for (int s = 0; s < n_s; ++s) {
      if (strict && gp->pi_at(s, t) <= 0.0) continue;
      if (row_partial_function(*gp, s, t, &f)) {
        w->partner[t] = s;
        w->f[t] = f;
        break;
      }
    }
    if (w->partner[t] < 0) return false;
  }
  return true;
}

}  // namespace

WeakProjectionReport detect_weak_projection(const NonlocalGame& g,
                                            bool strict_support) {
  g.validate();
  WeakProjectionReport report;
  WeakProjectionWitness w;
  if (witness_for(g, strict_support, Party::Bob, &w)) {
    report.witnesses.push_back(w);
  }
  if (witness_for(g, strict_support, Party::Alice, &w)) {
    report.witnesses.push_back(w);
  }
  report.projection_game = true;
  std::vector<int> f;
  for (size_t s = 0; s < g.S.size() && report.projection_game; ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      if (!row_partial_function(g, static_cast<int>(s), static_cast<int>(t),
                                &f)) {
        report.projection_game = false;
        break;
      }
    }
  }
  return report;
}

// ---- consistency-check transform ---------------------------------------------

NonlocalGame tilde_transform(const NonlocalGame& g, Party party) {
  if (party == Party::Alice) {
    return swap_parties(tilde_transform(swap_parties(g), Party::Bob));
  }
  g.validate();
  int n_s = static_cast<int>(g.S.size());
  int n_t = static_cast<int>(g.T.size());
  int n_a = static_cast<int>(g.A.size());
  int n_b = static_cast<int>(g.B.size());

  NonlocalGame out;
  out.T = g.T;
  out.B = g.B;
  for (const auto& s : g.S) out.S.push_back(tilde_question_label(s, 0));
  for (const auto& t : g.T) out.S.push_back(tilde_question_label(t, 1));
  out.A = g.A;
  std::vector<int> b_in_union(n_b);  // position of each B label in the union
  for (int b = 0; b < n_b; ++b) {
    auto it = std::find(g.A.begin(), g.A.end(), g.B[b]);
    if (it != g.A.end()) {
      b_in_union[b] = static_cast<int>(it - g.A.begin());
    } else {
      b_in_union[b] = static_cast<int>(out.A.size());
      out.A.push_back(g.B[b]);
    }
  }
  out.init_tables();

  // i=0 rows copy V on the original answers; answers from B\A always lose.
  for (int s = 0; s < n_s; ++s) {
    for (int t = 0; t < n_t; ++t) {
      for (int a = 0; a < n_a; ++a) {
        for (int b = 0; b < n_b; ++b) {
          out.set_accepts(s, t, a, b, g.accepts(s, t, a, b));
        }
      }
    }
  }
  // i=1 rows accept equal labels, for every t pairing (only the diagonal
  // carries probability).
  for (int tq = 0; tq < n_t; ++tq) {
    for (int t = 0; t < n_t; ++t) {
      for (int b = 0; b < n_b; ++b) {
        out.set_accepts(n_s + tq, t, b_in_union[b], b, true);
      }
    }
  }

  for (int s = 0; s < n_s; ++s) {
    for (int t = 0; t < n_t; ++t) {
      out.pi_at(s, t) = g.pi_at(s, t) / 2.0;
    }
  }
  for (int t = 0; t < n_t; ++t) {
    double marginal = 0.0;
    for (int s = 0; s < n_s; ++s) marginal += g.pi_at(s, t);
    out.pi_at(n_s + t, t) = marginal / 2.0;
  }
  return out;
}

// ---- generators ---------------------------------------------------------------

NonlocalGame make_homomorphism_game(const Graph& x, const Graph& y) {
  x.validate();
  y.validate();
  int n = static_cast<int>(x.vertices.size());
  int c = static_cast<int>(y.vertices.size());

  std::vector<std::vector<uint8_t>> adj_x(n, std::vector<uint8_t>(n, 0));
  for (auto [u, v] : x.edges) adj_x[u][v] = adj_x[v][u] = 1;
  std::vector<std::vector<uint8_t>> adj_y(c, std::vector<uint8_t>(c, 0));
  for (auto [u, v] : y.edges) adj_y[u][v] = adj_y[v][u] = 1;

  NonlocalGame g;
  g.S = g.T = x.vertices;
  g.A = g.B = y.vertices;
  g.init_tables();

  double promise = static_cast<double>(n) + 2.0 * x.edges.size();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || adj_x[s][t]) g.pi_at(s, t) = 1.0 / promise;
      for (int a = 0; a < c; ++a) {
        for (int b = 0; b < c; ++b) {
          bool ok = true;
          if (s == t && a != b) ok = false;
          if (adj_x[s][t] && !adj_y[a][b]) ok = false;
          g.set_accepts(s, t, a, b, ok);
        }
      }
    }
  }
  g.validate();
  return g;
}

NonlocalGame make_coloring_game(const Graph& x, int c) {
  if (c < 1) {
    throw Error(ErrorCode::MalformedInput,
                "make_coloring_game: need at least one color");
  }
  return make_homomorphism_game(x, complete_graph(c));
}

NonlocalGame make_bcs_game(const std::vector<ParityConstraint>& constraints) {
  if (constraints.empty()) {
    throw Error(ErrorCode::EmptyConstraintSystem, "no constraints given");
  }
  std::set<int> var_set;
  for (const auto& con : constraints) {
    if (con.vars.empty()) {
      throw Error(ErrorCode::EmptyConstraintSystem,
                  "constraint without variables");
    }
    if (con.rhs != 0 && con.rhs != 1) {
      throw Error(ErrorCode::MalformedInput, "parity rhs must be 0 or 1");
    }
    std::set<int> local(con.vars.begin(), con.vars.end());
    if (local.size() != con.vars.size()) {
      throw Error(ErrorCode::MalformedInput,
                  "constraint repeats a variable");
    }
    for (int v : con.vars) {
      if (v < 1) {
        throw Error(ErrorCode::MalformedInput,
                    "variable ids must be positive");
      }
    }
    if (con.vars.size() > 16) {
      throw Error(ErrorCode::BudgetExceeded,
                  "constraint with more than 16 variables");
    }
    var_set.insert(con.vars.begin(), con.vars.end());
  }

  NonlocalGame g;
  std::unordered_map<int, int> var_to_t;
  for (int v : var_set) {
    var_to_t[v] = static_cast<int>(g.T.size());
    g.T.push_back("x" + std::to_string(v));
  }
  for (size_t i = 0; i < constraints.size(); ++i) {
    g.S.push_back("c" + std::to_string(i + 1));
  }
  g.B = {"0", "1"};

  // Global answer labels: every assignment to every constraint's variable
  // set, canonicalized (variables ascending), deduplicated in first-seen
  // order. Parsed form kept alongside for the verification table.
  struct Assignment {
    std::vector<int> vars;  // ascending
    std::vector<int> bits;  // aligned with vars
  };
  std::vector<Assignment> parsed;
  std::map<std::string, int> label_to_a;
  std::vector<std::vector<int>> sorted_vars(constraints.size());
  for (size_t ci = 0; ci < constraints.size(); ++ci) {
    sorted_vars[ci] = constraints[ci].vars;
    std::sort(sorted_vars[ci].begin(), sorted_vars[ci].end());
    size_t k = sorted_vars[ci].size();
    for (unsigned m = 0; m < (1u << k); ++m) {
      Assignment asg;
      std::string label;
      for (size_t j = 0; j < k; ++j) {
        int bit = (m >> j) & 1u;
        asg.vars.push_back(sorted_vars[ci][j]);
        asg.bits.push_back(bit);
        if (j) label += ",";
        label += "x" + std::to_string(sorted_vars[ci][j]) + "=" +
                 std::to_string(bit);
      }
      if (label_to_a.emplace(label, static_cast<int>(g.A.size())).second) {
        g.A.push_back(label);
        parsed.push_back(asg);
      }
    }
  }

  g.init_tables();

  double incidences = 0.0;
  for (const auto& con : constraints) {
    incidences += static_cast<double>(con.vars.size());
  }
  for (size_t ci = 0; ci < constraints.size(); ++ci) {
    const auto& vars = sorted_vars[ci];
    for (int v : vars) {
      g.pi_at(static_cast<int>(ci), var_to_t[v]) = 1.0 / incidences;
    }
    for (size_t a = 0; a < g.A.size(); ++a) {
      const Assignment& asg = parsed[a];
      bool addresses = asg.vars == vars;
      int parity = 0;
      for (int bit : asg.bits) parity ^= bit;
      bool satisfies = addresses && parity == constraints[ci].rhs;
      for (size_t t = 0; t < g.T.size(); ++t) {
        int var_bit = -1;  // bit assigned to Bob's variable, if addressed
        for (size_t j = 0; j < asg.vars.size(); ++j) {
          if (var_to_t[asg.vars[j]] == static_cast<int>(t)) {
            var_bit = asg.bits[j];
          }
        }
        for (int b = 0; b < 2; ++b) {
          bool consistent = var_bit == -1 || var_bit == b;
          g.set_accepts(static_cast<int>(ci), static_cast<int>(t),
                        static_cast<int>(a), b, satisfies && consistent);
        }
      }
    }
  }
  g.validate();
  return g;
}

std::vector<ParityConstraint> magic_square_constraints() {
  return {
      {{1, 2, 3}, 0}, {{4, 5, 6}, 0}, {{7, 8, 9}, 0},
      {{1, 4, 7}, 1}, {{2, 5, 8}, 1}, {{3, 6, 9}, 1},
  };
}

NonlocalGame chsh_game() {
  NonlocalGame g;
  g.S = g.T = g.A = g.B = {"0", "1"};
  g.init_tables();
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      g.pi_at(s, t) = 0.25;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          g.set_accepts(s, t, a, b, (a ^ b) == (s & t));
        }
      }
    }
  }
  return g;
}

}  // namespace nlgames
