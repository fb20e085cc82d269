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

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "nlgames/games.hpp"
#include "support.hpp"

using namespace nlgames;
using namespace nlgames::testing;

namespace {

// Connected components by depth-first search, for structural graph checks.
int component_count(const Graph& x) {
  auto adj = x.adjacency_lists();
  std::vector<int> seen(x.vertices.size(), 0);
  int components = 0;
  for (size_t start = 0; start < x.vertices.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<int> stack{static_cast<int>(start)};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

double evaluate_maps(const NonlocalGame& g, const std::vector<int>& fa,
                     const std::vector<int>& fb) {
  double v = 0.0;
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      double p = g.pi_at(static_cast<int>(s), static_cast<int>(t));
      if (p > 0.0 && g.accepts(static_cast<int>(s), static_cast<int>(t),
                               fa[s], fb[t])) {
        v += p;
      }
    }
  }
  return v;
}

}  // namespace

TEST_CASE("graph validation") {
  Graph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{0, 1}, {1, 2}};
  g.validate();
  CHECK(g.vertex_index("b") == 1);
  CHECK(error_code_of([&] { g.vertex_index("zz"); }) ==
        ErrorCode::MalformedInput);

  Graph loop = g;
  loop.edges.push_back({2, 2});
  CHECK(error_code_of([&] { loop.validate(); }) == ErrorCode::MalformedInput);

  Graph dup = g;
  dup.edges = {{0, 1}, {0, 1}, {1, 2}};
  CHECK(error_code_of([&] { dup.validate(); }) == ErrorCode::MalformedInput);

  Graph range = g;
  range.edges = {{0, 5}};
  CHECK(error_code_of([&] { range.validate(); }) == ErrorCode::MalformedInput);
}

TEST_CASE("complete and cycle graphs") {
  Graph k4 = complete_graph(4);
  CHECK(k4.vertices.size() == 4);
  CHECK(k4.edges.size() == 6);
  k4.validate();
  Graph c5 = cycle_graph(5);
  CHECK(c5.vertices.size() == 5);
  CHECK(c5.edges.size() == 5);
  c5.validate();
  CHECK(error_code_of([] { complete_graph(0); }) == ErrorCode::BadN);
  CHECK(error_code_of([] { cycle_graph(2); }) == ErrorCode::BadN);
}

TEST_CASE("hadamard graph on two bits is the four-cycle") {
  Graph h = hadamard_graph(2);
  h.validate();
  REQUIRE(h.vertices.size() == 4);
  CHECK(h.vertices[0] == "00");
  CHECK(h.vertices[3] == "11");
  std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  std::set<std::pair<int, int>> got(h.edges.begin(), h.edges.end());
  CHECK(got == want);
}

TEST_CASE("hadamard graph on four bits") {
  Graph h = hadamard_graph(4);
  h.validate();
  CHECK(h.vertices.size() == 16);
  auto adj = h.adjacency_lists();
  for (const auto& nbrs : adj) CHECK(nbrs.size() == 6);
  CHECK(component_count(h) == 2);
}

TEST_CASE("hadamard graph is regular of binomial degree") {
  for (int n : {2, 4, 6}) {
    Graph h = hadamard_graph(n);
    // Degree = C(n, n/2): each vertex sees all subsets of flipped bits.
    long want = 1;
    for (int i = 1; i <= n / 2; ++i) want = want * (n / 2 + i) / i;
    auto adj = h.adjacency_lists();
    for (const auto& nbrs : adj) {
      CHECK(static_cast<long>(nbrs.size()) == want);
    }
  }
}

TEST_CASE("hadamard graph input guards") {
  CHECK(error_code_of([] { hadamard_graph(3); }) == ErrorCode::OddN);
  CHECK(error_code_of([] { hadamard_graph(0); }) == ErrorCode::BadN);
  CHECK(error_code_of([] { hadamard_graph(-4); }) == ErrorCode::BadN);
  CHECK(error_code_of([] { hadamard_graph(18); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("game validation") {
  NonlocalGame g = chsh_game();
  g.validate();

  NonlocalGame bad = g;
  bad.pi[0] = 0.5;  // sum now over 1
  CHECK(error_code_of([&] { bad.validate(); }) == ErrorCode::MalformedInput);

  bad = g;
  bad.pi[0] = -0.25;
  CHECK(error_code_of([&] { bad.validate(); }) == ErrorCode::MalformedInput);

  bad = g;
  std::fill(bad.pi.begin(), bad.pi.end(), 0.0);
  CHECK(error_code_of([&] { bad.validate(); }) == ErrorCode::MalformedInput);

  bad = g;
  bad.S = {"0", "0"};
  CHECK(error_code_of([&] { bad.validate(); }) == ErrorCode::MalformedInput);

  bad = g;
  bad.V.pop_back();
  CHECK(error_code_of([&] { bad.validate(); }) == ErrorCode::MalformedInput);
}

TEST_CASE("swapping parties twice is the identity") {
  NonlocalGame g = make_bcs_game(magic_square_constraints());
  NonlocalGame gg = swap_parties(swap_parties(g));
  CHECK(gg.S == g.S);
  CHECK(gg.T == g.T);
  CHECK(gg.A == g.A);
  CHECK(gg.B == g.B);
  CHECK(gg.pi == g.pi);
  CHECK(gg.V == g.V);
}

TEST_CASE("classical value of the trivial game is one") {
  NonlocalGame g = always_win_game(2, 3, 2, 2);
  auto r = classical_value(g);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("classical value of the xor game is three quarters") {
  NonlocalGame g = chsh_game();
  auto r = classical_value(g);
  CHECK(r.value == 0.75);
  CHECK(naive_classical_value(g) == 0.75);
  // The returned deterministic maps achieve the value.
  CHECK(evaluate_maps(g, r.alice_answers, r.bob_answers) ==
        doctest::Approx(r.value).epsilon(1e-15));
}

TEST_CASE("classical value of the parity grid game") {
  NonlocalGame g = make_bcs_game(magic_square_constraints());
  auto r = classical_value(g);
  CHECK(std::abs(r.value - 17.0 / 18.0) <= 1e-12);
  CHECK(evaluate_maps(g, r.alice_answers, r.bob_answers) ==
        doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("classical value matches exhaustive enumeration on random games") {
  Rng rng(101);
  for (int rep = 0; rep < 8; ++rep) {
    NonlocalGame g = random_game(rng, 3, 2, 2, 3);
    auto r = classical_value(g);
    CHECK(r.value == doctest::Approx(naive_classical_value(g)).epsilon(1e-12));
    CHECK(evaluate_maps(g, r.alice_answers, r.bob_answers) ==
          doctest::Approx(r.value).epsilon(1e-12));
  }
}

TEST_CASE("classical value respects its lookup budget") {
  CHECK(error_code_of([] { classical_value(chsh_game(), 1.0); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("classical value is invariant under relabeling") {
  NonlocalGame g = chsh_game();
  NonlocalGame p = permute_game(g, {1, 0}, {1, 0}, {1, 0}, {0, 1});
  p.validate();
  CHECK(classical_value(p).value == classical_value(g).value);

  Rng rng(103);
  NonlocalGame r = random_game(rng, 3, 3, 2, 2);
  NonlocalGame rp = permute_game(r, {2, 0, 1}, {1, 2, 0}, {1, 0}, {1, 0});
  CHECK(classical_value(rp).value ==
        doctest::Approx(classical_value(r).value).epsilon(1e-12));
}

TEST_CASE("coloring games and chromatic feasibility") {
  NonlocalGame two = make_coloring_game(complete_graph(2), 2);
  CHECK(classical_value(two).value == doctest::Approx(1.0).epsilon(1e-15));
  NonlocalGame three = make_coloring_game(complete_graph(3), 2);
  double v = classical_value(three).value;
  CHECK(v < 1.0 - 1e-9);
  CHECK(v == doctest::Approx(naive_classical_value(three)).epsilon(1e-12));
  CHECK(error_code_of([] { make_coloring_game(complete_graph(2), 0); }) ==
        ErrorCode::MalformedInput);
}

TEST_CASE("homomorphism game to a complete graph is the coloring game") {
  Graph x = cycle_graph(5);
  NonlocalGame hom = make_homomorphism_game(x, complete_graph(3));
  NonlocalGame col = make_coloring_game(x, 3);
  CHECK(hom.S == col.S);
  CHECK(hom.T == col.T);
  CHECK(hom.A == col.A);
  CHECK(hom.B == col.B);
  CHECK(hom.pi == col.pi);
  CHECK(hom.V == col.V);
}

TEST_CASE("homomorphism game values") {
  NonlocalGame id2 = make_homomorphism_game(complete_graph(2),
                                            complete_graph(2));
  CHECK(classical_value(id2).value == doctest::Approx(1.0).epsilon(1e-15));
  NonlocalGame odd = make_homomorphism_game(cycle_graph(5), complete_graph(2));
  CHECK(classical_value(odd).value < 1.0 - 1e-9);
}

TEST_CASE("parity constraint game construction") {
  NonlocalGame g = make_bcs_game({{{1}, 0}});
  CHECK(g.S == std::vector<std::string>{"c1"});
  CHECK(g.T == std::vector<std::string>{"x1"});
  CHECK(g.B == std::vector<std::string>{"0", "1"});
  REQUIRE(g.A.size() == 2);
  CHECK(std::find(g.A.begin(), g.A.end(), "x1=0") != g.A.end());
  CHECK(classical_value(g).value == doctest::Approx(1.0).epsilon(1e-15));

  NonlocalGame clash = make_bcs_game({{{1}, 0}, {{1}, 1}});
  CHECK(classical_value(clash).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(naive_classical_value(clash) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("parity constraint answer labels are deduplicated") {
  NonlocalGame g = make_bcs_game({{{1, 2}, 0}, {{1, 2}, 1}});
  CHECK(g.A.size() == 4);
  CHECK(g.S.size() == 2);
  CHECK(g.T.size() == 2);
}

TEST_CASE("parity constraint input guards") {
  CHECK(error_code_of([] { make_bcs_game({}); }) ==
        ErrorCode::EmptyConstraintSystem);
  CHECK(error_code_of([] { make_bcs_game({{{}, 0}}); }) ==
        ErrorCode::EmptyConstraintSystem);
  CHECK(error_code_of([] { make_bcs_game({{{1}, 2}}); }) ==
        ErrorCode::MalformedInput);
  CHECK(error_code_of([] { make_bcs_game({{{1, 1}, 0}}); }) ==
        ErrorCode::MalformedInput);
  CHECK(error_code_of([] { make_bcs_game({{{0}, 0}}); }) ==
        ErrorCode::MalformedInput);
  std::vector<int> many(17);
  std::iota(many.begin(), many.end(), 1);
  CHECK(error_code_of([&] { make_bcs_game({{many, 0}}); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("parity grid constraint system shape") {
  auto cons = magic_square_constraints();
  REQUIRE(cons.size() == 6);
  std::set<int> vars;
  for (const auto& c : cons) vars.insert(c.vars.begin(), c.vars.end());
  CHECK(vars.size() == 9);
  CHECK(cons[0].rhs + cons[1].rhs + cons[2].rhs == 0);
  CHECK(cons[3].rhs + cons[4].rhs + cons[5].rhs == 3);
}

TEST_CASE("weak projection witness of a coloring game is the identity map") {
  NonlocalGame g = make_coloring_game(complete_graph(3), 3);
  auto report = detect_weak_projection(g);
  const auto* w = report.for_party(Party::Bob);
  REQUIRE(w != nullptr);
  for (size_t t = 0; t < g.T.size(); ++t) {
    CHECK(w->partner[t] == static_cast<int>(t));
    for (size_t a = 0; a < g.A.size(); ++a) {
      CHECK(w->f[t][a] == static_cast<int>(a));
    }
  }
}

TEST_CASE("the xor game is a projection game") {
  NonlocalGame g = chsh_game();
  auto report = detect_weak_projection(g);
  CHECK(report.projection_game);
  const auto* w = report.for_party(Party::Bob);
  REQUIRE(w != nullptr);
  for (size_t t = 0; t < g.T.size(); ++t) {
    int s = w->partner[t];
    REQUIRE(s >= 0);
    for (size_t a = 0; a < g.A.size(); ++a) {
      int want = static_cast<int>(a) ^ (s & static_cast<int>(t));
      CHECK(w->f[t][a] == want);
    }
  }
  const auto* wa = report.for_party(Party::Alice);
  REQUIRE(wa != nullptr);
}

TEST_CASE("a trivial game with two answers has no weak projection witness") {
  NonlocalGame g = always_win_game(2, 2, 2, 2);
  auto report = detect_weak_projection(g);
  CHECK(report.witnesses.empty());
  CHECK_FALSE(report.projection_game);
}

TEST_CASE("strict witness search skips unsupported pairs") {
  // Only the unsupported row (s1, t0) is a function of Alice's answer.
  NonlocalGame g;
  g.S = {"s0", "s1"};
  g.T = {"t0"};
  g.A = {"a0", "a1"};
  g.B = {"b0", "b1"};
  g.init_tables();
  g.pi_at(0, 0) = 1.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) g.set_accepts(0, 0, a, b, true);
  }
  g.set_accepts(1, 0, 0, 0, true);
  g.set_accepts(1, 0, 1, 1, true);
  g.validate();

  auto lax = detect_weak_projection(g, false);
  REQUIRE(lax.for_party(Party::Bob) != nullptr);
  CHECK(lax.for_party(Party::Bob)->partner[0] == 1);
  auto strict = detect_weak_projection(g, true);
  CHECK(strict.for_party(Party::Bob) == nullptr);
}

TEST_CASE("consistency transform question and answer bookkeeping") {
  NonlocalGame g = chsh_game();
  NonlocalGame tb = tilde_transform(g, Party::Bob);
  tb.validate();
  CHECK(tb.S.size() == g.S.size() + g.T.size());
  CHECK(tb.T == g.T);
  CHECK(tb.B == g.B);
  CHECK(tb.A == std::vector<std::string>{"0", "1"});
  CHECK(tb.S[0] == tilde_question_label("0", 0));
  CHECK(tb.S[2] == tilde_question_label("0", 1));

  // Untagged rows copy the original verification table.
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      CHECK(tb.pi_at(static_cast<int>(s), static_cast<int>(t)) ==
            doctest::Approx(g.pi_at(static_cast<int>(s),
                                    static_cast<int>(t)) / 2.0)
                .epsilon(1e-15));
      for (size_t a = 0; a < g.A.size(); ++a) {
        for (size_t b = 0; b < g.B.size(); ++b) {
          CHECK(tb.accepts(static_cast<int>(s), static_cast<int>(t),
                           static_cast<int>(a), static_cast<int>(b)) ==
                g.accepts(static_cast<int>(s), static_cast<int>(t),
                          static_cast<int>(a), static_cast<int>(b)));
        }
      }
    }
  }
  // Tagged rows accept exactly equal answer labels and only the matched
  // question carries probability.
  for (size_t tp = 0; tp < g.T.size(); ++tp) {
    int srow = static_cast<int>(g.S.size() + tp);
    for (size_t t = 0; t < g.T.size(); ++t) {
      double mass = tb.pi_at(srow, static_cast<int>(t));
      if (tp == t) {
        double marginal = 0.0;
        for (size_t s = 0; s < g.S.size(); ++s) {
          marginal += g.pi_at(static_cast<int>(s), static_cast<int>(t));
        }
        CHECK(mass == doctest::Approx(marginal / 2.0).epsilon(1e-15));
      } else {
        CHECK(mass == 0.0);
      }
      for (size_t a = 0; a < tb.A.size(); ++a) {
        for (size_t b = 0; b < tb.B.size(); ++b) {
          CHECK(tb.accepts(srow, static_cast<int>(t), static_cast<int>(a),
                           static_cast<int>(b)) == (tb.A[a] == tb.B[b]));
        }
      }
    }
  }
  double total = 0.0;
  for (double p : tb.pi) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("consistency transform union answers on asymmetric games") {
  NonlocalGame g = make_bcs_game(magic_square_constraints());
  NonlocalGame tb = tilde_transform(g, Party::Bob);
  tb.validate();
  CHECK(tb.S.size() == g.S.size() + g.T.size());
  // Assignment labels plus the two bit labels not already present.
  CHECK(tb.A.size() == g.A.size() + 2);
  CHECK(tb.A[g.A.size()] == "0");
  CHECK(tb.A[g.A.size() + 1] == "1");

  NonlocalGame ta = tilde_transform(g, Party::Alice);
  ta.validate();
  CHECK(ta.S == g.S);
  CHECK(ta.A == g.A);
  CHECK(ta.T.size() == g.T.size() + g.S.size());
  CHECK(ta.B.size() == g.B.size() + g.A.size());
}

TEST_CASE("the consistency transform is weakly projective for its party") {
  Rng rng(107);
  for (int rep = 0; rep < 4; ++rep) {
    NonlocalGame g = random_game(rng, 2, 3, 2, 2);
    for (Party p : {Party::Bob, Party::Alice}) {
      NonlocalGame tg = tilde_transform(g, p);
      tg.validate();
      auto report = detect_weak_projection(tg, true);
      const auto* w = report.for_party(p);
      REQUIRE(w != nullptr);
      size_t own = p == Party::Bob ? tg.T.size() : tg.S.size();
      for (size_t q = 0; q < own; ++q) CHECK(w->partner[q] >= 0);
    }
  }
}
