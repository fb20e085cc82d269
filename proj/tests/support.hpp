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

// Independent oracles for the test suite. Everything here recomputes results
// by the most direct method available (explicit tensor products, exhaustive
// enumeration) so that library shortcuts are checked against first
// principles rather than against themselves.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nlgames/error.hpp"
#include "nlgames/games.hpp"
#include "nlgames/linalg.hpp"
#include "nlgames/random.hpp"
#include "nlgames/strategies.hpp"

namespace nlgames::testing {

// Runs fn and reports which library error code it threw, if any.
template <typename Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Explicit Kronecker quadratic form <psi| A (x) B |psi>.
inline Complex kron_expectation(const Matrix& a, const Matrix& b,
                                const Vector& psi) {
  Matrix k = kron(a, b);
  return psi.dot(k * psi);
}

// Winning probability summed term by term through explicit tensor products.
inline double naive_winning_probability(const NonlocalGame& g,
                                        const QuantumStrategy& st) {
  double total = 0.0;
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      double p = g.pi_at(static_cast<int>(s), static_cast<int>(t));
      if (p <= 0.0) continue;
      const auto& es = st.alice.at(g.S[s]);
      const auto& fs = st.bob.at(g.T[t]);
      for (size_t a = 0; a < g.A.size(); ++a) {
        for (size_t b = 0; b < g.B.size(); ++b) {
          if (!g.accepts(static_cast<int>(s), static_cast<int>(t),
                         static_cast<int>(a), static_cast<int>(b))) {
            continue;
          }
          total += p * kron_expectation(es[a], fs[b], st.psi).real();
        }
      }
    }
  }
  return total;
}

// Exhaustive classical value: every deterministic answer table on both
// sides. Only usable for |A|^|S| * |B|^|T| up to a few million.
inline double naive_classical_value(const NonlocalGame& g) {
  const int ns = static_cast<int>(g.S.size());
  const int nt = static_cast<int>(g.T.size());
  const int na = static_cast<int>(g.A.size());
  const int nb = static_cast<int>(g.B.size());
  std::vector<int> fa(ns, 0), fb(nt, 0);
  double best = 0.0;
  bool more_a = true;
  while (more_a) {
    bool more_b = true;
    std::fill(fb.begin(), fb.end(), 0);
    while (more_b) {
      double v = 0.0;
      for (int s = 0; s < ns; ++s) {
        for (int t = 0; t < nt; ++t) {
          double p = g.pi_at(s, t);
          if (p > 0.0 && g.accepts(s, t, fa[s], fb[t])) v += p;
        }
      }
      best = std::max(best, v);
      int i = 0;
      for (; i < nt; ++i) {
        if (++fb[i] < nb) break;
        fb[i] = 0;
      }
      more_b = i < nt;
    }
    int i = 0;
    for (; i < ns; ++i) {
      if (++fa[i] < na) break;
      fa[i] = 0;
    }
    more_a = i < ns;
  }
  return best;
}

// Exhaustive chromatic number by trying every c-assignment for c = 1, 2, ...
inline int naive_chromatic(const Graph& x, int cmax = 8) {
  const int n = static_cast<int>(x.vertices.size());
  if (n == 0) return 0;
  if (x.edges.empty()) return 1;
  for (int c = 1; c <= cmax; ++c) {
    std::vector<int> col(n, 0);
    bool more = true;
    while (more) {
      bool proper = true;
      for (const auto& e : x.edges) {
        if (col[e.first] == col[e.second]) {
          proper = false;
          break;
        }
      }
      if (proper) return c;
      int i = 0;
      for (; i < n; ++i) {
        if (++col[i] < c) break;
        col[i] = 0;
      }
      more = i < n;
    }
  }
  return cmax + 1;
}

// Game with every answer pair accepted on a uniform full-support
// distribution; any valid strategy wins it with certainty.
inline NonlocalGame always_win_game(int ns, int nt, int na, int nb) {
  NonlocalGame g;
  for (int i = 0; i < ns; ++i) g.S.push_back(std::to_string(i));
  for (int i = 0; i < nt; ++i) g.T.push_back(std::to_string(i));
  for (int i = 0; i < na; ++i) g.A.push_back(std::to_string(i));
  for (int i = 0; i < nb; ++i) g.B.push_back(std::to_string(i));
  g.init_tables();
  for (int s = 0; s < ns; ++s) {
    for (int t = 0; t < nt; ++t) {
      g.pi_at(s, t) = 1.0 / (ns * nt);
      for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) g.set_accepts(s, t, a, b, true);
      }
    }
  }
  return g;
}

// Uniformly random game: full-support uniform distribution, each answer
// tuple accepted with probability 1/2.
inline NonlocalGame random_game(Rng& rng, int ns, int nt, int na, int nb) {
  NonlocalGame g = always_win_game(ns, nt, na, nb);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < ns; ++s) {
    for (int t = 0; t < nt; ++t) {
      for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) g.set_accepts(s, t, a, b, coin(rng));
      }
    }
  }
  return g;
}

// Random strategy with Haar-ish POVMs and a random pure state; valid but
// carries no structure.
inline QuantumStrategy random_strategy(Rng& rng, const NonlocalGame& g,
                                       Index d_a, Index d_b) {
  QuantumStrategy st;
  st.d_a = d_a;
  st.d_b = d_b;
  st.psi = random_unit_vector(rng, d_a * d_b);
  for (const auto& s : g.S) {
    st.alice[s] = random_povm(rng, d_a, static_cast<int>(g.A.size()));
  }
  for (const auto& t : g.T) {
    st.bob[t] = random_povm(rng, d_b, static_cast<int>(g.B.size()));
  }
  return st;
}

// Local basis change (U on Alice, W on Bob) that leaves every expectation
// value invariant. vec(M) transforms as psi -> vec(U M W^T).
inline QuantumStrategy rotate_strategy(const QuantumStrategy& st,
                                       const Matrix& u, const Matrix& w) {
  QuantumStrategy out;
  out.d_a = st.d_a;
  out.d_b = st.d_b;
  out.psi = vec_map(u * unvec(st.psi, st.d_a, st.d_b) * w.transpose());
  for (const auto& [q, povm] : st.alice) {
    std::vector<Matrix> rotated;
    rotated.reserve(povm.size());
    for (const auto& e : povm) rotated.push_back(u * e * u.adjoint());
    out.alice[q] = rotated;
  }
  for (const auto& [q, povm] : st.bob) {
    std::vector<Matrix> rotated;
    rotated.reserve(povm.size());
    for (const auto& e : povm) rotated.push_back(w * e * w.adjoint());
    out.bob[q] = rotated;
  }
  return out;
}

// Relabels every question and answer of a game by permutations, returning
// the permuted game. perm_*[new_index] = old_index.
inline NonlocalGame permute_game(const NonlocalGame& g,
                                 const std::vector<int>& perm_s,
                                 const std::vector<int>& perm_t,
                                 const std::vector<int>& perm_a,
                                 const std::vector<int>& perm_b) {
  NonlocalGame out;
  for (int i : perm_s) out.S.push_back(g.S[i]);
  for (int i : perm_t) out.T.push_back(g.T[i]);
  for (int i : perm_a) out.A.push_back(g.A[i]);
  for (int i : perm_b) out.B.push_back(g.B[i]);
  out.init_tables();
  for (size_t s = 0; s < out.S.size(); ++s) {
    for (size_t t = 0; t < out.T.size(); ++t) {
      out.pi_at(static_cast<int>(s), static_cast<int>(t)) =
          g.pi_at(perm_s[s], perm_t[t]);
      for (size_t a = 0; a < out.A.size(); ++a) {
        for (size_t b = 0; b < out.B.size(); ++b) {
          out.set_accepts(static_cast<int>(s), static_cast<int>(t),
                          static_cast<int>(a), static_cast<int>(b),
                          g.accepts(perm_s[s], perm_t[t], perm_a[a],
                                    perm_b[b]));
        }
      }
    }
  }
  return out;
}

// A block-diagonal measurement-pair instance over a state with prescribed
// Schmidt-coefficient classes. Used to check that expectation zero patterns
// agree between the true state and the maximally entangled one.
struct BlockInstance {
  Index d = 0;
  Vector psi;               // Schmidt basis = computational, classed weights
  std::vector<Matrix> e, f;  // block diagonal over the classes
  std::vector<int> class_of;  // class id per basis index
};

inline BlockInstance random_block_instance(Rng& rng, Index d, int outcomes) {
  BlockInstance inst;
  inst.d = d;
  // Split [0, d) into 1-3 contiguous classes with distinct weights.
  std::uniform_int_distribution<int> nclasses_dist(1, std::min<Index>(3, d));
  int nclasses = nclasses_dist(rng);
  std::vector<Index> sizes(nclasses, 1);
  for (Index extra = d - nclasses; extra > 0; --extra) {
    sizes[std::uniform_int_distribution<int>(0, nclasses - 1)(rng)]++;
  }
  std::vector<double> weights(nclasses);
  for (int c = 0; c < nclasses; ++c) {
    // Gap of at least 0.2 between consecutive class weights.
    weights[c] = 1.0 + 0.35 * (nclasses - c) +
                 0.1 * std::uniform_real_distribution<double>(0, 1)(rng);
  }
  double norm2 = 0.0;
  inst.class_of.resize(d);
  Index pos = 0;
  for (int c = 0; c < nclasses; ++c) {
    for (Index i = 0; i < sizes[c]; ++i, ++pos) {
      inst.class_of[pos] = c;
      norm2 += weights[c] * weights[c];
    }
  }
  inst.psi = Vector::Zero(d * d);
  pos = 0;
  for (int c = 0; c < nclasses; ++c) {
    for (Index i = 0; i < sizes[c]; ++i, ++pos) {
      inst.psi(pos * d + pos) = weights[c] / std::sqrt(norm2);
    }
  }
  // Per class, each outcome is present with probability 1/2 (outcome 0
  // always present so the blocks stay completable); present pieces are
  // full-rank PSD, then the family is renormalized inside the block.
  auto make_family = [&](std::vector<Matrix>& out) {
    out.assign(outcomes, Matrix::Zero(d, d));
    Index offset = 0;
    for (int c = 0; c < nclasses; ++c) {
      Index k = sizes[c];
      std::vector<Matrix> pieces(outcomes, Matrix::Zero(k, k));
      Matrix total = Matrix::Zero(k, k);
      for (int o = 0; o < outcomes; ++o) {
        bool present =
            o == 0 || std::bernoulli_distribution(0.5)(rng);
        if (!present) continue;
        pieces[o] = random_psd(rng, k, 0.05);
        total += pieces[o];
      }
      Eigen::SelfAdjointEigenSolver<Matrix> es(total);
      Matrix root_inv = es.operatorInverseSqrt();
      for (int o = 0; o < outcomes; ++o) {
        out[o].block(offset, offset, k, k) = root_inv * pieces[o] * root_inv;
      }
      offset += k;
    }
  };
  make_family(inst.e);
  make_family(inst.f);
  return inst;
}

}  // namespace nlgames::testing
