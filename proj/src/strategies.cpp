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

#include "nlgames/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "nlgames/random.hpp"

namespace nlgames {

// ---- strategy data model ----------------------------------------------------

void validate_povm(const std::vector<Matrix>& povm, Index dim, double eps,
                   const std::string& who) {
  if (povm.empty()) {
    throw Error(ErrorCode::InvalidMeasurement, who + ": no outcomes");
  }
  Matrix sum = Matrix::Zero(dim, dim);
  for (size_t k = 0; k < povm.size(); ++k) {
    const Matrix& e = povm[k];
    if (e.rows() != dim || e.cols() != dim) {
      throw Error(ErrorCode::ShapeMismatch,
                  who + ": element " + std::to_string(k) + " is " +
                      std::to_string(e.rows()) + "x" +
                      std::to_string(e.cols()) + ", expected " +
                      std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!is_psd(e, eps)) {
      throw Error(ErrorCode::InvalidMeasurement,
                  who + ": element " + std::to_string(k) + " is not PSD");
    }
    sum += e;
  }
  double residual = (sum - Matrix::Identity(dim, dim)).norm();
  if (residual > eps) {
    throw Error(ErrorCode::InvalidMeasurement,
                who + ": completeness residual " + std::to_string(residual));
  }
}

void validate_strategy(const NonlocalGame& g, const QuantumStrategy& st,
                       double eps) {
  g.validate(eps);
  if (st.d_a < 1 || st.d_b < 1) {
    throw Error(ErrorCode::ShapeMismatch, "local dimensions must be positive");
  }
  if (st.psi.size() != st.d_a * st.d_b) {
    throw Error(ErrorCode::ShapeMismatch,
                "state dimension " + std::to_string(st.psi.size()) +
                    " does not match " + std::to_string(st.d_a) + "*" +
                    std::to_string(st.d_b));
  }
  if (!is_unit_vector(st.psi, eps)) {
    throw Error(ErrorCode::NotUnitVector,
                "||psi|| = " + std::to_string(st.psi.norm()));
  }
  if (st.alice.size() != g.S.size() || st.bob.size() != g.T.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "strategy answers " + std::to_string(st.alice.size()) + "/" +
                    std::to_string(st.bob.size()) +
                    " questions, game asks " + std::to_string(g.S.size()) +
                    "/" + std::to_string(g.T.size()));
  }
  for (const auto& s : g.S) {
    auto it = st.alice.find(s);
    if (it == st.alice.end()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "no Alice measurement for question '" + s + "'");
    }
    if (it->second.size() != g.A.size()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "Alice measurement for '" + s + "' has " +
                      std::to_string(it->second.size()) + " outcomes, game has " +
                      std::to_string(g.A.size()) + " answers");
    }
    validate_povm(it->second, st.d_a, eps, "alice['" + s + "']");
  }
  for (const auto& t : g.T) {
    auto it = st.bob.find(t);
    if (it == st.bob.end()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "no Bob measurement for question '" + t + "'");
    }
    if (it->second.size() != g.B.size()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "Bob measurement for '" + t + "' has " +
                      std::to_string(it->second.size()) + " outcomes, game has " +
                      std::to_string(g.B.size()) + " answers");
    }
    validate_povm(it->second, st.d_b, eps, "bob['" + t + "']");
  }
}

QuantumStrategy swap_strategy(const QuantumStrategy& st) {
  QuantumStrategy out;
  out.d_a = st.d_b;
  out.d_b = st.d_a;
  out.psi = vec_map(unvec(st.psi, st.d_a, st.d_b).transpose());
  out.alice = st.bob;
  out.bob = st.alice;
  return out;
}

Matrix expectation_grid(const NonlocalGame& g, const QuantumStrategy& st,
                        int s, int t) {
  const auto& es = st.alice.at(g.S[s]);
  const auto& fs = st.bob.at(g.T[t]);
  Matrix d = unvec(st.psi, st.d_a, st.d_b);
  Matrix grid(es.size(), fs.size());
  for (size_t a = 0; a < es.size(); ++a) {
    if (es[a].isZero(0.0)) {
      grid.row(a).setZero();
      continue;
    }
    // tr(D^dagger E D F^T) = sum_ij (D^dagger E D)_ij F_ij
    Matrix m = d.adjoint() * es[a] * d;
    for (size_t b = 0; b < fs.size(); ++b) {
      grid(a, b) = m.cwiseProduct(fs[b]).sum();
    }
  }
  return grid;
}

// ---- evaluation ----------------------------------------------------------------

double winning_probability(const NonlocalGame& g, const QuantumStrategy& st,
                           double eps) {
  validate_strategy(g, st, eps);
  double total = 0.0;
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      double p = g.pi_at(static_cast<int>(s), static_cast<int>(t));
      if (p <= 0.0) continue;
      Matrix grid = expectation_grid(g, st, static_cast<int>(s),
                                     static_cast<int>(t));
      double win = 0.0;
      for (size_t a = 0; a < g.A.size(); ++a) {
        for (size_t b = 0; b < g.B.size(); ++b) {
          if (g.accepts(static_cast<int>(s), static_cast<int>(t),
                        static_cast<int>(a), static_cast<int>(b))) {
            win += grid(a, b).real();
          }
        }
      }
      total += p * win;
    }
  }
  return total;
}

PerfectionLedger is_perfect(const NonlocalGame& g, const QuantumStrategy& st,
                            double eps) {
  validate_strategy(g, st, eps);
  PerfectionLedger ledger;
  double total = 0.0;
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      double p = g.pi_at(static_cast<int>(s), static_cast<int>(t));
      if (p <= 0.0) continue;
      Matrix grid = expectation_grid(g, st, static_cast<int>(s),
                                     static_cast<int>(t));
      for (size_t a = 0; a < g.A.size(); ++a) {
        for (size_t b = 0; b < g.B.size(); ++b) {
          double re = grid(a, b).real();
          bool ok = g.accepts(static_cast<int>(s), static_cast<int>(t),
                              static_cast<int>(a), static_cast<int>(b));
          if (ok) {
            total += p * re;
            continue;
          }
          double mag = std::abs(grid(a, b));
          ledger.max_violation = std::max(ledger.max_violation, mag);
          if (mag > eps) {
            ledger.violations.push_back({static_cast<int>(s),
                                         static_cast<int>(t),
                                         static_cast<int>(a),
                                         static_cast<int>(b), mag});
          }
        }
      }
    }
  }
  ledger.winning_probability = total;
  ledger.total_loss = 1.0 - total;
  ledger.perfect = ledger.violations.empty();
  return ledger;
}

// ---- structure verification -------------------------------------------------------

double StructureReport::max_projectivity() const {
  double m = 0.0;
  for (const auto& e : projectivity) m = std::max(m, e.value);
  return m;
}
double StructureReport::max_commutator() const {
  double m = 0.0;
  for (const auto& e : commutator) m = std::max(m, e.value);
  return m;
}
double StructureReport::max_off_block() const {
  double m = 0.0;
  for (const auto& e : off_block_mass) m = std::max(m, e.value);
  return m;
}

std::vector<std::vector<int>> schmidt_classes(
    const std::vector<double>& coefficients, double eps) {
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < coefficients.size(); ++i) {
    if (i == 0 || coefficients[i - 1] - coefficients[i] > eps) {
      classes.push_back({});
    }
    classes.back().push_back(static_cast<int>(i));
  }
  return classes;
}

namespace {

std::vector<int> class_of_index(const std::vector<std::vector<int>>& classes,
                                size_t d) {
  std::vector<int> cls(d, 0);
  for (size_t c = 0; c < classes.size(); ++c) {
    for (int i : classes[c]) cls[i] = static_cast<int>(c);
  }
  return cls;
}

double off_block_norm(const Matrix& m, const std::vector<int>& cls) {
  double mass = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (cls[i] != cls[j]) mass += std::norm(m(i, j));
    }
  }
  return std::sqrt(mass);
}

// Shared residual engine. hyp_eps bounds each cross expectation (grouped
// operators accumulate up to (number of grouped outcomes) * eps, so callers
// scale accordingly); povm_eps bounds element PSD/completeness checks.
StructureReport correlated_structure_core(const std::vector<Matrix>& e,
                            const std::vector<Matrix>& f, const Vector& psi,
                            double eps, double hyp_eps, double povm_eps,
                            const std::string& e_prefix) {
  if (e.empty() || f.empty()) {
    throw Error(ErrorCode::InvalidMeasurement, "empty measurement");
  }
  if (e.size() != f.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "outcome counts differ: " + std::to_string(e.size()) + " vs " +
                    std::to_string(f.size()));
  }
  Index d_a = e.front().rows();
  Index d_b = f.front().rows();
  validate_povm(e, d_a, povm_eps, "E");
  validate_povm(f, d_b, povm_eps, "F");

  SchmidtDecomposition sd = schmidt_decompose(psi, d_a, d_b, eps);
  if (!sd.full_schmidt_rank()) {
    throw Error(ErrorCode::NotFullSchmidtRank,
                "Schmidt rank " + std::to_string(sd.rank) + " on local dimensions " +
                    std::to_string(d_a) + ", " + std::to_string(d_b));
  }
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = 0; j < f.size(); ++j) {
      if (i == j) continue;
      double mag = std::abs(bipartite_expectation(e[i], f[j], psi));
      if (mag > hyp_eps) {
        throw Error(ErrorCode::HypothesisViolated,
                    "cross expectation (" + std::to_string(i) + "," +
                        std::to_string(j) + ") = " + std::to_string(mag));
      }
    }
  }

  StructureReport report;
  report.schmidt_coefficients = sd.coefficients;
  report.schmidt_classes = schmidt_classes(sd.coefficients, eps);
  std::vector<int> cls = class_of_index(report.schmidt_classes,
                                        sd.coefficients.size());

  Matrix d_root_a = sd.reduced_root();
  Matrix d_root_b = Matrix::Zero(d_b, d_b);
  for (size_t i = 0; i < sd.coefficients.size(); ++i) {
    d_root_b += sd.coefficients[i] *
                (sd.right_basis.col(i) * sd.right_basis.col(i).adjoint());
  }

  for (size_t i = 0; i < e.size(); ++i) {
    std::string le = e_prefix + "[" + std::to_string(i) + "]";
    std::string lf = "F[" + std::to_string(i) + "]";
    report.projectivity.push_back({le, (e[i] * e[i] - e[i]).norm()});
    report.projectivity.push_back({lf, (f[i] * f[i] - f[i]).norm()});
    report.commutator.push_back({le, commutator_norm(d_root_a, e[i])});
    report.commutator.push_back({lf, commutator_norm(d_root_b, f[i])});
    Matrix e_schmidt = sd.left_basis.adjoint() * e[i] * sd.left_basis;
    Matrix f_schmidt = sd.right_basis.adjoint() * f[i] * sd.right_basis;
    report.off_block_mass.push_back({le, off_block_norm(e_schmidt, cls)});
    report.off_block_mass.push_back({lf, off_block_norm(f_schmidt, cls)});
  }
  return report;
}

}  // namespace

StructureReport verify_correlated_measurements(const std::vector<Matrix>& e,
                              const std::vector<Matrix>& f, const Vector& psi,
                              double eps) {
  return correlated_structure_core(e, f, psi, eps, eps, eps, "E");
}

StructureReport verify_grouped_measurements(const std::vector<Matrix>& e,
                                  const std::vector<Matrix>& f,
                                  const std::vector<int>& f_map,
                                  const Vector& psi, double eps) {
  if (e.empty() || f.empty()) {
    throw Error(ErrorCode::InvalidMeasurement, "empty measurement");
  }
  if (f_map.size() != e.size()) {
    throw Error(ErrorCode::NotAFunction,
                "map covers " + std::to_string(f_map.size()) + " of " +
                    std::to_string(e.size()) + " outcomes");
  }
  for (int j : f_map) {
    if (j < 0 || j >= static_cast<int>(f.size())) {
      throw Error(ErrorCode::NotAFunction,
                  "map value " + std::to_string(j) + " outside [0," +
                      std::to_string(f.size()) + ")");
    }
  }
  Index d_a = e.front().rows();
  validate_povm(e, d_a, eps, "E");
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = 0; j < f.size(); ++j) {
      if (static_cast<int>(j) == f_map[i]) continue;
      double mag = std::abs(bipartite_expectation(e[i], f[j], psi));
      if (mag > eps) {
        throw Error(ErrorCode::HypothesisViolated,
                    "cross expectation (" + std::to_string(i) + "," +
                        std::to_string(j) + ") = " + std::to_string(mag));
      }
    }
  }
  std::vector<Matrix> grouped(f.size(), Matrix::Zero(d_a, d_a));
  for (size_t i = 0; i < e.size(); ++i) grouped[f_map[i]] += e[i];
  double n = static_cast<double>(e.size());
  return correlated_structure_core(grouped, f, psi, eps, n * eps, n * eps, "E'");
}

// ---- transforms ----------------------------------------------------------------------

QuantumStrategy restrict_to_schmidt_support(const QuantumStrategy& st,
                                            double eps) {
  SchmidtDecomposition sd = schmidt_decompose(st.psi, st.d_a, st.d_b, eps);
  Index r = sd.rank;
  Matrix u = sd.left_basis.leftCols(r);
  Matrix w = sd.right_basis.leftCols(r);
  QuantumStrategy out;
  out.d_a = out.d_b = r;
  Vector coeffs = Vector::Zero(r);
  for (Index i = 0; i < r; ++i) coeffs(i) = sd.coefficients[i];
  coeffs /= coeffs.norm();
  out.psi = Vector::Zero(r * r);
  for (Index i = 0; i < r; ++i) out.psi(i * r + i) = coeffs(i);
  for (const auto& [q, povm] : st.alice) {
    auto& dst = out.alice[q];
    for (const auto& m : povm) dst.push_back(u.adjoint() * m * u);
  }
  for (const auto& [q, povm] : st.bob) {
    auto& dst = out.bob[q];
    for (const auto& m : povm) dst.push_back(w.adjoint() * m * w);
  }
  return out;
}

QuantumStrategy substitute_max_entangled(const NonlocalGame& g,
                                         const QuantumStrategy& st, double eps,
                                         bool restrict_support) {
  validate_strategy(g, st, eps);
  WeakProjectionReport detection = detect_weak_projection(g, true);
  if (detection.witnesses.empty()) {
    throw Error(ErrorCode::NotWeaklyProjective,
                "no witness on supported question pairs for either party");
  }
  PerfectionLedger ledger = is_perfect(g, st, eps);
  if (!ledger.perfect) {
    throw Error(ErrorCode::NotPerfect,
                "largest rejecting expectation " +
                    std::to_string(ledger.max_violation));
  }
  QuantumStrategy base = st;
  if (restrict_support) base = restrict_to_schmidt_support(st, eps);
  SchmidtDecomposition sd = schmidt_decompose(base.psi, base.d_a, base.d_b, eps);
  if (!sd.full_schmidt_rank()) {
    throw Error(ErrorCode::NotFullSchmidtRank,
                "Schmidt rank " + std::to_string(sd.rank) +
                    " on local dimensions " + std::to_string(base.d_a) + ", " +
                    std::to_string(base.d_b));
  }
  QuantumStrategy out = base;
  double d = static_cast<double>(base.d_a);
  out.psi =
      vec_map(sd.left_basis * sd.right_basis.transpose() / std::sqrt(d));
  return out;
}

QuantumStrategy block_direct_sum_strategy(const QuantumStrategy& st,
                                          double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::InvalidWeight,
                "weight " + std::to_string(p) + " outside (0,1)");
  }
  auto embed = [](const Matrix& m) {
    Matrix out = Matrix::Zero(2 * m.rows(), 2 * m.cols());
    out.topLeftCorner(m.rows(), m.cols()) = m;
    out.bottomRightCorner(m.rows(), m.cols()) = m;
    return out;
  };
  Matrix d = unvec(st.psi, st.d_a, st.d_b);
  Matrix d2 = Matrix::Zero(2 * st.d_a, 2 * st.d_b);
  d2.topLeftCorner(st.d_a, st.d_b) = std::sqrt(p) * d;
  d2.bottomRightCorner(st.d_a, st.d_b) = std::sqrt(1.0 - p) * d;

  QuantumStrategy out;
  out.d_a = 2 * st.d_a;
  out.d_b = 2 * st.d_b;
  out.psi = vec_map(d2);
  for (const auto& [q, povm] : st.alice) {
    auto& dst = out.alice[q];
    for (const auto& m : povm) dst.push_back(embed(m));
  }
  for (const auto& [q, povm] : st.bob) {
    auto& dst = out.bob[q];
    for (const auto& m : povm) dst.push_back(embed(m));
  }
  return out;
}

// ---- fixtures -------------------------------------------------------------------------

QuantumStrategy fourier_strategy_hadamard(int n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorCode::BadN,
                "need n divisible by 4, got " + std::to_string(n));
  }
  Graph x = hadamard_graph(n);
  QuantumStrategy st;
  st.d_a = st.d_b = n;
  st.psi = max_entangled_state(n);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (const auto& label : x.vertices) {
    auto& povm_a = st.alice[label];
    auto& povm_b = st.bob[label];
    for (int a = 0; a < n; ++a) {
      Vector u(n);
      for (int i = 0; i < n; ++i) {
        double sign = label[i] == '1' ? -1.0 : 1.0;
        double phase = 2.0 * std::numbers::pi * ((a * i) % n) / n;
        u(i) = sign * scale * std::polar(1.0, phase);
      }
      povm_a.push_back(u * u.adjoint());
      Vector v = u.conjugate();
      povm_b.push_back(v * v.adjoint());
    }
  }
  return st;
}

QuantumStrategy magic_square_strategy() {
  Matrix i2 = Matrix::Identity(2, 2);
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;

  // Cell observables: rows multiply to +I, columns to -I, and every row or
  // column is a commuting triple.
  Matrix cell[3][3] = {
      {kron(i2, sz), kron(sz, i2), kron(sz, sz)},
      {kron(sx, i2), kron(i2, sx), kron(sx, sx)},
      {-kron(sx, sz), -kron(sz, sx), kron(sy, sy)},
  };
  auto observable_for_var = [&](int var) {
    int cell_index = var - 1;
    return cell[cell_index / 3][cell_index % 3];
  };

  std::vector<ParityConstraint> constraints = magic_square_constraints();
  NonlocalGame game = make_bcs_game(constraints);
  Matrix i4 = Matrix::Identity(4, 4);

  QuantumStrategy st;
  st.d_a = st.d_b = 4;
  st.psi = max_entangled_state(4);
  for (size_t ci = 0; ci < constraints.size(); ++ci) {
    std::vector<int> vars = constraints[ci].vars;
    std::sort(vars.begin(), vars.end());
    auto& povm = st.alice[game.S[ci]];
    povm.assign(game.A.size(), Matrix::Zero(4, 4));
    for (unsigned m = 0; m < 8; ++m) {
      Matrix proj = i4;
      std::string label;
      for (size_t j = 0; j < vars.size(); ++j) {
        int bit = (m >> j) & 1u;
        double sign = bit ? -1.0 : 1.0;
        proj = proj * (i4 + sign * observable_for_var(vars[j])) / 2.0;
        if (j) label += ",";
        label += "x" + std::to_string(vars[j]) + "=" + std::to_string(bit);
      }
      povm[game.a_index(label)] = proj;
    }
  }
  for (size_t t = 0; t < game.T.size(); ++t) {
    int var = std::stoi(game.T[t].substr(1));
    Matrix obs = observable_for_var(var).conjugate();
    auto& povm = st.bob[game.T[t]];
    povm.push_back((i4 + obs) / 2.0);  // bit 0 <-> eigenvalue +1
    povm.push_back((i4 - obs) / 2.0);
  }
  return st;
}

QuantumStrategy chsh_optimal_strategy() {
  auto proj = [](double theta) {
    Matrix p(2, 2);
    double c = std::cos(theta), s = std::sin(theta);
    p << c * c, c * s, c * s, s * s;
    return p;
  };
  double pi8 = std::numbers::pi / 8.0;
  double pi2 = std::numbers::pi / 2.0;
  QuantumStrategy st;
  st.d_a = st.d_b = 2;
  st.psi = max_entangled_state(2);
  st.alice["0"] = {proj(0.0), proj(pi2)};
  st.alice["1"] = {proj(2 * pi8), proj(2 * pi8 + pi2)};
  st.bob["0"] = {proj(pi8), proj(pi8 + pi2)};
  st.bob["1"] = {proj(-pi8), proj(-pi8 + pi2)};
  return st;
}

QuantumStrategy classical_embedded_strategy(const NonlocalGame& g,
                                            const std::vector<int>& alice_map,
                                            const std::vector<int>& bob_map) {
  if (alice_map.size() != g.S.size() || bob_map.size() != g.T.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "answer maps do not cover the question sets");
  }
  QuantumStrategy st;
  st.d_a = st.d_b = 1;
  st.psi = Vector::Ones(1);
  Matrix one = Matrix::Ones(1, 1);
  Matrix zero = Matrix::Zero(1, 1);
  for (size_t s = 0; s < g.S.size(); ++s) {
    int pick = alice_map[s];
    if (pick < 0 || pick >= static_cast<int>(g.A.size())) {
      throw Error(ErrorCode::ShapeMismatch, "answer index out of range");
    }
    auto& povm = st.alice[g.S[s]];
    for (size_t a = 0; a < g.A.size(); ++a) {
      povm.push_back(static_cast<int>(a) == pick ? one : zero);
    }
  }
  for (size_t t = 0; t < g.T.size(); ++t) {
    int pick = bob_map[t];
    if (pick < 0 || pick >= static_cast<int>(g.B.size())) {
      throw Error(ErrorCode::ShapeMismatch, "answer index out of range");
    }
    auto& povm = st.bob[g.T[t]];
    for (size_t b = 0; b < g.B.size(); ++b) {
      povm.push_back(static_cast<int>(b) == pick ? one : zero);
    }
  }
  return st;
}

// ---- consistency-question lifting ---------------------------------------------------------

namespace {

// S = T, A = B, and every diagonal pair is supported and accepts exactly the
// equal answer pairs. That is precisely what makes reusing E^t on the
// consistency questions perfect.
bool homomorphism_shaped(const NonlocalGame& g) {
  if (g.S != g.T || g.A != g.B) return false;
  for (size_t t = 0; t < g.T.size(); ++t) {
    if (g.pi_at(static_cast<int>(t), static_cast<int>(t)) <= 0.0) return false;
    for (size_t a = 0; a < g.A.size(); ++a) {
      for (size_t b = 0; b < g.B.size(); ++b) {
        bool want = a == b;
        if (g.accepts(static_cast<int>(t), static_cast<int>(t),
                      static_cast<int>(a), static_cast<int>(b)) != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool parse_var_label(const std::string& label, int* var) {
  if (label.size() < 2 || label[0] != 'x') return false;
  for (size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return false;
  }
  *var = std::stoi(label.substr(1));
  return *var >= 1 && label == "x" + std::to_string(*var);
}

// Assignment labels are comma-joined "x<i>=<bit>" with variables strictly
// ascending. Returns false on any other shape.
bool parse_assignment_label(const std::string& label,
                            std::vector<std::pair<int, int>>* assignment) {
  assignment->clear();
  size_t pos = 0;
  int prev = 0;
  while (pos < label.size()) {
    size_t comma = label.find(',', pos);
    std::string token =
        label.substr(pos, comma == std::string::npos ? comma : comma - pos);
    size_t eq = token.find('=');
    if (eq == std::string::npos) return false;
    int var = 0;
    if (!parse_var_label(token.substr(0, eq), &var)) return false;
    std::string bit = token.substr(eq + 1);
    if (bit != "0" && bit != "1") return false;
    if (var <= prev) return false;
    prev = var;
    assignment->push_back({var, bit == "1" ? 1 : 0});
    pos = comma == std::string::npos ? label.size() : comma + 1;
  }
  return !assignment->empty();
}

struct BcsShape {
  std::vector<int> var_of_t;            // variable id per Bob question
  std::vector<int> constraint_for_t;    // lowest-index supported partner
  // bit_of[t][a] = bit the answer assigns to Bob's variable, or -1
  std::vector<std::vector<int>> bit_of;
};

bool bcs_shaped(const NonlocalGame& g, BcsShape* shape) {
  if (g.B != std::vector<std::string>{"0", "1"}) return false;
  size_t n_t = g.T.size();
  shape->var_of_t.assign(n_t, 0);
  std::set<int> vars;
  for (size_t t = 0; t < n_t; ++t) {
    int var = 0;
    if (!parse_var_label(g.T[t], &var)) return false;
    shape->var_of_t[t] = var;
    vars.insert(var);
  }
  std::vector<std::vector<std::pair<int, int>>> parsed(g.A.size());
  for (size_t a = 0; a < g.A.size(); ++a) {
    if (!parse_assignment_label(g.A[a], &parsed[a])) return false;
    for (auto [var, bit] : parsed[a]) {
      if (!vars.count(var)) return false;
    }
  }
  shape->constraint_for_t.assign(n_t, -1);
  for (size_t t = 0; t < n_t; ++t) {
    for (size_t s = 0; s < g.S.size(); ++s) {
      if (g.pi_at(static_cast<int>(s), static_cast<int>(t)) > 0.0) {
        shape->constraint_for_t[t] = static_cast<int>(s);
        break;
      }
    }
    if (shape->constraint_for_t[t] < 0) return false;
  }
  shape->bit_of.assign(n_t, std::vector<int>(g.A.size(), -1));
  for (size_t t = 0; t < n_t; ++t) {
    for (size_t a = 0; a < g.A.size(); ++a) {
      for (auto [var, bit] : parsed[a]) {
        if (var == shape->var_of_t[t]) shape->bit_of[t][a] = bit;
      }
    }
  }
  return true;
}

}  // namespace

QuantumStrategy lift_strategy_tilde(const NonlocalGame& g,
                                    const QuantumStrategy& st, Party party,
                                    double eps) {
  if (party == Party::Alice) {
    return swap_strategy(
        lift_strategy_tilde(swap_parties(g), swap_strategy(st), Party::Bob,
                            eps));
  }
  validate_strategy(g, st, eps);
  bool homomorphism = homomorphism_shaped(g);
  BcsShape shape;
  bool bcs = !homomorphism && bcs_shaped(g, &shape);
  if (!homomorphism && !bcs) {
    throw Error(ErrorCode::UnsupportedGameShape,
                "needs a same-input consistency game or a parity-system game");
  }
  PerfectionLedger ledger = is_perfect(g, st, eps);
  if (!ledger.perfect) {
    throw Error(ErrorCode::NotPerfect,
                "largest rejecting expectation " +
                    std::to_string(ledger.max_violation));
  }

  NonlocalGame tilde = tilde_transform(g, Party::Bob);
  size_t n_union = tilde.A.size();
  std::vector<int> b_pos(g.B.size());
  for (size_t b = 0; b < g.B.size(); ++b) {
    b_pos[b] = tilde.a_index(g.B[b]);
  }

  QuantumStrategy out;
  out.d_a = st.d_a;
  out.d_b = st.d_b;
  out.psi = st.psi;
  out.bob = st.bob;
  Matrix zero = Matrix::Zero(st.d_a, st.d_a);

  for (size_t s = 0; s < g.S.size(); ++s) {
    const auto& base = st.alice.at(g.S[s]);
    auto& povm = out.alice[tilde_question_label(g.S[s], 0)];
    povm.assign(n_union, zero);
    for (size_t a = 0; a < g.A.size(); ++a) povm[a] = base[a];
  }
  for (size_t t = 0; t < g.T.size(); ++t) {
    auto& povm = out.alice[tilde_question_label(g.T[t], 1)];
    povm.assign(n_union, zero);
    if (homomorphism) {
      const auto& base = st.alice.at(g.T[t]);
      for (size_t a = 0; a < g.A.size(); ++a) povm[a] = base[a];
    } else {
      const auto& base = st.alice.at(g.S[shape.constraint_for_t[t]]);
      Matrix bits[2] = {zero, zero};
      for (size_t a = 0; a < g.A.size(); ++a) {
        int bit = shape.bit_of[t][a];
        // Answers that do not assign Bob's variable never fire in a perfect
        // strategy; routing them to bit 0 keeps the POVM complete.
        bits[bit == 1 ? 1 : 0] += base[a];
      }
      povm[b_pos[0]] = bits[0];
      povm[b_pos[1]] = bits[1];
    }
  }
  return out;
}

QuantumStrategy restrict_strategy_from_tilde(const NonlocalGame& g,
                                             const QuantumStrategy& tilde_st,
                                             Party party) {
  if (party == Party::Alice) {
    return swap_strategy(restrict_strategy_from_tilde(
        swap_parties(g), swap_strategy(tilde_st), Party::Bob));
  }
  QuantumStrategy out;
  out.d_a = tilde_st.d_a;
  out.d_b = tilde_st.d_b;
  out.psi = tilde_st.psi;
  out.bob = tilde_st.bob;
  for (const auto& s : g.S) {
    auto it = tilde_st.alice.find(tilde_question_label(s, 0));
    if (it == tilde_st.alice.end()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "no measurement for question '(" + s + ",0)'");
    }
    const auto& src = it->second;
    if (src.size() < g.A.size()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "measurement for '(" + s + ",0)' has too few outcomes");
    }
    auto& povm = out.alice[s];
    povm.assign(src.begin(), src.begin() + g.A.size());
    // Mass on answers outside the base answer set never fires for perfect
    // strategies; folding it into the first answer keeps completeness.
    for (size_t extra = g.A.size(); extra < src.size(); ++extra) {
      povm[0] += src[extra];
    }
  }
  return out;
}

// ---- structure of perfect strategies ----------------------------------------------------

StructureReport structure_report(const NonlocalGame& g,
                                 const QuantumStrategy& st, double eps) {
  validate_strategy(g, st, eps);
  WeakProjectionReport detection = detect_weak_projection(g, true);
  const WeakProjectionWitness* witness = detection.for_party(Party::Bob);
  if (witness == nullptr && detection.for_party(Party::Alice) != nullptr) {
    // Mirror through the swapped game so the grouped operators live on the
    // projective side; labels then name the swapped roles.
    return structure_report(swap_parties(g), swap_strategy(st), eps);
  }
  if (witness == nullptr) {
    throw Error(ErrorCode::NotWeaklyProjective,
                "no witness on supported question pairs");
  }
  SchmidtDecomposition sd = schmidt_decompose(st.psi, st.d_a, st.d_b, eps);
  if (!sd.full_schmidt_rank()) {
    throw Error(ErrorCode::NotFullSchmidtRank,
                "Schmidt rank " + std::to_string(sd.rank) +
                    " on local dimensions " + std::to_string(st.d_a) + ", " +
                    std::to_string(st.d_b));
  }

  StructureReport report;
  PerfectionLedger ledger = is_perfect(g, st, eps);
  report.perfect = ledger.perfect;
  report.total_loss = ledger.total_loss;
  report.schmidt_coefficients = sd.coefficients;
  report.schmidt_classes = schmidt_classes(sd.coefficients, eps);
  std::vector<int> cls =
      class_of_index(report.schmidt_classes, sd.coefficients.size());

  Matrix d_root_a = sd.reduced_root();
  Matrix d_root_b = Matrix::Zero(st.d_b, st.d_b);
  for (size_t i = 0; i < sd.coefficients.size(); ++i) {
    d_root_b += sd.coefficients[i] *
                (sd.right_basis.col(i) * sd.right_basis.col(i).adjoint());
  }

  for (size_t t = 0; t < g.T.size(); ++t) {
    int s = witness->partner[t];
    const auto& f_map = witness->f[t];
    const auto& alice_povm = st.alice.at(g.S[s]);
    std::vector<Matrix> grouped(g.B.size(), Matrix::Zero(st.d_a, st.d_a));
    for (size_t a = 0; a < g.A.size(); ++a) {
      int j = f_map[a] < 0 ? 0 : f_map[a];
      grouped[j] += alice_povm[a];
    }
    const auto& bob_povm = st.bob.at(g.T[t]);
    for (size_t b = 0; b < g.B.size(); ++b) {
      std::string le = "E'^" + g.T[t] + "[" + g.B[b] + "]";
      std::string lf = "F^" + g.T[t] + "[" + g.B[b] + "]";
      report.projectivity.push_back(
          {le, (grouped[b] * grouped[b] - grouped[b]).norm()});
      report.projectivity.push_back(
          {lf, (bob_povm[b] * bob_povm[b] - bob_povm[b]).norm()});
      report.commutator.push_back({le, commutator_norm(d_root_a, grouped[b])});
      report.commutator.push_back({lf, commutator_norm(d_root_b, bob_povm[b])});
      Matrix e_schmidt = sd.left_basis.adjoint() * grouped[b] * sd.left_basis;
      Matrix f_schmidt = sd.right_basis.adjoint() * bob_povm[b] * sd.right_basis;
      report.off_block_mass.push_back({le, off_block_norm(e_schmidt, cls)});
      report.off_block_mass.push_back({lf, off_block_norm(f_schmidt, cls)});
    }
  }
  return report;
}

QuantumStrategy perturb_bob_povm(const QuantumStrategy& st,
                                 const std::string& question, double magnitude,
                                 unsigned long long seed) {
  auto it = st.bob.find(question);
  if (it == st.bob.end()) {
    throw Error(ErrorCode::ShapeMismatch,
                "no Bob measurement for question '" + question + "'");
  }
  Rng rng(seed);
  std::vector<Matrix> noisy;
  for (const auto& e : it->second) {
    Matrix h = random_hermitian(rng, st.d_b);
    noisy.push_back(e + (magnitude / h.norm()) * h);
  }
  QuantumStrategy out = st;
  out.bob[question] = project_to_povm(noisy);
  return out;
}

}  // namespace nlgames
