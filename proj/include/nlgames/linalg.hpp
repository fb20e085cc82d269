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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nlgames/error.hpp"

namespace nlgames {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kDefaultEps = 1e-9;

// ---- predicates -------------------------------------------------------

bool is_hermitian(const Matrix& m, double eps = kDefaultEps);
bool is_psd(const Matrix& m, double eps = kDefaultEps);
// ||M^2 - M||_F <= eps and ||M - M'dagger||_F <= eps.
bool is_projector(const Matrix& m, double eps = kDefaultEps);
bool is_unit_vector(const Vector& v, double eps = kDefaultEps);

// ---- vec correspondence -----------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b);

// vec|i><j| = |i>|j>, extended linearly: stacks rows, so
// vec(M)[i*cols + j] = M(i, j) and vec(A X B^T) = (A (x) B) vec(X).
Vector vec_map(const Matrix& m);
Matrix unvec(const Vector& v, Index rows, Index cols);

// |Psi_d> = (1/sqrt(d)) sum_i |ii>, i.e. vec(I_d)/sqrt(d).
Vector max_entangled_state(Index d);

// Reduced states of a pure bipartite state psi in C^{d_a} (x) C^{d_b}.
Matrix reduced_state_a(const Vector& psi, Index d_a, Index d_b);  // tr_B
Matrix reduced_state_b(const Vector& psi, Index d_a, Index d_b);  // tr_A

// ---- Schmidt decomposition --------------------------------------------

struct SchmidtDecomposition {
  Index d_a = 0;
  Index d_b = 0;
  std::vector<double> coefficients;  // descending, length min(d_a, d_b)
  Matrix left_basis;                 // d_a x k, orthonormal columns |alpha_i>
  Matrix right_basis;                // d_b x k, orthonormal columns |beta_i>
  Index rank = 0;                    // count of coefficients > eps

  bool full_schmidt_rank() const { return d_a == d_b && rank == d_a; }
  // sum_i c_i |alpha_i>|beta_i>
  Vector reconstruct() const;
  // sum_i c_i |alpha_i><alpha_i| = sqrt(tr_B |psi><psi|)
  Matrix reduced_root() const;
};

// Both bases carry min(d_a, d_b) columns (zero coefficients keep their
// orthonormal completion). Phase convention: the first component of each
// |alpha_i> that exceeds 1e-12 in magnitude is made real positive, with the
// compensating phase pushed into |beta_i>.
SchmidtDecomposition schmidt_decompose(const Vector& psi, Index d_a, Index d_b,
                                       double eps = kDefaultEps);

// sqrt(tr_B |psi><psi|) as an operator on the first factor, and
// sqrt(tr_A |psi><psi|) on the second.
Matrix reduced_state_root_a(const Vector& psi, Index d_a, Index d_b);
Matrix reduced_state_root_b(const Vector& psi, Index d_a, Index d_b);

// ---- expectation and operator geometry --------------------------------

// tr(A (x) B |psi><psi|) computed as tr(D^dagger A D B^T) with vec(D) = psi.
// The split d_a, d_b is inferred from the shapes of A and B.
Complex bipartite_expectation(const Matrix& a, const Matrix& b,
                              const Vector& psi);

// Orthogonal projector onto the span of eigenvectors of a PSD matrix with
// eigenvalue > eps.
Matrix support_projector(const Matrix& m, double eps = kDefaultEps);

// Frobenius norm of AB - BA.
double commutator_norm(const Matrix& a, const Matrix& b);

}  // namespace nlgames
