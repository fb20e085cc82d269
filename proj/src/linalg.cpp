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

#include "nlgames/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace nlgames {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

bool is_hermitian(const Matrix& m, double eps) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= eps;
}

bool is_psd(const Matrix& m, double eps) {
  if (!is_hermitian(m, eps)) return false;
  if (m.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0,
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -eps;
}

bool is_projector(const Matrix& m, double eps) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= eps && (m * m - m).norm() <= eps;
}

bool is_unit_vector(const Vector& v, double eps) {
  return std::abs(v.norm() - 1.0) <= eps;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Vector vec_map(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    v.segment(i * m.cols(), m.cols()) = m.row(i).transpose();
  }
  return v;
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "unvec: vector of length " + std::to_string(v.size()) +
                    " cannot fill " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    m.row(i) = v.segment(i * cols, cols).transpose();
  }
  return m;
}

Vector max_entangled_state(Index d) {
  if (d < 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "max_entangled_state: dimension must be positive");
  }
  return vec_map(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
}

Matrix reduced_state_a(const Vector& psi, Index d_a, Index d_b) {
  Matrix d = unvec(psi, d_a, d_b);
  return d * d.adjoint();
}

Matrix reduced_state_b(const Vector& psi, Index d_a, Index d_b) {
  Matrix d = unvec(psi, d_a, d_b);
  return (d.adjoint() * d).transpose();
}

Vector SchmidtDecomposition::reconstruct() const {
  Vector psi = Vector::Zero(d_a * d_b);
  for (size_t i = 0; i < coefficients.size(); ++i) {
    psi += coefficients[i] *
           vec_map(left_basis.col(i) * right_basis.col(i).transpose());
  }
  return psi;
}

Matrix SchmidtDecomposition::reduced_root() const {
  Matrix d = Matrix::Zero(d_a, d_a);
  for (size_t i = 0; i < coefficients.size(); ++i) {
    d += coefficients[i] * (left_basis.col(i) * left_basis.col(i).adjoint());
  }
  return d;
}

SchmidtDecomposition schmidt_decompose(const Vector& psi, Index d_a, Index d_b,
                                       double eps) {
  if (psi.size() != d_a * d_b) {
    throw Error(ErrorCode::DimensionMismatch,
                "schmidt_decompose: state has dimension " +
                    std::to_string(psi.size()) + ", expected " +
                    std::to_string(d_a) + "*" + std::to_string(d_b));
  }
  if (!is_unit_vector(psi, eps)) {
    throw Error(ErrorCode::NotUnitVector,
                "schmidt_decompose: ||psi|| = " + std::to_string(psi.norm()));
  }
  // psi = vec(D) with D = U S V^dagger, so psi = sum_i s_i u_i (x) conj(v_i).
  Matrix d = unvec(psi, d_a, d_b);
  Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeThinU | Eigen::ComputeThinV);

  SchmidtDecomposition out;
  out.d_a = d_a;
  out.d_b = d_b;
  out.left_basis = svd.matrixU();
  out.right_basis = svd.matrixV().conjugate();
  const auto& sv = svd.singularValues();
  out.coefficients.assign(sv.data(), sv.data() + sv.size());
  out.rank = 0;
  for (double c : out.coefficients) {
    if (c > eps) ++out.rank;
  }
  // Fix the gauge freedom: first non-negligible component of each |alpha_i>
  // real positive, compensated in |beta_i> so the reconstruction is unchanged.
  for (Index i = 0; i < out.left_basis.cols(); ++i) {
    for (Index r = 0; r < d_a; ++r) {
      Complex x = out.left_basis(r, i);
      if (std::abs(x) > 1e-12) {
        Complex phase = std::conj(x) / std::abs(x);
        out.left_basis.col(i) *= phase;
        out.right_basis.col(i) *= std::conj(phase);
        break;
      }
    }
  }
  return out;
}

Matrix reduced_state_root_a(const Vector& psi, Index d_a, Index d_b) {
  SchmidtDecomposition sd = schmidt_decompose(psi, d_a, d_b);
  return sd.reduced_root();
}

Matrix reduced_state_root_b(const Vector& psi, Index d_a, Index d_b) {
  SchmidtDecomposition sd = schmidt_decompose(psi, d_a, d_b);
  Matrix d = Matrix::Zero(d_b, d_b);
  for (size_t i = 0; i < sd.coefficients.size(); ++i) {
    d += sd.coefficients[i] *
         (sd.right_basis.col(i) * sd.right_basis.col(i).adjoint());
  }
  return d;
}

Complex bipartite_expectation(const Matrix& a, const Matrix& b,
                              const Vector& psi) {
  require_square(a, "bipartite_expectation");
  require_square(b, "bipartite_expectation");
  Index d_a = a.rows();
  Index d_b = b.rows();
  if (psi.size() != d_a * d_b) {
    throw Error(ErrorCode::DimensionMismatch,
                "bipartite_expectation: state has dimension " +
                    std::to_string(psi.size()) + ", operators imply " +
                    std::to_string(d_a) + "*" + std::to_string(d_b));
  }
  Matrix d = unvec(psi, d_a, d_b);
  return (d.adjoint() * a * d * b.transpose()).trace();
}

Matrix support_projector(const Matrix& m, double eps) {
  require_square(m, "support_projector");
  if (!is_psd(m, eps)) {
    throw Error(ErrorCode::NotPSD, "support_projector: input is not PSD");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  Matrix p = Matrix::Zero(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    if (es.eigenvalues()(i) > eps) {
      p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
  }
  return p;
}

double commutator_norm(const Matrix& a, const Matrix& b) {
  require_square(a, "commutator_norm");
  require_square(b, "commutator_norm");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "commutator_norm: dimensions " + std::to_string(a.rows()) +
                    " vs " + std::to_string(b.rows()));
  }
  return (a * b - b * a).norm();
}

}  // namespace nlgames
