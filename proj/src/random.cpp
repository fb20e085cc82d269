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

#include "nlgames/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

namespace nlgames {

Matrix random_ginibre(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

Vector random_unit_vector(Rng& rng, Index dim) {
  Vector v = random_ginibre(rng, dim, 1).col(0);
  return v / v.norm();
}

Matrix random_hermitian(Rng& rng, Index dim) {
  Matrix g = random_ginibre(rng, dim, dim);
  return (g + g.adjoint()) / 2.0;
}

Matrix random_psd(Rng& rng, Index dim, double ridge) {
  Matrix g = random_ginibre(rng, dim, dim);
  return g * g.adjoint() + ridge * Matrix::Identity(dim, dim);
}

Matrix random_unitary(Rng& rng, Index dim) {
  Matrix g = random_ginibre(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the phase ambiguity so the distribution is Haar.
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

std::vector<Matrix> random_povm(Rng& rng, Index dim, int outcomes) {
  std::vector<Matrix> parts;
  Matrix sum = Matrix::Zero(dim, dim);
  for (int k = 0; k < outcomes; ++k) {
    parts.push_back(random_psd(rng, dim, 0.05));
    sum += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sum);
  Matrix root_inv = es.operatorInverseSqrt();
  for (auto& p : parts) p = root_inv * p * root_inv;
  return parts;
}

std::vector<Matrix> project_to_povm(const std::vector<Matrix>& elements) {
  std::vector<Matrix> out;
  Index dim = elements.empty() ? 0 : elements.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& e : elements) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((e + e.adjoint()) / 2.0);
    Matrix clipped = Matrix::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) {
      double lambda = es.eigenvalues()(i);
      if (lambda > 0.0) {
        clipped +=
            lambda * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      }
    }
    out.push_back(clipped);
    sum += clipped;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sum);
  Matrix root_inv = es.operatorInverseSqrt();
  for (auto& e : out) e = root_inv * e * root_inv;
  return out;
}

}  // namespace nlgames
