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

#include <random>
#include <vector>

#include "nlgames/linalg.hpp"

namespace nlgames {

using Rng = std::mt19937_64;

// Entries i.i.d. standard complex Gaussian.
Matrix random_ginibre(Rng& rng, Index rows, Index cols);

Vector random_unit_vector(Rng& rng, Index dim);

Matrix random_hermitian(Rng& rng, Index dim);

// Full-rank PSD: G G^dagger + ridge * I.
Matrix random_psd(Rng& rng, Index dim, double ridge = 0.0);

// Haar-distributed via QR of a Ginibre matrix.
Matrix random_unitary(Rng& rng, Index dim);

// k-outcome POVM: random full-rank PSD pieces renormalized by the inverse
// square root of their sum.
std::vector<Matrix> random_povm(Rng& rng, Index dim, int outcomes);

// Clips negative eigenvalues of each element and renormalizes the family by
// S^{-1/2} (.) S^{-1/2} so it sums to the identity again.
std::vector<Matrix> project_to_povm(const std::vector<Matrix>& elements);

}  // namespace nlgames
