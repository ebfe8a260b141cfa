// Copyright 2026 The vvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <optional>

#include "vvqe/pauli.hpp"
#include "vvqe/state.hpp"

namespace vvqe {

/// Dense 2^n x 2^n operator in the StateVector basis convention.
using DenseOperator = Eigen::MatrixXcd;

/// Largest qubit count the dense oracle materializes.
inline constexpr int kMaxDenseQubits = 12;

/// Dense matrix of a single Pauli string.
DenseOperator to_dense(const PauliString& p);

/// sum_i c_i * dense(L_i). Throws std::length_error above 12 qubits.
DenseOperator to_dense(const PauliPolynomial& a);

struct Spectrum {
  /// Ascending.
  Eigen::VectorXd values;
  /// Columns are eigenvectors in the full 2^n basis.
  Eigen::MatrixXcd vectors;
};

/// Eigen-decomposition of a Hermitian operator. With `particle_number`, the
/// operator is first projected onto basis states of that Hamming weight.
Spectrum spectrum(const DenseOperator& a,
                  std::optional<int> particle_number = std::nullopt);

/// ||H psi - <H> psi||_2.
double eigenstate_residual(const StateVector& state, const DenseOperator& h);
double eigenstate_residual(const StateVector& state, const PauliPolynomial& h);

/// Index of the eigenvalue closest to `value`.
Eigen::Index nearest_eigenvalue(const Eigen::VectorXd& values, double value);

}  // namespace vvqe
