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
#include <cstddef>
#include <string_view>
#include <vector>

#include "vvqe/pauli.hpp"

namespace vvqe {

/// Dense amplitude vector over 2^n computational basis states.
///
/// Bit convention: qubit q is bit q of the amplitude index (qubit 0 least
/// significant). Bitstrings are written left to right as qubit 0 .. n-1, so
/// "0011" has qubits 2 and 3 set and lives at index 0b1100 = 12.
class StateVector {
 public:
  /// Largest register the simulator allocates.
  static constexpr int kMaxQubits = 30;

  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  double norm() const { return amplitudes_.norm(); }
  /// <this|other>.
  Complex inner(const StateVector& other) const;

  /// In-place exp(-i * angle / 2 * P).
  void apply_pauli_rotation(const PauliString& p, double angle);
  /// In-place P|psi>.
  void apply_pauli(const PauliString& p);

 private:
  int n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Computational basis state for a bitstring of '0'/'1' characters.
StateVector basis_state(int n_qubits, std::string_view bitstring);

/// Amplitude index of a bitstring under the StateVector convention.
Eigen::Index basis_index(std::string_view bitstring);

/// Returns exp(-i * angle / 2 * P)|state>.
StateVector apply_pauli_rotation(StateVector state, const PauliString& p,
                                 double angle);

/// <psi|P|psi> for a single Hermitian Pauli string; real.
double expectation(const StateVector& state, const PauliString& p);

/// <psi|P|phi>.
Complex matrix_element(const StateVector& psi, const PauliString& p,
                       const StateVector& phi);

/// <psi|A|psi> for a Hermitian polynomial. Throws on non-Hermitian input or
/// when the imaginary residue exceeds 1e-10.
double expectation(const StateVector& state, const PauliPolynomial& a);

/**
 * Pauli polynomial compiled for repeated expectation values.
 *
 * Terms sharing an X mask act as the same bit flip b -> b ^ x, so each group
 * folds into one table f_x(b) = sum_t c_t i^{#Y_t} (-1)^{|b & z_t|} and
 * <psi|A|psi> = sum_x sum_b conj(psi[b ^ x]) f_x(b) psi[b]. Falls back to
 * term-by-term traversal when the tables would exceed `max_table_entries`.
 */
class CompiledPauliSum {
 public:
  static constexpr std::size_t kDefaultTableBudget = std::size_t{1} << 22;

  explicit CompiledPauliSum(const PauliPolynomial& a,
                            std::size_t max_table_entries = kDefaultTableBudget);

  const PauliPolynomial& polynomial() const { return poly_; }
  bool tabulated() const { return !groups_.empty() || poly_.empty(); }
  std::size_t n_groups() const { return groups_.size(); }

  /// <psi|A|psi>; same contract as expectation(state, polynomial).
  double expectation(const StateVector& state) const;

 private:
  struct Group {
    std::uint64_t x_mask;
    Eigen::VectorXcd table;
  };
  PauliPolynomial poly_;
  std::vector<Group> groups_;
};

/// Expected Hamming weight, i.e. <sum_q (1 - Z_q) / 2>.
double particle_number(const StateVector& state);

}  // namespace vvqe
