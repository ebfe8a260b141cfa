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
#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "vvqe/pauli.hpp"
#include "vvqe/state.hpp"

namespace vvqe {

using SingleExcitation = std::array<int, 2>;
using DoubleExcitation = std::array<int, 4>;

/// Jordan-Wigner image of c_j (or c_j^dagger): Z on qubits below j.
PauliPolynomial jw_ladder(int orbital, bool creation, int n_qubits);

/// Unit-amplitude generator c_p^dagger c_q - c_q^dagger c_p.
PauliPolynomial jw_single(int p, int q, int n_qubits);

/// Unit-amplitude generator T - T^dagger with T = c_p^dagger c_q^dagger c_r c_s,
/// i.e. T - c_s^dagger c_r^dagger c_q c_p.
PauliPolynomial jw_double(int p, int q, int r, int s, int n_qubits);

struct RotationGate {
  PauliString pauli;
  /// Real alpha with the generator term i * alpha * P.
  double coefficient;
  int param_index;
};

/**
 * Ordered product of parameterized Pauli rotations.
 *
 * Gate g acts as exp(theta[g.param_index] * scale * i * g.coefficient * P),
 * which is the rotation exp(-i * angle / 2 * P) at
 * angle = -2 * g.coefficient * scale * theta[g.param_index]. The scale is
 * 1 / trotter_steps when parameters are shared across Trotter steps, else 1.
 */
class AnsatzCircuit {
 public:
  AnsatzCircuit(int n_qubits, int n_params);

  int n_qubits() const { return n_qubits_; }
  int n_params() const { return n_params_; }
  int trotter_steps() const { return trotter_steps_; }
  const std::vector<RotationGate>& gates() const { return gates_; }

  void add_gate(RotationGate gate, double scale = 1.0);
  void set_trotter_steps(int k) { trotter_steps_ = k; }
  /// Index of the first gate reading each parameter; gates().size() for an
  /// unused parameter.
  std::vector<std::size_t> first_gate_per_param() const;
  /// Rotation angle of gate `g` at parameters `params`.
  double angle(std::size_t g, const Eigen::Ref<const Eigen::VectorXd>& params) const;

 private:
  int n_qubits_;
  int n_params_;
  int trotter_steps_ = 1;
  std::vector<RotationGate> gates_;
  std::vector<double> scales_;
};

struct UccOptions {
  int trotter_steps = 1;
  /// Give every Trotter step its own copy of the parameters instead of
  /// sharing theta / k across steps.
  bool independent_steps = false;
};

/// Trotterized UCC circuit: per step, singles in list order then doubles.
AnsatzCircuit build_ucc(std::span<const SingleExcitation> singles,
                        std::span<const DoubleExcitation> doubles,
                        int n_qubits, const UccOptions& options = {});

/// U(theta)|reference>.
StateVector prepare_state(const AnsatzCircuit& circuit,
                          const Eigen::Ref<const Eigen::VectorXd>& params,
                          const StateVector& reference);

/// Applies gates [first_gate, end) to `state`.
StateVector prepare_state_from(const AnsatzCircuit& circuit,
                               const Eigen::Ref<const Eigen::VectorXd>& params,
                               StateVector state, std::size_t first_gate);

/**
 * Finite-difference probe helper: caches the state in front of each
 * parameter's first gate so a probe of parameter j replays only the tail of
 * the circuit.
 */
class ProbeCache {
 public:
  ProbeCache(const AnsatzCircuit& circuit,
             const Eigen::Ref<const Eigen::VectorXd>& params,
             const StateVector& reference);

  /// U(params')|reference> for params' differing from the cached point only
  /// in component `j`.
  StateVector probe(const Eigen::Ref<const Eigen::VectorXd>& shifted,
                    Eigen::Index j) const;

 private:
  const AnsatzCircuit& circuit_;
  std::vector<std::size_t> first_gate_;
  std::vector<StateVector> prefix_;
};

/// All pairs p < q.
std::vector<SingleExcitation> all_pair_singles(int n_qubits);

/// (p, q, r, s) for every occupied pair (p < q) and virtual pair (r < s),
/// annihilating the occupied pair and creating the virtual one.
std::vector<DoubleExcitation> occupied_to_virtual_doubles(
    std::string_view reference);

/// The three pairings of every 4-subset of orbitals:
/// (a,b|c,d), (a,c|b,d), (a,d|b,c) with a < b < c < d.
std::vector<DoubleExcitation> all_pairing_doubles(int n_qubits);

}  // namespace vvqe
