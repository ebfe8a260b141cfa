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

#include "vvqe/ucc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace vvqe {

namespace {

void check_orbitals(std::span<const int> orbitals, int n_qubits) {
  std::set<int> seen;
  for (int o : orbitals) {
    if (o < 0 || o >= n_qubits) {
      throw std::out_of_range("orbital index " + std::to_string(o) +
                              " out of range for " + std::to_string(n_qubits) +
                              " qubits");
    }
    if (!seen.insert(o).second) {
      throw std::invalid_argument("excitation repeats orbital " +
                                  std::to_string(o));
    }
  }
}

PauliPolynomial product(std::initializer_list<PauliPolynomial> factors) {
  auto it = factors.begin();
  PauliPolynomial out = *it++;
  for (; it != factors.end(); ++it) out = poly_mul(out, *it);
  return out;
}

PauliPolynomial antihermitian_part(const PauliPolynomial& op) {
  return op - op.adjoint();
}

void add_generator(AnsatzCircuit& circuit, const PauliPolynomial& generator,
                   int param_index, double scale) {
  if (!generator.is_anti_hermitian()) {
    throw std::logic_error("excitation generator is not anti-Hermitian");
  }
  for (const auto& [s, c] : generator.terms()) {
    circuit.add_gate({s, c.imag(), param_index}, scale);
  }
}

}  // namespace

PauliPolynomial jw_ladder(int orbital, bool creation, int n_qubits) {
  if (orbital < 0 || orbital >= n_qubits) {
    throw std::out_of_range("orbital index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << orbital;
  const std::uint64_t parity = bit - 1;
  // c^dagger = (X - iY)/2, c = (X + iY)/2 on the orbital's qubit.
  const PauliString x(n_qubits, bit, parity);
  const PauliString y(n_qubits, bit, parity | bit);
  const double sign = creation ? -1.0 : 1.0;
  return PauliPolynomial(n_qubits, {{x, 0.5}, {y, Complex{0.0, 0.5 * sign}}});
}

PauliPolynomial jw_single(int p, int q, int n_qubits) {
  check_orbitals(std::array{p, q}, n_qubits);
  return antihermitian_part(
      poly_mul(jw_ladder(p, true, n_qubits), jw_ladder(q, false, n_qubits)));
}

PauliPolynomial jw_double(int p, int q, int r, int s, int n_qubits) {
  check_orbitals(std::array{p, q, r, s}, n_qubits);
  return antihermitian_part(product({jw_ladder(p, true, n_qubits),
                                     jw_ladder(q, true, n_qubits),
                                     jw_ladder(r, false, n_qubits),
                                     jw_ladder(s, false, n_qubits)}));
}

AnsatzCircuit::AnsatzCircuit(int n_qubits, int n_params)
    : n_qubits_(n_qubits), n_params_(n_params) {
  if (n_params < 0) throw std::invalid_argument("negative parameter count");
}

void AnsatzCircuit::add_gate(RotationGate gate, double scale) {
  if (gate.pauli.n_qubits() != n_qubits_) {
    throw QubitMismatch("gate qubit count does not match circuit");
  }
  if (gate.param_index < 0 || gate.param_index >= n_params_) {
    throw std::out_of_range("gate parameter index out of range");
  }
  gates_.push_back(std::move(gate));
  scales_.push_back(scale);
}

double AnsatzCircuit::angle(
    std::size_t g, const Eigen::Ref<const Eigen::VectorXd>& params) const {
  const auto& gate = gates_[g];
  return -2.0 * gate.coefficient * scales_[g] * params[gate.param_index];
}

std::vector<std::size_t> AnsatzCircuit::first_gate_per_param() const {
  std::vector<std::size_t> first(static_cast<std::size_t>(n_params_),
                                 gates_.size());
  for (std::size_t g = gates_.size(); g-- > 0;) {
    first[static_cast<std::size_t>(gates_[g].param_index)] = g;
  }
  return first;
}

AnsatzCircuit build_ucc(std::span<const SingleExcitation> singles,
                        std::span<const DoubleExcitation> doubles,
                        int n_qubits, const UccOptions& options) {
  if (options.trotter_steps < 1) {
    throw std::invalid_argument("trotter_steps must be at least 1");
  }
  const int per_step = static_cast<int>(singles.size() + doubles.size());
  const int k = options.trotter_steps;
  const int n_params = options.independent_steps ? per_step * k : per_step;
  const double scale = options.independent_steps ? 1.0 : 1.0 / k;

  std::vector<PauliPolynomial> generators;
  generators.reserve(static_cast<std::size_t>(per_step));
  for (const auto& e : singles) {
    generators.push_back(jw_single(e[0], e[1], n_qubits));
  }
  for (const auto& e : doubles) {
    generators.push_back(jw_double(e[0], e[1], e[2], e[3], n_qubits));
  }

  AnsatzCircuit circuit(n_qubits, n_params);
  circuit.set_trotter_steps(k);
  for (int step = 0; step < k; ++step) {
    const int offset = options.independent_steps ? step * per_step : 0;
    for (int t = 0; t < per_step; ++t) {
      add_generator(circuit, generators[static_cast<std::size_t>(t)],
                    offset + t, scale);
    }
  }
  return circuit;
}

StateVector prepare_state(const AnsatzCircuit& circuit,
                          const Eigen::Ref<const Eigen::VectorXd>& params,
                          const StateVector& reference) {
  if (params.size() != circuit.n_params()) {
    throw std::invalid_argument("parameter vector has length " +
                                std::to_string(params.size()) + ", expected " +
                                std::to_string(circuit.n_params()));
  }
  if (reference.n_qubits() != circuit.n_qubits()) {
    throw QubitMismatch("reference state does not match circuit");
  }
  StateVector state = reference;
  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    state.apply_pauli_rotation(gates[g].pauli, circuit.angle(g, params));
  }
  return state;
}

StateVector prepare_state_from(const AnsatzCircuit& circuit,
                               const Eigen::Ref<const Eigen::VectorXd>& params,
                               StateVector state, std::size_t first_gate) {
  const auto& gates = circuit.gates();
  for (std::size_t g = first_gate; g < gates.size(); ++g) {
    state.apply_pauli_rotation(gates[g].pauli, circuit.angle(g, params));
  }
  return state;
}

ProbeCache::ProbeCache(const AnsatzCircuit& circuit,
                       const Eigen::Ref<const Eigen::VectorXd>& params,
                       const StateVector& reference)
    : circuit_(circuit), first_gate_(circuit.first_gate_per_param()) {
  if (params.size() != circuit.n_params()) {
    throw std::invalid_argument("parameter vector length mismatch");
  }
  if (reference.n_qubits() != circuit.n_qubits()) {
    throw QubitMismatch("reference state does not match circuit");
  }
  prefix_.reserve(first_gate_.size());
  StateVector state = reference;
  std::size_t applied = 0;
  std::vector<std::size_t> order(first_gate_.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return first_gate_[a] < first_gate_[b];
  });
  prefix_.assign(first_gate_.size(), reference);
  const auto& gates = circuit.gates();
  for (std::size_t j : order) {
    for (; applied < first_gate_[j] && applied < gates.size(); ++applied) {
      state.apply_pauli_rotation(gates[applied].pauli,
                                 circuit.angle(applied, params));
    }
    prefix_[j] = state;
  }
}

StateVector ProbeCache::probe(const Eigen::Ref<const Eigen::VectorXd>& shifted,
                              Eigen::Index j) const {
  const auto idx = static_cast<std::size_t>(j);
  return prepare_state_from(circuit_, shifted, prefix_[idx], first_gate_[idx]);
}

std::vector<SingleExcitation> all_pair_singles(int n_qubits) {
  std::vector<SingleExcitation> out;
  for (int p = 0; p < n_qubits; ++p) {
    for (int q = p + 1; q < n_qubits; ++q) out.push_back({p, q});
  }
  return out;
}

std::vector<DoubleExcitation> occupied_to_virtual_doubles(
    std::string_view reference) {
  std::vector<int> occupied;
  std::vector<int> virtuals;
  for (std::size_t q = 0; q < reference.size(); ++q) {
    if (reference[q] == '1') {
      occupied.push_back(static_cast<int>(q));
    } else if (reference[q] == '0') {
      virtuals.push_back(static_cast<int>(q));
    } else {
      throw std::invalid_argument("reference bitstring must be 0/1");
    }
  }
  std::vector<DoubleExcitation> out;
  for (std::size_t i = 0; i < occupied.size(); ++i) {
    for (std::size_t j = i + 1; j < occupied.size(); ++j) {
      for (std::size_t a = 0; a < virtuals.size(); ++a) {
        for (std::size_t b = a + 1; b < virtuals.size(); ++b) {
          out.push_back({virtuals[a], virtuals[b], occupied[i], occupied[j]});
        }
      }
    }
  }
  return out;
}

std::vector<DoubleExcitation> all_pairing_doubles(int n_qubits) {
  std::vector<DoubleExcitation> out;
  for (int a = 0; a < n_qubits; ++a) {
    for (int b = a + 1; b < n_qubits; ++b) {
      for (int c = b + 1; c < n_qubits; ++c) {
        for (int d = c + 1; d < n_qubits; ++d) {
          out.push_back({a, b, c, d});
          out.push_back({a, c, b, d});
          out.push_back({a, d, b, c});
        }
      }
    }
  }
  return out;
}

}  // namespace vvqe
