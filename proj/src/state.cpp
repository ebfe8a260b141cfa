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

#include "vvqe/state.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <string>

namespace vvqe {

namespace {

bool z_parity(std::uint64_t bits) { return (std::popcount(bits) & 1) != 0; }

// Sign of Z^z on basis index b combined with the i^{#Y} factor:
// P|b> = phase(b) |b ^ x>.
Complex basis_phase(std::uint64_t b, std::uint64_t z, int y_count) {
  const int power = y_count + 2 * (std::popcount(b & z) & 1);
  return Phase{static_cast<std::uint8_t>(power & 3)}.value();
}

void require_same_qubits(int a, int b, const char* where) {
  if (a != b) {
    throw QubitMismatch(std::string(where) + ": qubit count mismatch (" +
                        std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("state qubit count must be in [1, 30]");
  }
  amplitudes_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : StateVector(n_qubits) {
  if (amplitudes.size() != amplitudes_.size()) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  amplitudes_ = std::move(amplitudes);
}

Complex StateVector::inner(const StateVector& other) const {
  require_same_qubits(n_qubits_, other.n_qubits_, "inner");
  return amplitudes_.dot(other.amplitudes_);
}

void StateVector::apply_pauli(const PauliString& p) {
  require_same_qubits(n_qubits_, p.n_qubits(), "apply_pauli");
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const int ny = p.y_count();
  const auto dim = static_cast<std::uint64_t>(amplitudes_.size());
  if (x == 0) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      amplitudes_[b] *= basis_phase(b, z, ny);
    }
    return;
  }
  for (std::uint64_t b = 0; b < dim; ++b) {
    const std::uint64_t f = b ^ x;
    if (f < b) continue;
    const Complex a0 = amplitudes_[b];
    const Complex a1 = amplitudes_[f];
    amplitudes_[f] = basis_phase(b, z, ny) * a0;
    amplitudes_[b] = basis_phase(f, z, ny) * a1;
  }
}

void StateVector::apply_pauli_rotation(const PauliString& p, double angle) {
  require_same_qubits(n_qubits_, p.n_qubits(), "apply_pauli_rotation");
  const double c = std::cos(angle / 2);
  // -i sin(angle/2) * i^{#Y}; the remaining basis phase is a Z-parity sign.
  const Complex base = Complex{0.0, -std::sin(angle / 2)} *
                       Phase{static_cast<std::uint8_t>(p.y_count() & 3)}.value();
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const auto dim = static_cast<std::uint64_t>(amplitudes_.size());
  Complex* amps = amplitudes_.data();
  if (x == 0) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      amps[b] *= z_parity(b & z) ? c - base : c + base;
    }
    return;
  }
  // Visit each pair (b, b ^ x) once: b has the top bit of x clear.
  const int top = 63 - std::countl_zero(x);
  const std::uint64_t low = (std::uint64_t{1} << top) - 1;
  for (std::uint64_t i = 0; i < dim / 2; ++i) {
    const std::uint64_t b = ((i & ~low) << 1) | (i & low);
    const std::uint64_t f = b ^ x;
    const Complex a0 = amps[b];
    const Complex a1 = amps[f];
    const Complex to_b = z_parity(f & z) ? -base : base;
    const Complex to_f = z_parity(b & z) ? -base : base;
    amps[b] = c * a0 + to_b * a1;
    amps[f] = c * a1 + to_f * a0;
  }
}

Eigen::Index basis_index(std::string_view bitstring) {
  Eigen::Index index = 0;
  for (std::size_t q = 0; q < bitstring.size(); ++q) {
    if (bitstring[q] == '1') {
      index |= Eigen::Index{1} << q;
    } else if (bitstring[q] != '0') {
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
    }
  }
  return index;
}

StateVector basis_state(int n_qubits, std::string_view bitstring) {
  if (static_cast<int>(bitstring.size()) != n_qubits) {
    throw std::invalid_argument("bitstring length " +
                                std::to_string(bitstring.size()) +
                                " does not match qubit count " +
                                std::to_string(n_qubits));
  }
  StateVector state(n_qubits);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(state.dimension());
  amps[basis_index(bitstring)] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector apply_pauli_rotation(StateVector state, const PauliString& p,
                                 double angle) {
  state.apply_pauli_rotation(p, angle);
  return state;
}

Complex matrix_element(const StateVector& psi, const PauliString& p,
                       const StateVector& phi) {
  require_same_qubits(psi.n_qubits(), p.n_qubits(), "matrix_element");
  require_same_qubits(phi.n_qubits(), p.n_qubits(), "matrix_element");
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const Complex* bra = psi.amplitudes().data();
  const Complex* ket = phi.amplitudes().data();
  const auto dim = static_cast<std::uint64_t>(phi.dimension());
  Complex even{0.0, 0.0};
  Complex odd{0.0, 0.0};
  for (std::uint64_t b = 0; b < dim; ++b) {
    const Complex term = std::conj(bra[b ^ x]) * ket[b];
    if (z_parity(b & z)) {
      odd += term;
    } else {
      even += term;
    }
  }
  return Phase{static_cast<std::uint8_t>(p.y_count() & 3)}.value() *
         (even - odd);
}

double expectation(const StateVector& state, const PauliString& p) {
  return matrix_element(state, p, state).real();
}

double expectation(const StateVector& state, const PauliPolynomial& a) {
  if (!a.is_hermitian()) {
    throw std::invalid_argument("expectation requires a Hermitian polynomial");
  }
  require_same_qubits(state.n_qubits(), a.n_qubits(), "expectation");
  Complex total{0.0, 0.0};
  for (const auto& [s, c] : a.terms()) {
    total += c * matrix_element(state, s, state);
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw std::runtime_error("expectation has imaginary residue " +
                             std::to_string(total.imag()));
  }
  return total.real();
}

CompiledPauliSum::CompiledPauliSum(const PauliPolynomial& a,
                                   std::size_t max_table_entries)
    : poly_(a) {
  if (!poly_.is_hermitian()) {
    throw std::invalid_argument("expectation requires a Hermitian polynomial");
  }
  if (poly_.n_qubits() > StateVector::kMaxQubits) return;
  const auto dim = std::uint64_t{1} << poly_.n_qubits();
  std::map<std::uint64_t, std::vector<const PauliPolynomial::Term*>> by_x;
  for (const auto& term : poly_.terms()) by_x[term.first.x_mask()].push_back(&term);
  if (by_x.size() * dim > max_table_entries) return;
  groups_.reserve(by_x.size());
  for (const auto& [x, members] : by_x) {
    Group g{x, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))};
    for (const auto* term : members) {
      const std::uint64_t z = term->first.z_mask();
      const int ny = term->first.y_count();
      for (std::uint64_t b = 0; b < dim; ++b) {
        g.table[static_cast<Eigen::Index>(b)] +=
            term->second * basis_phase(b, z, ny);
      }
    }
    groups_.push_back(std::move(g));
  }
}

double CompiledPauliSum::expectation(const StateVector& state) const {
  if (!tabulated()) return vvqe::expectation(state, poly_);
  require_same_qubits(state.n_qubits(), poly_.n_qubits(), "expectation");
  const auto& amps = state.amplitudes();
  const auto dim = static_cast<std::uint64_t>(amps.size());
  Complex total{0.0, 0.0};
  for (const auto& g : groups_) {
    Complex partial{0.0, 0.0};
    for (std::uint64_t b = 0; b < dim; ++b) {
      partial += std::conj(amps[static_cast<Eigen::Index>(b ^ g.x_mask)]) *
                 g.table[static_cast<Eigen::Index>(b)] *
                 amps[static_cast<Eigen::Index>(b)];
    }
    total += partial;
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw std::runtime_error("expectation has imaginary residue " +
                             std::to_string(total.imag()));
  }
  return total.real();
}

double particle_number(const StateVector& state) {
  double total = 0.0;
  const auto& amps = state.amplitudes();
  for (Eigen::Index b = 0; b < amps.size(); ++b) {
    total += std::norm(amps[b]) *
             std::popcount(static_cast<std::uint64_t>(b));
  }
  return total;
}

}  // namespace vvqe
