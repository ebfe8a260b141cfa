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

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vvqe {

using Complex = std::complex<double>;

/// Thrown when two operands act on different numbers of qubits.
class QubitMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Single-qubit Pauli label.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Phase i^k carried by a Pauli product, k in {0, 1, 2, 3}.
struct Phase {
  std::uint8_t power = 0;

  Complex value() const;
  friend bool operator==(Phase, Phase) = default;
};

/**
 * Tensor product of single-qubit Paulis over at most 64 qubits.
 *
 * Stored symplectically: qubit q carries X^x Z^z with (x, z) taken from bit q
 * of the two masks, and Y is the Hermitian combination i*X*Z. A stored string
 * is always Hermitian with phase +1; phases only appear on products.
 */
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses a dense label such as "XIZY" (character q is qubit q).
  static PauliString from_label(std::string_view label);
  /// Builds a string from sparse (qubit, op) pairs; repeated qubits throw.
  static PauliString from_ops(int n_qubits,
                              const std::vector<std::pair<int, Pauli>>& ops);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  Pauli op(int qubit) const;
  bool is_identity() const { return (x_ | z_) == 0; }
  int weight() const;
  /// Number of Y factors; sets the i^{#Y} relating the string to X^x Z^z.
  int y_count() const;

  bool commutes_with(const PauliString& other) const;

  /// Dense label, qubit 0 first.
  std::string label() const;
  /// Sparse form "X0 Z1 Y3"; empty for the identity.
  std::string sparse_label() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.n_qubits_ <=> b.n_qubits_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

 private:
  int n_qubits_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Operator product a*b == phase * string.
std::pair<PauliString, Phase> pauli_mul(const PauliString& a,
                                        const PauliString& b);

/// Hermiticity class of a canonical polynomial, read off its coefficients.
enum class Hermiticity { kHermitian, kAntiHermitian, kGeneral };

/**
 * Linear combination of Pauli strings with complex coefficients.
 *
 * Canonical form: no duplicate strings, terms sorted by string, coefficients
 * with magnitude below the pruning floor removed. A polynomial whose
 * coefficients are all real is Hermitian and its imaginary residue is
 * zeroed; one with purely imaginary coefficients is anti-Hermitian.
 */
class PauliPolynomial {
 public:
  static constexpr double kDefaultFloor = 1e-12;
  using Term = std::pair<PauliString, Complex>;

  explicit PauliPolynomial(int n_qubits);
  PauliPolynomial(int n_qubits, const std::vector<Term>& terms,
                  double floor = kDefaultFloor);

  static PauliPolynomial identity(int n_qubits, double coeff = 1.0);
  static PauliPolynomial single(const PauliString& s, Complex coeff);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Hermiticity hermiticity() const { return kind_; }
  bool is_hermitian() const { return kind_ == Hermiticity::kHermitian; }
  bool is_anti_hermitian() const {
    return kind_ == Hermiticity::kAntiHermitian;
  }

  /// Coefficient of `s`, zero when absent.
  Complex coefficient(const PauliString& s) const;
  /// Coefficient on the all-I string.
  double identity_coefficient() const;

  /// Re-canonicalizes with a different pruning floor.
  PauliPolynomial canonical(double floor = kDefaultFloor) const;
  PauliPolynomial adjoint() const;

  PauliPolynomial& operator+=(const PauliPolynomial& other);
  PauliPolynomial& operator-=(const PauliPolynomial& other);
  PauliPolynomial& operator*=(Complex scale);

  friend bool operator==(const PauliPolynomial& a, const PauliPolynomial& b) {
    return a.n_qubits_ == b.n_qubits_ && a.terms_ == b.terms_;
  }

 private:
  void canonicalize(double floor);

  int n_qubits_;
  std::vector<Term> terms_;
  Hermiticity kind_ = Hermiticity::kHermitian;
};

PauliPolynomial operator+(PauliPolynomial a, const PauliPolynomial& b);
PauliPolynomial operator-(PauliPolynomial a, const PauliPolynomial& b);
PauliPolynomial operator*(Complex s, PauliPolynomial a);

/// Operator product with like terms merged.
PauliPolynomial poly_mul(const PauliPolynomial& a, const PauliPolynomial& b);

/// Sum of |c_i|^2 over stored terms.
double frobenius_norm_sq(const PauliPolynomial& a);

/// Tr[A^dagger A] = 2^n * frobenius_norm_sq(A), by trace orthogonality of
/// Pauli strings.
double trace_of_square(const PauliPolynomial& a);

}  // namespace vvqe
