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

#include "vvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace vvqe {

namespace {

std::uint64_t qubit_mask(int n_qubits) {
  return n_qubits == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << n_qubits) - 1;
}

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 64], got " +
                                std::to_string(n_qubits));
  }
}

void require_same_qubits(int a, int b, const char* where) {
  if (a != b) {
    throw QubitMismatch(std::string(where) + ": qubit count mismatch (" +
                        std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Complex Phase::value() const {
  switch (power & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  check_qubits(n_qubits);
  if (((x_ | z_) & ~qubit_mask(n_qubits)) != 0) {
    throw std::out_of_range("Pauli mask has bits beyond qubit count");
  }
}

PauliString PauliString::from_label(std::string_view label) {
  PauliString s(static_cast<int>(label.size()));
  for (std::size_t q = 0; q < label.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (label[q]) {
      case 'I': break;
      case 'X': s.x_ |= bit; break;
      case 'Y': s.x_ |= bit; s.z_ |= bit; break;
      case 'Z': s.z_ |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli label character '" +
                                    std::string(1, label[q]) + "'");
    }
  }
  return s;
}

PauliString PauliString::from_ops(
    int n_qubits, const std::vector<std::pair<int, Pauli>>& ops) {
  PauliString s(n_qubits);
  std::uint64_t seen = 0;
  for (auto [q, p] : ops) {
    if (q < 0 || q >= n_qubits) {
      throw std::out_of_range("qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n_qubits) +
                              " qubits");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " repeated in Pauli string");
    }
    seen |= bit;
    if (p == Pauli::X || p == Pauli::Y) s.x_ |= bit;
    if (p == Pauli::Z || p == Pauli::Y) s.z_ |= bit;
  }
  return s;
}

Pauli PauliString::op(int qubit) const {
  const bool x = (x_ >> qubit) & 1;
  const bool z = (z_ >> qubit) & 1;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::y_count() const { return std::popcount(x_ & z_); }

bool PauliString::commutes_with(const PauliString& other) const {
  require_same_qubits(n_qubits_, other.n_qubits_, "commutes_with");
  const int symplectic =
      std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (symplectic & 1) == 0;
}

std::string PauliString::label() const {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  std::string out(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) {
    out[static_cast<std::size_t>(q)] = kChars[static_cast<int>(op(q))];
  }
  return out;
}

std::string PauliString::sparse_label() const {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  std::string out;
  for (int q = 0; q < n_qubits_; ++q) {
    const Pauli p = op(q);
    if (p == Pauli::I) continue;
    if (!out.empty()) out += ' ';
    out += kChars[static_cast<int>(p)];
    out += std::to_string(q);
  }
  return out;
}

std::pair<PauliString, Phase> pauli_mul(const PauliString& a,
                                        const PauliString& b) {
  require_same_qubits(a.n_qubits(), b.n_qubits(), "pauli_mul");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // a = i^{ya} X^xa Z^za; moving Z^za past X^xb costs (-1)^{|za & xb|}.
  const int power = a.y_count() + b.y_count() +
                    2 * std::popcount(a.z_mask() & b.x_mask()) -
                    std::popcount(x & z);
  return {PauliString(a.n_qubits(), x, z),
          Phase{static_cast<std::uint8_t>(((power % 4) + 4) % 4)}};
}

PauliPolynomial::PauliPolynomial(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliPolynomial::PauliPolynomial(int n_qubits, const std::vector<Term>& terms,
                                 double floor)
    : n_qubits_(n_qubits), terms_(terms) {
  check_qubits(n_qubits);
  for (const auto& [s, c] : terms_) {
    require_same_qubits(n_qubits_, s.n_qubits(), "PauliPolynomial");
  }
  canonicalize(floor);
}

PauliPolynomial PauliPolynomial::identity(int n_qubits, double coeff) {
  return PauliPolynomial(n_qubits, {{PauliString(n_qubits), coeff}});
}

PauliPolynomial PauliPolynomial::single(const PauliString& s, Complex coeff) {
  return PauliPolynomial(s.n_qubits(), {{s, coeff}});
}

Complex PauliPolynomial::coefficient(const PauliString& s) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), s,
      [](const Term& t, const PauliString& key) { return t.first < key; });
  if (it != terms_.end() && it->first == s) return it->second;
  return {0.0, 0.0};
}

double PauliPolynomial::identity_coefficient() const {
  return coefficient(PauliString(n_qubits_)).real();
}

PauliPolynomial PauliPolynomial::canonical(double floor) const {
  PauliPolynomial out(*this);
  out.canonicalize(floor);
  return out;
}

PauliPolynomial PauliPolynomial::adjoint() const {
  PauliPolynomial out(*this);
  for (auto& [s, c] : out.terms_) c = std::conj(c);
  out.canonicalize(kDefaultFloor);
  return out;
}

void PauliPolynomial::canonicalize(double floor) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [floor](const Term& t) {
    return std::abs(t.second) < floor;
  });

  bool real = true;
  bool imaginary = true;
  for (const auto& [s, c] : merged) {
    real = real && std::abs(c.imag()) < floor;
    imaginary = imaginary && std::abs(c.real()) < floor;
  }
  if (real) {
    kind_ = Hermiticity::kHermitian;
    for (auto& [s, c] : merged) c = {c.real(), 0.0};
  } else if (imaginary) {
    kind_ = Hermiticity::kAntiHermitian;
    for (auto& [s, c] : merged) c = {0.0, c.imag()};
  } else {
    kind_ = Hermiticity::kGeneral;
  }
  terms_ = std::move(merged);
}

PauliPolynomial& PauliPolynomial::operator+=(const PauliPolynomial& other) {
  require_same_qubits(n_qubits_, other.n_qubits_, "operator+");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize(kDefaultFloor);
  return *this;
}

PauliPolynomial& PauliPolynomial::operator-=(const PauliPolynomial& other) {
  return *this += Complex{-1.0, 0.0} * other;
}

PauliPolynomial& PauliPolynomial::operator*=(Complex scale) {
  for (auto& [s, c] : terms_) c *= scale;
  canonicalize(kDefaultFloor);
  return *this;
}

PauliPolynomial operator+(PauliPolynomial a, const PauliPolynomial& b) {
  return a += b;
}

PauliPolynomial operator-(PauliPolynomial a, const PauliPolynomial& b) {
  return a -= b;
}

PauliPolynomial operator*(Complex s, PauliPolynomial a) { return a *= s; }

PauliPolynomial poly_mul(const PauliPolynomial& a, const PauliPolynomial& b) {
  require_same_qubits(a.n_qubits(), b.n_qubits(), "poly_mul");
  std::map<PauliString, Complex> acc;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      auto [s, phase] = pauli_mul(sa, sb);
      acc[s] += phase.value() * ca * cb;
    }
  }
  std::vector<PauliPolynomial::Term> terms(acc.begin(), acc.end());
  return PauliPolynomial(a.n_qubits(), terms);
}

double frobenius_norm_sq(const PauliPolynomial& a) {
  double total = 0.0;
  for (const auto& [s, c] : a.terms()) total += std::norm(c);
  return total;
}

double trace_of_square(const PauliPolynomial& a) {
  return std::ldexp(frobenius_norm_sq(a), a.n_qubits());
}

}  // namespace vvqe
