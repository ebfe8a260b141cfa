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

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "vvqe/pauli.hpp"

namespace vvqe {

/// Malformed Hamiltonian file; line() is 1-based, 0 for whole-file errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/**
 * Text Hamiltonian fixture.
 *
 *   # n_qubits: 4
 *   # bond_length_angstrom: 0.8
 *   -0.0971,
 *   0.1712, Z0
 *   0.0453, X0 Y1 Y2 X3
 *
 * Lines starting with '#' are comments; "# key: value" comments are kept as
 * metadata and "n_qubits" is required before the first term. A term line is
 * a real coefficient, a comma, then space separated tokens P<q> with P in
 * {X, Y, Z}. An empty token list is the identity.
 */
struct HamiltonianFile {
  PauliPolynomial polynomial{1};
  std::map<std::string, std::string> metadata;
  /// Term lines read from the file.
  std::size_t n_terms = 0;
};

HamiltonianFile parse_hamiltonian(std::istream& in,
                                  const std::string& source = "<stream>");
HamiltonianFile load_hamiltonian(const std::string& path);

/// Sparse spec such as "X0 Z1"; empty for the identity.
std::string pauli_spec(const PauliString& s);
PauliString parse_pauli_spec(int n_qubits, const std::string& spec);

/// Writes the text format with round-trip precision. Metadata keys other
/// than n_qubits are emitted in map order.
void write_hamiltonian(std::ostream& out, const PauliPolynomial& h,
                       const std::map<std::string, std::string>& metadata = {});

/// Writes `contents` to a sibling temporary file, then renames it over
/// `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace vvqe
