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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "vvqe/io.hpp"

namespace vvqe {
namespace {

HamiltonianFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_hamiltonian(in, "test");
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseHamiltonian, SingleTerm) {
  const auto f = parse("# n_qubits: 1\n1.0, Z0\n");
  ASSERT_EQ(f.polynomial.size(), 1u);
  EXPECT_EQ(f.polynomial.n_qubits(), 1);
  EXPECT_EQ(f.polynomial.coefficient(PauliString::from_label("Z")), Complex(1.0));
  EXPECT_EQ(f.n_terms, 1u);
}

TEST(ParseHamiltonian, IdentityMetadataAndComments) {
  const auto f = parse(
      "# a comment\n# n_qubits: 3\n# bond_length_angstrom: 0.8\n\n"
      "-0.5,\n0.25, X0 Y2\n# trailing\n");
  EXPECT_EQ(f.metadata.at("bond_length_angstrom"), "0.8");
  EXPECT_DOUBLE_EQ(f.polynomial.identity_coefficient(), -0.5);
  EXPECT_EQ(f.polynomial.coefficient(PauliString::from_label("XIY")), Complex(0.25));
  EXPECT_EQ(f.n_terms, 2u);
}

TEST(ParseHamiltonian, MetadataNeedsKeyColonSpace) {
  const auto f = parse(
      "# see http://example.org/x\n#   http://example.org/y\n# n_qubits: 1\n"
      "# empty:\n1.0, Z0\n");
  EXPECT_EQ(f.metadata.count("http"), 0u);
  EXPECT_EQ(f.metadata.at("empty"), "");
  EXPECT_EQ(f.metadata.size(), 2u);
}

TEST(ParseHamiltonian, Fixtures) {
  const auto h2 = load_hamiltonian(testing::fixture("h2_sto3g_1.0.ham"));
  EXPECT_EQ(h2.polynomial.n_qubits(), 4);
  EXPECT_EQ(h2.n_terms, 15u);
  EXPECT_TRUE(h2.polynomial.is_hermitian());
  const auto h4 = load_hamiltonian(testing::fixture("h4_sto6g_trapezoid.ham"));
  EXPECT_EQ(h4.polynomial.n_qubits(), 6);
  EXPECT_GT(h4.polynomial.size(), 100u);
  for (const char* bond : {"0.5", "0.8", "1.5", "2.0"}) {
    EXPECT_EQ(load_hamiltonian(testing::fixture(std::string("h2_sto3g_") + bond +
                                                ".ham"))
                  .polynomial.n_qubits(),
              4);
  }
}

TEST(ParseHamiltonian, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("1.0, Z0\n"), 1);
  EXPECT_EQ(error_line("# n_qubits: 2\n1.0, Z0\n1.0 Z1\n"), 3);
  EXPECT_EQ(error_line("# n_qubits: 2\n\nabc, Z0\n"), 3);
  EXPECT_EQ(error_line("# n_qubits: 2\n1.0, Z2\n"), 2);
  EXPECT_EQ(error_line("# n_qubits: 2\n1.0, Q0\n"), 2);
  EXPECT_EQ(error_line("# n_qubits: 2\n1.0, Z0 X0\n"), 2);
  EXPECT_EQ(error_line("# n_qubits: 2\n0.5j, Z0\n"), 2);
  EXPECT_EQ(error_line("# n_qubits: 2\n(1+0j), Z0\n"), 2);
  EXPECT_EQ(error_line("# n_qubits: 2\nnan, Z0\n"), 2);
  EXPECT_EQ(error_line("# n_qubits: 2\n1.0, Z0 X1\n2.0, X1 Z0\n"), 3);
  EXPECT_EQ(error_line("# n_qubits: 2\n1.0, Z0\n"), -1);
}

TEST(ParseHamiltonian, MissingFileThrows) {
  EXPECT_THROW(load_hamiltonian("/nonexistent/h.ham"), std::runtime_error);
}

TEST(PauliSpec, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_string(7, rng);
    EXPECT_EQ(parse_pauli_spec(7, pauli_spec(s)), s);
  }
  EXPECT_EQ(pauli_spec(PauliString(3)), "");
}

TEST(WriteHamiltonian, RoundTripIsExact) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = testing::random_hamiltonian(5, 20, rng);
    std::ostringstream out;
    write_hamiltonian(out, h, {{"source", "random"}});
    const auto back = parse(out.str());
    EXPECT_EQ(back.polynomial, h);
    EXPECT_EQ(back.metadata.at("source"), "random");
  }
  const auto h4 = load_hamiltonian(testing::fixture("h4_sto6g_trapezoid.ham"));
  std::ostringstream out;
  write_hamiltonian(out, h4.polynomial, h4.metadata);
  EXPECT_EQ(parse(out.str()).polynomial, h4.polynomial);
}

TEST(WriteHamiltonian, RejectsNonHermitian) {
  const auto p = PauliPolynomial::single(PauliString::from_label("XZ"), Complex(0, 1));
  std::ostringstream out;
  EXPECT_THROW(write_hamiltonian(out, p), std::invalid_argument);
}

TEST(WriteFileAtomic, ReplacesContents) {
  const auto dir = std::filesystem::temp_directory_path() / "vvqe_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.txt").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(s, "second");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace vvqe
