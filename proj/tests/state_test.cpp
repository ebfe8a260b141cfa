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

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "vvqe/io.hpp"
#include "vvqe/state.hpp"

namespace vvqe {
namespace {

using testing::label_matrix;
using testing::Mat;
using testing::poly_matrix;
using testing::Vec;

TEST(BasisState, IndexConvention) {
  const auto s = basis_state(2, "00");
  EXPECT_EQ(s[0], Complex(1.0));
  EXPECT_EQ(basis_index("0011"), 12);
  EXPECT_EQ(basis_index("1000"), 1);
  EXPECT_EQ(basis_state(4, "0011")[12], Complex(1.0));
}

TEST(BasisState, ZSignsFollowBitstring) {
  const auto s = basis_state(4, "0011");
  const double expected[] = {1, 1, -1, -1};
  for (int q = 0; q < 4; ++q) {
    EXPECT_EQ(expectation(s, PauliString::from_ops(4, {{q, Pauli::Z}})),
              expected[q]);
  }
}

TEST(BasisState, ParticleNumber) {
  EXPECT_DOUBLE_EQ(particle_number(basis_state(4, "0101")), 2.0);
  EXPECT_DOUBLE_EQ(particle_number(basis_state(6, "000011")), 2.0);
}

TEST(BasisState, RejectsBadInput) {
  EXPECT_THROW(basis_state(3, "01"), std::invalid_argument);
  EXPECT_THROW(basis_state(2, "0a"), std::invalid_argument);
  EXPECT_THROW(StateVector(0), std::invalid_argument);
}

TEST(Rotation, ZeroAngleIsIdentity) {
  std::mt19937_64 rng(1);
  const auto psi = testing::random_state(3, rng);
  const auto out =
      apply_pauli_rotation(psi, PauliString::from_ops(3, {{0, Pauli::Z}}), 0.0);
  EXPECT_EQ((out.amplitudes() - psi.amplitudes()).norm(), 0.0);
}

TEST(Rotation, XByPiFlipsWithPhase) {
  const auto out = apply_pauli_rotation(basis_state(1, "0"),
                                        PauliString::from_label("X"),
                                        std::numbers::pi);
  EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out[1] - Complex(0, -1)), 0.0, 1e-15);
}

TEST(Rotation, MatchesDenseExponential) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_string(3, rng);
    const double angle = u(rng);
    const auto psi = testing::random_state(3, rng);
    const Mat gate = std::cos(angle / 2) * Mat::Identity(8, 8) -
                     Complex(0, std::sin(angle / 2)) * label_matrix(p.label());
    const Vec expected = gate * psi.amplitudes();
    EXPECT_LT((apply_pauli_rotation(psi, p, angle).amplitudes() - expected).norm(),
              1e-13)
        << p.label();
    const Mat via_exp = (Complex(0, -angle / 2) * label_matrix(p.label())).exp();
    EXPECT_LT((via_exp - gate).norm(), 1e-12);
  }
}

TEST(Rotation, QubitMismatchThrows) {
  StateVector s(2);
  EXPECT_THROW(s.apply_pauli_rotation(PauliString(3), 0.1), QubitMismatch);
  EXPECT_THROW(expectation(s, PauliString(3)), QubitMismatch);
}

TEST(Rotation, NormPreservedOverManyRotations) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto psi = testing::random_state(5, rng);
  for (int g = 0; g < 200; ++g) {
    psi.apply_pauli_rotation(testing::random_string(5, rng), u(rng));
    ASSERT_NEAR(psi.norm(), 1.0, 1e-10);
  }
}

TEST(Rotation, AnglesCompose) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_string(4, rng);
    const auto psi = testing::random_state(4, rng);
    const auto two = apply_pauli_rotation(apply_pauli_rotation(psi, p, 0.3), p, 1.1);
    const auto one = apply_pauli_rotation(psi, p, 1.4);
    EXPECT_LT((two.amplitudes() - one.amplitudes()).norm(), 1e-13);
  }
}

TEST(ApplyPauli, MatchesDense) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_string(3, rng);
    auto psi = testing::random_state(3, rng);
    const Vec expected = label_matrix(p.label()) * psi.amplitudes();
    psi.apply_pauli(p);
    EXPECT_LT((psi.amplitudes() - expected).norm(), 1e-14);
  }
}

TEST(Expectation, SingleQubitCases) {
  const auto zero = basis_state(1, "0");
  EXPECT_DOUBLE_EQ(
      expectation(zero, PauliPolynomial::single(PauliString::from_label("Z"), 1)),
      1.0);
  EXPECT_DOUBLE_EQ(
      expectation(zero, PauliPolynomial::single(PauliString::from_label("X"), 1)),
      0.0);
}

TEST(Expectation, RejectsNonHermitian) {
  const auto a =
      PauliPolynomial::single(PauliString::from_label("Z"), Complex(0, 1));
  EXPECT_THROW(expectation(basis_state(1, "0"), a), std::invalid_argument);
  EXPECT_THROW(CompiledPauliSum{a}, std::invalid_argument);
}

TEST(Expectation, IdentityPolynomialGivesCoefficient) {
  std::mt19937_64 rng(6);
  const auto psi = testing::random_state(3, rng);
  EXPECT_NEAR(expectation(psi, PauliPolynomial::identity(3, -0.7)), -0.7, 1e-14);
}

TEST(Expectation, StringsAndMatrixElementsMatchDense) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_string(4, rng);
    const auto psi = testing::random_state(4, rng);
    const auto phi = testing::random_state(4, rng);
    const Mat dense = label_matrix(p.label());
    EXPECT_NEAR(expectation(psi, p),
                testing::dense_expectation(dense, psi.amplitudes()), 1e-13);
    const Complex expected = psi.amplitudes().dot(dense * phi.amplitudes());
    EXPECT_LT(std::abs(matrix_element(psi, p, phi) - expected), 1e-13);
  }
}

TEST(Expectation, H2HartreeFockMatchesDense) {
  const auto h = load_hamiltonian(testing::fixture("h2_sto3g_1.0.ham")).polynomial;
  const auto hf = basis_state(4, "0011");
  const double dense = testing::dense_expectation(poly_matrix(h), hf.amplitudes());
  EXPECT_NEAR(expectation(hf, h), dense, 1e-12);
  EXPECT_NEAR(CompiledPauliSum(h).expectation(hf), dense, 1e-12);
}

TEST(CompiledPauliSum, MatchesTermwiseAndFallback) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = testing::random_hamiltonian(5, 40, rng);
    const auto psi = testing::random_state(5, rng);
    const CompiledPauliSum tabulated(h);
    const CompiledPauliSum fallback(h, 1);
    EXPECT_TRUE(tabulated.tabulated());
    EXPECT_FALSE(fallback.tabulated());
    const double direct = expectation(psi, h);
    EXPECT_NEAR(tabulated.expectation(psi), direct, 1e-12);
    EXPECT_NEAR(fallback.expectation(psi), direct, 1e-12);
  }
}

TEST(ParticleNumber, MatchesDenseNumberOperator) {
  std::mt19937_64 rng(9);
  const auto psi = testing::random_state(4, rng);
  EXPECT_NEAR(particle_number(psi),
              testing::dense_expectation(testing::number_operator(4),
                                         psi.amplitudes()),
              1e-13);
}

}  // namespace
}  // namespace vvqe
