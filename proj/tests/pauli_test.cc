// Copyright 2026 The cmap Authors
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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cmap/errors.h"
#include "cmap/pauli.h"
#include "test_oracles.h"

namespace cmap {
namespace {

using testing::kron_matrix;
using testing::letters_of;

PauliString P(const char *s) {
    return PauliString::from_str(s);
}

PauliString random_pauli(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
    std::uniform_int_distribution<int> ph(0, 3);
    return PauliString(n, bits(rng), bits(rng), static_cast<std::uint8_t>(ph(rng)));
}

TEST(Pauli, MultiplyExamples) {
    EXPECT_EQ(P("X") * P("X"), P("I"));
    EXPECT_EQ(P("X") * P("Y"), P("iZ"));
    EXPECT_EQ(multiply(P("ZZI"), P("XXX")), P("-YYX"));
    EXPECT_EQ(P("Y") * P("Z"), P("iX"));
    EXPECT_EQ(P("Z") * P("X"), P("iY"));
    EXPECT_EQ(P("Y") * P("X"), P("-iZ"));
}

TEST(Pauli, MultiplyMatchesKroneckerMatrices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        auto a = random_pauli(rng, 3);
        auto b = random_pauli(rng, 3);
        auto c = a * b;
        Eigen::MatrixXcd lhs = kron_matrix(letters_of(a), a.phase()) * kron_matrix(letters_of(b), b.phase());
        auto rhs = kron_matrix(letters_of(c), c.phase());
        EXPECT_LT((lhs - rhs).norm(), 1e-12) << a << " * " << b << " = " << c;
    }
}

TEST(Pauli, MultiplyLengthMismatchThrows) {
    EXPECT_THROW(P("XX") * P("X"), DimensionError);
    EXPECT_THROW(eta(P("XX"), P("X")), DimensionError);
}

TEST(Pauli, EtaExamples) {
    EXPECT_EQ(eta(P("XZZXI"), P("IXZZX")), 1);
    EXPECT_EQ(eta(P("X"), P("Z")), -1);
    EXPECT_EQ(eta(P("ZZI"), P("XII")), -1);
}

TEST(Pauli, WeightExamples) {
    EXPECT_EQ(weight(P("YYX"), PauliLetter::Y), 2u);
    EXPECT_EQ(weight(P("ZZZZZZZZZ"), PauliLetter::Z), 9u);
    EXPECT_EQ(weight(P("XZZXI"), PauliLetter::X), 2u);
    EXPECT_EQ(P("XZZXI").weight(), 4u);
}

TEST(Pauli, StripPhaseExamples) {
    EXPECT_EQ(strip_phase(P("-YYX")), P("YYX"));
    EXPECT_EQ(strip_phase(P("iZ")), P("Z"));
    EXPECT_EQ(strip_phase(P("II")), P("II"));
}

TEST(Pauli, TextRoundTrip) {
    for (const char *s : {"XYZ", "-YYX", "iZ", "-iXX", "I"}) {
        EXPECT_EQ(P(s).str(), s);
    }
    EXPECT_EQ(P("+XY"), P("XY"));
    EXPECT_EQ(P("+iXY"), P("iXY"));
    EXPECT_THROW(P("XQ"), std::invalid_argument);
    EXPECT_THROW(P("-"), std::invalid_argument);
    std::ostringstream out;
    out << P("-iY");
    EXPECT_EQ(out.str(), "-iY");
}

TEST(Pauli, CommutationPhaseRelation) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; trial++) {
        auto a = random_pauli(rng, 6);
        auto b = random_pauli(rng, 6);
        auto ab = a * b;
        auto ba = b * a;
        auto expected = eta(a, b) == 1 ? ba : ba.with_phase(static_cast<std::uint8_t>((ba.phase() + 2) % 4));
        EXPECT_EQ(ab, expected);
        EXPECT_EQ(eta(a, b), eta(b, a));
        EXPECT_EQ(eta(a, a), 1);
        EXPECT_EQ(eta(a, b), testing::commute_sign(letters_of(a), letters_of(b)));
    }
}

TEST(Pauli, Associativity) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        auto a = random_pauli(rng, 5), b = random_pauli(rng, 5), c = random_pauli(rng, 5);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(strip_phase(a * b), strip_phase(strip_phase(a) * strip_phase(b)));
    }
}

TEST(Pauli, HermiticityFromSquare) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; trial++) {
        auto p = random_pauli(rng, 4);
        EXPECT_EQ((p * p).phase() == 0, p.is_hermitian());
        EXPECT_EQ(strip_phase(strip_phase(p)), strip_phase(p));
    }
}

TEST(Pauli, LettersAndOrdering) {
    auto p = P("IXYZ");
    EXPECT_EQ(p[0], PauliLetter::I);
    EXPECT_EQ(p[1], PauliLetter::X);
    EXPECT_EQ(p[2], PauliLetter::Y);
    EXPECT_EQ(p[3], PauliLetter::Z);
    EXPECT_TRUE(P("IX").letters_less(P("XI")));
    EXPECT_TRUE(P("XZ").letters_less(P("YI")));
    EXPECT_FALSE(P("-XI").letters_less(P("XI")));
    EXPECT_EQ(PauliString::single(3, 1, PauliLetter::Y), P("IYI"));
}

}  // namespace
}  // namespace cmap
