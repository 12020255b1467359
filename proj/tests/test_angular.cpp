// Copyright 2026 The mubkit Authors
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

#include "mubkit/angular.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/phase.hpp"

using namespace mubkit;

TEST(AngularSpace, labels_descend_from_plus_j) {
    const AngularSpace sp(3);
    EXPECT_EQ(sp.dim(), 4);
    EXPECT_EQ(sp.two_m_labels(), (std::vector<int>{3, 1, -1, -3}));
    EXPECT_EQ(sp.k_of(0), 3);
    EXPECT_EQ(sp.k_of(3), 0);
    EXPECT_EQ(sp.index_of(-1), 2);
    EXPECT_DOUBLE_EQ(sp.j(), 1.5);
}

TEST(AngularSpace, rejects_bad_labels) {
    const AngularSpace sp(2);
    EXPECT_THROW(sp.index_of(1), Error);
    EXPECT_THROW(sp.index_of(4), Error);
    EXPECT_THROW(AngularSpace(-1), Error);
    EXPECT_EQ(AngularSpace::from_dimension(5).two_j(), 4);
}

TEST(RootPhase, quarter_turns_are_exact) {
    EXPECT_EQ(root_phase(1, 2), Complex(0.0, 1.0));
    EXPECT_EQ(root_phase(-1, 2), Complex(0.0, -1.0));
    EXPECT_EQ(root_phase(3, 3), Complex(-1.0, 0.0));
    EXPECT_EQ(root_phase(14, 7), Complex(1.0, 0.0));
    EXPECT_EQ(root_phase(1, -2), Complex(0.0, -1.0));
    EXPECT_THROW(root_phase(1, 0), Error);
}

TEST(RootPhase, large_numerators_do_not_drift) {
    const std::int64_t big = 2LL * 7 * 1000000007LL + 3;
    EXPECT_LT(std::abs(root_phase(big, 7) - root_phase(3, 7)), 1e-15);
}

TEST(PhaseMatrix, reduces_exponents_mod_2d) {
    PhaseMatrix m(2, {5, -1, 4, 0});
    EXPECT_EQ(m.exponent(0, 0), 1);
    EXPECT_EQ(m.exponent(0, 1), 3);
    EXPECT_EQ(m.exponent(1, 0), 0);
    EXPECT_THROW(PhaseMatrix(2, {0, 1}), Error);
    EXPECT_THROW(m.exponent(2, 0), Error);
}

TEST(NumberTheory, primes_totient_prime_powers) {
    EXPECT_TRUE(is_prime(13));
    EXPECT_FALSE(is_prime(15));
    EXPECT_FALSE(is_prime(1));
    EXPECT_EQ(euler_phi(9), 6);
    EXPECT_EQ(euler_phi(15), 8);
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(prime_power(27), (std::pair<long, int>{3, 3}));
    EXPECT_EQ(prime_power(12), (std::pair<long, int>{0, 0}));
}

TEST(MatrixHelpers, dimension_mismatch_throws) {
    EXPECT_THROW(max_abs_diff(identity(2), identity(3)), Error);
    EXPECT_DOUBLE_EQ(max_abs(commutator(identity(3), identity(3))), 0.0);
}
