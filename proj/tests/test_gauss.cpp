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
#include <numeric>

#include "mubkit/errors.hpp"
#include "mubkit/gauss.hpp"
#include "mubkit/mub.hpp"
#include "test_support.hpp"

using namespace mubkit;
using namespace mubkit::gauss;
using mubkit::testing::for_all;

namespace {

/// Direct sum with std::exp, no integer reduction.
Complex oracle_sum(long u, long v, long w) {
    Complex s = 0.0;
    for (long k = 0; k < std::abs(w); ++k)
        s += std::exp(Complex(0.0, 3.14159265358979323846 * static_cast<double>(u * k * k + v * k) / w));
    return s;
}

struct Uvw {
    long u, v, w;
};

Uvw random_spec(std::mt19937_64 &rng) {
    long w = mubkit::testing::uniform_int(rng, 1, 16) * (rng() % 2 ? 1 : -1);
    long u = mubkit::testing::uniform_int(rng, 1, 20) * (rng() % 2 ? 1 : -1);
    long v = mubkit::testing::uniform_int(rng, -60, 60);
    if ((u * w + v) % 2 != 0) ++v;
    return {u, v, w};
}

}  // namespace

TEST(GaussSum, known_values) {
    EXPECT_LT(std::abs(gauss_sum({2, 0, 3}) - Complex(0.0, std::sqrt(3.0))), 1e-12);
    EXPECT_LT(std::abs(gauss_sum({2, 2, 8})), 1e-12);
    EXPECT_LT(std::abs(gauss_sum({4, 2, 6})), 1e-12);
    EXPECT_NEAR(std::abs(gauss_sum({1, 1, 3})), std::sqrt(3.0), 1e-12);
}

TEST(GaussSum, vanishing_families) {
    for (long v : {2, 6, 10, 14}) EXPECT_LT(std::abs(gauss_sum({2, v, 8})), 1e-12) << v;
    for (long v : {2, 6, 10}) EXPECT_LT(std::abs(gauss_sum({4, v, 6})), 1e-12) << v;
}

TEST(GaussSum, matches_floating_oracle) {
    for_all(31, 300, random_spec, [](const Uvw &s) {
        EXPECT_LT(std::abs(gauss_sum({s.u, s.v, s.w}) - oracle_sum(s.u, s.v, s.w)), 1e-10);
    });
}

TEST(GaussSumSpec, validation_and_escape_hatch) {
    try {
        GaussSumSpec(1, 2, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParityViolation);
    }
    EXPECT_THROW(GaussSumSpec(0, 0, 3), Error);
    EXPECT_THROW(GaussSumSpec::unchecked(1, 1, 0), Error);
    const auto raw = GaussSumSpec::unchecked(1, 2, 3);
    EXPECT_FALSE(raw.parity_ok());
    EXPECT_LT(std::abs(gauss_sum(raw) - oracle_sum(1, 2, 3)), 1e-12);
}

TEST(GaussSum, translation_negation_periodicity) {
    for_all(32, 200, random_spec, [](const Uvw &s) {
        const GaussSumSpec spec(s.u, s.v, s.w);
        for (long t = -2 * std::abs(s.w); t <= 2 * std::abs(s.w); ++t)
            EXPECT_LT(translation_identity(spec, t), 1e-12);
        EXPECT_LT(negation_identity(spec), 1e-12);
        EXPECT_LT(std::abs(gauss_sum(spec) - gauss_sum({s.u, s.v + 2 * s.w, s.w})), 1e-12);
    });
    EXPECT_LT(translation_identity({1, 1, 3}, 1), 1e-12);
    EXPECT_LT(translation_identity({2, 0, 5}, 3), 1e-12);
}

TEST(GaussSum, derived_relation_for_odd_w) {
    EXPECT_LT(derived_relation_check(1, 0, 3), 1e-12);
    EXPECT_LT(derived_relation_check(2, 1, 5), 1e-12);
    EXPECT_LT(derived_relation_check(1, 1, 1), 1e-12);
    for (long w : {-7, -3, 1, 3, 5, 7, 9, 11})
        for (long u = -6; u <= 6; ++u)
            for (long n = -5; n <= 5; ++n)
                if (u != 0) EXPECT_LT(derived_relation_check(u, n, w), 1e-12);
    EXPECT_THROW(derived_relation_check(1, 0, 4), Error);
}

TEST(SignCase, prediction_matches_direct_ratio) {
    int compared = 0;
    for (long w = -12; w <= 12; ++w)
        for (long u = -12; u <= 12; ++u) {
            if (u == 0 || w == 0) continue;
            for (long v = 0; v < 2 * std::abs(w); ++v) {
                if ((u * w + v) % 2 != 0 || v % std::gcd(u, w) != 0) continue;
                const SignCase sc = sign_case({u, v, w});
                EXPECT_TRUE(sc.consistent()) << u << " " << v << " " << w;
                if (sc.direct_ratio) ++compared;
                // A minus sign combined with S(u,v,w) = S(u,-v,w) forces S = 0.
                if (sc.predicted_sign == Sign::Minus) EXPECT_LT(std::abs(gauss_sum({u, v, w})), 1e-10);
                // Minus signs need u, v and w all even.
                if (u % 2 != 0 || v % 2 != 0 || w % 2 != 0) EXPECT_EQ(sc.predicted_sign, Sign::Plus);
            }
        }
    EXPECT_GT(compared, 1000);
}

TEST(SignCase, examples) {
    const SignCase plus = sign_case({1, 1, 3});
    EXPECT_EQ(plus.predicted_sign, Sign::Plus);
    ASSERT_TRUE(plus.direct_ratio.has_value());
    EXPECT_LT(std::abs(*plus.direct_ratio - 1.0), 1e-12);

    const SignCase minus = sign_case({2, 2, 8});
    EXPECT_EQ(minus.predicted_sign, Sign::Minus);
    EXPECT_FALSE(minus.direct_ratio.has_value());

    EXPECT_EQ(sign_case({4, 2, 6}).reason, SignReason::SolutionHighValuation);
    EXPECT_NO_THROW(sign_case({2, 2, 4}));
    try {
        sign_case({4, 2, 8});
        FAIL() << "gcd(4, 8) does not divide 2";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Inapplicable);
    }
}

TEST(SignCase, minus_count_for_even_u_and_w) {
    EXPECT_EQ(minus_sign_count(2, 8), 4);
    EXPECT_EQ(minus_sign_count(4, 6), 3);
    EXPECT_EQ(minus_sign_count(2, -8), 4);
    for (long w = 2; w <= 16; w += 2)
        for (long u = 2; u <= 16; u += 2) {
            EXPECT_EQ(minus_sign_count(u, w), w / std::gcd(u, w)) << u << " " << w;
            EXPECT_EQ(minus_sign_count(-u, -w), w / std::gcd(u, w)) << u << " " << w;
        }
    for (long w = 1; w <= 12; ++w) {
        EXPECT_EQ(minus_sign_count(3, w), 0);
        if (w % 2 != 0) EXPECT_EQ(minus_sign_count(2, w), 0);
    }
}

TEST(SignCase, two_valuation) {
    EXPECT_EQ(two_valuation(12), 2);
    EXPECT_EQ(two_valuation(-8), 3);
    EXPECT_EQ(two_valuation(7), 0);
    EXPECT_THROW(two_valuation(0), Error);
}

TEST(TranslationOrbit, size_is_w_over_gcd) {
    for (long w = -12; w <= 12; ++w)
        for (long u = -12; u <= 12; ++u) {
            if (u == 0 || w == 0) continue;
            const long v = (u * w) % 2 == 0 ? 0 : 1;
            const auto orbit = translation_orbit(u, v, w);
            EXPECT_EQ(orbit.size(), static_cast<std::size_t>(std::abs(w) / std::gcd(u, w)));
            // Members differ from S(u,v,w) by a phase only.
            for (long x : orbit) EXPECT_NEAR(std::abs(gauss_sum({u, x, w})), std::abs(gauss_sum({u, v, w})), 1e-10);
        }
}

TEST(PrimeMagnitude, equals_sqrt_w) {
    EXPECT_NEAR(prime_magnitude(2, 0, 3), std::sqrt(3.0), 1e-10);
    EXPECT_NEAR(prime_magnitude(1, 1, 5), std::sqrt(5.0), 1e-10);
    EXPECT_NEAR(prime_magnitude(-3, 1, 7), std::sqrt(7.0), 1e-10);
    for (long w : {3, 5, 7, 11, 13})
        for (long u = -(w - 1); u <= w - 1; ++u)
            for (long v = 0; v < 2 * w; ++v)
                if (u != 0 && (u * w + v) % 2 == 0) EXPECT_NEAR(prime_magnitude(u, v, w), std::sqrt(w), 1e-10);
    EXPECT_THROW(prime_magnitude(3, 1, 3), Error);
    EXPECT_THROW(prime_magnitude(1, 1, 9), Error);
    EXPECT_THROW(prime_magnitude(8, 0, 7), Error);
}

TEST(PrimeMagnitude, even_u_reduction) {
    for (long w : {3, 5, 7, 11})
        for (long u = -(w - 1); u <= w - 1; u += 2)
            for (long v = 0; v < 2 * w; v += 2) {
                if (u == 0) continue;
                const auto r = even_u_reduction(u, v, w);
                EXPECT_NEAR(r.direct, r.reduced, 1e-10);
            }
    EXPECT_THROW(even_u_reduction(3, 1, 5), Error);
}

TEST(QuadraticPhaseSum, magnitude_rule_for_primes) {
    const auto small = quadratic_phase_sum(3, 1, 0);
    EXPECT_TRUE(small.magnitude_checked);
    const Complex expect = 1.0 + 2.0 * std::exp(Complex(0.0, 2 * 3.14159265358979323846 / 3));
    EXPECT_LT(std::abs(small.value - expect), 1e-12);
    for (long lam = -4; lam <= 4; ++lam)
        for (long mu = 0; mu <= 4; ++mu) {
            if (lam == 0) continue;
            const auto c = quadratic_phase_sum(5, lam, mu);
            EXPECT_TRUE(c.magnitude_checked);
            EXPECT_LT(c.magnitude_residual, 1e-10);
        }
    EXPECT_FALSE(quadratic_phase_sum(4, 2, 0).magnitude_checked);
    EXPECT_FALSE(quadratic_phase_sum(5, 0, 1).magnitude_checked);
    EXPECT_THROW(quadratic_phase_sum(1, 1, 0), Error);
}

TEST(GaussOverlap, matches_inner_products) {
    const auto check = [](int two_j, double r, int a, int b, int al, int be) {
        const AngularSpace sp(two_j);
        const auto o = mub::overlap_matrix(mub::eigenbasis(sp, r, a), mub::eigenbasis(sp, r, b));
        EXPECT_LT(std::abs(o.overlaps(al, be) - overlap_via_gauss(two_j, r, a, b, al, be)), 1e-12);
    };
    check(2, 0.0, 0, 1, 0, 0);
    check(4, 0.3, 1, 3, 2, 4);
    check(6, -1.2, 6, 0, 3, 5);
    EXPECT_NEAR(std::abs(overlap_via_gauss(4, 0.0, 1, 3, 2, 4)), 1 / std::sqrt(5.0), 1e-12);
    EXPECT_THROW(overlap_via_gauss(2, 0.0, 1, 1, 0, 0), Error);
    EXPECT_THROW(overlap_via_gauss(2, 0.0, 0, 1, 3, 0), Error);
}

TEST(GaussOverlap, beta_sweep_keeps_modulus_for_primes) {
    for (int d : {5, 7}) {
        const AngularSpace sp = AngularSpace::from_dimension(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                if (a == b) continue;
                for (int al = 0; al < d; ++al)
                    for (int be = 0; be < d; ++be)
                        EXPECT_NEAR(std::abs(overlap_via_gauss(d - 1, 0.0, a, b, al, be)),
                                    std::abs(overlap_via_gauss(d - 1, 0.0, a, b, al, 0)), 1e-12);
            }
    }
}
