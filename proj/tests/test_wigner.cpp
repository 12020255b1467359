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
#include <map>
#include <numbers>

#include "mubkit/errors.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/su2ops.hpp"
#include "mubkit/wigner.hpp"
#include "test_support.hpp"

using namespace mubkit;
using namespace mubkit::wigner;

namespace {

OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b) {
    OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

/// Coupled states |J M> on the product space built by lowering from M = J and
/// Gram-Schmidt against larger J, with <j1 j1; j2 J-j1 | J J> > 0.
std::map<std::pair<int, int>, StateVector> coupled_states(int tj1, int tj2) {
    const AngularSpace s1(tj1), s2(tj2);
    const int n = s1.dim() * s2.dim();
    const OperatorMatrix lower =
        kron(su2::ladder_operators(s1, {0, 0}).minus, identity(s2.dim())) +
        kron(identity(s1.dim()), su2::ladder_operators(s2, {0, 0}).minus);
    const auto index = [&](int tm1, int tm2) { return s1.index_of(tm1) * s2.dim() + s2.index_of(tm2); };

    std::map<std::pair<int, int>, StateVector> out;
    for (int tJ = tj1 + tj2; tJ >= std::abs(tj1 - tj2); tJ -= 2) {
        StateVector top = StateVector::Zero(n);
        double seed = 1.0;
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
            const int tm2 = tJ - tm1;
            if (std::abs(tm2) <= tj2) top(index(tm1, tm2)) = seed;
            seed = -1.7 * seed;
        }
        for (int tK = tj1 + tj2; tK > tJ; tK -= 2) {
            const StateVector &e = out.at({tK, tJ});
            top -= e.dot(top) * e;
        }
        top.normalize();
        const int lead = index(tj1, tJ - tj1);
        if (top(lead).real() < 0) top = -top;
        StateVector cur = top;
        for (int tM = tJ; tM >= -tJ; tM -= 2) {
            out[{tJ, tM}] = cur;
            cur = lower * cur;
            if (cur.norm() > 1e-14) cur.normalize();
        }
    }
    return out;
}

}  // namespace

TEST(ThreeJm, reference_values) {
    EXPECT_NEAR(three_jm({2, 2, 0, 0, 0, 0}), -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(three_jm({1, 1, 2, 1, 1, -2}), -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(three_jm({2, 2, 2, 2, 0, 0}), 0.0);
    EXPECT_EQ(three_jm({1, 1, 4, 1, -1, 0}), 0.0);
    const ExactValue e = three_jm_exact({1, 1, 2, 1, 1, -2});
    EXPECT_EQ(e.sign, -1);
    EXPECT_EQ(e.square, boost::multiprecision::cpp_rational(1, 3));
}

TEST(ThreeJm, rejects_inconsistent_half_integers) {
    try {
        three_jm({1, 1, 2, 0, 1, -1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidHalfInteger);
    }
    EXPECT_THROW(three_jm({-2, 2, 0, 0, 0, 0}), Error);
}

TEST(ThreeJm, column_symmetries) {
    for (int j1 = 0; j1 <= 4; ++j1)
        for (int j2 = 0; j2 <= 4; ++j2)
            for (int j3 = std::abs(j1 - j2); j3 <= std::min(4, j1 + j2); j3 += 2)
                for (int m1 = -j1; m1 <= j1; m1 += 2)
                    for (int m2 = -j2; m2 <= j2; m2 += 2) {
                        const int m3 = -m1 - m2;
                        if (std::abs(m3) > j3) continue;
                        const double w = three_jm({j1, j2, j3, m1, m2, m3});
                        const double sign = ((j1 + j2 + j3) / 2) % 2 == 0 ? 1.0 : -1.0;
                        EXPECT_NEAR(w, three_jm({j2, j3, j1, m2, m3, m1}), 1e-14);
                        EXPECT_NEAR(w, sign * three_jm({j2, j1, j3, m2, m1, m3}), 1e-14);
                        EXPECT_NEAR(w, sign * three_jm({j1, j2, j3, -m1, -m2, -m3}), 1e-14);
                    }
}

TEST(ThreeJm, large_spins_stay_finite) {
    // 2j = 20 needs factorials far beyond 64 bits.
    const double w = three_jm({20, 20, 20, 0, 0, 0});
    EXPECT_TRUE(std::isfinite(w));
    double sum = 0.0;
    for (int m = -20; m <= 20; m += 2) sum += std::pow(three_jm({20, 20, 0, m, -m, 0}), 2);
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(ClebschGordan, matches_lowering_oracle) {
    for (int tj1 = 0; tj1 <= 4; ++tj1)
        for (int tj2 = 0; tj2 <= 4; ++tj2) {
            const AngularSpace s1(tj1), s2(tj2);
            const auto states = coupled_states(tj1, tj2);
            for (const auto &[key, vec] : states)
                for (int i1 = 0; i1 < s1.dim(); ++i1)
                    for (int i2 = 0; i2 < s2.dim(); ++i2) {
                        const double cg = clebsch_gordan(tj1, tj2, s1.two_m(i1), s2.two_m(i2), key.first, key.second);
                        EXPECT_NEAR(cg, vec(i1 * s2.dim() + i2).real(), 1e-12)
                            << tj1 << " " << tj2 << " " << key.first << " " << key.second;
                    }
        }
}

TEST(ClebschGordan, examples) {
    EXPECT_NEAR(clebsch_gordan(0, 0, 0, 0, 0, 0), 1.0, 1e-15);
    EXPECT_NEAR(clebsch_gordan(1, 1, 1, -1, 2, 0), 1.0 / std::sqrt(2.0), 1e-15);
    double sum = 0.0;
    for (int m1 = -2; m1 <= 2; m1 += 2)
        for (int m2 = -1; m2 <= 1; m2 += 2) sum += std::pow(clebsch_gordan(2, 1, m1, m2, 3, 1), 2);
    EXPECT_NEAR(sum, 1.0, 1e-14);
}

TEST(UnitTensor, scalar_component_is_scaled_identity) {
    EXPECT_LT(max_abs_diff(unit_tensor(1, 0, 0).matrix, identity(2) / std::sqrt(2.0)), 1e-15);
    EXPECT_LT(max_abs_diff(unit_tensor(4, 0, 0).matrix, identity(5) / std::sqrt(5.0)), 1e-15);
}

TEST(UnitTensor, hilbert_schmidt_orthogonality) {
    for (int tj = 0; tj <= 5; ++tj) {
        std::vector<UnitTensor> us;
        for (int k = 0; k <= tj; ++k)
            for (int p = -k; p <= k; ++p) us.push_back(unit_tensor(tj, k, p));
        for (const auto &x : us)
            for (const auto &y : us) {
                const Complex tr = (x.matrix.adjoint() * y.matrix).trace();
                const double expect = (x.k == y.k && x.p == y.p) ? 1.0 / (2 * x.k + 1) : 0.0;
                EXPECT_LT(std::abs(tr - expect), 1e-13);
            }
    }
}

TEST(UnitTensor, hermitian_conjugation_and_range) {
    for (int tj = 1; tj <= 4; ++tj)
        for (int k = 0; k <= tj; ++k)
            for (int p = 1; p <= k; ++p)
                EXPECT_LT(max_abs_diff(unit_tensor(tj, k, -p).matrix,
                                       (p % 2 ? -1.0 : 1.0) * unit_tensor(tj, k, p).matrix.adjoint()),
                          1e-14);
    EXPECT_THROW(unit_tensor(2, 3, 0), Error);
    EXPECT_THROW(unit_tensor(2, 1, 2), Error);
}

TEST(BCoefficients, low_spin_values) {
    const BCoefficients half(1, 0.0, 0);
    EXPECT_LT(std::abs(half.trace_route(1, -1) - std::sqrt(3.0)), 1e-12);
    EXPECT_LT(std::abs(half.trace_route(1, 1) + std::sqrt(3.0)), 1e-12);
    EXPECT_LT(std::abs(half.trace_route(0, 0)), 1e-12);
    EXPECT_LT(std::abs(half.trace_route(1, 0)), 1e-12);

    const BCoefficients one(2, 0.0, 0);
    EXPECT_LT(std::abs(one.trace_route(2, -2) - std::sqrt(5.0)), 1e-12);
    EXPECT_LT(std::abs(one.trace_route(1, 1) + std::sqrt(6.0)), 1e-12);
    EXPECT_LT(std::abs(one.trace_route(2, 1)), 1e-12);

    const BCoefficients three_halves(3, 0.0, 0);
    const double s3 = std::sqrt(3.0);
    EXPECT_LT(std::abs(three_halves.trace_route(1, 1) + (1 + s3) * std::sqrt(6.0 / 5)), 1e-12);
    EXPECT_LT(std::abs(three_halves.trace_route(3, -3) - std::sqrt(7.0)), 1e-12);
    EXPECT_LT(std::abs(three_halves.trace_route(3, 1) - (s3 - 2) * std::sqrt(7.0 / 5)), 1e-12);
    EXPECT_LT(std::abs(three_halves.trace_route(2, 1)), 1e-12);
}

TEST(BCoefficients, routes_agree_and_reconstruct) {
    for (int tj = 0; tj <= 6; ++tj)
        for (int a = 0; a <= tj; ++a)
            for (double r : {0.0, 1.0, 0.37}) {
                const BCoefficients b(tj, r, a);
                EXPECT_LT(b.max_route_difference(), 1e-12);
                EXPECT_LT(b.reconstruction_residual(), 1e-12);
                for (int k = 0; k <= tj; ++k)
                    for (int p = -k; p <= k; ++p)
                        if (p != 1 && !(k == tj && p == -tj)) EXPECT_LT(std::abs(b.trace_route(k, p)), 1e-12);
            }
    EXPECT_THROW(BCoefficients(2, 0.0, 3), Error);
}

TEST(Enveloping, polynomial_matches_three_jm_tensor) {
    for (int tj = 0; tj <= 6; ++tj)
        for (int k = 0; k <= tj; ++k)
            for (int p = -k; p <= k; ++p) {
                const OperatorMatrix ref = unit_tensor(tj, k, p).matrix;
                EXPECT_LT(max_abs_diff(unit_tensor_enveloping(tj, k, p), ref), 1e-10) << tj << " " << k << " " << p;
                EXPECT_LT(max_abs_diff(unit_tensor_enveloping_conjugate(tj, k, p), ref), 1e-10);
            }
    EXPECT_THROW(unit_tensor_enveloping(1, 2, 0), Error);
}

TEST(Enveloping, v00_polynomials) {
    for (int tj = 1; tj <= 3; ++tj)
        EXPECT_LT(max_abs_diff(v00_closed_forms(tj), su2::v_ra_matrix(AngularSpace(tj), {0.0, 0})), 1e-12);
    OperatorMatrix sx(2, 2);
    sx << 0, 1, 1, 0;
    EXPECT_LT(max_abs_diff(v00_closed_forms(1), sx), 1e-15);
    try {
        v00_closed_forms(4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedJ);
    }
}

TEST(Rotation, standard_matrix_basics) {
    EXPECT_LT(max_abs_diff(wigner_rotation_standard(3, {}), identity(4)), 1e-15);
    OperatorMatrix expect(2, 2);
    expect << 0, -1, 1, 0;
    EXPECT_LT(max_abs_diff(wigner_rotation_standard(1, {0, std::numbers::pi, 0}), expect), 1e-15);
    for (int tj = 0; tj <= 6; ++tj) {
        const OperatorMatrix d = wigner_rotation_standard(tj, {0.3, 1.1, -2.0});
        EXPECT_LT(max_abs_diff(d.adjoint() * d, identity(tj + 1)), 1e-12);
        const OperatorMatrix z1 = wigner_rotation_standard(tj, {0.4, 0, 0});
        const OperatorMatrix z2 = wigner_rotation_standard(tj, {1.3, 0, 0});
        EXPECT_LT(max_abs_diff(z1 * z2, wigner_rotation_standard(tj, {1.7, 0, 0})), 1e-13);
    }
}

TEST(Rotation, small_d_matches_exponential_of_jy) {
    for (int tj = 1; tj <= 5; ++tj) {
        const su2::Ladder l = su2::ladder_operators(AngularSpace(tj), {0.0, 0});
        const OperatorMatrix jy = (l.plus - l.minus) / Complex(0.0, 2.0);
        const double beta = 0.83;
        Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(jy);
        const OperatorMatrix expm = es.eigenvectors() *
                                    (es.eigenvalues().cast<Complex>() * Complex(0.0, -beta)).array().exp().matrix().asDiagonal() *
                                    es.eigenvectors().adjoint();
        EXPECT_LT(max_abs_diff(wigner_small_d(tj, beta), expm), 1e-12);
    }
}

TEST(Rotation, z_rotation_permutes_labels) {
    for (int tj = 0; tj <= 8; ++tj) {
        const int d = tj + 1;
        for (int a = 0; a < d; ++a)
            for (double r : {0.0, 0.37}) {
                for (int p = 0; p < d; ++p) {
                    const OperatorMatrix D = rotation_new_scheme(tj, r, a, {2 * std::numbers::pi * p / d, 0, 0});
                    OperatorMatrix expect = OperatorMatrix::Zero(d, d);
                    for (int al = 0; al < d; ++al) expect(((al - p) % d + d) % d, al) = mubkit::testing::oracle_q(0.5 * tj * p, d);
                    EXPECT_LT(max_abs_diff(D, expect), 1e-10);
                }
            }
    }
}

TEST(Rotation, new_scheme_is_unitary_conjugate) {
    mubkit::testing::for_all(41, 10, [](std::mt19937_64 &rng) {
        const int tj = mubkit::testing::uniform_int(rng, 0, 6);
        return std::tuple{tj, mubkit::testing::uniform_int(rng, 0, tj), mubkit::testing::uniform_real(rng, -1, 1),
                          EulerAngles{mubkit::testing::uniform_real(rng, 0, 6.3),
                                      mubkit::testing::uniform_real(rng, 0, 3.2),
                                      mubkit::testing::uniform_real(rng, 0, 6.3)}};
    }, [](const auto &c) {
        const auto &[tj, a, r, e] = c;
        const OperatorMatrix D = rotation_new_scheme(tj, r, a, e);
        EXPECT_LT(max_abs_diff(D.adjoint() * D, identity(tj + 1)), 1e-10);
        EXPECT_LT(rotation_conjugation_residual(tj, r, a, e), 1e-10);
    });
    EXPECT_LT(max_abs_diff(rotation_new_scheme(2, 0.3, 1, {}), identity(3)), 1e-12);
}

TEST(Coupling, trivial_and_triangle) {
    EXPECT_LT(std::abs(coupling_new_scheme(0, 0, 0, 0, 0, 0, 0.0, 0) - 1.0), 1e-15);
    try {
        coupling_new_scheme(1, 1, 4, 0, 0, 0, 0.0, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TriangleViolation);
    }
    EXPECT_THROW(coupling_new_scheme(1, 1, 1, 0, 0, 0, 0.0, 0), Error);
}

TEST(Coupling, matches_transform_and_is_unitary) {
    const int cases[][3] = {{1, 1, 2}, {1, 1, 0}, {2, 1, 1}, {2, 1, 3}, {2, 2, 2}, {3, 2, 1}};
    for (const auto &c : cases)
        for (double r : {0.0, 0.5}) {
            for (int al3 = 0; al3 <= c[2]; ++al3) {
                double norm = 0.0;
                for (int a1 = 0; a1 <= c[0]; ++a1)
                    for (int a2 = 0; a2 <= c[1]; ++a2) {
                        const Complex x = coupling_new_scheme(c[0], c[1], c[2], a1, a2, al3, r, 0);
                        EXPECT_LT(std::abs(x - coupling_by_transform(c[0], c[1], c[2], a1, a2, al3, r, 0)), 1e-10);
                        norm += std::norm(x);
                    }
                EXPECT_NEAR(norm, 1.0, 1e-10);
            }
        }
}
