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

#include "mubkit/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mubkit/errors.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/phase.hpp"
#include "mubkit/su2ops.hpp"

namespace mubkit::wigner {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void require_space(int two_j) {
    if (two_j < 0) throw Error(ErrorKind::InvalidHalfInteger, "2j must be non-negative");
}

void require_tensor_range(int two_j, int k, int p) {
    require_space(two_j);
    if (k < 0 || k > two_j) throw Error(ErrorKind::RangeError, "k must lie in 0..2j");
    if (std::abs(p) > k) throw Error(ErrorKind::RangeError, "|p| must not exceed k");
}

OperatorMatrix mpow(const OperatorMatrix &m, int n) {
    OperatorMatrix out = identity(static_cast<int>(m.rows()));
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

su2::Ladder cs_ladder(int two_j) { return su2::ladder_operators(AngularSpace(two_j), {0.0, 0}); }

bool triangle(int two_j1, int two_j2, int two_j3) {
    return (two_j1 + two_j2 + two_j3) % 2 == 0 && two_j3 >= std::abs(two_j1 - two_j2) &&
           two_j3 <= two_j1 + two_j2;
}

}  // namespace

double ExactValue::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::sqrt(square.convert_to<double>());
}

ExactValue three_jm_exact(const ThreeJmArgs &x) {
    const int tj[3] = {x.two_j1, x.two_j2, x.two_j3};
    const int tm[3] = {x.two_m1, x.two_m2, x.two_m3};
    for (int i = 0; i < 3; ++i) {
        if (tj[i] < 0) throw Error(ErrorKind::InvalidHalfInteger, "negative j in 3jm symbol");
        if ((tj[i] + tm[i]) % 2 != 0)
            throw Error(ErrorKind::InvalidHalfInteger, "j + m must be an integer in 3jm symbol");
    }
    ExactValue zero;
    for (int i = 0; i < 3; ++i)
        if (std::abs(tm[i]) > tj[i]) return zero;
    if (tm[0] + tm[1] + tm[2] != 0 || !triangle(tj[0], tj[1], tj[2])) return zero;

    // Integer combinations (all halves of even numbers at this point).
    const int j1pj2mj3 = (tj[0] + tj[1] - tj[2]) / 2;
    const int j1mj2pj3 = (tj[0] - tj[1] + tj[2]) / 2;
    const int mj1pj2pj3 = (-tj[0] + tj[1] + tj[2]) / 2;
    const int jsum = (tj[0] + tj[1] + tj[2]) / 2;
    const int j3mj2pm1 = (tj[2] - tj[1] + tm[0]) / 2;
    const int j3mj1mm2 = (tj[2] - tj[0] - tm[1]) / 2;
    const int j1mm1 = (tj[0] - tm[0]) / 2;
    const int j2pm2 = (tj[1] + tm[1]) / 2;

    const int tmin = std::max({0, -j3mj2pm1, -j3mj1mm2});
    const int tmax = std::min({j1pj2mj3, j1mm1, j2pm2});
    cpp_rational sum = 0;
    for (int t = tmin; t <= tmax; ++t) {
        const cpp_int den = factorial(t) * factorial(j3mj2pm1 + t) * factorial(j3mj1mm2 + t) *
                            factorial(j1pj2mj3 - t) * factorial(j1mm1 - t) * factorial(j2pm2 - t);
        sum += cpp_rational(parity_sign(t), den);
    }
    if (sum == 0) return zero;

    cpp_rational sq(factorial(j1pj2mj3) * factorial(j1mj2pj3) * factorial(mj1pj2pj3),
                    factorial(jsum + 1));
    for (int i = 0; i < 3; ++i)
        sq *= factorial((tj[i] + tm[i]) / 2) * factorial((tj[i] - tm[i]) / 2);
    sq *= sum * sum;

    ExactValue out;
    out.sign = parity_sign((tj[0] - tj[1] - tm[2]) / 2) * (sum > 0 ? 1 : -1);
    out.square = sq;
    return out;
}

double three_jm(const ThreeJmArgs &args) { return three_jm_exact(args).to_double(); }

double clebsch_gordan(int two_j1, int two_j2, int two_m1, int two_m2, int two_j3, int two_m3) {
    const double w = three_jm({two_j1, two_j2, two_j3, two_m1, two_m2, -two_m3});
    if (w == 0.0) return 0.0;
    return parity_sign((two_j1 - two_j2 + two_m3) / 2) * std::sqrt(two_j3 + 1.0) * w;
}

UnitTensor unit_tensor(int two_j, int k, int p) {
    require_tensor_range(two_j, k, p);
    const AngularSpace sp(two_j);
    const int d = sp.dim();
    UnitTensor out{two_j, k, p, OperatorMatrix::Zero(d, d)};
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < d; ++c)
            out.matrix(i, c) =
                parity_sign(i) * three_jm({two_j, 2 * k, two_j, -sp.two_m(i), 2 * p, sp.two_m(c)});
    return out;
}

BCoefficients::BCoefficients(int two_j, double r, int a) : two_j_(two_j), r_(r), a_(a) {
    require_space(two_j);
    if (a < 0 || a > two_j) throw Error(ErrorKind::RangeError, "a must lie in 0..2j");
    const AngularSpace sp(two_j);
    const int d = sp.dim();
    const OperatorMatrix v = su2::v_ra_matrix(sp, {r, a});
    const std::size_t n = static_cast<std::size_t>(d) * d;
    trace_.resize(n);
    closed_.resize(n);
    tensors_.resize(n);

    for (int k = 0; k <= two_j; ++k)
        for (int p = -k; p <= k; ++p) {
            const std::size_t s = slot(k, p);
            tensors_[s] = unit_tensor(two_j, k, p).matrix;
            trace_[s] = (2.0 * k + 1.0) * (tensors_[s].adjoint() * v).trace();

            Complex c = 0.0;
            if (p == 1) {
                // Column i carries m = j - i; the sum runs over m = -j..j-1.
                for (int i = 1; i < d; ++i) {
                    const int tm = sp.two_m(i);
                    c += root_phase(2LL * i * a, d) * static_cast<double>(parity_sign(i - 1)) *
                         three_jm({two_j, 2 * k, two_j, -(tm + 2), 2, tm});
                }
                c *= 2.0 * k + 1.0;
            }
            if (k == two_j && p == -two_j)
                c += std::sqrt(2.0 * two_j + 1.0) * std::polar(1.0, std::numbers::pi * two_j * r);
            closed_[s] = c;
        }
}

std::size_t BCoefficients::slot(int k, int p) const {
    require_tensor_range(two_j_, k, p);
    return static_cast<std::size_t>(k * k + p + k);
}

Complex BCoefficients::trace_route(int k, int p) const { return trace_[slot(k, p)]; }
Complex BCoefficients::closed_form(int k, int p) const { return closed_[slot(k, p)]; }

double BCoefficients::max_route_difference() const {
    double worst = 0.0;
    for (std::size_t s = 0; s < trace_.size(); ++s)
        worst = std::max(worst, std::abs(trace_[s] - closed_[s]));
    return worst;
}

double BCoefficients::reconstruction_residual() const {
    const AngularSpace sp(two_j_);
    OperatorMatrix sum = OperatorMatrix::Zero(sp.dim(), sp.dim());
    for (std::size_t s = 0; s < trace_.size(); ++s) sum += trace_[s] * tensors_[s];
    return max_abs_diff(sum, su2::v_ra_matrix(sp, {r_, a_}));
}

OperatorMatrix unit_tensor_enveloping(int two_j, int k, int p) {
    require_tensor_range(two_j, k, p);
    const su2::Ladder l = cs_ladder(two_j);
    const int d = two_j + 1;
    const OperatorMatrix id = identity(d);
    const double j = 0.5 * two_j;
    const int ap = std::abs(p);

    // The p < 0 form follows from p >= 0 by p -> -p, j+ -> -j-, jz -> -jz.
    const OperatorMatrix &ladder = p >= 0 ? l.plus : l.minus;
    const OperatorMatrix jz = p >= 0 ? OperatorMatrix(l.z) : OperatorMatrix(-l.z);

    const long double pref2 = factorial_ld(k - ap) /
                              (factorial_ld(k + ap) * factorial_ld(two_j - k) *
                               factorial_ld(two_j + k + 1));
    const double pref = static_cast<double>(std::sqrt(pref2)) *
                        (p >= 0 ? parity_sign(k + p) : parity_sign(p));

    OperatorMatrix bracket =
        static_cast<double>(parity_sign(ap) * factorial_ld(two_j - ap) * factorial_ld(k + ap) /
                            (factorial_ld(ap) * factorial_ld(k - ap))) *
        id;
    for (int z = ap + 1; z <= k; ++z) {
        const long double coef = parity_sign(z) * factorial_ld(two_j - z) * factorial_ld(k + z) /
                                 (factorial_ld(z) * factorial_ld(k - z) * factorial_ld(z - ap));
        OperatorMatrix prod = id;
        for (int t = 1; t <= z - ap; ++t) prod = prod * (jz + (j + ap - z + t) * id);
        bracket += static_cast<double>(coef) * prod;
    }
    return pref * mpow(ladder, ap) * bracket;
}

OperatorMatrix unit_tensor_enveloping_conjugate(int two_j, int k, int p) {
    require_tensor_range(two_j, k, p);
    if (p >= 0) return unit_tensor_enveloping(two_j, k, p);
    return static_cast<double>(parity_sign(p)) * unit_tensor_enveloping(two_j, k, -p).adjoint();
}

OperatorMatrix v00_closed_forms(int two_j) {
    if (two_j < 1 || two_j > 3)
        throw Error(ErrorKind::UnsupportedJ, "closed forms exist for j = 1/2, 1, 3/2 only");
    const su2::Ladder l = cs_ladder(two_j);
    const OperatorMatrix id = identity(two_j + 1);
    switch (two_j) {
        case 1:
            return l.plus + l.minus;
        case 2:
            return l.plus / std::sqrt(2.0) + 0.5 * l.minus * l.minus;
        default: {
            const double s3 = 1.0 / std::sqrt(3.0);
            return s3 * l.plus + (s3 - 0.5) * l.plus * (l.z + 1.5 * id) * (l.z - 0.5 * id) +
                   (1.0 / 6.0) * l.minus * l.minus * l.minus;
        }
    }
}

OperatorMatrix wigner_small_d(int two_j, double beta) {
    require_space(two_j);
    const AngularSpace sp(two_j);
    const int d = sp.dim();
    const double c = std::cos(beta / 2), s = std::sin(beta / 2);
    OperatorMatrix out = OperatorMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int col = 0; col < d; ++col) {
            const int jp1 = (two_j + sp.two_m(i)) / 2, jm1 = (two_j - sp.two_m(i)) / 2;
            const int jp2 = (two_j + sp.two_m(col)) / 2, jm2 = (two_j - sp.two_m(col)) / 2;
            const int m1m2 = (sp.two_m(i) - sp.two_m(col)) / 2;
            const long double root =
                std::sqrt(factorial_ld(jp1) * factorial_ld(jm1) * factorial_ld(jp2) * factorial_ld(jm2));
            long double sum = 0.0L;
            for (int t = std::max(0, -m1m2); t <= std::min(jp2, jm1); ++t) {
                const long double den = factorial_ld(jp2 - t) * factorial_ld(t) *
                                        factorial_ld(m1m2 + t) * factorial_ld(jm1 - t);
                sum += parity_sign(m1m2 + t) * root / den *
                       std::pow(static_cast<long double>(c), two_j - m1m2 - 2 * t) *
                       std::pow(static_cast<long double>(s), m1m2 + 2 * t);
            }
            out(i, col) = static_cast<double>(sum);
        }
    return out;
}

OperatorMatrix wigner_rotation_standard(int two_j, const EulerAngles &e) {
    const AngularSpace sp(two_j);
    OperatorMatrix out = wigner_small_d(two_j, e.beta);
    for (int i = 0; i < sp.dim(); ++i)
        for (int c = 0; c < sp.dim(); ++c)
            out(i, c) *= std::polar(1.0, -sp.m(i) * e.alpha - sp.m(c) * e.gamma);
    return out;
}

OperatorMatrix rotation_new_scheme(int two_j, double r, int a, const EulerAngles &angles) {
    const AngularSpace sp(two_j);
    const int d = sp.dim();
    const OperatorMatrix std_d = wigner_rotation_standard(two_j, angles);
    OperatorMatrix out = OperatorMatrix::Zero(d, d);
    for (int al = 0; al < d; ++al)
        for (int alp = 0; alp < d; ++alp) {
            Complex s = 0.0;
            for (int i = 0; i < d; ++i)
                for (int c = 0; c < d; ++c)
                    s += q_pow(-mub::rho(sp.j(), sp.m(i), a, r, al) +
                                   mub::rho(sp.j(), sp.m(c), a, r, alp),
                               d) *
                         std_d(i, c);
            out(al, alp) = s / static_cast<double>(d);
        }
    return out;
}

double rotation_conjugation_residual(int two_j, double r, int a, const EulerAngles &angles) {
    const AngularSpace sp(two_j);
    const OperatorMatrix b = mub::eigenbasis(sp, r, a).vectors;
    const OperatorMatrix conj = b.adjoint() * wigner_rotation_standard(two_j, angles) * b;
    return max_abs_diff(rotation_new_scheme(two_j, r, a, angles), conj);
}

namespace {

void check_coupling(int two_j1, int two_j2, int two_j3, int alpha1, int alpha2, int alpha3) {
    require_space(two_j1);
    require_space(two_j2);
    require_space(two_j3);
    if (!triangle(two_j1, two_j2, two_j3))
        throw Error(ErrorKind::TriangleViolation, "(j1, j2, j3) violates the triangle rule");
    if (alpha1 < 0 || alpha1 > two_j1 || alpha2 < 0 || alpha2 > two_j2 || alpha3 < 0 ||
        alpha3 > two_j3)
        throw Error(ErrorKind::RangeError, "alpha_l must lie in 0..2j_l");
}

}  // namespace

Complex coupling_new_scheme(int two_j1, int two_j2, int two_j3, int alpha1, int alpha2, int alpha3,
                            double r, int a) {
    check_coupling(two_j1, two_j2, two_j3, alpha1, alpha2, alpha3);
    const AngularSpace s1(two_j1), s2(two_j2), s3(two_j3);
    Complex sum = 0.0;
    for (int i1 = 0; i1 < s1.dim(); ++i1)
        for (int i2 = 0; i2 < s2.dim(); ++i2) {
            const int tm3 = s1.two_m(i1) + s2.two_m(i2);
            if (std::abs(tm3) > two_j3) continue;
            const double cg = clebsch_gordan(two_j1, two_j2, s1.two_m(i1), s2.two_m(i2), two_j3, tm3);
            if (cg == 0.0) continue;
            sum += cg * q_pow(-mub::rho(s1.j(), s1.m(i1), a, r, alpha1), s1.dim()) *
                   q_pow(-mub::rho(s2.j(), s2.m(i2), a, r, alpha2), s2.dim()) *
                   q_pow(mub::rho(s3.j(), 0.5 * tm3, a, r, alpha3), s3.dim());
        }
    return sum / std::sqrt(static_cast<double>(s1.dim()) * s2.dim() * s3.dim());
}

Complex coupling_by_transform(int two_j1, int two_j2, int two_j3, int alpha1, int alpha2,
                              int alpha3, double r, int a) {
    check_coupling(two_j1, two_j2, two_j3, alpha1, alpha2, alpha3);
    const AngularSpace s1(two_j1), s2(two_j2), s3(two_j3);
    const OperatorMatrix b1 = mub::eigenbasis(s1, r, a).vectors;
    const OperatorMatrix b2 = mub::eigenbasis(s2, r, a).vectors;
    const OperatorMatrix b3 = mub::eigenbasis(s3, r, a).vectors;
    Complex sum = 0.0;
    for (int i1 = 0; i1 < s1.dim(); ++i1)
        for (int i2 = 0; i2 < s2.dim(); ++i2)
            for (int i3 = 0; i3 < s3.dim(); ++i3) {
                const double cg = clebsch_gordan(two_j1, two_j2, s1.two_m(i1), s2.two_m(i2), two_j3,
                                                 s3.two_m(i3));
                if (cg == 0.0) continue;
                sum += std::conj(b1(i1, alpha1)) * std::conj(b2(i2, alpha2)) * b3(i3, alpha3) * cg;
            }
    return sum;
}

}  // namespace mubkit::wigner
