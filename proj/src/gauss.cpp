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

#include "mubkit/gauss.hpp"

#include <cmath>
#include <numeric>

#include "mubkit/angular.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/phase.hpp"

namespace mubkit::gauss {

namespace {

bool is_even(std::int64_t n) { return n % 2 == 0; }

/// exp(i pi num / w), any nonzero w.
Complex w_phase(std::int64_t num, std::int64_t w) { return root_phase(num, w); }

Complex sum_raw(std::int64_t u, std::int64_t v, std::int64_t w) {
    const std::int64_t n = std::abs(w);
    const std::int64_t period = 2 * n;
    Complex s = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t km = mod_floor(k, period);
        const std::int64_t e = mod_floor(mod_floor(u, period) * mod_floor(km * km, period) +
                                             mod_floor(v, period) * km,
                                         period);
        s += w_phase(e, w);
    }
    return s;
}

bool has_solution(std::int64_t u, std::int64_t v, std::int64_t w, bool odd_only) {
    const std::int64_t period = 2 * std::abs(w);
    for (std::int64_t t = odd_only ? 1 : 0; t < period; t += odd_only ? 2 : 1)
        if (mod_floor(u * t + v - w, period) == 0) return true;
    return false;
}

}  // namespace

GaussSumSpec::GaussSumSpec(std::int64_t u, std::int64_t v, std::int64_t w)
    : GaussSumSpec(u, v, w, true) {}

GaussSumSpec GaussSumSpec::unchecked(std::int64_t u, std::int64_t v, std::int64_t w) {
    return GaussSumSpec(u, v, w, false);
}

GaussSumSpec::GaussSumSpec(std::int64_t u, std::int64_t v, std::int64_t w, bool check)
    : u_(u), v_(v), w_(w), parity_ok_(is_even(u * w + v)) {
    if (u == 0 || w == 0) throw Error(ErrorKind::InvalidArgument, "Gauss sum needs u w != 0");
    if (check && !parity_ok_)
        throw Error(ErrorKind::ParityViolation,
                    "u w + v must be even (u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                        ", w=" + std::to_string(w) + ")");
}

Complex gauss_sum(const GaussSumSpec &spec) { return sum_raw(spec.u(), spec.v(), spec.w()); }

double translation_identity(const GaussSumSpec &spec, std::int64_t t) {
    const std::int64_t u = spec.u(), v = spec.v(), w = spec.w();
    const Complex lhs = gauss_sum(spec);
    const Complex rhs = w_phase(u * t * t + v * t, w) * sum_raw(u, v + 2 * u * t, w);
    return std::abs(lhs - rhs);
}

double derived_relation_check(std::int64_t u, std::int64_t n, std::int64_t w) {
    if (is_even(w)) throw Error(ErrorKind::InvalidArgument, "derived relation needs odd w");
    const GaussSumSpec lhs(u, 2 * n - u * w, w);
    const GaussSumSpec rhs(u, 2 * n - u, w);
    // q^X with 2X = -(w^2-1)u/4 + (w-1)n, i.e. exp(i pi 2X / w).
    const std::int64_t twice_x = -((w * w - 1) / 4) * u + (w - 1) * n;
    return std::abs(gauss_sum(lhs) - w_phase(twice_x, w) * gauss_sum(rhs));
}

double negation_identity(const GaussSumSpec &spec) {
    return std::abs(gauss_sum(spec) - sum_raw(spec.u(), -spec.v(), spec.w()));
}

int two_valuation(std::int64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "2-valuation of 0");
    int k = 0;
    while (is_even(n)) {
        n /= 2;
        ++k;
    }
    return k;
}

bool SignCase::consistent(double tol) const {
    if (!direct_ratio) return true;
    const double expected = predicted_sign == Sign::Plus ? 1.0 : -1.0;
    return std::abs(*direct_ratio - expected) <= tol;
}

SignCase sign_case(const GaussSumSpec &spec) {
    const std::int64_t u = spec.u(), v = spec.v(), w = spec.w();
    const std::int64_t g = std::gcd(u, w);
    if (v % g != 0)
        throw Error(ErrorKind::Inapplicable, "no t solves u t + v = 0 mod w (gcd(u,w) does not divide v)");

    SignCase out{spec, Sign::Plus, SignReason::NoSolution, std::nullopt};
    const int vu = two_valuation(u), vw = two_valuation(w);
    if (!has_solution(u, v, w, false)) {
        out.reason = SignReason::NoSolution;
    } else if (vu <= vw) {
        const bool odd = has_solution(u, v, w, true);
        out.predicted_sign = odd ? Sign::Minus : Sign::Plus;
        out.reason = odd ? SignReason::OddSolutionLowValuation : SignReason::LowValuationEvenOnly;
    } else {
        out.predicted_sign = Sign::Minus;
        out.reason = SignReason::SolutionHighValuation;
    }

    const Complex plus = gauss_sum(spec);
    const Complex minus = sum_raw(u, -v, w);
    if (std::abs(plus) > 1e-9 && std::abs(minus) > 1e-9) out.direct_ratio = plus / minus;
    return out;
}

int minus_sign_count(std::int64_t u, std::int64_t w) {
    const std::int64_t period = 2 * std::abs(w);
    const std::int64_t g = std::gcd(u, w);
    int count = 0;
    for (std::int64_t v = 0; v < period; ++v) {
        if (!is_even(u * w + v) || v % g != 0) continue;
        if (sign_case(GaussSumSpec(u, v, w)).predicted_sign == Sign::Minus) ++count;
    }
    return count;
}

double prime_magnitude(std::int64_t u, std::int64_t v, std::int64_t w) {
    if (w < 3 || !is_prime(w)) throw Error(ErrorKind::NotPrime, "w must be an odd prime");
    if (u % w == 0) throw Error(ErrorKind::InvalidArgument, "u must be nonzero mod w");
    if (std::abs(u) > w - 1) throw Error(ErrorKind::RangeError, "u must lie in -(w-1)..(w-1)");
    return std::abs(gauss_sum(GaussSumSpec(u, v, w)));
}

EvenReduction even_u_reduction(std::int64_t u, std::int64_t v, std::int64_t w) {
    if (!is_even(u)) throw Error(ErrorKind::InvalidArgument, "even-u reduction needs u even");
    const double direct = prime_magnitude(u, v, w);
    const std::int64_t xi = u / 2;
    Complex s = 0.0;
    for (std::int64_t k = 0; k < w; ++k) s += root_phase(2 * xi * k * k, w);
    return {direct, std::abs(s)};
}

QuadraticSumResult quadratic_phase_sum(std::int64_t d, std::int64_t lam, std::int64_t mu) {
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "quadratic phase sum needs d >= 2");
    QuadraticSumResult out;
    for (std::int64_t k = 0; k < d; ++k) out.value += root_phase(k * (d - k) * lam + 2 * k * mu, d);
    const std::int64_t al = std::abs(lam), am = std::abs(mu);
    out.magnitude_checked = is_prime(d) && al >= 1 && al <= d - 1 && am <= d - 1;
    if (out.magnitude_checked)
        out.magnitude_residual = std::abs(std::abs(out.value) - std::sqrt(static_cast<double>(d)));
    return out;
}

Complex overlap_via_gauss(int two_j, double /*r*/, int a, int b, int alpha, int beta) {
    const std::int64_t d = two_j + 1;
    if (a == b) throw Error(ErrorKind::InvalidArgument, "Gauss-sum overlap needs a != b");
    if (std::abs(a - b) > two_j) throw Error(ErrorKind::RangeError, "a - b must lie in +-1..+-2j");
    if (alpha < 0 || alpha > two_j || beta < 0 || beta > two_j)
        throw Error(ErrorKind::RangeError, "alpha and beta must lie in 0..2j");
    const std::int64_t u = a - b;
    const std::int64_t v = -u * d - 2 * static_cast<std::int64_t>(alpha - beta);
    return gauss_sum(GaussSumSpec(u, v, d)) / static_cast<double>(d);
}

std::set<std::int64_t> translation_orbit(std::int64_t u, std::int64_t v, std::int64_t w) {
    const std::int64_t period = 2 * std::abs(w);
    std::set<std::int64_t> out;
    for (std::int64_t t = 0; t < period; ++t) out.insert(mod_floor(v + 2 * u * t, period));
    return out;
}

}  // namespace mubkit::gauss
