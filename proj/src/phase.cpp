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

#include "mubkit/phase.hpp"

#include <cmath>
#include <numbers>

#include "mubkit/errors.hpp"

namespace mubkit {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

Complex root_phase(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "root_phase: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    // Symmetric residue in (-den, den] keeps the angle small.
    std::int64_t r = mod_floor(num, 2 * den);
    if (r > den) r -= 2 * den;
    if (r == 0) return {1.0, 0.0};
    if (r == den) return {-1.0, 0.0};
    if (2 * r == den) return {0.0, 1.0};
    if (2 * r == -den) return {0.0, -1.0};
    const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

Complex q_pow(double x, int d) {
    return std::polar(1.0, 2.0 * std::numbers::pi * x / d);
}

PhaseMatrix::PhaseMatrix(int d, std::vector<std::int64_t> exponents)
    : d_(d), exponents_(std::move(exponents)) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "PhaseMatrix: d must be >= 1");
    if (exponents_.size() != static_cast<std::size_t>(d) * d)
        throw Error(ErrorKind::DimensionMismatch, "PhaseMatrix: need d*d exponents");
    for (auto &e : exponents_) e = mod_floor(e, 2 * d_);
}

std::size_t PhaseMatrix::index(int k, int alpha) const {
    if (k < 0 || k >= d_ || alpha < 0 || alpha >= d_)
        throw Error(ErrorKind::RangeError, "PhaseMatrix index out of range");
    return static_cast<std::size_t>(k) * d_ + alpha;
}

void PhaseMatrix::set_exponent(int k, int alpha, std::int64_t e) {
    exponents_[index(k, alpha)] = mod_floor(e, 2 * d_);
}

double PhaseMatrix::scale() const { return 1.0 / std::sqrt(static_cast<double>(d_)); }

Complex PhaseMatrix::value(int k, int alpha) const {
    return scale() * root_phase(exponent(k, alpha), d_);
}

OperatorMatrix PhaseMatrix::unscaled_matrix() const {
    OperatorMatrix out(d_, d_);
    for (int k = 0; k < d_; ++k)
        for (int alpha = 0; alpha < d_; ++alpha)
            out(d_ - 1 - k, d_ - 1 - alpha) = root_phase(exponent(k, alpha), d_);
    return out;
}

OperatorMatrix PhaseMatrix::basis_columns() const {
    OperatorMatrix out(d_, d_);
    for (int k = 0; k < d_; ++k)
        for (int alpha = 0; alpha < d_; ++alpha) out(d_ - 1 - k, alpha) = value(k, alpha);
    return out;
}

}  // namespace mubkit
