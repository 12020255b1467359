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

#include "mubkit/angular.hpp"

#include <cmath>
#include <numbers>

#include "mubkit/errors.hpp"

namespace mubkit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::InvalidHalfInteger: return "InvalidHalfInteger";
        case ErrorKind::NonInvariantSubspace: return "NonInvariantSubspace";
        case ErrorKind::ClosureOverflow: return "ClosureOverflow";
        case ErrorKind::CriterionMismatch: return "CriterionMismatch";
        case ErrorKind::SpaceMismatch: return "SpaceMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::Inapplicable: return "Inapplicable";
        case ErrorKind::UnsupportedJ: return "UnsupportedJ";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

AngularSpace::AngularSpace(int two_j) : two_j_(two_j) {
    if (two_j < 0) throw Error(ErrorKind::InvalidArgument, "2j must be non-negative");
}

AngularSpace AngularSpace::from_dimension(int d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    return AngularSpace(d - 1);
}

Complex AngularSpace::q() const {
    return std::polar(1.0, 2.0 * std::numbers::pi / dim());
}

int AngularSpace::index_of(int two_m) const {
    if (std::abs(two_m) > two_j_ || (two_j_ - two_m) % 2 != 0)
        throw Error(ErrorKind::RangeError, "label 2m=" + std::to_string(two_m) +
                                               " not in spin 2j=" + std::to_string(two_j_));
    return (two_j_ - two_m) / 2;
}

std::vector<int> AngularSpace::two_m_labels() const {
    std::vector<int> out;
    out.reserve(dim());
    for (int i = 0; i < dim(); ++i) out.push_back(two_m(i));
    return out;
}

double max_abs_diff(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs(const OperatorMatrix &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b) {
    return a * b - b * a;
}

OperatorMatrix identity(int dim) { return OperatorMatrix::Identity(dim, dim); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

long euler_phi(long n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "phi needs n >= 1");
    long result = n;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f != 0) continue;
        while (n % f == 0) n /= f;
        result -= result / f;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::pair<long, int> prime_power(long n) {
    if (n < 2) return {0, 0};
    long p = 0;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return {n, 1};
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return {0, 0};
    return {p, e};
}

}  // namespace mubkit
