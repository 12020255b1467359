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

#pragma once

#include <cstdint>
#include <vector>

#include "mubkit/angular.hpp"

namespace mubkit {

/// exp(i pi num / den) with num reduced mod 2|den| in integer arithmetic first.
Complex root_phase(std::int64_t num, std::int64_t den);

/// q^x = exp(2 pi i x / d) for real x.
Complex q_pow(double x, int d);

/// Non-negative residue of a mod n (n > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

/// A d x d matrix of 2d-th roots of unity times a 1/sqrt(d) scale.
///
/// Entry (k, alpha) is exp(i pi exponent(k, alpha) / d) / sqrt(d). The
/// logical indices are the integer labels k, alpha = 0..d-1; dense renderings
/// choose a row/column order explicitly.
class PhaseMatrix {
  public:
    PhaseMatrix(int d, std::vector<std::int64_t> exponents);

    int dim() const noexcept { return d_; }
    /// Exponent in 0..2d-1.
    std::int64_t exponent(int k, int alpha) const { return exponents_[index(k, alpha)]; }
    void set_exponent(int k, int alpha, std::int64_t e);
    double scale() const;

    Complex value(int k, int alpha) const;

    /// Unscaled dense form (entries of unit modulus); rows in descending k,
    /// columns in descending alpha.
    OperatorMatrix unscaled_matrix() const;

    /// Scaled dense form with rows in descending k and columns in ascending
    /// alpha, i.e. column alpha is the normalized basis vector alpha.
    OperatorMatrix basis_columns() const;

    const std::vector<std::int64_t> &exponents() const noexcept { return exponents_; }

    bool operator==(const PhaseMatrix &) const = default;

  private:
    std::size_t index(int k, int alpha) const;

    int d_;
    std::vector<std::int64_t> exponents_;
};

}  // namespace mubkit
