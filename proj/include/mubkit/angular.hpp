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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace mubkit {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// The (2j+1)-dimensional carrier space of the spin-j irrep.
///
/// Half-integers are stored doubled (two_j = 2j, two_m = 2m) so that all
/// labels stay integral. Matrix rows and columns follow the spherical basis
/// in descending m: index i <-> m = j - i <-> k = j + m = d - 1 - i.
class AngularSpace {
  public:
    explicit AngularSpace(int two_j);

    static AngularSpace from_dimension(int d);

    int two_j() const noexcept { return two_j_; }
    int dim() const noexcept { return two_j_ + 1; }
    double j() const noexcept { return 0.5 * two_j_; }

    /// q = exp(2 pi i / d).
    Complex q() const;

    /// 2m for row/column index i.
    int two_m(int index) const noexcept { return two_j_ - 2 * index; }
    double m(int index) const noexcept { return 0.5 * two_m(index); }
    /// k = j + m for row/column index i.
    int k_of(int index) const noexcept { return two_j_ - index; }
    /// Row/column index of the label 2m; throws RangeError when |m| > j or parity is off.
    int index_of(int two_m) const;

    /// Labels 2m in matrix order: 2j, 2j-2, ..., -2j.
    std::vector<int> two_m_labels() const;

    bool operator==(const AngularSpace &) const = default;

  private:
    int two_j_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const OperatorMatrix &a, const OperatorMatrix &b);
double max_abs(const OperatorMatrix &a);

OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix identity(int dim);

bool is_prime(long n);
long euler_phi(long n);
/// (p, e) with n = p^e when n is a prime power, else {0, 0}.
std::pair<long, int> prime_power(long n);

}  // namespace mubkit
