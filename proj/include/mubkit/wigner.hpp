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

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mubkit/angular.hpp"

namespace mubkit::wigner {

/// All entries doubled: two_j1 = 2 j1, two_m1 = 2 m1, and so on.
struct ThreeJmArgs {
    int two_j1, two_j2, two_j3;
    int two_m1, two_m2, two_m3;
};

/// value = sign * sqrt(square), with square an exact rational.
struct ExactValue {
    int sign = 0;
    boost::multiprecision::cpp_rational square;

    double to_double() const;
};

/// Racah closed form in exact integer arithmetic. Zero outside the triangle
/// and selection rules; throws InvalidHalfInteger when some j_i + m_i is not
/// an integer or a j_i is negative.
ExactValue three_jm_exact(const ThreeJmArgs &args);
double three_jm(const ThreeJmArgs &args);

/// (j1 j2 m1 m2 | j3 m3), doubled arguments.
double clebsch_gordan(int two_j1, int two_j2, int two_m1, int two_m2, int two_j3, int two_m3);

struct UnitTensor {
    int two_j;
    int k;
    int p;
    OperatorMatrix matrix;
};

/// <j m| u^(k)_p |j m'> = (-1)^{j-m} (j k j; -m p m'); RangeError unless
/// 0 <= k <= 2j and |p| <= k.
UnitTensor unit_tensor(int two_j, int k, int p);

class BCoefficients {
  public:
    BCoefficients(int two_j, double r, int a);

    int two_j() const noexcept { return two_j_; }
    double r() const noexcept { return r_; }
    int a() const noexcept { return a_; }

    /// (2k+1) Tr(u^(k)_p^dagger v_ra).
    Complex trace_route(int k, int p) const;
    /// Sum over m of 3jm symbols plus the corner term.
    Complex closed_form(int k, int p) const;

    double max_route_difference() const;
    /// |sum_kp b_kp u^(k)_p - v_ra| using the trace-route values.
    double reconstruction_residual() const;

  private:
    std::size_t slot(int k, int p) const;

    int two_j_;
    double r_;
    int a_;
    std::vector<Complex> trace_;
    std::vector<Complex> closed_;
    std::vector<OperatorMatrix> tensors_;
};

inline BCoefficients b_coefficients(int two_j, double r, int a) { return {two_j, r, a}; }

/// u^(k)_p as a polynomial in j+, j- and jz (a = 0 ladder matrices). For
/// p < 0 the explicit j- form is used.
OperatorMatrix unit_tensor_enveloping(int two_j, int k, int p);

/// u^(k)_p for p < 0 via (-1)^p (u^(k)_{-p})^dagger of the j+ form.
OperatorMatrix unit_tensor_enveloping_conjugate(int two_j, int k, int p);

/// v_00 from the j = 1/2, 1, 3/2 polynomial forms; UnsupportedJ otherwise.
OperatorMatrix v00_closed_forms(int two_j);

struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Active z-y-z convention: D_{mm'} = exp(-i m alpha) d_{mm'}(beta) exp(-i m' gamma).
/// Rows and columns in descending m.
OperatorMatrix wigner_small_d(int two_j, double beta);
OperatorMatrix wigner_rotation_standard(int two_j, const EulerAngles &angles);

/// D_{alpha alpha'} = (1/d) sum_{m m'} q^{-rho(m, alpha) + rho(m', alpha')} D_{mm'}.
OperatorMatrix rotation_new_scheme(int two_j, double r, int a, const EulerAngles &angles);

/// |rotation_new_scheme - B^dagger D B| with B the eigenbasis matrix of v_ra.
double rotation_conjugation_residual(int two_j, double r, int a, const EulerAngles &angles);

/// Coupling coefficient (j1 j2 alpha1 alpha2 | j3 alpha3)_{ra}; TriangleViolation
/// when (j1, j2, j3) fails the triangle rule.
Complex coupling_new_scheme(int two_j1, int two_j2, int two_j3, int alpha1, int alpha2, int alpha3,
                            double r, int a);

/// Same coefficient obtained by transforming the standard CG tensor with the
/// three eigenbasis matrices.
Complex coupling_by_transform(int two_j1, int two_j2, int two_j3, int alpha1, int alpha2,
                              int alpha3, double r, int a);

}  // namespace mubkit::wigner
