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
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mubkit/angular.hpp"
#include "mubkit/phase.hpp"

namespace mubkit::mub {

using Rational = boost::rational<std::int64_t>;

/// rho(J, M, x, y, z) = (J+M)(J-M+1) x / 2 - J M y + (J+M) z.
double rho(double J, double M, double x, double y, double z);
/// Exact form with J = two_J / 2 and M = two_M / 2.
Rational rho_exact(int two_J, int two_M, Rational x, Rational y, Rational z);

/// Best rational approximation of x with denominator <= max_den, if it
/// reproduces x to 1e-12.
std::optional<Rational> as_small_rational(double x, std::int64_t max_den = 720);

/// Eigenbasis of v_ra. Column alpha of `vectors` holds |j alpha; r a> over
/// the spherical basis (rows in descending m).
struct EigenBasis {
    AngularSpace space;
    double r = 0.0;
    int a = 0;
    OperatorMatrix vectors;
    /// Present when every coefficient is a 2d-th root of unity (rational r).
    std::optional<PhaseMatrix> exact;

    std::string label() const;
    /// Eigenvalue of v_ra on vector alpha: q^{j(a+r) - alpha}.
    Complex eigenvalue(int alpha) const;
};

EigenBasis eigenbasis(const AngularSpace &s, double r, int a);

/// Any orthonormal basis given by columns.
struct Basis {
    std::string label;
    OperatorMatrix vectors;
    std::optional<PhaseMatrix> exact;

    int dim() const { return static_cast<int>(vectors.rows()); }
};

Basis as_basis(const EigenBasis &b);
Basis computational_basis(int d);

struct OverlapReport {
    std::string first;
    std::string second;
    OperatorMatrix overlaps;  // (alpha, beta) = <first alpha | second beta>
    double max_modulus = 0.0;
    double min_modulus = 0.0;
    bool unbiased = false;
    double tolerance = 0.0;
    /// Direct inner products vs. the rho-sum closed form (eigenbases only).
    std::optional<double> closed_form_residual;
    /// Largest deviation from dependence on (alpha - beta) mod d only.
    std::optional<double> shift_structure_residual;
};

/// <j alpha; r a | j beta; s b> = (1/d) sum_m q^{rho(j, m, b-a, s-r, beta-alpha)}.
Complex closed_form_overlap(const AngularSpace &sp, double r, int a, int alpha, double s, int b,
                            int beta);

/// Sine-ratio form for equal a; falls back to the (-1)^{2jk} q^{j(beta-alpha)}
/// limit when j r - alpha - j s + beta = (2j+1) k.
Complex same_a_overlap(const AngularSpace &sp, double r, double s, int alpha, int beta);

OverlapReport overlap_matrix(const EigenBasis &b1, const EigenBasis &b2, double tol = 1e-10);

/// Moduli test against 1/sqrt(d). Exact phase data is used when both sides carry it.
OverlapReport unbiasedness_check(const Basis &b1, const Basis &b2, double tol = 1e-10);

struct TraceCheck {
    Complex trace;
    Complex expected;
    double trace_residual = 0.0;
    double sum_rule_residual = 0.0;
};

/// Tr(v_ra^dagger v_sb) = delta_ab d + exp(i(phi_s - phi_r)) - 1, plus the
/// overlap sum rule that follows from it.
TraceCheck trace_relation_check(const AngularSpace &sp, double r, int a, double s, int b);

struct CompleteSet {
    std::vector<Basis> bases;
    std::vector<OverlapReport> reports;
    bool all_unbiased = false;
};

/// Computational basis plus B_{0a}, a = 0..d-1. Throws NotPrime for composite d.
CompleteSet complete_mub_set(int d, double tol = 1e-10);

/// H_a(k, alpha) = q^{k(d-k)a/2 + k alpha}, stored as exponents of exp(i pi / d).
PhaseMatrix hadamard_matrix(int d, int a);

struct HadamardCheck {
    double orthogonality = 0.0;     // |H^dagger H - d I|
    double diagonalization = 0.0;   // |H^dagger V_a H - q^{(d-1)a/2} d diag(q^{-alpha})|
};

HadamardCheck verify_hadamard(const PhaseMatrix &h, int a);

/// Computational labels in matrix order: d-1, d-2, ..., 0.
std::vector<int> computational_basis_column_convention(int d);
/// k = j + m.
int k_from_m(int two_j, int two_m);
/// V_a = E_{0,d-1} + sum_k q^{(d-k)a} E_{k,k-1} with E indexed in decreasing order.
OperatorMatrix v_from_generators(int d, int a);

struct CompositeBasisSpec {
    long p = 0;
    int e = 0;
    std::vector<int> digits;

    void validate() const;
};

/// B_{0 a_1} x ... x B_{0 a_e} in dimension p^e.
Basis tensor_basis(const CompositeBasisSpec &spec);

struct CensusReport {
    int d = 0;
    double r = 0.0;
    double tolerance = 0.0;
    /// unbiased[a][b] for a != b.
    std::vector<std::vector<bool>> unbiased;
    std::vector<int> partner_counts;
    long totient = 0;
    bool meets_totient_bound = false;
    /// For d = p^e with p odd: whether unbiasedness <=> (a - b) mod p != 0.
    std::optional<bool> affine_criterion_holds;
    long prime = 0;
};

CensusReport unbiased_census(int d, double r, double tol = 1e-10);

}  // namespace mubkit::mub
