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

// Operators on the spin-j space built directly from their actions on |j,m>.
namespace mubkit::su2 {

/// Parameters of the cyclic operator v_ra.
struct VraParams {
    double r = 0.0;
    int a = 0;

    /// phi_r = pi * 2j * r.
    double phi(const AngularSpace &s) const;
};

/// Index pair (m1, m2) of a W-infinity generator t_m; both components >= 1.
struct WIndex {
    int m1;
    int m2;

    WIndex(int m1, int m2);

    WIndex operator+(const WIndex &o) const { return {m1 + o.m1, m2 + o.m2}; }
    /// m ^ n = m1 n2 - m2 n1.
    int wedge(const WIndex &o) const { return m1 * o.m2 - m2 * o.m1; }
};

OperatorMatrix h_matrix(const AngularSpace &s);

/// v|j,m> = q^{(j-m)a}|j,m+1> for m != j, v|j,j> = exp(i 2 pi j r)|j,-j>.
OperatorMatrix v_ra_matrix(const AngularSpace &s, const VraParams &p);

/// z|j,m> = q^{j-m}|j,m>.
OperatorMatrix z_matrix(const AngularSpace &s);

struct Ladder {
    OperatorMatrix plus;
    OperatorMatrix minus;
    OperatorMatrix z;
};

/// j+ = h v, j- = v^dagger h, jz = (h^2 - v^dagger h^2 v) / 2.
Ladder ladder_operators(const AngularSpace &s, const VraParams &p);

/// h^2 + jz^2 - jz.
OperatorMatrix casimir(const AngularSpace &s, const VraParams &p);

/// t_m = q^{-m1 m2 / 2} v^{m1} z^{m2}, the half power taken as exp(-i pi m1 m2 / d).
OperatorMatrix t_operator(const AngularSpace &s, const VraParams &p, const WIndex &idx);

/// Residual of [t_m, t_n] - 2i sin(pi (m^n) / d) t_{m+n}.
double w_infinity_residual(const AngularSpace &s, const VraParams &p, const WIndex &m,
                           const WIndex &n);

/// A matrix with exactly one nonzero entry per column, each a 2d-th root of
/// unity: column c carries exp(i pi phase[c] / d) in row perm[c].
struct Monomial {
    int d = 0;
    std::vector<int> perm;
    std::vector<std::int64_t> phase;

    Monomial operator*(const Monomial &rhs) const;
    OperatorMatrix dense() const;
    bool operator==(const Monomial &) const = default;

    /// Recognizes a dense monomial matrix with root-of-unity entries; returns
    /// false when `m` is not of that shape within `tol`.
    static bool from_dense(const OperatorMatrix &m, double tol, Monomial &out);
};

struct PauliGroup {
    std::vector<OperatorMatrix> elements;
    /// table[x][y] = index of elements[x] * elements[y].
    std::vector<std::vector<int>> table;
    int identity_index = 0;

    std::size_t order() const { return elements.size(); }
};

/// Generators: v_00 and z for odd d; v_10 and exp(i pi / d) z for even d.
std::vector<OperatorMatrix> pauli_generators(const AngularSpace &s);

/// Closure of the generators under multiplication. Throws ClosureOverflow
/// past 2 d^3 elements.
PauliGroup pauli_group(const AngularSpace &s);

struct CommuteCheck {
    bool criterion;
    double commutator_norm;
};

/// [v_r0, v_s0] = 0 iff j s - j r is an integer; the analytic criterion is
/// confirmed against the explicit commutator (CriterionMismatch otherwise).
CommuteCheck vr0_vs0_commute(const AngularSpace &s, double r, double s_param,
                             double tol = 1e-12);

}  // namespace mubkit::su2
