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

#include "mubkit/quon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mubkit/errors.hpp"
#include "mubkit/phase.hpp"

namespace mubkit::quon {

void QuonParams::validate() const {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "truncation order k must be >= 2");
    if (s != 0.5) throw Error(ErrorKind::InvalidArgument, "only s = 1/2 is supported");
}

Complex q_number(double x, int k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "q_number needs k >= 2");
    const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / k);
    const Complex qx = std::polar(1.0, 2.0 * std::numbers::pi * x / k);
    return (1.0 - qx) / (1.0 - q);
}

namespace {

// z^e on the principal branch, exact for e in {0, 1}.
Complex principal_pow(Complex z, double e) {
    if (e == 0.0) return 1.0;
    if (e == 1.0) return z;
    return std::pow(z, e);
}

OperatorMatrix raising(int k, double exponent) {
    OperatorMatrix m = OperatorMatrix::Zero(k, k);
    for (int n = 0; n + 1 < k; ++n) m(n + 1, n) = principal_pow(q_number(n + 1, k), exponent);
    return m;
}

OperatorMatrix lowering(int k, double exponent) {
    OperatorMatrix m = OperatorMatrix::Zero(k, k);
    for (int n = 1; n < k; ++n) m(n - 1, n) = principal_pow(q_number(n, k), exponent);
    return m;
}

OperatorMatrix number(int k) {
    OperatorMatrix m = OperatorMatrix::Zero(k, k);
    for (int n = 0; n < k; ++n) m(n, n) = static_cast<double>(n);
    return m;
}

OperatorMatrix power(const OperatorMatrix &m, int n) {
    OperatorMatrix out = identity(static_cast<int>(m.rows()));
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

Complex q_factorial(int n, int k) {
    Complex out = 1.0;
    for (int i = 1; i <= n; ++i) out *= q_number(i, k);
    return out;
}

FockOperator single(OperatorMatrix m) { return {BasisLabel::single, std::move(m)}; }
FockOperator pair(OperatorMatrix m) { return {BasisLabel::pair, std::move(m)}; }

}  // namespace

QuonOperators build_quon_operators(const QuonParams &p) {
    p.validate();
    return {single(raising(p.k, p.a_exp)),  single(lowering(p.k, p.c_exp())),
            single(raising(p.k, p.b_exp)),  single(lowering(p.k, p.d_exp())),
            single(number(p.k)),            single(number(p.k))};
}

double QuonRelationReport::max() const {
    return std::max({q_commutator, number_raising, number_lowering, number_hermitian, nilpotency,
                     cross_commutation});
}

OperatorMatrix lift_first(const OperatorMatrix &op) {
    const auto k = op.rows();
    OperatorMatrix out = OperatorMatrix::Zero(k * k, k * k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = 0; c < k; ++c)
            if (op(r, c) != Complex(0.0))
                for (Eigen::Index n2 = 0; n2 < k; ++n2) out(r * k + n2, c * k + n2) = op(r, c);
    return out;
}

OperatorMatrix lift_second(const OperatorMatrix &op) {
    const auto k = op.rows();
    OperatorMatrix out = OperatorMatrix::Zero(k * k, k * k);
    for (Eigen::Index n1 = 0; n1 < k; ++n1)
        out.block(n1 * k, n1 * k, k, k) = op;
    return out;
}

QuonRelationReport verify_quon_relations(const QuonParams &p) {
    const QuonOperators ops = build_quon_operators(p);
    const int k = p.k;
    const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / k);
    const OperatorMatrix one = identity(k);
    QuonRelationReport rep;

    struct Algebra {
        const OperatorMatrix &plus, &minus, &n;
    };
    const Algebra algebras[] = {{ops.a1_plus.entries, ops.a1_minus.entries, ops.n1.entries},
                                {ops.a2_plus.entries, ops.a2_minus.entries, ops.n2.entries}};
    for (const auto &alg : algebras) {
        rep.q_commutator = std::max(
            rep.q_commutator, max_abs(alg.minus * alg.plus - q * alg.plus * alg.minus - one));
        rep.number_raising =
            std::max(rep.number_raising, max_abs(commutator(alg.n, alg.plus) - alg.plus));
        rep.number_lowering =
            std::max(rep.number_lowering, max_abs(commutator(alg.n, alg.minus) + alg.minus));
        rep.number_hermitian = std::max(rep.number_hermitian, max_abs(alg.n - alg.n.adjoint()));
        rep.nilpotency = std::max({rep.nilpotency, max_abs(power(alg.plus, k)),
                                   max_abs(power(alg.minus, k))});
    }

    const OperatorMatrix first[] = {lift_first(ops.a1_plus.entries),
                                    lift_first(ops.a1_minus.entries), lift_first(ops.n1.entries)};
    const OperatorMatrix second[] = {lift_second(ops.a2_plus.entries),
                                     lift_second(ops.a2_minus.entries),
                                     lift_second(ops.n2.entries)};
    for (const auto &x1 : first)
        for (const auto &x2 : second)
            rep.cross_commutation = std::max(rep.cross_commutation, max_abs(commutator(x1, x2)));
    return rep;
}

PairOperators build_h_v_pair_space(int k, double r, int a) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be >= 2");
    if (a < 0 || a > k - 1)
        throw Error(ErrorKind::RangeError, "a must lie in 0..k-1, got " + std::to_string(a));

    const QuonOperators ops = build_quon_operators({k, 0.0, 1.0, 0.5});
    const OperatorMatrix a1p = lift_first(ops.a1_plus.entries);
    const OperatorMatrix a1m = lift_first(ops.a1_minus.entries);
    const OperatorMatrix a2p = lift_second(ops.a2_plus.entries);
    const OperatorMatrix a2m = lift_second(ops.a2_minus.entries);

    const int dim = k * k;
    OperatorMatrix h = OperatorMatrix::Zero(dim, dim);
    OperatorMatrix phase_sum = OperatorMatrix::Zero(dim, dim);   // q^{a (N1 + N2) / 2}
    OperatorMatrix phase_diff = OperatorMatrix::Zero(dim, dim);  // q^{-a (N1 - N2) / 2}
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2) {
            const int i = n1 * k + n2;
            h(i, i) = std::sqrt(static_cast<double>(n1) * (n2 + 1));
            phase_sum(i, i) = root_phase(static_cast<std::int64_t>(a) * (n1 + n2), k);
            phase_diff(i, i) = root_phase(-static_cast<std::int64_t>(a) * (n1 - n2), k);
        }

    const double phi = std::numbers::pi * (k - 1) * r;
    const Complex boundary = std::polar(1.0, phi / 2.0) / q_factorial(k - 1, k);
    const OperatorMatrix s1 = phase_sum * a1p + boundary * power(a1m, k - 1);
    const OperatorMatrix s2 = a2m * phase_diff + boundary * power(a2p, k - 1);
    return {pair(std::move(h)), pair(s1 * s2)};
}

FockOperator casimir_pair_space(int k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be >= 2");
    const OperatorMatrix n = lift_first(number(k)) + lift_second(number(k));
    return pair(0.25 * n * (n + 2.0 * identity(k * k)));
}

EpsilonEmbedding::EpsilonEmbedding(int k) : k_(k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be >= 2");
    // |j,m> = |j+m, j-m) with n1 = k-1-i, n2 = i for m = j - i.
    for (int i = 0; i < k; ++i) index_map_.push_back((k - 1 - i) * k + i);
}

double epsilon_leakage(const FockOperator &op, const EpsilonEmbedding &emb) {
    if (op.basis != BasisLabel::pair || op.dim() != emb.k() * emb.k())
        throw Error(ErrorKind::DimensionMismatch, "expected a pair-space operator");
    const auto &idx = emb.index_map();
    std::vector<bool> inside(op.dim(), false);
    for (int i : idx) inside[i] = true;
    double leak = 0.0;
    for (int c : idx)
        for (int r = 0; r < op.dim(); ++r)
            if (!inside[r]) leak = std::max(leak, std::abs(op.entries(r, c)));
    return leak;
}

OperatorMatrix restrict_to_epsilon(const FockOperator &op, const EpsilonEmbedding &emb,
                                   double tol) {
    const double leak = epsilon_leakage(op, emb);
    if (leak > tol)
        throw Error(ErrorKind::NonInvariantSubspace,
                    "operator leaks " + std::to_string(leak) + " out of the spin subspace");
    const auto &idx = emb.index_map();
    const int d = static_cast<int>(idx.size());
    OperatorMatrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out(r, c) = op.entries(idx[r], idx[c]);
    return out;
}

}  // namespace mubkit::quon
