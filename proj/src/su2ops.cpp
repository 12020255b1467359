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

#include "mubkit/su2ops.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "mubkit/errors.hpp"
#include "mubkit/phase.hpp"

namespace mubkit::su2 {

double VraParams::phi(const AngularSpace &s) const {
    return std::numbers::pi * s.two_j() * r;
}

WIndex::WIndex(int m1_, int m2_) : m1(m1_), m2(m2_) {
    if (m1 < 1 || m2 < 1) throw Error(ErrorKind::InvalidArgument, "W index components must be >= 1");
}

OperatorMatrix h_matrix(const AngularSpace &s) {
    const int d = s.dim();
    OperatorMatrix h = OperatorMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const int k = s.k_of(i);  // j + m
        h(i, i) = std::sqrt(static_cast<double>(k) * (d - k));
    }
    return h;
}

OperatorMatrix v_ra_matrix(const AngularSpace &s, const VraParams &p) {
    const int d = s.dim();
    OperatorMatrix v = OperatorMatrix::Zero(d, d);
    // Column i is |j, m> with j - m = i; it maps to row i - 1 (m + 1).
    for (int i = 1; i < d; ++i) v(i - 1, i) = root_phase(2LL * i * p.a, d);
    v(d - 1, 0) += std::polar(1.0, p.phi(s));
    return v;
}

OperatorMatrix z_matrix(const AngularSpace &s) {
    const int d = s.dim();
    OperatorMatrix z = OperatorMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) z(i, i) = root_phase(2LL * i, d);
    return z;
}

Ladder ladder_operators(const AngularSpace &s, const VraParams &p) {
    const OperatorMatrix h = h_matrix(s);
    const OperatorMatrix v = v_ra_matrix(s, p);
    const OperatorMatrix h2 = h * h;
    Ladder out;
    out.plus = h * v;
    out.minus = v.adjoint() * h;
    out.z = 0.5 * (h2 - v.adjoint() * h2 * v);
    return out;
}

OperatorMatrix casimir(const AngularSpace &s, const VraParams &p) {
    const OperatorMatrix h = h_matrix(s);
    const OperatorMatrix jz = ladder_operators(s, p).z;
    return h * h + jz * jz - jz;
}

namespace {

OperatorMatrix matrix_power(const OperatorMatrix &m, int n) {
    OperatorMatrix out = identity(static_cast<int>(m.rows()));
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

}  // namespace

OperatorMatrix t_operator(const AngularSpace &s, const VraParams &p, const WIndex &idx) {
    const OperatorMatrix v = v_ra_matrix(s, p);
    const OperatorMatrix z = z_matrix(s);
    return root_phase(-static_cast<std::int64_t>(idx.m1) * idx.m2, s.dim()) *
           (matrix_power(v, idx.m1) * matrix_power(z, idx.m2));
}

double w_infinity_residual(const AngularSpace &s, const VraParams &p, const WIndex &m,
                           const WIndex &n) {
    const OperatorMatrix tm = t_operator(s, p, m);
    const OperatorMatrix tn = t_operator(s, p, n);
    const OperatorMatrix tmn = t_operator(s, p, m + n);
    const double factor = 2.0 * std::sin(std::numbers::pi * m.wedge(n) / s.dim());
    return max_abs_diff(commutator(tm, tn), Complex(0.0, factor) * tmn);
}

Monomial Monomial::operator*(const Monomial &rhs) const {
    if (d != rhs.d || perm.size() != rhs.perm.size())
        throw Error(ErrorKind::DimensionMismatch, "monomial shapes differ");
    Monomial out{d, std::vector<int>(perm.size()), std::vector<std::int64_t>(perm.size())};
    for (std::size_t c = 0; c < perm.size(); ++c) {
        const int mid = rhs.perm[c];
        out.perm[c] = perm[mid];
        out.phase[c] = mod_floor(phase[mid] + rhs.phase[c], 2LL * d);
    }
    return out;
}

OperatorMatrix Monomial::dense() const {
    const int n = static_cast<int>(perm.size());
    OperatorMatrix out = OperatorMatrix::Zero(n, n);
    for (int c = 0; c < n; ++c) out(perm[c], c) = root_phase(phase[c], d);
    return out;
}

bool Monomial::from_dense(const OperatorMatrix &m, double tol, Monomial &out) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n || n == 0) return false;
    out.d = n;
    out.perm.assign(n, -1);
    out.phase.assign(n, 0);
    std::vector<bool> used(n, false);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            const Complex x = m(r, c);
            if (std::abs(x) <= tol) continue;
            if (out.perm[c] != -1 || used[r]) return false;
            const auto e = static_cast<std::int64_t>(
                std::llround(std::arg(x) * n / std::numbers::pi));
            if (std::abs(x - root_phase(e, n)) > tol) return false;
            out.perm[c] = r;
            out.phase[c] = mod_floor(e, 2LL * n);
            used[r] = true;
        }
        if (out.perm[c] == -1) return false;
    }
    return true;
}

std::vector<OperatorMatrix> pauli_generators(const AngularSpace &s) {
    const int d = s.dim();
    if (d % 2 == 1) return {v_ra_matrix(s, {0.0, 0}), z_matrix(s)};
    return {v_ra_matrix(s, {1.0, 0}), root_phase(1, d) * z_matrix(s)};
}

PauliGroup pauli_group(const AngularSpace &s) {
    const int d = s.dim();
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "Pauli group needs d >= 2");
    constexpr double tol = 1e-10;

    std::vector<Monomial> gens;
    for (const auto &g : pauli_generators(s)) {
        Monomial mono;
        if (!Monomial::from_dense(g, tol, mono))
            throw Error(ErrorKind::InvalidArgument, "generator is not a phased permutation");
        gens.push_back(std::move(mono));
    }

    using Key = std::pair<std::vector<int>, std::vector<std::int64_t>>;
    std::map<Key, int> index;
    std::vector<Monomial> elems;
    const std::size_t limit = 2ULL * d * d * d;

    Monomial id{d, std::vector<int>(d), std::vector<std::int64_t>(d, 0)};
    for (int i = 0; i < d; ++i) id.perm[i] = i;
    index.emplace(Key{id.perm, id.phase}, 0);
    elems.push_back(id);

    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        const int x = frontier.front();
        frontier.pop_front();
        for (const auto &g : gens) {
            Monomial y = elems[x] * g;
            Key key{y.perm, y.phase};
            if (index.contains(key)) continue;
            if (elems.size() >= limit)
                throw Error(ErrorKind::ClosureOverflow,
                            "closure exceeded 2 d^3 = " + std::to_string(limit) + " elements");
            index.emplace(std::move(key), static_cast<int>(elems.size()));
            frontier.push_back(static_cast<int>(elems.size()));
            elems.push_back(std::move(y));
        }
    }

    PauliGroup group;
    group.identity_index = 0;
    group.elements.reserve(elems.size());
    for (const auto &e : elems) group.elements.push_back(e.dense());
    group.table.assign(elems.size(), std::vector<int>(elems.size(), -1));
    for (std::size_t x = 0; x < elems.size(); ++x)
        for (std::size_t y = 0; y < elems.size(); ++y) {
            const Monomial p = elems[x] * elems[y];
            group.table[x][y] = index.at(Key{p.perm, p.phase});
        }
    return group;
}

CommuteCheck vr0_vs0_commute(const AngularSpace &s, double r, double s_param, double tol) {
    const double x = s.j() * (s_param - r);
    const bool criterion = std::abs(x - std::round(x)) <= tol;
    const OperatorMatrix vr = v_ra_matrix(s, {r, 0});
    const OperatorMatrix vs = v_ra_matrix(s, {s_param, 0});
    const double norm = max_abs(commutator(vr, vs));
    // |[v_r0, v_s0]| = 2|sin(pi x)| exactly, so the matrix threshold mirrors tol.
    const double threshold = 2.0 * std::sin(std::numbers::pi * tol) + 1e-13;
    const bool commutes = norm <= threshold;
    if (commutes != criterion)
        throw Error(ErrorKind::CriterionMismatch,
                    "criterion says " + std::string(criterion ? "commute" : "no commute") +
                        " but commutator norm is " + std::to_string(norm));
    return {criterion, norm};
}

}  // namespace mubkit::su2
