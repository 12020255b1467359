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

#include "mubkit/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mubkit/errors.hpp"
#include "mubkit/su2ops.hpp"

namespace mubkit::mub {

double rho(double J, double M, double x, double y, double z) {
    return 0.5 * (J + M) * (J - M + 1.0) * x - J * M * y + (J + M) * z;
}

Rational rho_exact(int two_J, int two_M, Rational x, Rational y, Rational z) {
    if ((two_J + two_M) % 2 != 0 || std::abs(two_M) > two_J)
        throw Error(ErrorKind::InvalidHalfInteger, "rho needs |M| <= J and J + M integral");
    const Rational J(two_J, 2), M(two_M, 2);
    return Rational(1, 2) * (J + M) * (J - M + 1) * x - J * M * y + (J + M) * z;
}

std::optional<Rational> as_small_rational(double x, std::int64_t max_den) {
    for (std::int64_t den = 1; den <= max_den; ++den) {
        const double num = std::round(x * static_cast<double>(den));
        if (std::abs(num / static_cast<double>(den) - x) < 1e-12)
            return Rational(static_cast<std::int64_t>(num), den);
    }
    return std::nullopt;
}

std::string EigenBasis::label() const {
    std::ostringstream os;
    os << "B[d=" << space.dim() << ",r=" << r << ",a=" << a << "]";
    return os.str();
}

Complex EigenBasis::eigenvalue(int alpha) const {
    return q_pow(space.j() * (a + r) - alpha, space.dim());
}

EigenBasis eigenbasis(const AngularSpace &s, double r, int a) {
    const int d = s.dim();
    if (a < 0 || a > s.two_j())
        throw Error(ErrorKind::RangeError, "a must lie in 0..2j, got " + std::to_string(a));

    EigenBasis out{s, r, a, OperatorMatrix(d, d), std::nullopt};
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        const std::int64_t k = s.k_of(i);
        // q^{-j m r}; j m = two_j two_m / 4.
        const double jm = 0.25 * s.two_j() * s.two_m(i);
        const Complex r_part = std::polar(1.0, -2.0 * std::numbers::pi * jm * r / d);
        for (int alpha = 0; alpha < d; ++alpha) {
            const std::int64_t twice = k * (d - k) * a + 2 * k * alpha;
            out.vectors(i, alpha) = norm * root_phase(twice, d) * r_part;
        }
    }

    if (const auto rr = as_small_rational(r)) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(d) * d);
        bool integral = true;
        for (int i = 0; i < d && integral; ++i)
            for (int alpha = 0; alpha < d; ++alpha) {
                const Rational twice =
                    2 * rho_exact(s.two_j(), s.two_m(i), Rational(a), *rr, Rational(alpha));
                if (twice.denominator() != 1) {
                    integral = false;
                    break;
                }
                exps[static_cast<std::size_t>(s.k_of(i)) * d + alpha] = twice.numerator();
            }
        if (integral) out.exact = PhaseMatrix(d, std::move(exps));
    }
    return out;
}

Basis as_basis(const EigenBasis &b) { return {b.label(), b.vectors, b.exact}; }

Basis computational_basis(int d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    return {"S[d=" + std::to_string(d) + "]", identity(d), std::nullopt};
}

Complex closed_form_overlap(const AngularSpace &sp, double r, int a, int alpha, double s, int b,
                            int beta) {
    Complex sum = 0.0;
    for (int i = 0; i < sp.dim(); ++i)
        sum += q_pow(rho(sp.j(), sp.m(i), b - a, s - r, beta - alpha), sp.dim());
    return sum / static_cast<double>(sp.dim());
}

Complex same_a_overlap(const AngularSpace &sp, double r, double s, int alpha, int beta) {
    const int d = sp.dim();
    const double j = sp.j();
    const double x = j * r - alpha - j * s + beta;
    const Complex lead = q_pow(j * (beta - alpha), d);
    const double ratio = x / d;
    if (std::abs(ratio - std::round(ratio)) < 1e-12) {
        const auto k = static_cast<long long>(std::round(ratio));
        const bool odd = (static_cast<long long>(sp.two_j()) * k) % 2 != 0;
        return odd ? -lead : lead;
    }
    return lead * std::sin(std::numbers::pi * x) /
           (d * std::sin(std::numbers::pi * x / d));
}

namespace {

void fill_moduli(OverlapReport &rep, int d) {
    const Eigen::MatrixXd mod = rep.overlaps.cwiseAbs();
    rep.max_modulus = mod.maxCoeff();
    rep.min_modulus = mod.minCoeff();
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    rep.unbiased = (mod.array() - target).abs().maxCoeff() <= rep.tolerance;
}

double shift_residual(const OperatorMatrix &o) {
    const auto d = o.rows();
    double worst = 0.0;
    for (Eigen::Index al = 0; al < d; ++al)
        for (Eigen::Index be = 0; be < d; ++be)
            worst = std::max(worst, std::abs(o(al, be) - o((al + 1) % d, (be + 1) % d)));
    return worst;
}

}  // namespace

OverlapReport overlap_matrix(const EigenBasis &b1, const EigenBasis &b2, double tol) {
    if (!(b1.space == b2.space))
        throw Error(ErrorKind::SpaceMismatch, "bases live in different spin spaces");
    const int d = b1.space.dim();
    OverlapReport rep;
    rep.first = b1.label();
    rep.second = b2.label();
    rep.tolerance = tol;
    rep.overlaps = b1.vectors.adjoint() * b2.vectors;

    double closed = 0.0;
    for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be)
            closed = std::max(closed, std::abs(rep.overlaps(al, be) -
                                               closed_form_overlap(b1.space, b1.r, b1.a, al,
                                                                   b2.r, b2.a, be)));
    rep.closed_form_residual = closed;
    rep.shift_structure_residual = shift_residual(rep.overlaps);
    fill_moduli(rep, d);
    return rep;
}

OverlapReport unbiasedness_check(const Basis &b1, const Basis &b2, double tol) {
    if (b1.dim() != b2.dim())
        throw Error(ErrorKind::DimensionMismatch, b1.label + " and " + b2.label + " differ in dimension");
    const int d = b1.dim();
    OverlapReport rep;
    rep.first = b1.label;
    rep.second = b2.label;
    rep.tolerance = tol;
    if (b1.exact && b2.exact) {
        rep.overlaps.resize(d, d);
        for (int al = 0; al < d; ++al)
            for (int be = 0; be < d; ++be) {
                Complex sum = 0.0;
                for (int k = 0; k < d; ++k)
                    sum += root_phase(b2.exact->exponent(k, be) - b1.exact->exponent(k, al), d);
                rep.overlaps(al, be) = sum / static_cast<double>(d);
            }
    } else {
        rep.overlaps = b1.vectors.adjoint() * b2.vectors;
    }
    fill_moduli(rep, d);
    return rep;
}

TraceCheck trace_relation_check(const AngularSpace &sp, double r, int a, double s, int b) {
    const int d = sp.dim();
    const su2::VraParams pr{r, a}, ps{s, b};
    const OperatorMatrix vr = su2::v_ra_matrix(sp, pr);
    const OperatorMatrix vs = su2::v_ra_matrix(sp, ps);
    TraceCheck out;
    out.trace = (vr.adjoint() * vs).trace();
    const Complex corner = std::polar(1.0, ps.phi(sp) - pr.phi(sp));
    out.expected = (a == b ? static_cast<double>(d) : 0.0) + corner - 1.0;
    out.trace_residual = std::abs(out.trace - out.expected);

    const OperatorMatrix o = eigenbasis(sp, r, a).vectors.adjoint() * eigenbasis(sp, s, b).vectors;
    Complex lhs = 0.0;
    for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be) lhs += q_pow(al - be, d) * std::norm(o(al, be));
    const double j = sp.j();
    Complex rhs = q_pow(j * (a + r - b - s), d) * (corner - 1.0);
    if (a == b) rhs += q_pow(j * (r - s), d) * static_cast<double>(d);
    out.sum_rule_residual = std::abs(lhs - rhs);
    return out;
}

CompleteSet complete_mub_set(int d, double tol) {
    if (!is_prime(d)) throw Error(ErrorKind::NotPrime, std::to_string(d) + " is not prime");
    CompleteSet out;
    out.bases.push_back(computational_basis(d));
    const AngularSpace sp = AngularSpace::from_dimension(d);
    for (int a = 0; a < d; ++a) out.bases.push_back(as_basis(eigenbasis(sp, 0.0, a)));
    out.all_unbiased = true;
    for (std::size_t x = 0; x < out.bases.size(); ++x)
        for (std::size_t y = x + 1; y < out.bases.size(); ++y) {
            out.reports.push_back(unbiasedness_check(out.bases[x], out.bases[y], tol));
            out.all_unbiased = out.all_unbiased && out.reports.back().unbiased;
        }
    return out;
}

PhaseMatrix hadamard_matrix(int d, int a) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    if (a < 0 || a > d - 1) throw Error(ErrorKind::RangeError, "a must lie in 0..d-1");
    std::vector<std::int64_t> exps(static_cast<std::size_t>(d) * d);
    for (std::int64_t k = 0; k < d; ++k)
        for (std::int64_t alpha = 0; alpha < d; ++alpha)
            exps[k * d + alpha] = k * (d - k) * a + 2 * k * alpha;
    return PhaseMatrix(d, std::move(exps));
}

HadamardCheck verify_hadamard(const PhaseMatrix &h, int a) {
    const int d = h.dim();
    const OperatorMatrix H = h.unscaled_matrix();
    const OperatorMatrix V = su2::v_ra_matrix(AngularSpace::from_dimension(d), {0.0, a});
    HadamardCheck out;
    out.orthogonality = max_abs_diff(H.adjoint() * H, static_cast<double>(d) * identity(d));
    OperatorMatrix expected = OperatorMatrix::Zero(d, d);
    for (int alpha = 0; alpha < d; ++alpha)
        expected(d - 1 - alpha, d - 1 - alpha) =
            static_cast<double>(d) * root_phase(static_cast<std::int64_t>(d - 1) * a - 2 * alpha, d);
    out.diagonalization = max_abs_diff(H.adjoint() * V * H, expected);
    return out;
}

std::vector<int> computational_basis_column_convention(int d) {
    std::vector<int> out;
    for (int k = d - 1; k >= 0; --k) out.push_back(k);
    return out;
}

int k_from_m(int two_j, int two_m) {
    if ((two_j + two_m) % 2 != 0 || std::abs(two_m) > two_j)
        throw Error(ErrorKind::InvalidHalfInteger, "m is not a label of spin j");
    return (two_j + two_m) / 2;
}

OperatorMatrix v_from_generators(int d, int a) {
    OperatorMatrix v = OperatorMatrix::Zero(d, d);
    const auto at = [d](int x) { return d - 1 - x; };
    v(at(0), at(d - 1)) += 1.0;
    for (int k = 1; k < d; ++k)
        v(at(k), at(k - 1)) += root_phase(2LL * (d - k) * a, d);
    return v;
}

void CompositeBasisSpec::validate() const {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1) throw Error(ErrorKind::InvalidArgument, "exponent e must be >= 1");
    if (digits.size() != static_cast<std::size_t>(e))
        throw Error(ErrorKind::InvalidArgument, "need exactly e digits");
    for (int x : digits)
        if (x < 0 || x >= p) throw Error(ErrorKind::RangeError, "digits must lie in 0..p-1");
}

Basis tensor_basis(const CompositeBasisSpec &spec) {
    spec.validate();
    if (spec.e < 2) throw Error(ErrorKind::InvalidArgument, "tensor bases need e >= 2");
    const int p = static_cast<int>(spec.p);
    const AngularSpace sp = AngularSpace::from_dimension(p);

    OperatorMatrix vectors = OperatorMatrix::Ones(1, 1);
    std::vector<std::int64_t> exps{0};
    int dim = 1;
    std::ostringstream label;
    label << "T[p=" << p << ",digits=";
    for (int t = 0; t < spec.e; ++t) {
        const PhaseMatrix h = hadamard_matrix(p, spec.digits[t]);
        const OperatorMatrix f = eigenbasis(sp, 0.0, spec.digits[t]).vectors;
        OperatorMatrix next(dim * p, dim * p);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) next.block(r * p, c * p, p, p) = vectors(r, c) * f;
        vectors = std::move(next);

        // Composite k = k_prev * p + k_t, composite alpha likewise.
        std::vector<std::int64_t> grown(static_cast<std::size_t>(dim) * p * dim * p);
        const int nd = dim * p;
        for (int k0 = 0; k0 < dim; ++k0)
            for (int a0 = 0; a0 < dim; ++a0)
                for (int k1 = 0; k1 < p; ++k1)
                    for (int a1 = 0; a1 < p; ++a1)
                        // exp(i pi e0 / dim) exp(i pi e1 / p) in units of pi / (dim p).
                        grown[static_cast<std::size_t>(k0 * p + k1) * nd + (a0 * p + a1)] =
                            exps[static_cast<std::size_t>(k0) * dim + a0] * p +
                            h.exponent(k1, a1) * dim;
        exps = std::move(grown);
        dim = nd;
        label << spec.digits[t];
    }
    label << "]";
    return {label.str(), std::move(vectors), PhaseMatrix(dim, std::move(exps))};
}

CensusReport unbiased_census(int d, double r, double tol) {
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "census needs d >= 2");
    const AngularSpace sp = AngularSpace::from_dimension(d);
    std::vector<Basis> bases;
    for (int a = 0; a < d; ++a) bases.push_back(as_basis(eigenbasis(sp, r, a)));

    CensusReport rep;
    rep.d = d;
    rep.r = r;
    rep.tolerance = tol;
    rep.unbiased.assign(d, std::vector<bool>(d, false));
    rep.partner_counts.assign(d, 0);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            const bool ub = unbiasedness_check(bases[a], bases[b], tol).unbiased;
            rep.unbiased[a][b] = rep.unbiased[b][a] = ub;
            if (ub) {
                ++rep.partner_counts[a];
                ++rep.partner_counts[b];
            }
        }
    rep.totient = euler_phi(d);
    rep.meets_totient_bound = std::all_of(rep.partner_counts.begin(), rep.partner_counts.end(),
                                          [&](int c) { return c >= rep.totient; });

    const auto [p, e] = prime_power(d);
    if (p > 2) {
        rep.prime = p;
        bool holds = true;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                if (a != b && rep.unbiased[a][b] != ((a - b) % p != 0)) holds = false;
        rep.affine_criterion_holds = holds;
    }
    return rep;
}

}  // namespace mubkit::mub
