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

#include "mubkit/selftest.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "mubkit/errors.hpp"
#include "mubkit/gauss.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/quon.hpp"
#include "mubkit/su2ops.hpp"
#include "mubkit/wigner.hpp"

namespace mubkit::selftest {

namespace {

class Recorder {
  public:
    explicit Recorder(Result &r) : r_(r) {}

    void expect_small(std::string_view tag, double residual, double tol, const std::string &where) {
        ++r_.checks;
        if (!(residual <= tol)) {
            std::ostringstream os;
            os << where << ": residual " << residual << " > " << tol;
            r_.failures.push_back({std::string(tag), os.str()});
        }
    }

    void expect(std::string_view tag, bool ok, const std::string &where) {
        ++r_.checks;
        if (!ok) r_.failures.push_back({std::string(tag), where});
    }

  private:
    Result &r_;
};

std::string at(std::initializer_list<std::pair<const char *, double>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, v] : kv) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

void quon_suite(Recorder &rec, double tol) {
    for (int k = 2; k <= 8; ++k) {
        const auto rep = quon::verify_quon_relations({k});
        rec.expect_small("quon-relations", rep.max(), tol, at({{"k", k}}));
        const quon::EpsilonEmbedding emb(k);
        const AngularSpace sp(k - 1);
        for (int a = 0; a < k; ++a)
            for (double r : {0.0, 1.0, 0.37}) {
                const auto pair = quon::build_h_v_pair_space(k, r, a);
                const double dh = max_abs_diff(quon::restrict_to_epsilon(pair.h, emb), su2::h_matrix(sp));
                const double dv =
                    max_abs_diff(quon::restrict_to_epsilon(pair.v, emb), su2::v_ra_matrix(sp, {r, a}));
                rec.expect_small("quon-pair-space-h", dh, tol, at({{"k", k}, {"a", a}, {"r", r}}));
                rec.expect_small("quon-pair-space-v", dv, tol, at({{"k", k}, {"a", a}, {"r", r}}));
            }
    }
}

void su2_suite(Recorder &rec, double tol, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 2.0);
    for (int d = 2; d <= 8; ++d) {
        const AngularSpace sp = AngularSpace::from_dimension(d);
        OperatorMatrix ref_plus_minus, ref_z_plus;
        for (int a = 0; a < d; ++a)
            for (double r : {0.0, 1.0, 0.37}) {
                const su2::VraParams p{r, a};
                const OperatorMatrix v = su2::v_ra_matrix(sp, p);
                OperatorMatrix vd = identity(d);
                for (int i = 0; i < d; ++i) vd = vd * v;
                const Complex phase = std::polar(1.0, 2 * std::numbers::pi * sp.j() * (a + r));
                rec.expect_small("cyclicity", max_abs_diff(vd, phase * identity(d)), tol,
                                 at({{"d", d}, {"a", a}, {"r", r}}));

                const auto b = mub::eigenbasis(sp, r, a);
                for (int al = 0; al < d; ++al)
                    rec.expect_small("eigen-relation",
                                     (v * b.vectors.col(al) - b.eigenvalue(al) * b.vectors.col(al))
                                         .cwiseAbs()
                                         .maxCoeff(),
                                     tol, at({{"d", d}, {"a", a}, {"r", r}, {"alpha", al}}));

                const su2::Ladder l = su2::ladder_operators(sp, p);
                const OperatorMatrix pm = commutator(l.plus, l.minus);
                const OperatorMatrix zp = commutator(l.z, l.plus);
                rec.expect_small("su2-commutators",
                                 std::max({max_abs_diff(pm, 2.0 * l.z), max_abs_diff(zp, l.plus),
                                           max_abs_diff(commutator(l.z, l.minus), -l.minus)}),
                                 tol, at({{"d", d}, {"a", a}, {"r", r}}));
                rec.expect_small("casimir",
                                 max_abs_diff(su2::casimir(sp, p), sp.j() * (sp.j() + 1) * identity(d)),
                                 tol, at({{"d", d}, {"a", a}, {"r", r}}));
                if (ref_plus_minus.size() == 0) {
                    ref_plus_minus = pm;
                    ref_z_plus = l.z;
                }
                rec.expect_small("su2-parameter-independence",
                                 std::max(max_abs_diff(pm, ref_plus_minus), max_abs_diff(l.z, ref_z_plus)),
                                 tol, at({{"d", d}, {"a", a}, {"r", r}}));
            }
        const double r = unit(rng), s = unit(rng);
        const auto c = su2::vr0_vs0_commute(sp, r, s);
        rec.expect("commuting-pair", !c.criterion || c.commutator_norm <= tol, at({{"d", d}, {"r", r}, {"s", s}}));
    }
    for (int d = 2; d <= 5; ++d) {
        const AngularSpace sp = AngularSpace::from_dimension(d);
        for (int m1 = 1; m1 <= 3; ++m1)
            for (int m2 = 1; m2 <= 3; ++m2)
                for (int n1 = 1; n1 <= 3; ++n1)
                    for (int n2 = 1; n2 <= 3; ++n2)
                        rec.expect_small("w-infinity",
                                         su2::w_infinity_residual(sp, {0.37, d - 1}, {m1, m2}, {n1, n2}),
                                         tol, at({{"d", d}, {"m1", m1}, {"m2", m2}, {"n1", n1}, {"n2", n2}}));
        rec.expect("pauli-order", su2::pauli_group(sp).order() == static_cast<std::size_t>(d) * d * d,
                   at({{"d", d}}));
    }
}

void mub_suite(Recorder &rec, double tol, std::mt19937_64 &rng, Fault fault) {
    for (int d : {2, 3, 5, 7, 11, 13})
        rec.expect("complete-set", mub::complete_mub_set(d, tol).all_unbiased, at({{"d", d}}));

    std::uniform_int_distribution<int> dim(2, 9);
    std::uniform_real_distribution<double> real(-1.5, 1.5);
    for (int n = 0; n < 200; ++n) {
        const int d = dim(rng);
        std::uniform_int_distribution<int> idx(0, d - 1);
        const AngularSpace sp = AngularSpace::from_dimension(d);
        const double r = real(rng), s = real(rng);
        const int a = idx(rng), b = idx(rng);
        const auto rep = mub::overlap_matrix(mub::eigenbasis(sp, r, a), mub::eigenbasis(sp, s, b), tol);
        const std::string where = at({{"d", d}, {"r", r}, {"a", a}, {"s", s}, {"b", b}});
        rec.expect_small("overlap-closed-form", *rep.closed_form_residual, tol, where);
        rec.expect_small("overlap-shift-structure", *rep.shift_structure_residual, tol, where);
        if (n < 50) {
            const auto tc = mub::trace_relation_check(sp, r, a, s, b);
            rec.expect_small("trace-relation", tc.trace_residual, tol, where);
            rec.expect_small("sum-rule", tc.sum_rule_residual, tol, where);
        }
    }

    for (int d = 2; d <= 9; ++d)
        for (int a = 0; a < d; ++a) {
            PhaseMatrix h = mub::hadamard_matrix(d, a);
            if (fault == Fault::CorruptHadamardExponent && d == 5 && a == 2)
                h.set_exponent(1, 1, h.exponent(1, 1) + 1);
            const auto hc = mub::verify_hadamard(h, a);
            rec.expect_small("generalized-hadamard", std::max(hc.orthogonality, hc.diagonalization), tol,
                             at({{"d", d}, {"a", a}}));
            rec.expect_small("generator-form",
                             max_abs_diff(mub::v_from_generators(d, a),
                                          su2::v_ra_matrix(AngularSpace::from_dimension(d), {0.0, a})),
                             tol, at({{"d", d}, {"a", a}}));
        }

    const auto c9 = mub::unbiased_census(9, 0.0, tol);
    rec.expect("census-totient-bound", c9.meets_totient_bound, "d=9");
    rec.expect("census-affine-criterion", c9.affine_criterion_holds.value_or(false), "d=9");
    rec.expect("census-totient-bound", mub::unbiased_census(15, 0.0, tol).meets_totient_bound, "d=15");
}

void gauss_suite(Recorder &rec, std::mt19937_64 &rng) {
    constexpr double kTight = 1e-12;
    for (int v : {2, 6, 10, 14})
        rec.expect_small("vanishing-gauss-sum", std::abs(gauss::gauss_sum({2, v, 8})), kTight,
                         at({{"u", 2}, {"v", v}, {"w", 8}}));
    for (int v : {2, 6, 10})
        rec.expect_small("vanishing-gauss-sum", std::abs(gauss::gauss_sum({4, v, 6})), kTight,
                         at({{"u", 4}, {"v", v}, {"w", 6}}));

    std::uniform_int_distribution<int> wdist(1, 12), udist(-12, 12), vdist(-30, 30);
    for (int n = 0; n < 100; ++n) {
        int w = wdist(rng) * (rng() % 2 ? 1 : -1);
        int u = udist(rng);
        if (u == 0) u = 1;
        int v = vdist(rng);
        if ((u * w + v) % 2 != 0) ++v;
        const gauss::GaussSumSpec spec(u, v, w);
        const std::string where = at({{"u", u}, {"v", v}, {"w", w}});
        for (int t = -2 * std::abs(w); t <= 2 * std::abs(w); ++t)
            rec.expect_small("translation-relation", gauss::translation_identity(spec, t), kTight, where);
        rec.expect_small("negation-identity", gauss::negation_identity(spec), kTight, where);
        rec.expect_small("periodicity",
                         std::abs(gauss::gauss_sum(spec) - gauss::gauss_sum({u, v + 2 * w, w})), kTight,
                         where);
        try {
            rec.expect("sign-rule", gauss::sign_case(spec).consistent(), where);
        } catch (const Error &e) {
            rec.expect("sign-rule", e.kind() == ErrorKind::Inapplicable, where);
        }
        if (w % 2 != 0)
            rec.expect_small("derived-relation", gauss::derived_relation_check(u, v, w), kTight, where);
    }

    for (int w = 1; w <= 12; ++w)
        for (int u = 1; u <= 12; ++u) {
            const long g = std::gcd(u, w);
            rec.expect("translation-orbit", gauss::translation_orbit(u, u * w % 2, w).size() ==
                                                 static_cast<std::size_t>(w / g),
                       at({{"u", u}, {"w", w}}));
        }
    rec.expect("minus-sign-count", gauss::minus_sign_count(2, 8) == 4, "u=2 w=8");

    for (int w : {3, 5, 7, 11, 13})
        for (int u = -(w - 1); u <= w - 1; ++u) {
            if (u == 0) continue;
            for (int v = 0; v < 2 * w; ++v) {
                if ((u * w + v) % 2 != 0) continue;
                rec.expect_small("prime-magnitude", std::abs(gauss::prime_magnitude(u, v, w) - std::sqrt(w)),
                                 1e-10, at({{"u", u}, {"v", v}, {"w", w}}));
                if (u % 2 == 0) {
                    const auto red = gauss::even_u_reduction(u, v, w);
                    rec.expect_small("even-u-reduction", std::abs(red.direct - red.reduced), 1e-10,
                                     at({{"u", u}, {"v", v}, {"w", w}}));
                }
            }
        }

    for (int d : {3, 5, 7, 11})
        for (int lam = -(d - 1); lam <= d - 1; ++lam) {
            if (lam == 0) continue;
            for (int mu = -(d - 1); mu <= d - 1; ++mu) {
                const auto c = gauss::quadratic_phase_sum(d, lam, mu);
                rec.expect("quadratic-sum-rule", c.magnitude_checked && c.magnitude_residual <= 1e-10,
                           at({{"d", d}, {"lambda", lam}, {"mu", mu}}));
            }
        }

    for (int d = 2; d <= 7; ++d) {
        const AngularSpace sp = AngularSpace::from_dimension(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                if (a == b) continue;
                const auto o = mub::overlap_matrix(mub::eigenbasis(sp, 0.25, a), mub::eigenbasis(sp, 0.25, b));
                double worst = 0.0;
                for (int al = 0; al < d; ++al)
                    for (int be = 0; be < d; ++be)
                        worst = std::max(worst, std::abs(o.overlaps(al, be) -
                                                         gauss::overlap_via_gauss(d - 1, 0.25, a, b, al, be)));
                rec.expect_small("gauss-overlap", worst, kTight, at({{"d", d}, {"a", a}, {"b", b}}));
            }
    }
}

void wigner_suite(Recorder &rec, double tol, std::mt19937_64 &rng) {
    // 3jm symmetries for all j <= 2.
    for (int j1 = 0; j1 <= 4; ++j1)
        for (int j2 = 0; j2 <= 4; ++j2)
            for (int j3 = std::abs(j1 - j2); j3 <= std::min(4, j1 + j2); j3 += 2)
                for (int m1 = -j1; m1 <= j1; m1 += 2)
                    for (int m2 = -j2; m2 <= j2; m2 += 2) {
                        const int m3 = -m1 - m2;
                        if (std::abs(m3) > j3) continue;
                        const double w = wigner::three_jm({j1, j2, j3, m1, m2, m3});
                        const double cyc = wigner::three_jm({j2, j3, j1, m2, m3, m1});
                        const double swp = wigner::three_jm({j2, j1, j3, m2, m1, m3});
                        const double sign = ((j1 + j2 + j3) / 2) % 2 == 0 ? 1.0 : -1.0;
                        const std::string where = at({{"2j1", j1}, {"2j2", j2}, {"2j3", j3}, {"2m1", m1}, {"2m2", m2}});
                        rec.expect_small("3jm-cyclic", std::abs(w - cyc), 1e-14, where);
                        rec.expect_small("3jm-swap", std::abs(w - sign * swp), 1e-14, where);
                    }

    for (int tj = 0; tj <= 5; ++tj) {
        std::vector<wigner::UnitTensor> us;
        for (int k = 0; k <= tj; ++k)
            for (int p = -k; p <= k; ++p) us.push_back(wigner::unit_tensor(tj, k, p));
        for (const auto &x : us)
            for (const auto &y : us) {
                const Complex tr = (x.matrix.adjoint() * y.matrix).trace();
                const double expect = (x.k == y.k && x.p == y.p) ? 1.0 / (2 * x.k + 1) : 0.0;
                rec.expect_small("unit-tensor-orthogonality", std::abs(tr - expect), tol,
                                 at({{"2j", tj}, {"k", x.k}, {"p", x.p}, {"l", y.k}, {"q", y.p}}));
            }
    }

    for (int tj = 0; tj <= 4; ++tj)
        for (int k = 0; k <= tj; ++k)
            for (int p = -k; p <= k; ++p)
                rec.expect_small("enveloping-realization",
                                 max_abs_diff(wigner::unit_tensor_enveloping(tj, k, p),
                                              wigner::unit_tensor(tj, k, p).matrix),
                                 tol, at({{"2j", tj}, {"k", k}, {"p", p}}));

    for (int tj = 0; tj <= 6; ++tj)
        for (int a = 0; a <= tj; ++a)
            for (double r : {0.0, 1.0}) {
                const wigner::BCoefficients b(tj, r, a);
                const std::string where = at({{"2j", tj}, {"a", a}, {"r", r}});
                rec.expect_small("b-closed-form", b.max_route_difference(), 1e-12, where);
                rec.expect_small("v-development", b.reconstruction_residual(), 1e-12, where);
            }
    for (int tj = 1; tj <= 3; ++tj)
        rec.expect_small("v00-polynomial",
                         max_abs_diff(wigner::v00_closed_forms(tj), su2::v_ra_matrix(AngularSpace(tj), {0.0, 0})),
                         1e-12, at({{"2j", tj}}));

    for (int tj = 0; tj <= 8; ++tj) {
        const int d = tj + 1;
        for (int p = 0; p < d; ++p) {
            const OperatorMatrix D =
                wigner::rotation_new_scheme(tj, 0.37, tj / 2, {2 * std::numbers::pi * p / d, 0.0, 0.0});
            OperatorMatrix expect = OperatorMatrix::Zero(d, d);
            for (int al = 0; al < d; ++al) expect(((al - p) % d + d) % d, al) = q_pow(0.5 * tj * p, d);
            rec.expect_small("z-rotation-law", max_abs_diff(D, expect), tol, at({{"2j", tj}, {"p", p}}));
        }
    }

    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    for (int n = 0; n < 10; ++n) {
        const int tj = 1 + static_cast<int>(rng() % 5);
        const wigner::EulerAngles e{ang(rng), ang(rng) / 2, ang(rng)};
        const int a = static_cast<int>(rng() % (tj + 1));
        const OperatorMatrix D = wigner::rotation_new_scheme(tj, 0.5, a, e);
        const std::string where = at({{"2j", tj}, {"a", a}, {"alpha", e.alpha}, {"beta", e.beta}});
        rec.expect_small("rotation-unitarity", max_abs_diff(D.adjoint() * D, identity(tj + 1)), tol, where);
        rec.expect_small("rotation-conjugation", wigner::rotation_conjugation_residual(tj, 0.5, a, e), tol, where);
    }

    for (int j3 : {0, 2}) {
        for (int al3 = 0; al3 <= j3; ++al3) {
            double norm = 0.0, worst = 0.0;
            for (int a1 = 0; a1 <= 1; ++a1)
                for (int a2 = 0; a2 <= 1; ++a2) {
                    const Complex c = wigner::coupling_new_scheme(1, 1, j3, a1, a2, al3, 0.0, 0);
                    norm += std::norm(c);
                    worst = std::max(worst,
                                     std::abs(c - wigner::coupling_by_transform(1, 1, j3, a1, a2, al3, 0.0, 0)));
                }
            rec.expect_small("coupling-unitarity", std::abs(norm - 1.0), tol, at({{"2j3", j3}, {"alpha3", al3}}));
            rec.expect_small("coupling-transform", worst, tol, at({{"2j3", j3}, {"alpha3", al3}}));
        }
    }
}

}  // namespace

Suite suite_from_string(std::string_view s) {
    if (s == "quon") return Suite::Quon;
    if (s == "su2") return Suite::Su2;
    if (s == "mub") return Suite::Mub;
    if (s == "gauss") return Suite::Gauss;
    if (s == "wigner") return Suite::Wigner;
    if (s == "all") return Suite::All;
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(s) + "'");
}

Result run(Suite suite, std::uint64_t seed, double tol, Fault fault) {
    Result result;
    Recorder rec(result);
    std::mt19937_64 rng(seed);
    const auto wants = [suite](Suite s) { return suite == Suite::All || suite == s; };
    if (wants(Suite::Quon)) quon_suite(rec, tol);
    if (wants(Suite::Su2)) su2_suite(rec, tol, rng);
    if (wants(Suite::Mub)) mub_suite(rec, tol, rng, fault);
    if (wants(Suite::Gauss)) gauss_suite(rec, rng);
    if (wants(Suite::Wigner)) wigner_suite(rec, tol, rng);
    return result;
}

}  // namespace mubkit::selftest
