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

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mubkit/document.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/gauss.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/selftest.hpp"
#include "mubkit/su2ops.hpp"
#include "mubkit/wigner.hpp"

namespace fs = std::filesystem;
using namespace mubkit;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Common {
    std::optional<int> dimension;
    std::optional<int> two_j;
    double r = 0.0;
    int a = 0;
    double tol = 1e-10;
    std::string format = "json";
    bool exact = false;
    std::uint64_t seed = 20260101;

    int dim() const {
        if (dimension && two_j && *dimension != *two_j + 1)
            throw Error(ErrorKind::InvalidArgument, "-d and -j disagree");
        if (dimension) return *dimension;
        if (two_j) return *two_j + 1;
        throw Error(ErrorKind::InvalidArgument, "one of -d/--dimension or -j/--two-j is required");
    }
};

void add_space_options(CLI::App *app, Common &c) {
    app->add_option("-d,--dimension", c.dimension, "Hilbert space dimension d = 2j + 1")
        ->check(CLI::PositiveNumber);
    app->add_option("-j,--two-j", c.two_j, "Twice the spin, 2j")->check(CLI::NonNegativeNumber);
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string fmt(Complex z) {
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

void write_document(const io::MatrixDocument &doc, const fs::path &dir, const std::string &stem,
                    const std::string &format, std::vector<std::string> &written) {
    fs::create_directories(dir);
    const bool csv = format == "csv";
    const fs::path path = dir / (stem + (csv ? ".csv" : ".json"));
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << (csv ? io::write_csv(doc) : io::write_json(doc));
    written.push_back(path.string());
}

std::string r_tag(double r) {
    std::ostringstream os;
    os << r;
    std::string s = os.str();
    for (char &ch : s)
        if (ch == '.') ch = 'p';
    return s;
}

int cmd_mub_gen(const Common &c, bool all_a, bool complete, bool hadamard, const std::string &out_dir) {
    const int d = c.dim();
    std::vector<std::string> written;
    const fs::path dir(out_dir);
    if (complete) {
        const auto set = mub::complete_mub_set(d, c.tol);
        for (std::size_t i = 0; i < set.bases.size(); ++i) {
            const nlohmann::json params = {{"d", d}, {"r", 0.0}, {"a", i == 0 ? -1 : static_cast<int>(i) - 1}};
            const std::string stem = i == 0 ? "basis_d" + std::to_string(d) + "_S"
                                            : "basis_d" + std::to_string(d) + "_r0_a" + std::to_string(i - 1);
            write_document(io::basis_document(set.bases[i], params, c.exact), dir, stem, c.format, written);
        }
    } else {
        const AngularSpace sp = AngularSpace::from_dimension(d);
        std::vector<int> as;
        if (all_a)
            for (int a = 0; a < d; ++a) as.push_back(a);
        else
            as.push_back(c.a);
        for (int a : as) {
            const auto b = mub::eigenbasis(sp, c.r, a);
            if (c.exact && !b.exact)
                std::cerr << "warning: r=" << c.r << " gives non-root-of-unity coefficients; writing floats only\n";
            const nlohmann::json params = {{"d", d}, {"r", c.r}, {"a", a}};
            const std::string stem =
                "basis_d" + std::to_string(d) + "_r" + r_tag(c.r) + "_a" + std::to_string(a);
            write_document(io::basis_document(mub::as_basis(b), params, c.exact), dir, stem, c.format, written);
            if (hadamard)
                write_document(io::hadamard_document(mub::hadamard_matrix(d, a), a, c.exact), dir,
                               "hadamard_d" + std::to_string(d) + "_a" + std::to_string(a), c.format, written);
        }
    }
    for (const auto &w : written) std::cout << "wrote " << w << "\n";
    std::cout << written.size() << " file(s)\n";
    return 0;
}

int cmd_mub_verify(const Common &c, const std::vector<std::string> &files, bool census) {
    if (census) {
        const auto rep = mub::unbiased_census(c.dim(), c.r, c.tol);
        std::cout << "census d=" << rep.d << " r=" << rep.r << " phi(d)=" << rep.totient << "\n";
        for (int a = 0; a < rep.d; ++a) std::cout << "  a=" << a << " partners=" << rep.partner_counts[a] << "\n";
        std::cout << "totient bound: " << (rep.meets_totient_bound ? "holds" : "VIOLATED") << "\n";
        bool ok = rep.meets_totient_bound;
        if (rep.affine_criterion_holds) {
            std::cout << "criterion (a-b) mod " << rep.prime
                      << " != 0: " << (*rep.affine_criterion_holds ? "holds" : "VIOLATED") << "\n";
            ok = ok && *rep.affine_criterion_holds;
        }
        return ok ? 0 : kExitFail;
    }
    if (files.size() < 2) throw Error(ErrorKind::InvalidArgument, "verify needs at least two basis files");
    std::vector<mub::Basis> bases;
    for (const auto &f : files) bases.push_back(io::basis_from_document(io::read_document_file(f)));
    int pairs = 0, unbiased = 0;
    for (std::size_t x = 0; x < bases.size(); ++x)
        for (std::size_t y = x + 1; y < bases.size(); ++y) {
            const auto rep = mub::unbiasedness_check(bases[x], bases[y], c.tol);
            ++pairs;
            unbiased += rep.unbiased ? 1 : 0;
            std::cout << rep.first << " vs " << rep.second << ": |overlap| in [" << fmt(rep.min_modulus) << ", "
                      << fmt(rep.max_modulus) << "] -> " << (rep.unbiased ? "unbiased" : "NOT unbiased") << "\n";
        }
    std::cout << unbiased << "/" << pairs << " pairs unbiased (tol " << c.tol << ")\n";
    return unbiased == pairs ? 0 : kExitFail;
}

struct GaussOptions {
    std::vector<long long> uvw;
    bool force = false;
    bool quadratic_sum = false;
    bool all = false;
    long long lambda = 1;
    long long mu = 0;
    std::vector<std::string> identities;
};

int cmd_gauss(const Common &c, const GaussOptions &g) {
    if (g.quadratic_sum) {
        const int d = c.dim();
        std::vector<std::pair<long long, long long>> grid;
        if (g.all) {
            for (long long lam = -(d - 1); lam <= d - 1; ++lam)
                if (lam != 0)
                    for (long long mu = 0; mu <= d - 1; ++mu) grid.push_back({lam, mu});
        } else {
            grid.push_back({g.lambda, g.mu});
        }
        int checked = 0, passed = 0;
        for (const auto &[lam, mu] : grid) {
            const auto res = gauss::quadratic_phase_sum(d, lam, mu);
            if (!g.all)
                std::cout << "sum = " << fmt(res.value) << ", |sum| = " << fmt(std::abs(res.value)) << "\n";
            if (res.magnitude_checked) {
                ++checked;
                passed += res.magnitude_residual <= c.tol ? 1 : 0;
            }
        }
        if (checked == 0) {
            std::cout << "magnitude rule not applicable (d prime and 1 <= |lambda| <= d-1 required)\n";
            return 0;
        }
        std::cout << passed << "/" << checked << " magnitude checks |sum| = sqrt(" << d << ") pass\n";
        return passed == checked ? 0 : kExitFail;
    }

    if (g.uvw.size() != 3) throw Error(ErrorKind::InvalidArgument, "gauss needs U V W");
    const long long u = g.uvw[0], v = g.uvw[1], w = g.uvw[2];
    std::optional<gauss::GaussSumSpec> spec;
    try {
        spec.emplace(u, v, w);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::ParityViolation || !g.force) throw;
        std::cerr << "warning: u w + v is odd; evaluating the raw sum, identities do not apply\n";
        spec.emplace(gauss::GaussSumSpec::unchecked(u, v, w));
    }
    const Complex s = gauss::gauss_sum(*spec);
    std::cout << "S(" << u << ", " << v << ", " << w << ") = " << fmt(std::abs(s) < 1e-12 ? Complex{} : s) << "\n";
    std::cout << "|S| = " << fmt(std::abs(s)) << "\n";
    bool ok = true;
    for (const auto &id : g.identities) {
        if (!spec->parity_ok()) throw Error(ErrorKind::ParityViolation, "identities need u w + v even");
        if (id == "translation") {
            double worst = 0.0;
            for (long long t = -2 * std::abs(w); t <= 2 * std::abs(w); ++t)
                worst = std::max(worst, gauss::translation_identity(*spec, t));
            ok = ok && worst <= c.tol;
            std::cout << "translation residual (t in -2w..2w): " << fmt(worst) << "\n";
        } else if (id == "negation") {
            const double r = gauss::negation_identity(*spec);
            ok = ok && r <= c.tol;
            std::cout << "negation residual: " << fmt(r) << "\n";
        } else if (id == "sign") {
            const auto sc = gauss::sign_case(*spec);
            std::cout << "predicted sign: " << (sc.predicted_sign == gauss::Sign::Plus ? "+" : "-");
            if (sc.direct_ratio) std::cout << ", direct ratio " << fmt(*sc.direct_ratio);
            else std::cout << ", sums vanish";
            std::cout << "\n";
            ok = ok && sc.consistent(c.tol);
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown identity '" + id + "'");
        }
    }
    return ok ? 0 : kExitFail;
}

int cmd_envelop(const Common &c, bool check_cases) {
    const int two_j = c.dim() - 1;
    if (two_j > 12) throw Error(ErrorKind::RangeError, "envelop supports 2j <= 12");
    const wigner::BCoefficients b(two_j, c.r, c.a);
    std::cout << "v_ra development, 2j=" << two_j << " r=" << c.r << " a=" << c.a << "\n";
    for (int k = 0; k <= two_j; ++k)
        for (int p = -k; p <= k; ++p) {
            const Complex v = b.trace_route(k, p);
            if (std::abs(v) > 1e-12) std::cout << "  b[" << k << "," << p << "] = " << fmt(v) << "\n";
        }
    const double route = b.max_route_difference(), recon = b.reconstruction_residual();
    std::cout << "closed form vs trace: " << fmt(route) << "\n";
    std::cout << "reconstruction residual: " << fmt(recon) << "\n";
    bool ok = route <= c.tol && recon <= c.tol;
    if (check_cases) {
        for (int tj = 1; tj <= 3; ++tj) {
            const double r = max_abs_diff(wigner::v00_closed_forms(tj), su2::v_ra_matrix(AngularSpace(tj), {0.0, 0}));
            std::cout << "v00 polynomial, 2j=" << tj << ": residual " << fmt(r) << "\n";
            ok = ok && r <= c.tol;
        }
    }
    return ok ? 0 : kExitFail;
}

int cmd_op(const Common &c, const std::string &name, int k, int p, const std::string &output) {
    const AngularSpace sp = AngularSpace::from_dimension(c.dim());
    const su2::VraParams vp{c.r, c.a};
    nlohmann::json params = {{"r", c.r}, {"a", c.a}};
    io::MatrixDocument doc;
    if (name == "hadamard") {
        doc = io::hadamard_document(mub::hadamard_matrix(sp.dim(), c.a), c.a, c.exact);
    } else {
        OperatorMatrix m;
        if (name == "h") m = su2::h_matrix(sp);
        else if (name == "v") m = su2::v_ra_matrix(sp, vp);
        else if (name == "z") m = su2::z_matrix(sp);
        else if (name == "jplus") m = su2::ladder_operators(sp, vp).plus;
        else if (name == "jminus") m = su2::ladder_operators(sp, vp).minus;
        else if (name == "jz") m = su2::ladder_operators(sp, vp).z;
        else if (name == "casimir") m = su2::casimir(sp, vp);
        else if (name == "u") {
            m = wigner::unit_tensor(sp.two_j(), k, p).matrix;
            params["k"] = k;
            params["p"] = p;
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown operator '" + name + "'");
        }
        doc = io::operator_document(name, sp, m, params);
    }
    const std::string text = c.format == "csv" ? io::write_csv(doc) : io::write_json(doc);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + output);
        out << text;
    }
    return 0;
}

int cmd_selftest(const Common &c, const std::string &suite, const std::string &fault) {
    selftest::Fault f = selftest::Fault::None;
    if (fault == "hadamard") f = selftest::Fault::CorruptHadamardExponent;
    else if (!fault.empty()) throw Error(ErrorKind::InvalidArgument, "unknown fault '" + fault + "'");
    const auto res = selftest::run(selftest::suite_from_string(suite), c.seed, c.tol, f);
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < res.failures.size() && i < kShown; ++i)
        std::cout << "FAIL [" << res.failures[i].tag << "] " << res.failures[i].detail << "\n";
    if (res.failures.size() > kShown) std::cout << "... " << res.failures.size() - kShown << " more\n";
    std::cout << "selftest " << suite << " (seed " << c.seed << "): " << res.checks - res.failures.size() << "/"
              << res.checks << " checks passed\n";
    return res.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mubkit: nonstandard angular-momentum bases, MUBs and Gauss sums"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    try {
        c.tol = io::RunConfig::from_environment().tolerance;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    app.add_option("--tol", c.tol, "Tolerance (default 1e-10 or MUBKIT_TOL)")->check(CLI::PositiveNumber);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", c.seed, "Seed for randomized sweeps");

    auto *mub_cmd = app.add_subcommand("mub", "Generate or verify bases")->require_subcommand(1)->fallthrough();

    auto *gen = mub_cmd->add_subcommand("gen", "Write basis documents");
    add_space_options(gen, c);
    bool all_a = false, complete = false, hadamard = false;
    std::string out_dir = ".";
    gen->add_option("-r", c.r, "Real parameter r");
    gen->add_option("-a", c.a, "Integer parameter a in 0..d-1");
    gen->add_flag("--all-a", all_a, "One basis per a = 0..d-1");
    gen->add_flag("--complete", complete, "Computational basis plus B_{0a} for all a (d prime)");
    gen->add_flag("--hadamard", hadamard, "Also write the Hadamard matrix for each a");
    gen->add_flag("--exact", c.exact, "Include exact root-of-unity exponents");
    gen->add_option("-o,--output-dir", out_dir, "Output directory");

    auto *verify = mub_cmd->add_subcommand("verify", "Check pairwise unbiasedness");
    add_space_options(verify, c);
    std::vector<std::string> files;
    bool census = false;
    verify->add_option("files", files, "Basis documents");
    verify->add_option("-r", c.r, "Real parameter r (census)");
    verify->add_flag("--census", census, "Exhaustive census over B_{ra}, a = 0..d-1");

    auto *gauss_cmd = app.add_subcommand("gauss", "Generalized quadratic Gauss sums");
    add_space_options(gauss_cmd, c);
    GaussOptions g;
    gauss_cmd->add_option("uvw", g.uvw, "U V W");
    gauss_cmd->add_flag("--force", g.force, "Evaluate even when u w + v is odd");
    gauss_cmd->add_flag("--quadratic-sum", g.quadratic_sum, "Quadratic sum rule with k(d-k) lambda + 2 k mu");
    gauss_cmd->add_flag("--all", g.all, "Sweep every lambda and mu in range");
    gauss_cmd->add_option("--lambda", g.lambda, "lambda");
    gauss_cmd->add_option("--mu", g.mu, "mu");
    gauss_cmd->add_option("--identity", g.identities, "Identity checks: translation, negation, sign")
        ->check(CLI::IsMember({"translation", "negation", "sign"}));

    auto *env = app.add_subcommand("envelop", "Expansion of v_ra on unit tensors");
    add_space_options(env, c);
    bool check_cases = false;
    env->add_option("-r", c.r, "Real parameter r");
    env->add_option("-a", c.a, "Integer parameter a");
    env->add_flag("--check-cases", check_cases, "Check the j = 1/2, 1, 3/2 polynomial forms of v_00");

    auto *op = app.add_subcommand("op", "Dump an operator matrix");
    add_space_options(op, c);
    std::string op_name, op_output;
    int op_k = 0, op_p = 0;
    op->add_option("name", op_name, "h, v, z, jplus, jminus, jz, casimir, u, hadamard")->required();
    op->add_option("-r", c.r, "Real parameter r");
    op->add_option("-a", c.a, "Integer parameter a");
    op->add_option("-k", op_k, "Unit tensor rank");
    op->add_option("-p", op_p, "Unit tensor component");
    op->add_flag("--exact", c.exact, "Exact exponents (hadamard)");
    op->add_option("-o,--output", op_output, "Output file (default stdout)");

    auto *st = app.add_subcommand("selftest", "Run invariant suites");
    std::string suite = "all", fault;
    st->add_option("--suite", suite, "quon, su2, mub, gauss, wigner or all")
        ->check(CLI::IsMember({"quon", "su2", "mub", "gauss", "wigner", "all"}));
    st->add_option("--inject-fault", fault, "Corrupt an input on purpose (hadamard)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*gen) return cmd_mub_gen(c, all_a, complete, hadamard, out_dir);
        if (*verify) return cmd_mub_verify(c, files, census);
        if (*gauss_cmd) return cmd_gauss(c, g);
        if (*env) return cmd_envelop(c, check_cases);
        if (*op) return cmd_op(c, op_name, op_k, op_p, op_output);
        if (*st) return cmd_selftest(c, suite, fault);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
