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
#include <cstdint>
#include <optional>
#include <set>

namespace mubkit::gauss {

using Complex = std::complex<double>;

/// Parameters of S(u, v, w) = sum_{k=0}^{|w|-1} exp(i pi (u k^2 + v k) / w).
class GaussSumSpec {
  public:
    /// Requires u w != 0 and u w + v even; throws InvalidArgument or ParityViolation.
    GaussSumSpec(std::int64_t u, std::int64_t v, std::int64_t w);

    /// Skips the parity requirement (u w != 0 is still enforced). The sum is
    /// then not periodic in k and most identities below do not hold.
    static GaussSumSpec unchecked(std::int64_t u, std::int64_t v, std::int64_t w);

    std::int64_t u() const noexcept { return u_; }
    std::int64_t v() const noexcept { return v_; }
    std::int64_t w() const noexcept { return w_; }
    bool parity_ok() const noexcept { return parity_ok_; }

  private:
    GaussSumSpec(std::int64_t u, std::int64_t v, std::int64_t w, bool check);

    std::int64_t u_;
    std::int64_t v_;
    std::int64_t w_;
    bool parity_ok_;
};

Complex gauss_sum(const GaussSumSpec &spec);

/// |S(u,v,w) - q^{(u t^2 + v t)/2} S(u, v + 2ut, w)| with q = exp(2 pi i / w).
double translation_identity(const GaussSumSpec &spec, std::int64_t t);

/// |S(u, 2n - uw, w) - q^{-(w^2-1)u/8 + (w-1)n/2} S(u, 2n - u, w)|; w odd.
double derived_relation_check(std::int64_t u, std::int64_t n, std::int64_t w);

/// |S(u,v,w) - S(u,-v,w)|.
double negation_identity(const GaussSumSpec &spec);

enum class Sign { Plus, Minus };

enum class SignReason {
    OddSolutionLowValuation,  // v2(u) <= v2(w), an odd t solves ut + v = w mod 2w
    SolutionHighValuation,    // v2(u) > v2(w), some t solves ut + v = w mod 2w
    LowValuationEvenOnly,     // v2(u) <= v2(w), only even t solve it
    NoSolution,               // ut + v = w mod 2w has no solution
};

struct SignCase {
    GaussSumSpec spec;
    Sign predicted_sign;
    SignReason reason;
    /// S(u,v,w) / S(u,-v,w) when the sums do not vanish.
    std::optional<Complex> direct_ratio;

    bool consistent(double tol = 1e-10) const;
};

/// Throws Inapplicable when no t solves ut + v = 0 mod w.
SignCase sign_case(const GaussSumSpec &spec);

/// Number of v in one period 0..2|w|-1 (with uw + v even and the sign rule
/// applicable) for which the predicted sign is minus.
int minus_sign_count(std::int64_t u, std::int64_t w);

int two_valuation(std::int64_t n);

/// |S(u,v,w)| for w an odd prime; throws unless u != 0 mod w, |u| < w and
/// uw + v even.
double prime_magnitude(std::int64_t u, std::int64_t v, std::int64_t w);

struct EvenReduction {
    double direct;   // |S(u, v, w)|
    double reduced;  // |sum_k q^{xi k^2}|, xi = u/2
};

/// u even, w odd prime.
EvenReduction even_u_reduction(std::int64_t u, std::int64_t v, std::int64_t w);

struct QuadraticSumResult {
    Complex value;
    /// True when d is prime and 1 <= |lam| <= d-1, 0 <= |mu| <= d-1.
    bool magnitude_checked = false;
    /// ||value| - sqrt(d)| when checked.
    double magnitude_residual = 0.0;
};

/// sum_{k=0}^{d-1} exp(i pi [k(d-k) lam + 2 k mu] / d).
QuadraticSumResult quadratic_phase_sum(std::int64_t d, std::int64_t lam, std::int64_t mu);

/// S(u,v,w)/w with u = a-b, v = -(a-b)(2j+1) - 2(alpha-beta), w = 2j+1.
/// The value does not depend on r.
Complex overlap_via_gauss(int two_j, double r, int a, int b, int alpha, int beta);

/// Residues mod 2|w| reached from v by v -> v + 2ut.
std::set<std::int64_t> translation_orbit(std::int64_t u, std::int64_t v, std::int64_t w);

}  // namespace mubkit::gauss
