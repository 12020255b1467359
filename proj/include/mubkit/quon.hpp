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

#include "mubkit/angular.hpp"

// Two truncated q-deformed oscillators with q a k-th root of unity, their
// k^2-dimensional product Fock space, and the embedding of the spin-j
// subspace |j,m> = |j+m, j-m).
namespace mubkit::quon {

/// Representation parameters: creation exponents a_exp, b_exp; the
/// annihilation exponents are 1 - a_exp and 1 - b_exp; s is fixed to 1/2.
struct QuonParams {
    int k = 2;
    double a_exp = 0.0;
    double b_exp = 1.0;
    double s = 0.5;

    double c_exp() const { return 1.0 - a_exp; }
    double d_exp() const { return 1.0 - b_exp; }
    /// Throws InvalidArgument when k < 2 or s != 1/2.
    void validate() const;
};

enum class BasisLabel { single, pair };

struct FockOperator {
    BasisLabel basis = BasisLabel::single;
    OperatorMatrix entries;

    int dim() const { return static_cast<int>(entries.rows()); }
};

/// [x]_q = (1 - q^x) / (1 - q), q = exp(2 pi i / k), principal branch for q^x.
Complex q_number(double x, int k);

struct QuonOperators {
    FockOperator a1_plus, a1_minus, a2_plus, a2_minus, n1, n2;
};

QuonOperators build_quon_operators(const QuonParams &p);

/// Largest entrywise residual of each defining relation.
struct QuonRelationReport {
    double q_commutator = 0.0;    // a- a+ - q a+ a- - 1, both algebras
    double number_raising = 0.0;  // [N, a+] - a+
    double number_lowering = 0.0; // [N, a-] + a-
    double number_hermitian = 0.0;
    double nilpotency = 0.0;      // (a+-)^k
    double cross_commutation = 0.0;  // [x1, x2] on the pair space

    double max() const;
};

QuonRelationReport verify_quon_relations(const QuonParams &p);

/// Lifts single-space operators to the pair space (index n1 * k + n2).
OperatorMatrix lift_first(const OperatorMatrix &op);
OperatorMatrix lift_second(const OperatorMatrix &op);

struct PairOperators {
    FockOperator h;
    FockOperator v;
};

/// h = sqrt(N1 (N2 + 1)) and v_ra = s1 s2 assembled from the a_exp = 0,
/// b_exp = 1 representation, phi_r = pi (k - 1) r.
PairOperators build_h_v_pair_space(int k, double r, int a);

/// j^2 = (N1 + N2)(N1 + N2 + 2) / 4 on the pair space.
FockOperator casimir_pair_space(int k);

class EpsilonEmbedding {
  public:
    explicit EpsilonEmbedding(int k);

    int k() const noexcept { return k_; }
    int two_j() const noexcept { return k_ - 1; }
    /// Pair-space index of |j, m> for m = j, j-1, ..., -j.
    const std::vector<int> &index_map() const noexcept { return index_map_; }

  private:
    int k_;
    std::vector<int> index_map_;
};

/// Compresses a pair-space operator onto span{|j,m>}. Throws
/// NonInvariantSubspace when the operator leaks out by more than `tol`.
OperatorMatrix restrict_to_epsilon(const FockOperator &op, const EpsilonEmbedding &emb,
                                   double tol = 1e-12);

/// Largest amplitude an operator sends from the embedded subspace to its complement.
double epsilon_leakage(const FockOperator &op, const EpsilonEmbedding &emb);

}  // namespace mubkit::quon
