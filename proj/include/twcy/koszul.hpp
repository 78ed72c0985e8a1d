#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "twcy/algebra.hpp"

namespace twcy {

// Safety cutoff for the dual algebra construction.
constexpr int kDualSafetyCutoff = 12;

// Relations of A! = T(V*)/(R^perp) under the pairing <x~_i x~_j, x_k x_l> = delta_ik delta_jl.
QuadraticPresentation koszul_dual_presentation(const QuadraticPresentation& p);
GradedAlgebra koszul_dual(const QuadraticPresentation& p);

struct Split {
    long a, b;
    Rational coef;
};

/**
 * A¡ as the graded dual of A!, in the dual basis. Elements are addressed by a
 * global index k ordered by weight; index 0 is the counit letter.
 */
struct KoszulDualCoalgebra {
    std::vector<int> weight;
    std::vector<long> local;
    std::vector<std::vector<long>> global;
    std::vector<std::string> labels;
    std::vector<std::vector<Split>> delta;

    std::size_t size() const { return weight.size(); }
    int top() const { return weight.empty() ? 0 : weight.back(); }
    long generator(int i) const { return global.at(1).at(i); }
    // Terms of the full coproduct with the first (resp. last) factor of weight 1.
    std::vector<Split> left_split(long c) const;
    std::vector<Split> right_split(long c) const;
    // Terms of the coproduct with both factors of positive weight.
    std::vector<Split> reduced_delta(long c) const;
};

KoszulDualCoalgebra dual_coalgebra(const GradedAlgebra& a_dual, const std::vector<std::string>& names);

bool coassociative(const KoszulDualCoalgebra& c);
bool counital(const KoszulDualCoalgebra& c);

struct FrobeniusData {
    int n = 0;
    GradedAlgebra dual;
    KoszulDualCoalgebra coalgebra;
    // pairing[m](i, j) = coefficient of the top basis vector in e_i * f_j,
    // e_i in A!_m and f_j in A!_{n-m}.
    std::vector<Matrix> pairing;
    long eta = 0;
    std::vector<Split> delta_eta;
    // Nakayama matrices on A!_m, columns are images.
    std::vector<Matrix> sigma_star;
    // Induced automorphism on A¡_m and its inverse, columns are images.
    std::vector<Matrix> sigma;
    std::vector<Matrix> sigma_inv;

    // Nakayama automorphism of A on generators.
    const Matrix& sigma_gen() const { return sigma.at(1); }
    // Pairing on all of A! in global indices.
    Matrix pairing_full() const;
    Rational pair(long k, long l) const;
    // sigma on a global coalgebra index, as a list of (global index, coefficient).
    SparseVector sigma_of(long k) const;
    SparseVector sigma_inv_of(long k) const;
};

// Throws InputError("input is not Frobenius / not AS-regular: ...") on failure.
FrobeniusData frobenius_check(const GradedAlgebra& a_dual, const std::vector<std::string>& names);
FrobeniusData frobenius_data(const QuadraticPresentation& p);

struct FrobeniusInvariants {
    bool associative = true;
    bool invariant_pairing = true;
    bool sigma_star_multiplicative = true;
    bool sigma_star_isometry = true;
    bool defining_relation = true;
    bool delta_eta_sigma_invariant = true;
    bool dims_symmetric = true;
    bool all() const
    {
        return associative && invariant_pairing && sigma_star_multiplicative && sigma_star_isometry &&
               defining_relation && delta_eta_sigma_invariant && dims_symmetric;
    }
};

FrobeniusInvariants check_frobenius_invariants(const FrobeniusData& f);

struct KoszulityCertificate {
    bool certified = true;
    int cutoff = 0;
    int failing_weight = -1;
    int failing_degree = -1;
};

// Exactness of the left Koszul complex A ⊗ A¡ away from (0, 0).
KoszulityCertificate koszulity_certificate(const QuadraticPresentation& p, const KoszulDualCoalgebra& c,
                                           int cutoff);

}  // namespace twcy
