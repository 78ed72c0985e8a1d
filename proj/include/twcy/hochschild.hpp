#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twcy/koszul.hpp"

namespace twcy {

/**
 * Dimensions per (degree i, weight w), together with the dimensions of the
 * chain pieces they were computed from.
 */
struct HHTable {
    int n = 0;
    std::map<std::pair<int, int>, std::size_t> dims;
    std::map<std::pair<int, int>, std::size_t> chain_dims;

    std::size_t at(int i, int w) const;
    std::vector<int> weights() const;
    long euler_homology(int w) const;
    long euler_chains(int w) const;
};

/**
 * Koszul-type complexes for HH^•(A) and HH_•(A, A_σ), where A_σ is A with the
 * right action twisted: a·m·b = a m σ(b).
 */
class KoszulHHComplexes {
public:
    KoszulHHComplexes(const QuadraticPresentation& p, const FrobeniusData& f, const Matrix& sigma_gen, int max_weight);

    // Chains A_{w-q} ⊗ A¡_q; differential lowers q.
    std::map<int, std::size_t> homology(int w) const;
    // Cochains Hom(A¡_q, A_{w+q}); differential raises q.
    std::map<int, std::size_t> cohomology(int w) const;
    std::map<int, std::size_t> homology_chain_dims(int w) const;
    std::map<int, std::size_t> cohomology_chain_dims(int w) const;
    // Composites of consecutive differentials vanish in this weight.
    bool square_zero(int w) const;

    const GradedAlgebra& algebra() const { return a_; }

private:
    Matrix homology_diff(int w, int q) const;
    Matrix cohomology_diff(int w, int q) const;

    const FrobeniusData& f_;
    GradedAlgebra a_;
    Matrix sigma_gen_;
    int n_;
};

HHTable hh_cohomology(const QuadraticPresentation& p, const FrobeniusData& f, int cutoff);
HHTable hh_twisted_homology(const QuadraticPresentation& p, const FrobeniusData& f, const Matrix& sigma_gen, int cutoff);

/**
 * Reduced bar complexes A ⊗ Ā^{⊗p}. The homology boundary is
 * b(m ⊗ a_1..a_p) = m σ(a_1) ⊗ a_2.. + Σ (-1)^i ..a_i a_{i+1}.. + (-1)^p a_p m ⊗ a_1..a_{p-1}.
 * Cochains are truncated to inputs of total weight < input_bound.
 */
class BarOracle {
public:
    BarOracle(const QuadraticPresentation& p, const Matrix& sigma_gen, int max_weight);
    std::map<int, std::size_t> homology(int w, int max_p) const;
    std::map<int, std::size_t> cohomology(int w, int max_p, int input_bound) const;

private:
    GradedAlgebra a_;
    std::vector<Matrix> sigma_;
};

struct OracleReport {
    bool ok = true;
    std::string failure;
    HHTable koszul_homology, bar_homology, koszul_cohomology, bar_cohomology;
};

OracleReport bar_oracle_compare(const QuadraticPresentation& p, const FrobeniusData& f, int max_weight);

struct DualityCell {
    int i = 0, w = 0;
    std::size_t cohomology = 0, homology = 0;
    bool match = false;
};

struct DualityReport {
    int n = 0;
    int shift = 0;
    int cutoff = 0;
    bool ok = true;
    std::vector<DualityCell> cells;
    HHTable cohomology, homology;
};

// dim HH^i(A)_w against dim HH_{n-i}(A, A_σ)_{w+shift}, for w in [-n, cutoff].
DualityReport duality_report(const QuadraticPresentation& p, const FrobeniusData& f, int cutoff, int shift);

}  // namespace twcy
