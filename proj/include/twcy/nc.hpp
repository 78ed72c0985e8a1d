#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twcy/koszul.hpp"

namespace twcy {

typedef std::map<Word, Rational> NCElem;

NCElem nc_word(const Word& w, const Rational& c = 1);
NCElem nc_mul(const NCElem& a, const NCElem& b);
void nc_add(NCElem& a, const NCElem& b, const Rational& s = 1);

/**
 * A double derivation r1 * Du * r2 in R ⊗ A! ⊗ R, u a global index of A!
 * (dual basis to A¡). Its value on D_u is (-1)^{|r2|(|r1| + w(u))} r2 ⊗ r1.
 */
struct DerTerm {
    Word r1;
    long u;
    Word r2;
    auto operator<=>(const DerTerm&) const = default;
};

typedef std::map<DerTerm, Rational> DerElem;
typedef std::map<std::pair<Word, Word>, Rational> TensorElem;

/**
 * The cobar algebra R = Ω(A¡) together with its noncommutative forms.
 *
 * Letters: for a global coalgebra index k of positive weight, the generator
 * g_k = k has weight w(k) and degree w(k) - 1; for every k, the form letter
 * D_k = size + k has weight w(k) and degree w(k). D_0 is the counit letter,
 * present only in the cone model.
 */
class NCCalculus {
public:
    explicit NCCalculus(const FrobeniusData& f, bool cone = true);

    const FrobeniusData& frobenius() const { return f_; }
    bool cone() const { return cone_; }
    long size() const { return nb_; }
    int g(long k) const { return static_cast<int>(k); }
    int D(long k) const { return static_cast<int>(nb_ + k); }
    bool is_D(int l) const { return l >= nb_; }
    long index(int l) const { return l >= nb_ ? l - nb_ : l; }
    int letter_weight(int l) const { return f_.coalgebra.weight[index(l)]; }
    int letter_degree(int l) const { return is_D(l) ? letter_weight(l) : letter_weight(l) - 1; }
    int degree(const Word& w) const;
    int weight(const Word& w) const;
    int num_D(const Word& w) const;
    std::string letter_text(int l) const;
    std::string word_text(const Word& w) const;
    std::string text(const NCElem& e) const;

    std::vector<int> letters() const;
    std::vector<int> generators() const;
    // All words of the given weight, degree and number of form letters.
    std::vector<Word> words(int weight, int degree, int nd) const;
    std::vector<Word> words_of_weight(int weight, int nd) const;

    NCElem derivation(const NCElem& e, const std::vector<NCElem>& on_letters, int deg) const;
    const NCElem& letter_partial(int l) const { return partial_[l]; }
    NCElem partial(const NCElem& e) const;
    NCElem d(const NCElem& e) const;
    NCElem sigma(const NCElem& e) const;
    NCElem sigma_inv(const NCElem& e) const;

    // Coordinates on 1-forms. Ψ(r1 D r2) = σ(r1) D r2 gives the twisted
    // 1-forms; S(r1 D r2) = σ^{-1}(r1) D σ(r2) passes to the coordinates in
    // which the internal differential is the b operator.
    NCElem psi(const NCElem& e) const;
    NCElem psi_inv(const NCElem& e) const;
    NCElem to_right(const NCElem& e) const;
    NCElem partial_L(const NCElem& e) const;
    NCElem partial_R(const NCElem& e) const;
    NCElem twisted_d(const NCElem& e) const;

    NCElem omega() const;

    int der_degree(const DerTerm& t) const;
    std::map<long, TensorElem> values(const DerElem& theta) const;
    DerElem from_values(const std::map<long, TensorElem>& vals) const;
    TensorElem evaluate(const std::map<long, TensorElem>& vals, int deg, const NCElem& oneform) const;
    TensorElem partial(const TensorElem& e) const;
    DerElem delta(const DerElem& theta) const;
    // Untwisted contraction of theta against a 2-form whose words are D_a D_b.
    NCElem contract(const DerElem& theta, const NCElem& two_form) const;
    NCElem phi(const DerElem& theta) const;
    NCElem phi(const DerElem& theta, const NCElem& two_form) const;
    DerElem generator_derivation(long u) const;
    std::string text(const DerElem& e) const;

private:
    NCElem map_letters(const NCElem& e, bool inverse) const;

    const FrobeniusData& f_;
    bool cone_;
    long nb_;
    std::vector<NCElem> partial_, d_, sigma_, sigma_inv_, b_;
};

class TwistedCommutatorSpan {
public:
    TwistedCommutatorSpan(const NCCalculus& nc, int weight, int degree, int nd);
    bool contains(const NCElem& e) const;
    std::size_t rank() const { return span_.rank(); }
    std::size_t ambient_dim() const { return index_.size(); }
    std::size_t generator_count() const { return generators_; }

private:
    SparseVector coords(const NCElem& e, bool& outside) const;
    std::map<Word, long> index_;
    EchelonSpan span_;
    std::size_t generators_ = 0;
};

// True iff the homogeneous form is a combination of twisted commutators.
bool twisted_dr_zero_test(const NCCalculus& nc, const NCElem& form, int weight, int degree);

struct ClosedInvariantReport {
    bool partial_closed = false;
    bool d_closed = false;
    bool sigma_invariant = false;
    bool tower_witness = false;
    bool all() const { return partial_closed && d_closed && sigma_invariant && tower_witness; }
    std::string first_failure() const;
};

ClosedInvariantReport verify_closed_invariant(const NCCalculus& nc, const NCElem& omega);

// omega with the summand of the given position (in word order) removed.
NCElem perturbed_omega(const NCCalculus& nc, std::size_t drop = 0);

// Rows indexed by A! basis u, columns by A¡ basis c: coefficient of D_c in Φ(Du).
Matrix phi_matrix(const NCCalculus& nc);

struct ChainCheck {
    bool ok = true;
    long failing_u = -1;
    std::string lhs, rhs;
};

ChainCheck phi_chain_check(const NCCalculus& nc);

struct BimoduleCheck {
    bool ok = true;
    std::size_t samples = 0;
    std::string failure;
};

// Φ(r1 * Du * r2) = (-1)^{n|r2|} σ(r1) Φ(Du) σ(r2) on random monomials r1, r2.
BimoduleCheck phi_bimodule_check(const NCCalculus& nc, std::size_t samples, unsigned seed = 1);

struct SignGateResult {
    bool ok = true;
    std::size_t words_checked = 0;
    std::string failure;
};

/**
 * Exhaustive check of ∂² = 0, d² = 0 and the anticommutator identities on
 * every word with at most max_nd form letters and weight <= max_weight.
 * In the cone model ∂d + d∂ is the inner derivation w ↦ w D_0 - D_0 w, which
 * is a twisted commutator; without the cone it vanishes.
 */
SignGateResult nc_sign_gate(const NCCalculus& nc, int max_weight, int max_nd);

// Homology of R ⊗ A¡ ⊗ R with the cone differential, per degree, at one weight.
std::map<int, std::size_t> oneform_homology(const NCCalculus& nc, int weight);
// Homology of the double derivations R ⊗ A! ⊗ R with δ, per degree, at one weight.
std::map<int, std::size_t> der_homology(const NCCalculus& nc, int weight);
// Homology of DR¹_σ: cone 1-forms modulo twisted commutators, per degree.
std::map<int, std::size_t> dr1_sigma_homology(const NCCalculus& nc, int weight);

}  // namespace twcy
