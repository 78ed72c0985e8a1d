#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twcy/hochschild.hpp"
#include "twcy/nc.hpp"
#include "twcy/superpoly.hpp"

namespace twcy {

/**
 * R_V = k[x^α_ij] for V = k^d, with the matrix-entry forms dx^α_ij
 * (α = 0 is the cone letter, present when the calculus has the cone) and the
 * tangent symbols D^u_ij of degree -w(u), all in one graded-commutative ring.
 * Entries of a word are computed by the ordered matrix product of the letters.
 */
class RepDGAlgebra {
public:
    RepDGAlgebra(const NCCalculus& nc, int d);

    const NCCalculus& nc() const { return nc_; }
    int dim() const { return d_; }
    const SuperRing& ring() const { return ring_; }

    int x(long a, int i, int j) const { return x_.at(a).at(i * d_ + j); }
    int dx(long a, int i, int j) const { return dx_.at(a).at(i * d_ + j); }
    int tangent(long u, int i, int j) const { return tan_.at(u).at(i * d_ + j); }
    bool is_x(int v) const { return kind_[v] == 0; }
    bool is_form(int v) const { return kind_[v] == 1; }
    bool is_tangent(int v) const { return kind_[v] == 2; }
    const std::vector<int>& x_vars() const { return x_vars_; }
    const std::vector<int>& form_vars() const { return form_vars_; }

    SPoly entry(const Word& w, int i, int j) const;
    SPoly entry(const NCElem& e, int i, int j) const;
    SPoly trace(const NCElem& e) const;

    SPoly partial(const SPoly& p) const;
    SPoly d(const SPoly& p) const;
    SPoly sigma(const SPoly& p) const;
    SPoly sigma_inv(const SPoly& p) const;
    // (∂d + d∂) predicted by the calculus: entries of w D_0 - D_0 w.
    SPoly anticommutator(const SPoly& p) const;
    // Differential on the twisted 1-forms, with dx^c_ij read as d_σ x^c_ij.
    SPoly partial_L(const SPoly& p) const;
    SPoly delta(const SPoly& tangent_elem) const;
    SPoly phi(const SPoly& tangent_elem) const;
    // Derivation induced by the elementary matrix E_ab.
    SPoly gl_action(int a, int b, const SPoly& p) const;
    // ρ(dx^α_ij) as a d x d matrix (row-major) with entries in R_V.
    std::vector<SPoly> rho(long a, int i, int j) const;

    // Monomials of R_V times exactly nforms form variables, at (weight, degree).
    std::vector<Monomial> monomials(int weight, int degree, int nforms) const;
    std::vector<Monomial> monomials_of_weight(int weight, int nforms) const;

private:
    const NCCalculus& nc_;
    int d_;
    SuperRing ring_;
    std::vector<int> kind_;
    std::map<long, std::vector<int>> x_, dx_, tan_;
    std::vector<int> x_vars_, form_vars_;
    std::map<int, SPoly> partial_, d_map_, sigma_, sigma_inv_, anti_, partial_l_, delta_;
    std::map<int, std::vector<std::pair<int, int>>> letter_of_;
    Matrix phi_matrix_;
};

// Homology of (R_V, ∂) per (degree, weight) for weights <= cutoff.
HHTable rep_homology(const RepDGAlgebra& rv, int cutoff);
// dim of the weight-w piece of k[degree-0 variables] modulo the ideal spanned
// by the entries of the relations, from ranks of ideal spans.
std::size_t h0_by_ideal(const RepDGAlgebra& rv, int weight);

bool gl_invariance_check(const RepDGAlgebra& rv, const SPoly& p);

// ½ Σ c dx^a_ij dx^b_ji over the coproduct of the volume element.
SPoly omega_V(const RepDGAlgebra& rv);

/**
 * Checks on Tr_V(form). ∂-closure is tested in the twisted coordinates:
 * Tr_V(Ψ ∂ form) = 0. The untwisted ∂ Tr_V(form) is recorded separately; it
 * is the trace of the twisted commutators that ∂ form reduces to.
 */
struct OmegaVReport {
    bool sigma_invariant = false;
    bool partial_closed = false;
    bool d_closed = false;
    bool gl_invariant = false;
    bool matches_direct = false;
    std::size_t terms = 0;
    std::size_t untwisted_residual_terms = 0;
    SPoly omega;
    bool all() const { return sigma_invariant && partial_closed && d_closed && gl_invariant; }
    std::string first_failure() const;
};

OmegaVReport verify_omega_V(const RepDGAlgebra& rv, const NCElem& form);

struct PhiVReport {
    bool matrix_ok = false;
    bool invertible = false;
    bool chain_ok = false;
    std::size_t generators = 0;
    std::string failure;
    int shift = 0;
    Matrix matrix;
    bool all() const { return matrix_ok && invertible && chain_ok; }
};

// Rows (u, i, j), columns (c, k, l): coefficient of dx^c_kl in Φ_V(D^u_ij).
Matrix phi_V_matrix(const RepDGAlgebra& rv);
PhiVReport verify_phi_V(const RepDGAlgebra& rv);

SignGateResult rep_sign_gate(const RepDGAlgebra& rv, int max_weight, int max_forms);

/**
 * Twisted Kähler forms of R_V: the module Ω¹(R_V) with right action u∘y = u y
 * and left action x∘u = (-1)^{|x||u|} u σ^{-1}(x). In these coordinates
 * d_σ is the de Rham differential and satisfies
 * d_σ(ab) = d_σ(a) b + (-1)^{|a|} σ(a)∘d_σ(b).
 */
class KaehlerSigma {
public:
    explicit KaehlerSigma(const RepDGAlgebra& rv) : rv_(rv) {}
    SPoly left(const SPoly& x, const SPoly& u) const;
    SPoly right(const SPoly& u, const SPoly& y) const { return rv_.ring().mul(u, y); }
    SPoly d_sigma(const SPoly& a) const { return rv_.d(a); }
    SPoly psi(const SPoly& u) const { return u; }

    bool leibniz(const SPoly& a, const SPoly& b) const;
    bool anticommutes(const SPoly& a) const;
    bool psi_compatible(const SPoly& a, const SPoly& u, const SPoly& b) const;

private:
    const RepDGAlgebra& rv_;
};

}  // namespace twcy
