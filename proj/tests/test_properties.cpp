#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "twcy/drep.hpp"
#include "twcy/hochschild.hpp"

using namespace twcy;

namespace {

Rational small_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(1, 5), den(1, 4), sign(0, 1);
    Rational r(num(rng), den(rng));
    return sign(rng) ? -r : r;
}

Matrix random_q(std::mt19937& rng, int n)
{
    Matrix q(n, n);
    for (int i = 0; i < n; ++i) {
        q.set(i, i, 1);
        for (int j = i + 1; j < n; ++j) {
            Rational v = small_rational(rng);
            q.set(i, j, v);
            q.set(j, i, 1 / v);
        }
    }
    return q;
}

Matrix random_invertible_m(std::mt19937& rng)
{
    std::uniform_int_distribution<int> e(-3, 3);
    for (;;) {
        Matrix m({{e(rng), e(rng)}, {e(rng), e(rng)}});
        if (m.at(0, 0) * m.at(1, 1) != m.at(0, 1) * m.at(1, 0))
            return m;
    }
}

void check_properties(const QuadraticPresentation& p, const Matrix& closed_form, int hh_cutoff)
{
    auto f = frobenius_data(p);
    CHECK(check_frobenius_invariants(f).all());
    CHECK(f.sigma_gen() == closed_form);
    CHECK(koszulity_certificate(p, f.coalgebra, 4).certified);

    NCCalculus nc(f);
    CHECK(verify_closed_invariant(nc, nc.omega()).all());
    CHECK_FALSE(verify_closed_invariant(nc, perturbed_omega(nc)).partial_closed);
    Matrix pm = phi_matrix(nc);
    CHECK(rank(pm) == pm.rows());
    CHECK(phi_chain_check(nc).ok);

    auto d = duality_report(p, f, hh_cutoff, f.n);
    CHECK(d.ok);

    RepDGAlgebra rv(nc, 1);
    CHECK(verify_omega_V(rv, nc.omega()).all());
    CHECK(verify_phi_V(rv).all());
}

}  // namespace

TEST_CASE("random quantum planes and 3-spaces")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 6; ++trial) {
        int n = trial < 4 ? 2 : 3;
        Matrix q = random_q(rng, n);
        INFO("trial " << trial);
        check_properties(quantum_affine(q), nakayama_closed_form_quantum(q), n == 2 ? 4 : 2);
    }
}

TEST_CASE("random invertible M")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        Matrix m = random_invertible_m(rng);
        INFO("M = " << m.at(0, 0) << " " << m.at(0, 1) << " / " << m.at(1, 0) << " " << m.at(1, 1));
        check_properties(dimension2_m(m), nakayama_closed_form_m(m), 4);
    }
}

TEST_CASE("σ is an algebra automorphism of A in every weight")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 4; ++trial) {
        Matrix m = random_invertible_m(rng);
        auto p = dimension2_m(m);
        auto f = frobenius_data(p);
        GradedAlgebra a(p, 4);
        // σ preserves the relation space, so the induced maps compose
        for (int w = 1; w <= 3; ++w) {
            Matrix s1 = a.graded_map(f.sigma_gen(), 1);
            Matrix sw = a.graded_map(f.sigma_gen(), w);
            Matrix sw1 = a.graded_map(f.sigma_gen(), w + 1);
            for (std::size_t i = 0; i < a.dim(w); ++i)
                for (int x = 0; x < 2; ++x) {
                    SparseVector lhs_in{{static_cast<long>(i), Rational(1)}};
                    SparseVector prod = a.times_generator(w, lhs_in, x);
                    // σ(u x) against σ(u) σ(x)
                    Vector pv(a.dim(w + 1));
                    for (const auto& [k, c] : prod)
                        pv[k] = c;
                    Vector lhs = sw1 * pv;
                    Vector su = sw.column(i);
                    SparseVector su_s;
                    for (std::size_t k = 0; k < su.size(); ++k)
                        if (su[k] != 0)
                            su_s[k] = su[k];
                    Vector rhs(a.dim(w + 1));
                    for (int y = 0; y < 2; ++y) {
                        Rational c = s1.at(y, x);
                        if (c == 0)
                            continue;
                        for (const auto& [k, v] : a.times_generator(w, su_s, y))
                            rhs[k] += c * v;
                    }
                    CHECK(lhs == rhs);
                }
        }
    }
}
