#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "twcy/errors.hpp"
#include "twcy/koszul.hpp"

using namespace twcy;

namespace {

// dim of the intersection of V^i ⊗ R ⊗ V^(m-2-i) in V^m, from annihilators.
std::size_t coalgebra_dim_oracle(const QuadraticPresentation& p, int m)
{
    std::size_t n = p.size();
    if (m == 0)
        return 1;
    if (m == 1)
        return n;
    Matrix r(p.relations.size(), n * n);
    for (std::size_t k = 0; k < p.relations.size(); ++k)
        for (const auto& [i, c] : p.relations[k])
            r.set(k, i, c);
    auto ann = rank_kernel(r).kernel;  // functionals vanishing on R
    Matrix q(ann.size(), n * n);
    for (std::size_t k = 0; k < ann.size(); ++k)
        for (std::size_t j = 0; j < n * n; ++j)
            q.set(k, j, ann[k][j]);
    std::size_t total = 1;
    for (int k = 0; k < m; ++k)
        total *= n;
    std::vector<Matrix> blocks;
    for (int i = 0; i + 2 <= m; ++i) {
        std::size_t left = 1, right = 1;
        for (int k = 0; k < i; ++k)
            left *= n;
        for (int k = 0; k < m - 2 - i; ++k)
            right *= n;
        blocks.push_back(kronecker(kronecker(Matrix::identity(left), q), Matrix::identity(right)));
    }
    std::size_t rows = 0;
    for (const auto& b : blocks)
        rows += b.rows();
    Matrix stacked(rows, total);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (const auto& [j, v] : b.row(i))
                stacked.set(off + i, j, v);
        off += b.rows();
    }
    return total - rank(stacked);
}

long binom(long a, long b)
{
    long r = 1;
    for (long k = 1; k <= b; ++k)
        r = r * (a - b + k) / k;
    return r;
}

}  // namespace

TEST_CASE("Hilbert series of the fixtures")
{
    GradedAlgebra a(fixtures::qplane(), 6);
    for (int m = 0; m <= 6; ++m)
        CHECK(a.dim(m) == static_cast<std::size_t>(m + 1));
    GradedAlgebra b(fixtures::qaff3(), 5);
    for (int m = 0; m <= 5; ++m)
        CHECK(b.dim(m) == static_cast<std::size_t>(binom(m + 2, 2)));
    GradedAlgebra j(fixtures::jordan(), 5);
    for (int m = 0; m <= 5; ++m)
        CHECK(j.dim(m) == static_cast<std::size_t>(m + 1));
}

TEST_CASE("quadratic dual dimensions")
{
    CHECK(koszul_dual(fixtures::qplane()).dims() == std::vector<std::size_t>{1, 2, 1, 0});
    CHECK(koszul_dual(fixtures::qaff3()).dims() == std::vector<std::size_t>{1, 3, 3, 1, 0});
    CHECK(koszul_dual(fixtures::nondiag()).dims() == std::vector<std::size_t>{1, 2, 1, 0});
}

TEST_CASE("coalgebra pieces match the intersection of relation spaces")
{
    for (const auto& fx : fixtures::all()) {
        auto f = frobenius_data(fx.p);
        for (int m = 0; m <= f.n + 1; ++m) {
            std::size_t got = m <= f.n ? f.coalgebra.global[m].size() : 0;
            INFO(fx.name << " weight " << m);
            CHECK(got == coalgebra_dim_oracle(fx.p, m));
        }
        CHECK(coassociative(f.coalgebra));
        CHECK(counital(f.coalgebra));
    }
}

TEST_CASE("Koszul numerical identity and Koszulity certificate")
{
    for (const auto& fx : fixtures::all()) {
        auto f = frobenius_data(fx.p);
        GradedAlgebra a(fx.p, 6);
        for (int m = 1; m <= 6; ++m) {
            long s = 0;
            for (int i = 0; i <= std::min(m, f.n); ++i)
                s += parity_sign(i) * static_cast<long>(f.dual.dim(i) * a.dim(m - i));
            CHECK(s == 0);
        }
        CHECK(koszulity_certificate(fx.p, f.coalgebra, 6).certified);
    }
}

TEST_CASE("Frobenius invariants hold on every fixture")
{
    for (const auto& fx : fixtures::all()) {
        INFO(fx.name);
        auto f = frobenius_data(fx.p);
        auto inv = check_frobenius_invariants(f);
        CHECK(inv.associative);
        CHECK(inv.invariant_pairing);
        CHECK(inv.sigma_star_multiplicative);
        CHECK(inv.sigma_star_isometry);
        CHECK(inv.defining_relation);
        CHECK(inv.delta_eta_sigma_invariant);
        CHECK(inv.dims_symmetric);
        CHECK(rank(f.pairing_full()) == f.pairing_full().rows());
    }
}

TEST_CASE("Nakayama automorphism of the quantum plane")
{
    auto f = frobenius_data(fixtures::qplane());
    CHECK(f.n == 2);
    CHECK(f.sigma_gen() == Matrix({{Rational(1, 2), 0}, {0, 2}}));
}

TEST_CASE("Nakayama automorphism agrees with the closed forms")
{
    CHECK(frobenius_data(fixtures::qplane()).sigma_gen() == nakayama_closed_form_quantum(fixtures::qplane_q()));
    CHECK(frobenius_data(fixtures::qaff3()).sigma_gen() == nakayama_closed_form_quantum(fixtures::qaff3_q()));
    CHECK(frobenius_data(fixtures::comm()).sigma_gen() == Matrix::identity(2));
    for (const Matrix& m : {fixtures::qplane_m(), fixtures::jordan_m(), fixtures::nondiag_m()})
        CHECK(frobenius_data(dimension2_m(m)).sigma_gen() == nakayama_closed_form_m(m));
    // quantum affine 3-space: σ(x_i) = (Π_j q_ji) x_i
    CHECK(nakayama_closed_form_quantum(fixtures::qaff3_q()) ==
          Matrix({{Rational(1, 6), 0, 0}, {0, Rational(2, 5), 0}, {0, 0, 15}}));
    // Jordan plane: σ = -M^T M^{-1}
    CHECK(nakayama_closed_form_m(fixtures::jordan_m()) == Matrix({{-1, 1}, {-1, 0}}));
}

TEST_CASE("both encodings of the quantum plane give the same relations")
{
    auto a = fixtures::qplane();
    auto b = fixtures::qplane_via_m();
    CHECK(a.relations == b.relations);
    CHECK(relation_text(b.relations[0], b.generators) == "x2x1 - 2 x1x2");
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(quantum_affine(Matrix({{1, 2}, {3, 1}})), InputError);
    CHECK_THROWS_AS(quantum_affine(Matrix({{2, 1}, {1, 1}})), InputError);
    CHECK_THROWS_AS(dimension2_m(Matrix({{1, 2}, {2, 4}})), InputError);
}

TEST_CASE("inputs that are not Frobenius are rejected with the documented error")
{
    QuadraticPresentation one;
    one.generators = default_generator_names(2);
    one.relations = {SparseVector{{1, Rational(1)}}};
    CHECK_THROWS_WITH(frobenius_data(one), Catch::Matchers::StartsWith("input is not Frobenius / not AS-regular") &&
                                               Catch::Matchers::ContainsSubstring("singular"));

    QuadraticPresentation free_alg;
    free_alg.generators = default_generator_names(2);
    CHECK_THROWS_WITH(frobenius_data(free_alg), Catch::Matchers::ContainsSubstring("2-dimensional"));

    QuadraticPresentation everything;
    everything.generators = default_generator_names(2);
    for (long i = 0; i < 4; ++i)
        everything.relations.push_back({{i, Rational(1)}});
    CHECK_THROWS_WITH(frobenius_data(everything), Catch::Matchers::ContainsSubstring("not finite-dimensional"));
}
