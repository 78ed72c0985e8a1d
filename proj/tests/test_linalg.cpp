#include <random>

#include <catch_amalgamated.hpp>

#include "twcy/errors.hpp"
#include "twcy/linalg.hpp"

using namespace twcy;

namespace {

// Plain dense elimination, kept separate from the sparse code under test.
std::size_t dense_rank(std::vector<std::vector<Rational>> a)
{
    std::size_t r = 0;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias)
{
    std::uniform_int_distribution<int> v(-3, 3), z(0, zero_bias);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (z(rng) == 0)
                m.set(i, j, Rational(v(rng), 1 + (v(rng) + 3) % 3));
    return m;
}

}  // namespace

TEST_CASE("rationals print and parse as p/q")
{
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("2/x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
}

TEST_CASE("rank and kernel of small matrices")
{
    Matrix m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto rk = rank_kernel(m);
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel.size() == 1);
    Vector z = m * rk.kernel[0];
    for (const auto& x : z)
        CHECK(x == 0);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(Matrix::identity(5)) == 5);
}

TEST_CASE("rank agrees with a dense elimination and with the transpose")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        Matrix m = random_matrix(rng, r, c, trial % 3);
        std::size_t k = rank(m);
        CHECK(k == dense_rank(m.dense()));
        CHECK(k == rank(m.transpose()));
        CHECK(rank_kernel(m).kernel.size() == c - k);
    }
}

TEST_CASE("inverse and rref")
{
    Matrix m({{2, 1}, {1, 1}});
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix({{1, 2}, {2, 4}})), IntegrityError);
    Matrix r = rref(Matrix({{2, 4}, {1, 2}}));
    CHECK(r.rows() == 1);
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 2);
    CHECK(kronecker(Matrix::identity(2), m).rows() == 4);
    CHECK(kronecker(Matrix::identity(2), m).at(3, 2) == 1);
}

TEST_CASE("membership in an exact span")
{
    CHECK(membership({0, 0}, {{Rational(0), Rational(1)}}));
    CHECK_FALSE(membership({1, 0}, {{Rational(0), Rational(1)}}));
    CHECK(membership({2, 4}, {{Rational(1), Rational(2)}}));
    CHECK_THROWS_AS(membership({1, 0, 0}, {{Rational(0), Rational(1)}}), InputError);
}

TEST_CASE("echelon span")
{
    EchelonSpan s;
    CHECK(s.add({{0, 1}, {2, 1}}));
    CHECK(s.add({{1, 1}}));
    CHECK_FALSE(s.add({{0, 2}, {1, 3}, {2, 2}}));
    CHECK(s.contains({{0, -1}, {2, -1}}));
    CHECK_FALSE(s.contains({{2, 1}}));
    CHECK(s.rank() == 2);
}

TEST_CASE("homology of tiny complexes")
{
    BigradedComplex c;
    c.set_piece(0, 0, GradedBasis({{0, 0, "e"}}));
    CHECK(homology(c, 0, 0).dimension == 1);

    BigradedComplex id;
    id.set_piece(0, 0, GradedBasis({{0, 0, "a"}}));
    id.set_piece(0, 1, GradedBasis({{0, 1, "b"}}));
    id.set_differential(0, 1, Matrix::identity(1));
    CHECK(homology(id, 0, 0).dimension == 0);
    CHECK(homology(id, 0, 1).dimension == 0);
}

TEST_CASE("a differential that does not square to zero is reported")
{
    BigradedComplex c;
    for (int i = 0; i < 3; ++i)
        c.set_piece(1, i, GradedBasis({{1, i, "v" + std::to_string(i)}}));
    c.set_differential(1, 1, Matrix::identity(1));
    c.set_differential(1, 2, Matrix::identity(1));
    CHECK_THROWS_AS(c.check_square_zero(), IntegrityError);
    CHECK_THROWS_WITH(homology(c, 1, 1), Catch::Matchers::ContainsSubstring("weight 1"));
}

TEST_CASE("homology does not depend on basis order")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        // d2 = A, d1 = B with B A = 0: B's rows span the left kernel of A.
        std::size_t n0 = 2 + rng() % 3, n1 = 3 + rng() % 3, n2 = 1 + rng() % 3;
        Matrix a = random_matrix(rng, n1, n2, 1);
        auto left = rank_kernel(a.transpose()).kernel;
        Matrix b(n0, n1);
        for (std::size_t i = 0; i < n0 && i < left.size(); ++i)
            for (std::size_t j = 0; j < n1; ++j)
                b.set(i, j, left[i][j]);
        BigradedComplex c;
        std::vector<std::size_t> dims{n0, n1, n2};
        for (int i = 0; i < 3; ++i) {
            std::vector<BasisLabel> labels;
            for (std::size_t k = 0; k < dims[i]; ++k)
                labels.push_back({0, i, "e" + std::to_string(i) + "_" + std::to_string(k)});
            c.set_piece(0, i, GradedBasis(labels));
        }
        c.set_differential(0, 1, b);
        c.set_differential(0, 2, a);
        BigradedComplex p = permute_labels(c, 100 + trial);
        for (int i = 0; i < 3; ++i) {
            auto h = homology(c, 0, i);
            CHECK(h.dimension == homology(p, 0, i).dimension);
            CHECK(h.representatives.size() == h.dimension);
        }
        long euler = static_cast<long>(n0) + static_cast<long>(n2) - static_cast<long>(n1);
        long h = static_cast<long>(homology(c, 0, 0).dimension) + static_cast<long>(homology(c, 0, 2).dimension) -
                 static_cast<long>(homology(c, 0, 1).dimension);
        CHECK(h == euler);
    }
}
