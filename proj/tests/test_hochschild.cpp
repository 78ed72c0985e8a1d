#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "twcy/errors.hpp"
#include "twcy/hochschild.hpp"

using namespace twcy;

namespace {

typedef std::map<std::pair<int, int>, std::size_t> Table;

Table nonzero(const HHTable& t)
{
    Table out;
    for (const auto& [k, v] : t.dims)
        if (v)
            out[k] = v;
    return out;
}

}  // namespace

TEST_CASE("polynomial ring in two variables matches the HKR dimensions")
{
    auto p = fixtures::comm();
    auto f = frobenius_data(p);
    auto coh = hh_cohomology(p, f, 5);
    auto hom = hh_twisted_homology(p, f, f.sigma_gen(), 5);
    const long binom2[] = {1, 2, 1};
    for (int i = 0; i <= 2; ++i)
        for (int w = -2; w <= 5; ++w) {
            // polyvector fields and differential forms
            long c = w + i >= 0 ? binom2[i] * (w + i + 1) : 0;
            long h = w >= i ? binom2[i] * (w - i + 1) : 0;
            INFO("i=" << i << " w=" << w);
            CHECK(static_cast<long>(coh.at(i, w)) == c);
            if (w >= 0)
                CHECK(static_cast<long>(hom.at(i, w)) == h);
        }
}

TEST_CASE("frozen Hochschild tables")
{
    auto p = fixtures::qplane();
    auto f = frobenius_data(p);
    CHECK(nonzero(hh_cohomology(p, f, 4)) == Table{{{0, 0}, 1}, {{1, 0}, 2}, {{2, -2}, 1}, {{2, 0}, 1}});
    CHECK(nonzero(hh_twisted_homology(p, f, f.sigma_gen(), 4)) ==
          Table{{{0, 0}, 1}, {{0, 2}, 1}, {{1, 2}, 2}, {{2, 2}, 1}});

    auto p3 = fixtures::qaff3();
    auto f3 = frobenius_data(p3);
    CHECK(nonzero(hh_cohomology(p3, f3, 4)) ==
          Table{{{0, 0}, 1}, {{1, 0}, 3}, {{2, 0}, 3}, {{3, -3}, 1}, {{3, 0}, 1}});
    CHECK(nonzero(hh_twisted_homology(p3, f3, f3.sigma_gen(), 4)) ==
          Table{{{0, 0}, 1}, {{0, 3}, 1}, {{1, 3}, 3}, {{2, 3}, 3}, {{3, 3}, 1}});

    // σ of order three gives period three in weight
    auto pj = fixtures::jordan();
    auto fj = frobenius_data(pj);
    CHECK(nonzero(hh_cohomology(pj, fj, 4)) == Table{{{0, 0}, 1}, {{0, 3}, 2}, {{1, 0}, 2}, {{1, 3}, 4},
                                                     {{2, -2}, 1}, {{2, 0}, 1}, {{2, 3}, 2}});
}

TEST_CASE("both encodings of the quantum plane give identical tables")
{
    auto a = fixtures::qplane();
    auto b = fixtures::qplane_via_m();
    auto fa = frobenius_data(a);
    auto fb = frobenius_data(b);
    CHECK(hh_cohomology(a, fa, 4).dims == hh_cohomology(b, fb, 4).dims);
    CHECK(hh_twisted_homology(a, fa, fa.sigma_gen(), 4).dims == hh_twisted_homology(b, fb, fb.sigma_gen(), 4).dims);
}

TEST_CASE("Koszul complexes agree with the bar complex")
{
    for (const auto& fx : fixtures::all()) {
        if (fx.name == "qaff3")
            continue;
        INFO(fx.name);
        auto f = frobenius_data(fx.p);
        auto r = bar_oracle_compare(fx.p, f, 3);
        INFO(r.failure);
        CHECK(r.ok);
    }
}

TEST_CASE("Euler characteristic of the chains equals that of the homology")
{
    for (const auto& fx : fixtures::all()) {
        auto f = frobenius_data(fx.p);
        auto h = hh_twisted_homology(fx.p, f, f.sigma_gen(), 4);
        auto c = hh_cohomology(fx.p, f, 4);
        for (int w : h.weights())
            CHECK(h.euler_homology(w) == h.euler_chains(w));
        for (int w : c.weights())
            CHECK(c.euler_homology(w) == c.euler_chains(w));
    }
}

TEST_CASE("the Koszul differentials square to zero")
{
    for (const auto& fx : fixtures::all()) {
        auto f = frobenius_data(fx.p);
        KoszulHHComplexes k(fx.p, f, f.sigma_gen(), 5);
        for (int w = 0; w <= 5; ++w)
            CHECK(k.square_zero(w));
    }
}

TEST_CASE("Van den Bergh duality holds with shift n")
{
    for (const auto& fx : fixtures::all()) {
        INFO(fx.name);
        auto f = frobenius_data(fx.p);
        auto r = duality_report(fx.p, f, fx.name == "qaff3" ? 4 : 5, f.n);
        CHECK(r.ok);
        CHECK(!r.cells.empty());
        for (const auto& c : r.cells)
            CHECK(c.match == (c.cohomology == c.homology));
    }
}

TEST_CASE("untwisting changes the quantum plane table")
{
    auto p = fixtures::qplane();
    auto f = frobenius_data(p);
    auto tw = hh_twisted_homology(p, f, f.sigma_gen(), 4);
    auto id = hh_twisted_homology(p, f, Matrix::identity(2), 4);
    CHECK(tw.dims != id.dims);
    CHECK(id.at(0, 3) == 2);
    CHECK(id.at(1, 3) == 2);
    CHECK(tw.at(0, 3) == 0);
    // duality fails with the wrong twist
    auto coh = hh_cohomology(p, f, 4);
    bool all_match = true;
    for (int i = 0; i <= 2; ++i)
        for (int w = -2; w + 2 <= 4; ++w)
            all_match = all_match && coh.at(i, w) == id.at(2 - i, w + 2);
    CHECK_FALSE(all_match);
}

TEST_CASE("reading beyond the cutoff is an error")
{
    auto p = fixtures::qplane();
    auto f = frobenius_data(p);
    auto t = hh_twisted_homology(p, f, f.sigma_gen(), 3);
    CHECK_THROWS_AS(t.at(0, 7), IntegrityError);
}
