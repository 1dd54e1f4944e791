#include <doctest.h>

#include "permforest/census.hpp"
#include "permforest/series.hpp"

using namespace permforest;

namespace {

std::vector<long> prefix(const TruncSeries& s, int upto) {
    std::vector<long> out;
    for (int k = 0; k <= upto; ++k) {
        REQUIRE(s[k].get_den() == 1);
        out.push_back(s[k].get_num().get_si());
    }
    return out;
}

Poly poly_at(const BivarSeries& s, int k) {
    return s.c[static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    const int N = 10;
    const TruncSeries sq = series_sqrt(series_poly(N, {1, -4}));
    CHECK(prefix(sq, 5) == std::vector<long>{1, -2, -2, -4, -10, -28});
    CHECK(sq * sq == series_poly(N, {1, -4}));

    const TruncSeries one = series_poly(N, {1});
    CHECK(series_poly(N, {1, -1}) * series_div(one, series_poly(N, {1, -1})) == one);

    // U = (1 - sqrt(1-4x)) / (2x) is the Catalan series.
    const TruncSeries u = series_div(series_poly(N, {1}) - sq, series_poly(N, {0, 2}));
    CHECK(prefix(u, 4) == std::vector<long>{1, 1, 2, 5, 14});

    CHECK_THROWS_AS(series_div(series_poly(N, {1}), TruncSeries(N)), std::invalid_argument);
    CHECK_THROWS_AS(series_div(series_poly(N, {1}), series_poly(N, {0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_sqrt(series_poly(N, {2})), std::invalid_argument);
}

TEST_CASE("closed forms reproduce the published prefixes") {
    const int N = 12;
    CHECK(prefix(closed_form(SeriesClass::forest, N), 7) ==
          std::vector<long>{0, 1, 2, 6, 22, 89, 379, 1661});
    CHECK(prefix(closed_form(SeriesClass::rooted, N), 5) ==
          std::vector<long>{0, 1, 1, 2, 5, 14});
    CHECK(prefix(closed_form(SeriesClass::path, N), 5) == std::vector<long>{0, 1, 1, 3, 7, 15});
    CHECK(prefix(closed_form(SeriesClass::tree, N), 5) == std::vector<long>{0, 1, 1, 3, 11, 44});
    CHECK(prefix(closed_form(SeriesClass::smooth, N), 4) == std::vector<long>{0, 1, 2, 6, 22});
    // Integrality and nonnegativity hold through the truncation order.
    for (SeriesClass cls : {SeriesClass::forest, SeriesClass::tree, SeriesClass::rooted,
                            SeriesClass::path, SeriesClass::smooth}) {
        const auto coeffs = integer_coefficients(closed_form(cls, 40));
        CHECK(coeffs.size() == 41);
        for (const auto& c : coeffs) CHECK(c >= 0);
    }
}

TEST_CASE("path counts are 2^(n-1) - 1") {
    const auto p = integer_coefficients(closed_form(SeriesClass::path, 20));
    for (int n = 2; n <= 20; ++n)
        CHECK(p[static_cast<size_t>(n)] == (mpz_class(1) << (n - 1)) - 1);
}

TEST_CASE("rooted counts are the Catalan numbers") {
    const auto r = integer_coefficients(closed_form(SeriesClass::rooted, 20));
    mpz_class catalan = 1;
    for (int n = 1; n <= 20; ++n) {
        CHECK(r[static_cast<size_t>(n)] == catalan);
        catalan = catalan * 2 * (2 * n - 1) / (n + 1);
    }
}

TEST_CASE("fixed points match closed forms") {
    const int N = 14;
    for (SeriesClass cls : {SeriesClass::forest, SeriesClass::tree, SeriesClass::rooted,
                            SeriesClass::path, SeriesClass::smooth,
                            SeriesClass::rooted_by_ascent})
        CHECK(at_u1(functional_equation_fixed_point(cls, N)) == closed_form(cls, N));
}

TEST_CASE("bivariate closed forms match fixed points and specialize correctly") {
    const int N = 10;
    for (SeriesClass cls : {SeriesClass::forest, SeriesClass::tree, SeriesClass::smooth,
                            SeriesClass::rooted}) {
        const BivarSeries closed = bivariate_closed_form(cls, N);
        const BivarSeries fixed = functional_equation_fixed_point(cls, N);
        CHECK(closed == fixed);
        CHECK(at_u1(closed) == closed_form(cls, N));
    }
    CHECK_THROWS_AS(bivariate_closed_form(SeriesClass::path, N), std::invalid_argument);
}

TEST_CASE("bivariate forest coefficients at small sizes") {
    const BivarSeries f = bivariate_closed_form(SeriesClass::forest, 6);
    CHECK(poly_at(f, 1) == Poly{0, 1});           // u
    CHECK(poly_at(f, 2) == Poly{0, 1, 1});        // u + u^2
    CHECK(poly_at(f, 3) == Poly{0, 2, 3, 1});     // 2u + 3u^2 + u^3
}

TEST_CASE("bivariate smooth and rooted-by-ascent coefficients at small sizes") {
    const BivarSeries s = functional_equation_fixed_point(SeriesClass::smooth, 5);
    CHECK(poly_at(s, 1) == Poly{0, 1});            // v
    CHECK(poly_at(s, 2) == Poly{0, 1, 1});         // v + v^2
    CHECK(poly_at(s, 3) == Poly{0, 3, 2, 1});      // 3v + 2v^2 + v^3

    const BivarSeries r = functional_equation_fixed_point(SeriesClass::rooted_by_ascent, 5);
    CHECK(poly_at(r, 1) == Poly{0, 1});
    CHECK(poly_at(r, 2) == Poly{0, 0, 1});         // the ascent of 12 is 2
    CHECK(poly_at(r, 3) == Poly{0, 1, 0, 1});      // 132 and 123
}

TEST_CASE("series identities hold through the default order 30") {
    const int N = 30;
    const BivarSeries r = functional_equation_fixed_point(SeriesClass::rooted, N);
    CHECK(at_u1(r) == closed_form(SeriesClass::rooted, N));
    // R(u) (1 - u R(1)) = xu
    const BivarSeries xu = times_u(embed(series_poly(N, {0, 1})), 1);
    CHECK(r * (embed(series_poly(N, {1})) - times_u(embed(at_u1(r)), 1)) == xu);

    for (SeriesClass cls : {SeriesClass::forest, SeriesClass::tree, SeriesClass::path,
                            SeriesClass::smooth})
        CHECK(at_u1(functional_equation_fixed_point(cls, N)) == closed_form(cls, N));

    // F(u) (1 - T(1)) = T(u) on the closed bivariate forms.
    const BivarSeries f = bivariate_closed_form(SeriesClass::forest, N);
    const BivarSeries t = bivariate_closed_form(SeriesClass::tree, N);
    CHECK(f * (embed(series_poly(N, {1})) - embed(at_u1(t))) == t);
}

TEST_CASE("kernel root annihilates u - 1 - x u^2") {
    const int N = 30;
    const TruncSeries sq = series_sqrt(series_poly(N + 1, {1, -4}));
    const TruncSeries u =
        series_div(series_poly(N + 1, {1}) - sq, series_poly(N + 1, {0, 2}));
    REQUIRE(u.order == N);
    const TruncSeries x = series_poly(N, {0, 1});
    CHECK(u - series_poly(N, {1}) - x * u * u == TruncSeries(N));
}

TEST_CASE("rooted bivariate identity R(u) = xu / (1 - u R(1))") {
    const int N = 12;
    const BivarSeries r = functional_equation_fixed_point(SeriesClass::rooted, N);
    const BivarSeries xu = times_u(embed(series_poly(N, {0, 1})), 1);
    const BivarSeries den = embed(series_poly(N, {1})) - times_u(embed(at_u1(r)), 1);
    CHECK(r * den == xu);
    // First closed form of the same series, checked multiplicatively:
    // R(u) * 2 (1 - u + x u^2) = xu (2 - u - u sqrt(1-4x)).
    const TruncSeries sq = series_sqrt(series_poly(N, {1, -4}));
    const BivarSeries lhs =
        r * (embed(series_poly(N, {2})) - times_u(embed(series_poly(N, {2})), 1) +
             times_u(embed(series_poly(N, {0, 2})), 2));
    const BivarSeries rhs =
        xu * (embed(series_poly(N, {2})) - times_u(embed(series_poly(N, {1})), 1) -
              times_u(embed(sq), 1));
    CHECK(lhs == rhs);
}

TEST_CASE("link identity F(u) (1 - T(1)) = T(u)") {
    const int N = 12;
    const BivarSeries f = bivariate_closed_form(SeriesClass::forest, N);
    const BivarSeries t = bivariate_closed_form(SeriesClass::tree, N);
    const BivarSeries one = embed(series_poly(N, {1}));
    CHECK(f * (one - embed(at_u1(t))) == t);
}

TEST_CASE("divided differences are exact polynomial operations") {
    BivarSeries a(2);
    a.c[1] = Poly{0, 2, 3, 1};  // 2u + 3u^2 + u^3 at x^1
    const BivarSeries dd = divided_difference(a);
    CHECK(dd.c[1] == Poly{6, 4, 1});  // (A(u)-A(1))/(u-1)
    CHECK(at_u1(a)[1] == 6);
    CHECK(du_at_u1(a)[1] == 11);
}

TEST_CASE("growth ratios approach the singularity radii") {
    const Rational forest_ratio = growth_ratio(SeriesClass::forest, 30);
    const RationalInterval forest_root = bisect_root({-1, 2, -5, 1}, 4, 5, 60);
    CHECK(forest_ratio >= forest_root.lo * Rational(99, 100));
    CHECK(forest_ratio <= forest_root.hi * Rational(101, 100));

    const Rational smooth_ratio = growth_ratio(SeriesClass::smooth, 30);
    const RationalInterval smooth_root = bisect_root({-4, 8, -6, 1}, 4, 5, 60);
    CHECK(smooth_ratio >= smooth_root.lo * Rational(99, 100));
    CHECK(smooth_ratio <= smooth_root.hi * Rational(101, 100));

    const Rational tree_ratio = growth_ratio(SeriesClass::tree, 30);
    CHECK(tree_ratio >= Rational(9, 2) * Rational(99, 100));
    CHECK(tree_ratio <= Rational(9, 2) * Rational(101, 100));

    // The Catalan ratio is 4 - 6/N; at N = 200 it is within one percent of 4.
    const Rational rooted_ratio = growth_ratio(SeriesClass::rooted, 200);
    CHECK(rooted_ratio == Rational(397, 100));  // (4 N - 6) / N at N = 200
    CHECK(rooted_ratio >= Rational(4) * Rational(99, 100));

    const Rational path_ratio = growth_ratio(SeriesClass::path, 20);
    CHECK(path_ratio - 2 >= 0);
    CHECK(path_ratio - 2 <= Rational(1, 10000));
}

TEST_CASE("root bisection isolates sqrt(2)") {
    const RationalInterval r = bisect_root({-2, 0, 1}, 1, 2, 40);
    CHECK(r.hi - r.lo <= Rational(1, 1000000));
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
    CHECK_THROWS_AS(bisect_root({1, 0, 1}, 0, 1, 10), std::invalid_argument);
}

TEST_CASE("harmonic numbers and the edge-total formula") {
    CHECK(harmonic_number(1) == 1);
    CHECK(harmonic_number(4) == Rational(25, 12));
    CHECK(total_edges_formula(3) == 8);
}
