#ifndef PERMFOREST_SERIES_HPP
#define PERMFOREST_SERIES_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace permforest {

using Rational = mpq_class;

// Power series in x truncated at x^order, exact rational coefficients.
struct TruncSeries {
    int order = 0;
    std::vector<Rational> c;  // c[k] is the coefficient of x^k, k <= order

    explicit TruncSeries(int ord) : order(ord), c(static_cast<size_t>(ord) + 1) {}

    const Rational& operator[](int k) const { return c[static_cast<size_t>(k)]; }
    Rational& operator[](int k) { return c[static_cast<size_t>(k)]; }

    bool operator==(const TruncSeries& o) const { return order == o.order && c == o.c; }
};

// Series with the given ascending polynomial coefficients, e.g. {1, -4} for 1-4x.
TruncSeries series_poly(int order, const std::vector<long>& coeffs);

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const Rational& s, const TruncSeries& a);

// Exact division after factoring out the denominator valuation; requires the
// numerator valuation to be at least as large. The quotient's order shrinks
// by the valuation (those coefficients are no longer determined).
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

// Shorten a series to a smaller truncation order.
TruncSeries truncate(const TruncSeries& s, int order);

// Square root of a series with constant term 1, by the direct coefficient
// recurrence.
TruncSeries series_sqrt(const TruncSeries& a);

// Asserts every coefficient is an integer and returns them.
std::vector<mpz_class> integer_coefficients(const TruncSeries& s);

// ---------------------------------------------------------------------------

// Polynomial in the catalytic variable, ascending powers, trailing zeros trimmed.
using Poly = std::vector<Rational>;

// Series in x truncated at x^order whose coefficients are polynomials in a
// second (catalytic) variable u.
struct BivarSeries {
    int order = 0;
    std::vector<Poly> c;  // c[k] = [x^k], a polynomial in u

    explicit BivarSeries(int ord) : order(ord), c(static_cast<size_t>(ord) + 1) {}

    bool operator==(const BivarSeries& o) const;
};

BivarSeries operator+(const BivarSeries& a, const BivarSeries& b);
BivarSeries operator-(const BivarSeries& a, const BivarSeries& b);
BivarSeries operator*(const BivarSeries& a, const BivarSeries& b);

// Division by a series whose x^0 coefficient is a nonzero constant.
BivarSeries bivar_div(const BivarSeries& a, const BivarSeries& b);

BivarSeries embed(const TruncSeries& s);        // u-degree 0
BivarSeries times_u(const BivarSeries& a, int power);
TruncSeries at_u1(const BivarSeries& a);        // specialize u = 1
TruncSeries du_at_u1(const BivarSeries& a);     // d/du at u = 1

// (A(u) - A(1)) / (u - 1) computed symbolically on each x-coefficient:
// u^i contributes u^{i-1} + ... + 1.
BivarSeries divided_difference(const BivarSeries& a);

// Asserts integrality; result[k][l] is the coefficient of x^k u^l.
std::vector<std::vector<mpz_class>> integer_coefficients(const BivarSeries& s);

// ---------------------------------------------------------------------------

enum class SeriesClass { forest, tree, rooted, path, smooth, rooted_by_ascent };

std::optional<SeriesClass> parse_series_class(const std::string& name);
std::string to_string(SeriesClass cls);

// Exact expansions of the closed-form generating functions. rooted_by_ascent
// counts the same permutations as rooted, so their univariate series agree.
TruncSeries closed_form(SeriesClass cls, int order);

// Closed bivariate forms: forest, tree and smooth from the kernel-method
// solutions in V = (1 - 2x - sqrt(1-4x)) / (2x); rooted from
// xu / (1 - u R(x)). No closed bivariate form for path.
BivarSeries bivariate_closed_form(SeriesClass cls, int order);

// x-adic fixed-point solutions of the functional equations; the path series
// is univariate and is returned constant in u.
BivarSeries functional_equation_fixed_point(SeriesClass cls, int order);

// coeff(order) / coeff(order - 1) of the univariate series, exact.
Rational growth_ratio(SeriesClass cls, int order);

struct RationalInterval {
    Rational lo, hi;
};

// Bisection of a sign change of the integer polynomial (ascending
// coefficients) on [lo, hi], halving `steps` times. Exact arithmetic.
RationalInterval bisect_root(const std::vector<long>& poly, Rational lo, Rational hi,
                             int steps);

Rational harmonic_number(int n);

}  // namespace permforest

#endif
