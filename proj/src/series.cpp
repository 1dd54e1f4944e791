#include "permforest/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace permforest {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order != b.order)
        throw std::invalid_argument("series truncation orders differ");
}

}  // namespace

TruncSeries series_poly(int order, const std::vector<long>& coeffs) {
    TruncSeries s(order);
    for (size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k)
        s.c[k] = coeffs[k];
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) r[k] = a[k] + b[k];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) r[k] = a[k] - b[k];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.order; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncSeries operator*(const Rational& s, const TruncSeries& a) {
    TruncSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) r[k] = s * a[k];
    return r;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    int val = 0;
    while (val <= b.order && b[val] == 0) ++val;
    if (val > b.order)
        throw std::invalid_argument("series division by zero series");
    for (int k = 0; k < val; ++k)
        if (a[k] != 0)
            throw std::invalid_argument("series division: numerator valuation too small");

    // Shifting out x^val loses the top `val` coefficients, so the quotient
    // carries the honestly known truncation order.
    TruncSeries q(a.order - val);
    for (int k = 0; k + val <= a.order; ++k) {
        Rational acc = a[k + val];
        for (int j = 1; j <= k; ++j) {
            if (j + val <= b.order && b[j + val] != 0) acc -= b[j + val] * q[k - j];
        }
        q[k] = acc / b[val];
    }
    return q;
}

TruncSeries truncate(const TruncSeries& s, int order) {
    if (order > s.order)
        throw std::invalid_argument("cannot extend a truncated series");
    TruncSeries r(order);
    for (int k = 0; k <= order; ++k) r[k] = s[k];
    return r;
}

TruncSeries series_sqrt(const TruncSeries& a) {
    if (a.order < 0 || a[0] != 1)
        throw std::invalid_argument("series sqrt requires constant term 1");
    TruncSeries s(a.order);
    s[0] = 1;
    for (int n = 1; n <= a.order; ++n) {
        Rational acc = a[n];
        for (int k = 1; k < n; ++k) acc -= s[k] * s[n - k];
        s[n] = acc / 2;
    }
    return s;
}

std::vector<mpz_class> integer_coefficients(const TruncSeries& s) {
    std::vector<mpz_class> out;
    out.reserve(s.c.size());
    for (const Rational& q : s.c) {
        if (q.get_den() != 1)
            throw std::logic_error("series coefficient is not an integer");
        out.push_back(q.get_num());
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly padd(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly psub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly pscale(const Rational& s, const Poly& a) {
    if (s == 0) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    trim(r);
    return r;
}

void require_same_order(const BivarSeries& a, const BivarSeries& b) {
    if (a.order != b.order)
        throw std::invalid_argument("series truncation orders differ");
}

}  // namespace

bool BivarSeries::operator==(const BivarSeries& o) const {
    if (order != o.order) return false;
    for (size_t k = 0; k < c.size(); ++k) {
        Poly d = psub(c[k], o.c[k]);
        if (!d.empty()) return false;
    }
    return true;
}

BivarSeries operator+(const BivarSeries& a, const BivarSeries& b) {
    require_same_order(a, b);
    BivarSeries r(a.order);
    for (int k = 0; k <= a.order; ++k)
        r.c[static_cast<size_t>(k)] =
            padd(a.c[static_cast<size_t>(k)], b.c[static_cast<size_t>(k)]);
    return r;
}

BivarSeries operator-(const BivarSeries& a, const BivarSeries& b) {
    require_same_order(a, b);
    BivarSeries r(a.order);
    for (int k = 0; k <= a.order; ++k)
        r.c[static_cast<size_t>(k)] =
            psub(a.c[static_cast<size_t>(k)], b.c[static_cast<size_t>(k)]);
    return r;
}

BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
    require_same_order(a, b);
    BivarSeries r(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a.c[static_cast<size_t>(i)].empty()) continue;
        for (int j = 0; i + j <= a.order; ++j) {
            if (b.c[static_cast<size_t>(j)].empty()) continue;
            r.c[static_cast<size_t>(i + j)] =
                padd(r.c[static_cast<size_t>(i + j)],
                     pmul(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(j)]));
        }
    }
    return r;
}

BivarSeries bivar_div(const BivarSeries& a, const BivarSeries& b) {
    require_same_order(a, b);
    const Poly& b0 = b.c[0];
    if (b0.size() != 1 || b0[0] == 0)
        throw std::invalid_argument(
            "bivariate division requires a nonzero constant at x^0");
    BivarSeries q(a.order);
    for (int k = 0; k <= a.order; ++k) {
        Poly acc = a.c[static_cast<size_t>(k)];
        for (int j = 1; j <= k; ++j)
            acc = psub(acc, pmul(b.c[static_cast<size_t>(j)], q.c[static_cast<size_t>(k - j)]));
        q.c[static_cast<size_t>(k)] = pscale(1 / b0[0], acc);
    }
    return q;
}

BivarSeries embed(const TruncSeries& s) {
    BivarSeries r(s.order);
    for (int k = 0; k <= s.order; ++k)
        if (s[k] != 0) r.c[static_cast<size_t>(k)] = Poly{s[k]};
    return r;
}

BivarSeries times_u(const BivarSeries& a, int power) {
    BivarSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) {
        const Poly& p = a.c[static_cast<size_t>(k)];
        if (p.empty()) continue;
        Poly q(p.size() + static_cast<size_t>(power));
        for (size_t i = 0; i < p.size(); ++i) q[i + static_cast<size_t>(power)] = p[i];
        r.c[static_cast<size_t>(k)] = std::move(q);
    }
    return r;
}

TruncSeries at_u1(const BivarSeries& a) {
    TruncSeries r(a.order);
    for (int k = 0; k <= a.order; ++k)
        for (const Rational& q : a.c[static_cast<size_t>(k)]) r[k] += q;
    return r;
}

TruncSeries du_at_u1(const BivarSeries& a) {
    TruncSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) {
        const Poly& p = a.c[static_cast<size_t>(k)];
        for (size_t i = 1; i < p.size(); ++i) r[k] += static_cast<long>(i) * p[i];
    }
    return r;
}

BivarSeries divided_difference(const BivarSeries& a) {
    BivarSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) {
        const Poly& p = a.c[static_cast<size_t>(k)];
        if (p.size() <= 1) continue;
        // Sum of the geometric tails: coefficient of u^j is sum of p[i], i > j.
        Poly q(p.size() - 1);
        Rational tail = 0;
        for (size_t j = p.size(); j-- > 1;) {
            tail += p[j];
            q[j - 1] = tail;
        }
        trim(q);
        r.c[static_cast<size_t>(k)] = std::move(q);
    }
    return r;
}

std::vector<std::vector<mpz_class>> integer_coefficients(const BivarSeries& s) {
    std::vector<std::vector<mpz_class>> out(s.c.size());
    for (size_t k = 0; k < s.c.size(); ++k)
        for (const Rational& q : s.c[k]) {
            if (q.get_den() != 1)
                throw std::logic_error("series coefficient is not an integer");
            out[k].push_back(q.get_num());
        }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<SeriesClass> parse_series_class(const std::string& name) {
    if (name == "forest") return SeriesClass::forest;
    if (name == "tree") return SeriesClass::tree;
    if (name == "rooted") return SeriesClass::rooted;
    if (name == "path") return SeriesClass::path;
    if (name == "smooth") return SeriesClass::smooth;
    if (name == "rooted-by-ascent") return SeriesClass::rooted_by_ascent;
    return std::nullopt;
}

std::string to_string(SeriesClass cls) {
    switch (cls) {
        case SeriesClass::forest: return "forest";
        case SeriesClass::tree: return "tree";
        case SeriesClass::rooted: return "rooted";
        case SeriesClass::path: return "path";
        case SeriesClass::smooth: return "smooth";
        case SeriesClass::rooted_by_ascent: return "rooted-by-ascent";
    }
    return "?";
}

namespace {

TruncSeries sqrt_1m4x(int order) {
    return series_sqrt(series_poly(order, {1, -4}));
}

// V = U - 1 = (1 - 2x - sqrt(1-4x)) / (2x), the series of Catalan numbers
// shifted to start with x. Computed with headroom to survive the division
// by 2x at full order.
TruncSeries catalan_v(int order) {
    const int m = order + 1;
    TruncSeries num = series_poly(m, {1, -2}) - sqrt_1m4x(m);
    return series_div(num, series_poly(m, {0, 2}));
}

}  // namespace

TruncSeries closed_form(SeriesClass cls, int order) {
    const int N = order;
    const TruncSeries s = sqrt_1m4x(N);
    switch (cls) {
        case SeriesClass::forest: {
            TruncSeries num = series_poly(N, {1, -1}) * series_poly(N, {1, -4, -2}) -
                              series_poly(N, {1, -5}) * s;
            TruncSeries den = Rational(2) * series_poly(N, {1, -5, 2, -1});
            return series_div(num, den);
        }
        case SeriesClass::tree: {
            TruncSeries num = series_poly(N, {1, -3, -6}) - series_poly(N, {1, -5}) * s;
            TruncSeries den = Rational(2) * series_poly(N, {2, -9});
            return series_div(num, den);
        }
        case SeriesClass::rooted:
        case SeriesClass::rooted_by_ascent: {
            return Rational(1, 2) * (series_poly(N, {1}) - s);
        }
        case SeriesClass::path: {
            TruncSeries num = series_poly(N, {0, 1}) * series_poly(N, {1, -2, 2});
            TruncSeries den = series_poly(N, {1, -1}) * series_poly(N, {1, -2});
            return series_div(num, den);
        }
        case SeriesClass::smooth: {
            TruncSeries num = series_poly(N, {0, 1}) *
                              (series_poly(N, {1, -5, 4}) + series_poly(N, {0, 1}) * s);
            TruncSeries den = series_poly(N, {1, -6, 8, -4});
            return series_div(num, den);
        }
    }
    throw std::logic_error("unknown series class");
}

BivarSeries bivariate_closed_form(SeriesClass cls, int order) {
    const int N = order;
    const BivarSeries v = embed(catalan_v(N));
    const BivarSeries one = embed(series_poly(N, {1}));
    const BivarSeries x = embed(series_poly(N, {0, 1}));
    const BivarSeries xu = times_u(x, 1);
    const BivarSeries uv = times_u(v, 1);
    const BivarSeries one_plus_v = one + v;
    const BivarSeries kernelish = one_plus_v - uv;  // 1 + V - uV

    const BivarSeries vv = v * v;
    const BivarSeries vvv = vv * v;

    switch (cls) {
        case SeriesClass::forest: {
            // uV [(1+V)^2 (1-2V) - uV (1-2V-2V^2)] / [(1-V-2V^2-V^3)(1+V-uV)^2]
            BivarSeries num = uv * (one_plus_v * one_plus_v * (one - v - v) -
                                    uv * (one - v - v - vv - vv));
            BivarSeries den = (one - v - vv - vv - vvv) * kernelish * kernelish;
            return bivar_div(num, den);
        }
        case SeriesClass::tree: {
            // xu [(1+V)^2 (1-2V) - uV (1-2V-2V^2)] / [(1-2V)(1+V-uV)^2]
            BivarSeries num = xu * (one_plus_v * one_plus_v * (one - v - v) -
                                    uv * (one - v - v - vv - vv));
            BivarSeries den = (one - v - v) * kernelish * kernelish;
            return bivar_div(num, den);
        }
        case SeriesClass::smooth: {
            // xu [(1+V)(1-V^2-V^3) - uV (1-V-V^2-V^3)]
            //   / [(1+V-uV)(1-V-V^2-V^3)(1-xu)]
            BivarSeries num =
                xu * (one_plus_v * (one - vv - vvv) - uv * (one - v - vv - vvv));
            BivarSeries den = kernelish * (one - v - vv - vvv) * (one - xu);
            return bivar_div(num, den);
        }
        case SeriesClass::rooted: {
            // R(x, u) = xu / (1 - u R(x, 1))
            BivarSeries r1 = times_u(embed(closed_form(SeriesClass::rooted, N)), 1);
            return bivar_div(xu, one - r1);
        }
        default:
            throw std::invalid_argument(
                "no closed bivariate form for class " + to_string(cls));
    }
}

namespace {

BivarSeries fixed_point_rooted(int order) {
    const int N = order;
    const BivarSeries xu = times_u(embed(series_poly(N, {0, 1})), 1);
    BivarSeries r(N);
    for (int it = 0; it <= N + 1; ++it) {
        BivarSeries next = xu + xu * r + (r - xu) * embed(at_u1(r));
        if (next == r) return r;
        r = next;
    }
    throw std::logic_error("rooted fixed point did not converge");
}

BivarSeries fixed_point_forest_or_tree(int order, bool forest) {
    const int N = order;
    const BivarSeries x = embed(series_poly(N, {0, 1}));
    const BivarSeries xu = times_u(x, 1);
    const BivarSeries xu2 = times_u(x, 2);
    const BivarSeries rooted = fixed_point_rooted(N);
    const BivarSeries r_minus_xu = rooted - xu;
    BivarSeries f(N);
    for (int it = 0; it <= N + 1; ++it) {
        BivarSeries next =
            xu + xu2 * divided_difference(f) + r_minus_xu * embed(du_at_u1(f));
        if (forest) next = next + xu * embed(at_u1(f));
        if (next == f) return f;
        f = next;
    }
    throw std::logic_error("forest/tree fixed point did not converge");
}

TruncSeries fixed_point_path_u1(int order) {
    const int N = order;
    const TruncSeries x = series_poly(N, {0, 1});
    const TruncSeries q = series_div(x, series_poly(N, {1, -1}));  // x/(1-x)
    TruncSeries p(N);
    for (int it = 0; it <= N + 1; ++it) {
        TruncSeries next = x + q * q + q * (p - x);
        if (next == p) return p;
        p = next;
    }
    throw std::logic_error("path fixed point did not converge");
}

BivarSeries fixed_point_rooted_by_ascent(int order) {
    const int N = order;
    const BivarSeries xv = times_u(embed(series_poly(N, {0, 1})), 1);
    const BivarSeries one = embed(series_poly(N, {1}));
    // B = xv(1-x) / (1-xv)
    const BivarSeries base =
        bivar_div(times_u(embed(series_poly(N, {0, 1, -1})), 1), one - xv);
    const BivarSeries x = embed(series_poly(N, {0, 1}));
    BivarSeries r(N);
    for (int it = 0; it <= N + 1; ++it) {
        BivarSeries next = base + x * r + (r - base) * embed(at_u1(r));
        if (next == r) return r;
        r = next;
    }
    throw std::logic_error("rooted-by-ascent fixed point did not converge");
}

BivarSeries fixed_point_smooth(int order) {
    const int N = order;
    const BivarSeries x = embed(series_poly(N, {0, 1}));
    const BivarSeries xv_1mx = times_u(embed(series_poly(N, {0, 1, -1})), 1);  // xv(1-x)
    const BivarSeries xv = times_u(x, 1);
    const BivarSeries one = embed(series_poly(N, {1}));
    const BivarSeries rbar = fixed_point_rooted_by_ascent(N);
    const BivarSeries rbar_excess = rbar - bivar_div(xv_1mx, one - xv);
    const TruncSeries one_minus_x = series_poly(N, {1, -1});

    BivarSeries s(N);
    for (int it = 0; it <= N + 1; ++it) {
        const TruncSeries s1 = at_u1(s);
        const TruncSeries s1p = du_at_u1(s);
        const TruncSeries weight =
            one_minus_x * (s1p + s1) - series_poly(N, {0, 1});
        BivarSeries next = xv_1mx + x * s + xv_1mx * divided_difference(times_u(s, 1)) +
                           rbar_excess * embed(weight);
        if (next == s) return s;
        s = next;
    }
    throw std::logic_error("smooth fixed point did not converge");
}

}  // namespace

BivarSeries functional_equation_fixed_point(SeriesClass cls, int order) {
    switch (cls) {
        case SeriesClass::forest: return fixed_point_forest_or_tree(order, true);
        case SeriesClass::tree: return fixed_point_forest_or_tree(order, false);
        case SeriesClass::rooted: return fixed_point_rooted(order);
        case SeriesClass::path: return embed(fixed_point_path_u1(order));
        case SeriesClass::smooth: return fixed_point_smooth(order);
        case SeriesClass::rooted_by_ascent: return fixed_point_rooted_by_ascent(order);
    }
    throw std::logic_error("unknown series class");
}

Rational growth_ratio(SeriesClass cls, int order) {
    if (order < 2)
        throw std::invalid_argument("growth ratio needs order >= 2");
    const TruncSeries s = closed_form(cls, order);
    if (s[order - 1] == 0)
        throw std::invalid_argument("growth ratio undefined: zero coefficient");
    return s[order] / s[order - 1];
}

RationalInterval bisect_root(const std::vector<long>& poly, Rational lo, Rational hi,
                             int steps) {
    auto eval = [&poly](const Rational& t) {
        Rational acc = 0;
        for (size_t i = poly.size(); i-- > 0;) acc = acc * t + poly[i];
        return acc;
    };
    Rational flo = eval(lo), fhi = eval(hi);
    if (flo == 0) return {lo, lo};
    if (fhi == 0) return {hi, hi};
    if ((flo < 0) == (fhi < 0))
        throw std::invalid_argument("bisect_root: no sign change on interval");
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / 2;
        Rational fmid = eval(mid);
        if (fmid == 0) return {mid, mid};
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

Rational harmonic_number(int n) {
    Rational h = 0;
    for (int k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

}  // namespace permforest
