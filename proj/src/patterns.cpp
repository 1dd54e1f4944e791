#include "permforest/patterns.hpp"

#include <algorithm>

#include "permforest/graph.hpp"

namespace permforest {

namespace {

// Sorted values at positions strictly after r, for each r. suffix[r] is the
// sorted vector of p(r+1..n).
std::vector<std::vector<int>> suffix_values(const Permutation& p) {
    const int n = p.size();
    std::vector<std::vector<int>> suf(static_cast<size_t>(n) + 1);
    for (int r = n - 1; r >= 1; --r) {
        auto& v = suf[static_cast<size_t>(r)];
        v = suf[static_cast<size_t>(r) + 1];
        v.insert(std::upper_bound(v.begin(), v.end(), p(r + 1)), p(r + 1));
    }
    return suf;
}

bool any_value_in_open_interval(const std::vector<int>& sorted, int lo, int hi) {
    if (lo >= hi) return false;
    auto it = std::upper_bound(sorted.begin(), sorted.end(), lo);
    return it != sorted.end() && *it < hi;
}

}  // namespace

std::optional<PatternOccurrence> contains_1324(const Permutation& p) {
    const int n = p.size();
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b) {
            if (p(b) < p(a)) continue;
            for (int c = b + 1; c <= n - 1; ++c) {
                if (!(p(a) < p(c) && p(c) < p(b))) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (p(d) > p(b)) return PatternOccurrence{a, b, c, d};
            }
        }
    return std::nullopt;
}

std::optional<PatternOccurrence> contains_2143(const Permutation& p) {
    const int n = p.size();
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b) {
            if (p(b) > p(a)) continue;
            for (int c = b + 1; c <= n - 1; ++c) {
                if (p(c) < p(a)) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (p(a) < p(d) && p(d) < p(c)) return PatternOccurrence{a, b, c, d};
            }
        }
    return std::nullopt;
}

std::optional<PatternOccurrence> contains_21bar354(const Permutation& p) {
    const int n = p.size();
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b) {
            if (p(b) > p(a)) continue;
            for (int c = b + 1; c <= n - 1; ++c) {
                if (p(c) < p(a)) continue;
                for (int d = c + 1; d <= n; ++d) {
                    if (!(p(a) < p(d) && p(d) < p(c))) continue;
                    bool covered = false;
                    for (int t = b + 1; t < c && !covered; ++t)
                        covered = p(a) < p(t) && p(t) < p(d);
                    if (!covered) return PatternOccurrence{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

bool has_1324(const Permutation& p) {
    // 1324 exists iff some pair q < r with p(r) < p(q) admits a smaller value
    // before q and a larger value after r.
    const int n = p.size();
    if (n < 4) return false;
    std::vector<int> min_before(static_cast<size_t>(n) + 1);
    std::vector<int> max_after(static_cast<size_t>(n) + 2);
    min_before[1] = n + 1;
    for (int i = 2; i <= n; ++i)
        min_before[static_cast<size_t>(i)] =
            std::min(min_before[static_cast<size_t>(i) - 1], p(i - 1));
    max_after[static_cast<size_t>(n)] = 0;
    max_after[static_cast<size_t>(n) + 1] = 0;
    for (int i = n - 1; i >= 1; --i)
        max_after[static_cast<size_t>(i)] =
            std::max(max_after[static_cast<size_t>(i) + 1], p(i + 1));
    for (int q = 2; q <= n - 2; ++q)
        for (int r = q + 1; r <= n - 1; ++r)
            if (p(r) < p(q) && min_before[static_cast<size_t>(q)] < p(r) &&
                max_after[static_cast<size_t>(r)] > p(q))
                return true;
    return false;
}

bool has_2143(const Permutation& p) {
    // top21[b]: minimal p(x) over inversions (x, y) with y <= b; 2143 exists
    // iff some inversion (r, s) has top21[r-1] < p(s).
    const int n = p.size();
    if (n < 4) return false;
    std::vector<int> top21(static_cast<size_t>(n) + 1, n + 1);
    for (int q = 2; q <= n; ++q) {
        int best = n + 1;
        for (int x = 1; x < q; ++x)
            if (p(x) > p(q) && p(x) < best) best = p(x);
        top21[static_cast<size_t>(q)] = std::min(top21[static_cast<size_t>(q) - 1], best);
    }
    for (int r = 3; r <= n - 1; ++r) {
        if (top21[static_cast<size_t>(r) - 1] > n) continue;
        for (int s = r + 1; s <= n; ++s)
            if (p(s) < p(r) && top21[static_cast<size_t>(r) - 1] < p(s)) return true;
    }
    return false;
}

bool has_21bar354(const Permutation& p) {
    const int n = p.size();
    if (n < 4) return false;
    const auto suf = suffix_values(p);
    for (int q = 2; q <= n - 2; ++q) {
        for (int pp = 1; pp < q; ++pp) {
            if (p(pp) < p(q)) continue;
            const int a = p(pp);
            // Scanning r rightward, ceil tracks the least intermediate value
            // above a; an admissible p(s) must stay below it.
            int ceil = n + 1;
            for (int r = q + 1; r <= n - 1; ++r) {
                if (p(r) > a) {
                    int hi = std::min(ceil, p(r));
                    if (any_value_in_open_interval(suf[static_cast<size_t>(r)], a, hi))
                        return true;
                    ceil = std::min(ceil, p(r));
                }
            }
        }
    }
    return false;
}

namespace {

bool classical_search(const Permutation& p, const Permutation& pat, size_t depth,
                      std::vector<int>& chosen) {
    const int m = pat.size();
    if (static_cast<int>(depth) == m) return true;
    const int n = p.size();
    int start = depth == 0 ? 1 : chosen[depth - 1] + 1;
    for (int pos = start; pos + (m - static_cast<int>(depth) - 1) <= n; ++pos) {
        bool ok = true;
        for (size_t e = 0; e < depth && ok; ++e) {
            bool want = pat(static_cast<int>(e) + 1) < pat(static_cast<int>(depth) + 1);
            bool got = p(chosen[e]) < p(pos);
            ok = want == got;
        }
        if (!ok) continue;
        chosen[depth] = pos;
        if (classical_search(p, pat, depth + 1, chosen)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_classical(const Permutation& p,
                                                   const Permutation& pattern) {
    if (pattern.size() > p.size()) return std::nullopt;
    std::vector<int> chosen(static_cast<size_t>(pattern.size()), 0);
    if (classical_search(p, pattern, 0, chosen)) return chosen;
    return std::nullopt;
}

namespace {

long long orient(long long ax, long long ay, long long bx, long long by, long long cx,
                 long long cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace

bool natural_embedding_planar(const Permutation& p) {
    const PermGraph g = build_graph(p);
    const size_t m = g.edges.size();
    for (size_t i = 0; i < m; ++i) {
        const auto [a, b] = g.edges[i];
        for (size_t j = i + 1; j < m; ++j) {
            const auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            long long o1 = orient(a, p(a), b, p(b), c, p(c));
            long long o2 = orient(a, p(a), b, p(b), d, p(d));
            long long o3 = orient(c, p(c), d, p(d), a, p(a));
            long long o4 = orient(c, p(c), d, p(d), b, p(b));
            if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
                ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
                return false;
        }
    }
    return true;
}

}  // namespace permforest
