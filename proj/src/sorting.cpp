#include "permforest/sorting.hpp"

#include <algorithm>

namespace permforest {

namespace {

// Count of remaining bars crossing each divider; bar (i, j) crosses i..j-1.
std::vector<int> crossing_counts(int n, const std::vector<Edge>& bars,
                                 const std::vector<char>& moved) {
    std::vector<int> cnt(static_cast<size_t>(n), 0);  // dividers 1..n-1
    for (size_t k = 0; k < bars.size(); ++k) {
        if (moved[k]) continue;
        for (int d = bars[k].first; d < bars[k].second; ++d) ++cnt[static_cast<size_t>(d)];
    }
    return cnt;
}

int unique_bar_at(const std::vector<Edge>& bars, const std::vector<char>& moved, int d) {
    for (size_t k = 0; k < bars.size(); ++k)
        if (!moved[k] && bars[k].first <= d && d < bars[k].second) return static_cast<int>(k);
    return -1;
}

SortTrace run_sort(const BarDiagram& diag, bool restart_leftmost) {
    const int n = diag.n;
    SortTrace trace;
    std::vector<char> moved(diag.bars.size(), 0);
    size_t remaining = diag.bars.size();

    int scan_from = 1;
    while (remaining > 0) {
        auto cnt = crossing_counts(n, diag.bars, moved);
        bool moved_one = false;
        int d = restart_leftmost ? 1 : scan_from;
        for (int step = 0; step < n - 1; ++step) {
            if (cnt[static_cast<size_t>(d)] == 1) {
                int k = unique_bar_at(diag.bars, moved, d);
                trace.moves.emplace_back(diag.bars[static_cast<size_t>(k)], d);
                moved[static_cast<size_t>(k)] = 1;
                --remaining;
                moved_one = true;
                scan_from = d + 1 > n - 1 ? 1 : d + 1;
                break;
            }
            ++d;
            if (d > n - 1) d = 1;
        }
        if (!moved_one) break;
    }

    for (size_t k = 0; k < diag.bars.size(); ++k)
        if (!moved[k]) trace.residual.push_back(diag.bars[k]);
    trace.fully_sorted = trace.residual.empty();
    return trace;
}

}  // namespace

SortTrace sort_bars(const BarDiagram& d) {
    return run_sort(d, true);
}

SortTrace sort_bars_wraparound(const BarDiagram& d) {
    return run_sort(d, false);
}

IncidenceMatrix incidence_matrix(const BarDiagram& d) {
    IncidenceMatrix m;
    m.rows = static_cast<int>(d.bars.size());
    m.cols = d.n - 1;
    m.entries.assign(static_cast<size_t>(m.rows),
                     std::vector<int>(static_cast<size_t>(m.cols), 0));
    for (size_t k = 0; k < d.bars.size(); ++k)
        for (int c = d.bars[k].first; c < d.bars[k].second; ++c)
            m.entries[k][static_cast<size_t>(c) - 1] = 1;
    return m;
}

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

void swap_cols(Mat& a, int c1, int c2) {
    if (c1 == c2) return;
    for (auto& row : a)
        std::swap(row[static_cast<size_t>(c1)], row[static_cast<size_t>(c2)]);
}

}  // namespace

std::vector<mpz_class> elementary_divisors(Mat a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<mpz_class> divisors;

    int t = 0;
    while (t < rows && t < cols) {
        int pr = -1, pc = -1;
        for (int i = t; i < rows && pr < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(pr)]);
        swap_cols(a, t, pc);

        // Reduce until row t and column t are zero away from the pivot; the
        // pivot magnitude strictly decreases whenever a remainder survives,
        // so this terminates.
        for (;;) {
            int br = t;
            for (int i = t + 1; i < rows; ++i) {
                const mpz_class& x = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (x != 0 &&
                    cmp(abs(x), abs(a[static_cast<size_t>(br)][static_cast<size_t>(t)])) < 0)
                    br = i;
            }
            std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(br)]);
            int bc = t;
            for (int j = t + 1; j < cols; ++j) {
                const mpz_class& x = a[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (x != 0 &&
                    cmp(abs(x), abs(a[static_cast<size_t>(t)][static_cast<size_t>(bc)])) < 0)
                    bc = j;
            }
            swap_cols(a, t, bc);

            const mpz_class piv = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                const mpz_class x = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (x == 0) continue;
                mpz_class f = x / piv;
                if (f != 0)
                    for (int j = t; j < cols; ++j)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            f * a[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                const mpz_class x = a[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (x == 0) continue;
                mpz_class f = x / piv;
                if (f != 0)
                    for (int i = t; i < rows; ++i)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            f * a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (a[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) clean = false;
            }
            if (clean) break;
        }
        ++t;
    }

    for (int i = 0; i < t; ++i)
        divisors.push_back(abs(a[static_cast<size_t>(i)][static_cast<size_t>(i)]));

    // Enforce the divisibility chain d1 | d2 | ... with gcd/lcm exchanges.
    for (size_t i = 0; i + 1 < divisors.size(); ++i)
        for (size_t j = i + 1; j < divisors.size(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), divisors[i].get_mpz_t(), divisors[j].get_mpz_t());
            mpz_class l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    return divisors;
}

bool is_onto(const IncidenceMatrix& m) {
    if (m.rows == 0) return true;  // the map onto Z^0 is vacuously onto
    Mat a(static_cast<size_t>(m.rows), std::vector<mpz_class>(static_cast<size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
    auto div = elementary_divisors(std::move(a));
    if (static_cast<int>(div.size()) != m.rows) return false;
    return std::all_of(div.begin(), div.end(), [](const mpz_class& d) { return d == 1; });
}

bool is_bijective(const IncidenceMatrix& m) {
    return m.rows == m.cols && is_onto(m);
}

}  // namespace permforest
