#include "permforest/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "permforest/patterns.hpp"
#include "permforest/series.hpp"

namespace permforest {

void CensusRow::merge(const CensusRow& o) {
    auto add = [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    };
    total += o.total;
    forest += o.forest;
    tree += o.tree;
    rooted += o.rooted;
    path += o.path;
    smooth += o.smooth;
    plane += o.plane;
    add(forest_by_m, o.forest_by_m);
    add(tree_by_m, o.tree_by_m);
    add(rooted_by_m, o.rooted_by_m);
    add(smooth_by_a, o.smooth_by_a);
    add(rooted_by_a, o.rooted_by_a);
    total_edges += o.total_edges;
    for (size_t i = 0; i < bar_count.size(); ++i)
        for (size_t j = 0; j < bar_count[i].size(); ++j) bar_count[i][j] += o.bar_count[i][j];
}

namespace {

CensusRow empty_row(int n) {
    CensusRow row;
    row.n = n;
    const size_t hist = static_cast<size_t>(n) + 1;
    row.forest_by_m.assign(hist, 0);
    row.tree_by_m.assign(hist, 0);
    row.rooted_by_m.assign(hist, 0);
    row.smooth_by_a.assign(hist, 0);
    row.rooted_by_a.assign(hist, 0);
    row.bar_count.assign(hist, std::vector<std::uint64_t>(hist, 0));
    return row;
}

struct UnionFind {
    int parent[kCensusLimit + 1];
    void reset(int n) {
        for (int i = 0; i <= n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void tally(const Permutation& p, CensusRow& row, UnionFind& uf) {
    const int n = p.size();
    ++row.total;

    // Edges via the running-minimum scan, with degrees and a union-find for
    // acyclicity and connectivity in the same pass.
    uf.reset(n);
    int deg[kCensusLimit + 1] = {0};
    int edges = 0;
    int merges = 0;
    bool forest = true;
    for (int i = 1; i <= n; ++i) {
        int ceiling = n + 1;
        for (int j = i + 1; j <= n; ++j) {
            if (p(j) > p(i) && p(j) < ceiling) {
                ceiling = p(j);
                ++edges;
                ++deg[i];
                ++deg[j];
                ++row.bar_count[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (uf.unite(i, j))
                    ++merges;
                else
                    forest = false;
            }
        }
    }
    row.total_edges += static_cast<std::uint64_t>(edges);

    const bool connected = merges == n - 1;
    const bool tree = forest && connected && edges == n - 1;
    const bool rooted = tree && p(1) == 1;
    bool path = tree;
    for (int v = 1; v <= n && path; ++v) path = deg[v] <= 2;

    int m = 0, low = n + 1;
    for (int i = n; i >= 1; --i)
        if (p(i) < low) {
            low = p(i);
            ++m;
        }
    int a = 1;
    while (a < n && p(n - a) < p(n - a + 1)) ++a;

    const bool smooth = !has_1324(p) && !has_2143(p);
    const bool plane = !has_21bar354(p);

    if (forest) {
        ++row.forest;
        ++row.forest_by_m[static_cast<size_t>(m)];
    }
    if (tree) {
        ++row.tree;
        ++row.tree_by_m[static_cast<size_t>(m)];
    }
    if (rooted) {
        ++row.rooted;
        ++row.rooted_by_m[static_cast<size_t>(m)];
        ++row.rooted_by_a[static_cast<size_t>(a)];
    }
    if (path) ++row.path;
    if (smooth) {
        ++row.smooth;
        ++row.smooth_by_a[static_cast<size_t>(a)];
    }
    if (plane) ++row.plane;
}

// All permutations of S_n with first entry `first`.
void census_shard(int n, int first, CensusRow& row) {
    UnionFind uf;
    std::vector<int> vals;
    vals.push_back(first);
    for (int v = 1; v <= n; ++v)
        if (v != first) vals.push_back(v);
    do {
        tally(Permutation(vals), row, uf);
    } while (std::next_permutation(vals.begin() + 1, vals.end()));
}

}  // namespace

CensusRow run_census(int n, int workers) {
    if (n < 1 || n > kCensusLimit)
        throw std::invalid_argument("census size must be between 1 and " +
                                    std::to_string(kCensusLimit));
    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(hc);
    }
    workers = std::min(workers, n);

    std::vector<CensusRow> shards(static_cast<size_t>(n));
    for (auto& s : shards) s = empty_row(n);

    if (workers == 1) {
        for (int first = 1; first <= n; ++first)
            census_shard(n, first, shards[static_cast<size_t>(first) - 1]);
    } else {
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    int first = next.fetch_add(1);
                    if (first > n) return;
                    census_shard(n, first, shards[static_cast<size_t>(first) - 1]);
                }
            });
        for (auto& t : pool) t.join();
    }

    CensusRow row = empty_row(n);
    for (const auto& s : shards) row.merge(s);
    return row;
}

namespace {

int inversions(const std::vector<int>& v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv;
}

}  // namespace

int bruhat_covers(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v = p.values();
    const int base = inversions(v);
    int covers = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(j)]) continue;
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
            if (inversions(v) == base + 1) ++covers;
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
        }
    return covers;
}

namespace {

std::vector<int> degree_sequence(const PermGraph& g) {
    auto deg = g.degrees();
    std::sort(deg.begin() + 1, deg.end());
    return std::vector<int>(deg.begin() + 1, deg.end());
}

bool iso_backtrack(const std::vector<std::vector<char>>& am,
                   const std::vector<std::vector<char>>& bm,
                   const std::vector<int>& deg_a, const std::vector<int>& deg_b,
                   std::vector<int>& map, std::vector<char>& used, int v) {
    const int n = static_cast<int>(deg_a.size()) - 1;
    if (v > n) return true;
    for (int w = 1; w <= n; ++w) {
        if (used[static_cast<size_t>(w)]) continue;
        if (deg_a[static_cast<size_t>(v)] != deg_b[static_cast<size_t>(w)]) continue;
        bool ok = true;
        for (int u = 1; u < v && ok; ++u)
            ok = am[static_cast<size_t>(u)][static_cast<size_t>(v)] ==
                 bm[static_cast<size_t>(map[static_cast<size_t>(u)])][static_cast<size_t>(w)];
        if (!ok) continue;
        map[static_cast<size_t>(v)] = w;
        used[static_cast<size_t>(w)] = 1;
        if (iso_backtrack(am, bm, deg_a, deg_b, map, used, v + 1)) return true;
        used[static_cast<size_t>(w)] = 0;
    }
    return false;
}

std::vector<std::vector<char>> adjacency_matrix(const PermGraph& g) {
    std::vector<std::vector<char>> m(static_cast<size_t>(g.n) + 1,
                                     std::vector<char>(static_cast<size_t>(g.n) + 1, 0));
    for (const Edge& e : g.edges) {
        m[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = 1;
        m[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] = 1;
    }
    return m;
}

}  // namespace

bool graphs_isomorphic(const PermGraph& a, const PermGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    const auto am = adjacency_matrix(a);
    const auto bm = adjacency_matrix(b);
    const auto deg_a = a.degrees();
    const auto deg_b = b.degrees();
    std::vector<int> map(static_cast<size_t>(a.n) + 1, 0);
    std::vector<char> used(static_cast<size_t>(a.n) + 1, 0);
    return iso_backtrack(am, bm, deg_a, deg_b, map, used, 1);
}

std::optional<Permutation> realizability_scan(int n, const PermGraph& target) {
    if (target.n != n)
        throw std::invalid_argument("realizability_scan: vertex count mismatch");
    const size_t e = target.edges.size();
    const auto target_degrees = degree_sequence(target);

    std::vector<int> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = i + 1;
    do {
        Permutation p(vals);
        PermGraph g = build_graph(p);
        if (g.edges.size() != e) continue;
        if (degree_sequence(g) != target_degrees) continue;
        if (graphs_isomorphic(g, target)) return p;
    } while (std::next_permutation(vals.begin(), vals.end()));
    return std::nullopt;
}

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

mpz_class total_edges_formula(int n) {
    Rational value = Rational(factorial(n + 1)) * (harmonic_number(n + 1) - 2) +
                     Rational(factorial(n));
    if (value.get_den() != 1)
        throw std::logic_error("total edge formula did not produce an integer");
    return value.get_num();
}

}  // namespace permforest
