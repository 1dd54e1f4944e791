#include "permforest/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "permforest/bijections.hpp"
#include "permforest/census.hpp"
#include "permforest/classify.hpp"
#include "permforest/decompose.hpp"
#include "permforest/graph.hpp"
#include "permforest/patterns.hpp"
#include "permforest/series.hpp"
#include "permforest/sorting.hpp"

namespace permforest {

namespace {

constexpr size_t kMaxFailuresPerShard = 4;

struct ShardResult {
    std::vector<std::string> failures;
    int max_edges = 0;
    std::uint64_t forest_count = 0;
    std::set<std::string> words;
    std::set<std::string> trees;
    std::vector<std::vector<int>> rooted_perms;
    std::vector<std::vector<int>> forest_perms;

    void fail(const std::string& what) {
        if (failures.size() < kMaxFailuresPerShard) failures.push_back(what);
    }
};

bool has_triangle(const PermGraph& g) {
    std::vector<unsigned long long> row(static_cast<size_t>(g.n) + 1, 0);
    for (const Edge& e : g.edges) {
        row[static_cast<size_t>(e.first)] |= 1ULL << e.second;
        row[static_cast<size_t>(e.second)] |= 1ULL << e.first;
    }
    for (const Edge& e : g.edges)
        if (row[static_cast<size_t>(e.first)] & row[static_cast<size_t>(e.second)])
            return true;
    return false;
}

// Reachability masks in the oriented graph (vertex bit v for label v).
std::vector<unsigned long long> reach_masks(const PermGraph& g) {
    std::vector<std::vector<int>> succ(static_cast<size_t>(g.n) + 1);
    for (const Edge& e : g.edges) succ[static_cast<size_t>(e.first)].push_back(e.second);
    std::vector<unsigned long long> reach(static_cast<size_t>(g.n) + 1, 0);
    for (int v = g.n; v >= 1; --v) {
        unsigned long long r = 1ULL << v;
        for (int w : succ[static_cast<size_t>(v)]) r |= reach[static_cast<size_t>(w)];
        reach[static_cast<size_t>(v)] = r;
    }
    return reach;
}

void check_permutation(const Permutation& p, int n, ShardResult& res) {
    const std::string tag = to_string(p);
    const PermGraph g = build_graph(p);
    const int e = static_cast<int>(g.edges.size());
    res.max_edges = std::max(res.max_edges, e);

    const ClassReport rep = classify(p);

    const CrossValidation cv = cross_validate(p);
    if (!cv.agree) res.fail("four-way disagreement at " + tag);
    if (cv.graph_acyclic != rep.forest_like)
        res.fail("classify/forest mismatch at " + tag);

    const BarDiagram diag = build_bar_diagram(p);
    if (is_bijective(incidence_matrix(diag)) != rep.tree_like)
        res.fail("bijectivity/tree mismatch at " + tag);

    auto rec = reconstruct(g);
    if (!rec || *rec != p) res.fail("reconstruction failed at " + tag);

    if (has_triangle(g)) res.fail("triangle in graph of " + tag);
    if (e > n * n / 4) res.fail("edge bound exceeded at " + tag);

    const SortTrace trace = sort_bars(diag);
    if (trace.fully_sorted) {
        if (e > n - 1) res.fail("sorted diagram with too many bars at " + tag);
        // Top-down through the sorted diagram (reverse move order) every bar
        // must own a divider not covered above it.
        unsigned long long covered_above = 0;
        for (size_t i = trace.moves.size(); i-- > 0;) {
            const auto& [bar, divider] = trace.moves[i];
            (void)divider;
            unsigned long long span = 0;
            for (int d = bar.first; d < bar.second; ++d) span |= 1ULL << d;
            if ((span & ~covered_above) == 0)
                res.fail("sorted bar without a fresh divider at " + tag);
            covered_above |= span;
        }
    }

    if (natural_embedding_planar(p) != rep.plane)
        res.fail("embedding/barred-pattern mismatch at " + tag);

    if (n <= 7) {
        // Relabelling i -> p(i) carries G_p onto the graph of the inverse.
        std::vector<Edge> relabelled;
        for (const Edge& ed : g.edges) {
            int a = p(ed.first), b = p(ed.second);
            relabelled.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(relabelled.begin(), relabelled.end());
        if (relabelled != build_graph(inverse(p)).edges)
            res.fail("inverse relabelling mismatch at " + tag);

        const auto reach = reach_masks(g);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (p(a) < p(b) && !(reach[static_cast<size_t>(a)] >> b & 1))
                    res.fail("missing monotone bar path at " + tag);

        if (has_21bar354(p) != has_21bar354(inverse(p)))
            res.fail("barred-pattern asymmetry at " + tag);
    }

    if (n <= 8 && bruhat_covers(p) != e)
        res.fail("Bruhat cover count differs from e at " + tag);

    if (rep.rooted_tree_like) {
        const std::string s = serialize(to_plane_tree(p));
        if (static_cast<int>(s.size()) != 2 * (n - 1))
            res.fail("plane-tree size mismatch at " + tag);
        if (from_plane_tree(parse_plane_tree(s)) != p)
            res.fail("plane-tree round trip failed at " + tag);
        res.trees.insert(s);
        res.rooted_perms.push_back(p.values());
    }

    if (rep.path_like && n >= 2) {
        const UDWord w = to_ud_word(p);
        if (from_ud_word(w) != p) res.fail("UD-word round trip failed at " + tag);
        res.words.insert(w.letters);
    }

    if (rep.forest_like) {
        ++res.forest_count;
        res.forest_perms.push_back(p.values());
        if (p(n) != 1) {
            const DecompTriple t = phi(p);
            if (phi_inverse(t) != p) res.fail("phi round trip failed at " + tag);
            if (!statistics_check(p, t).ok())
                res.fail("statistic recurrence failed at " + tag);
        }
    }
}

ShardResult sweep_shard(int n, int first) {
    ShardResult res;
    std::vector<int> vals{first};
    for (int v = 1; v <= n; ++v)
        if (v != first) vals.push_back(v);
    do {
        check_permutation(Permutation(vals), n, res);
    } while (std::next_permutation(vals.begin() + 1, vals.end()));
    return res;
}

struct Reporter {
    std::ostream& out;
    bool all_ok = true;

    void report(bool ok, const std::string& what) {
        out << (ok ? "ok   " : "FAIL ") << what << "\n";
        all_ok = all_ok && ok;
    }
};

}  // namespace

bool run_verification(int max_n, int workers, std::ostream& out) {
    Reporter rep{out};
    const int N = max_n;

    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(hc);
    }

    // Both generating-function routes, shared across sizes.
    std::map<SeriesClass, std::vector<mpz_class>> closed, fixed;
    for (SeriesClass cls : {SeriesClass::forest, SeriesClass::tree, SeriesClass::rooted,
                            SeriesClass::path, SeriesClass::smooth}) {
        closed[cls] = integer_coefficients(closed_form(cls, N));
        fixed[cls] = integer_coefficients(at_u1(functional_equation_fixed_point(cls, N)));
        rep.report(closed[cls] == fixed[cls],
                   "closed form matches fixed point for " + to_string(cls) +
                       " through order " + std::to_string(N));
    }
    const auto biv_forest = integer_coefficients(bivariate_closed_form(SeriesClass::forest, N));
    const auto biv_tree = integer_coefficients(bivariate_closed_form(SeriesClass::tree, N));
    const auto biv_smooth = integer_coefficients(bivariate_closed_form(SeriesClass::smooth, N));
    const auto biv_rooted = integer_coefficients(bivariate_closed_form(SeriesClass::rooted, N));
    rep.report(biv_forest ==
                   integer_coefficients(functional_equation_fixed_point(SeriesClass::forest, N)),
               "bivariate forest closed form matches fixed point");
    rep.report(biv_tree ==
                   integer_coefficients(functional_equation_fixed_point(SeriesClass::tree, N)),
               "bivariate tree closed form matches fixed point");
    rep.report(biv_smooth ==
                   integer_coefficients(functional_equation_fixed_point(SeriesClass::smooth, N)),
               "bivariate smooth closed form matches fixed point");
    rep.report(biv_rooted ==
                   integer_coefficients(functional_equation_fixed_point(SeriesClass::rooted, N)),
               "bivariate rooted closed form matches fixed point");
    const auto biv_rooted_ascent =
        integer_coefficients(functional_equation_fixed_point(SeriesClass::rooted_by_ascent, N));

    std::map<int, std::vector<std::vector<int>>> rooted_by_size, forest_by_size;

    for (int n = 1; n <= N; ++n) {
        // Per-permutation checks, sharded by first entry.
        std::vector<ShardResult> shards(static_cast<size_t>(n));
        {
            std::atomic<int> next{1};
            int pool_size = std::min(workers, n);
            std::vector<std::thread> pool;
            for (int w = 0; w < pool_size; ++w)
                pool.emplace_back([&]() {
                    for (;;) {
                        int first = next.fetch_add(1);
                        if (first > n) return;
                        shards[static_cast<size_t>(first) - 1] = sweep_shard(n, first);
                    }
                });
            for (auto& t : pool) t.join();
        }
        ShardResult total;
        for (auto& s : shards) {
            for (const auto& f : s.failures) total.fail(f);
            total.max_edges = std::max(total.max_edges, s.max_edges);
            total.forest_count += s.forest_count;
            total.words.merge(s.words);
            total.trees.merge(s.trees);
            for (auto& v : s.rooted_perms) total.rooted_perms.push_back(std::move(v));
            for (auto& v : s.forest_perms) total.forest_perms.push_back(std::move(v));
        }

        const std::string at_n = " (n = " + std::to_string(n) + ")";
        for (const auto& f : total.failures) rep.report(false, f + at_n);
        if (total.failures.empty())
            rep.report(true, "per-permutation checks" + at_n);

        rep.report(total.max_edges == n * n / 4, "maximum edge count is floor(n^2/4)" + at_n);

        const CensusRow row = run_census(n, workers);

        auto count_of = [&row](SeriesClass cls) -> std::uint64_t {
            switch (cls) {
                case SeriesClass::forest: return row.forest;
                case SeriesClass::tree: return row.tree;
                case SeriesClass::rooted: return row.rooted;
                case SeriesClass::path: return row.path;
                case SeriesClass::smooth: return row.smooth;
                default: return row.rooted;
            }
        };
        bool series_ok = true;
        for (const auto& [cls, coeffs] : closed)
            series_ok = series_ok && coeffs[static_cast<size_t>(n)] == count_of(cls);
        rep.report(series_ok, "census counts match the generating functions" + at_n);
        rep.report(row.plane >= row.forest, "plane count dominates forest count" + at_n);

        auto hist_match = [n](const std::vector<std::uint64_t>& hist,
                              const std::vector<std::vector<mpz_class>>& biv) {
            const auto& poly = biv[static_cast<size_t>(n)];
            for (size_t l = 0; l < hist.size(); ++l) {
                mpz_class expect = l < poly.size() ? poly[l] : mpz_class(0);
                if (expect != static_cast<long>(hist[l])) return false;
            }
            return true;
        };
        rep.report(hist_match(row.forest_by_m, biv_forest) &&
                       hist_match(row.tree_by_m, biv_tree) &&
                       hist_match(row.rooted_by_m, biv_rooted) &&
                       hist_match(row.smooth_by_a, biv_smooth) &&
                       hist_match(row.rooted_by_a, biv_rooted_ascent),
                   "refined census tables match the bivariate series" + at_n);

        rep.report(mpz_class(static_cast<long>(row.total_edges)) == total_edges_formula(n),
                   "total edge count equals (n+1)!(H(n+1)-2) + n!" + at_n);

        bool bars_ok = true;
        const mpz_class nf = factorial(n);
        for (int i = 1; i <= n && bars_ok; ++i)
            for (int j = i + 1; j <= n && bars_ok; ++j)
                bars_ok = mpz_class(nf / (j - i + 1)) ==
                          static_cast<long>(row.bar_count[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        rep.report(bars_ok, "bar frequencies equal n!/(j-i+1)" + at_n);

        if (n >= 2) {
            const bool words_ok =
                total.words.size() == (1ULL << (n - 1)) - 1 &&
                !total.words.count(std::string(static_cast<size_t>(n) - 1, 'D'));
            rep.report(words_ok, "UD words are exactly the words with a U" + at_n);
        }
        rep.report(total.trees.size() == row.rooted,
                   "plane trees are pairwise distinct" + at_n);

        rooted_by_size[n] = total.rooted_perms;
        forest_by_size[n] = total.forest_perms;

        // The decomposition seen from the triple side: every valid triple
        // yields a forest-like permutation that phi maps back, and together
        // with the trailing-one base case they exhaust the class.
        if (n >= 2) {
            std::uint64_t triples = 0;
            bool triple_ok = true;
            for (int a = 1; a < n && triple_ok; ++a) {
                for (const auto& tv : rooted_by_size[a]) {
                    for (const auto& sv : forest_by_size[n - a]) {
                        Permutation tau(tv), sigma(sv);
                        const int m = static_cast<int>(rl_minima(sigma).size());
                        for (int k = 1; k <= m; ++k) {
                            DecompTriple t{tau, sigma, k};
                            Permutation q = phi_inverse(t);
                            ++triples;
                            if (!is_acyclic(build_graph(q))) {
                                triple_ok = false;
                                break;
                            }
                            DecompTriple back = phi(q);
                            if (back.tau != tau || back.sigma != sigma || back.k != k) {
                                triple_ok = false;
                                break;
                            }
                        }
                        if (!triple_ok) break;
                    }
                    if (!triple_ok) break;
                }
            }
            if (triple_ok) {
                mpz_class f_prev = closed[SeriesClass::forest][static_cast<size_t>(n) - 1];
                triple_ok = f_prev + static_cast<long>(triples) ==
                            static_cast<long>(total.forest_count);
            }
            rep.report(triple_ok, "triples reconstruct the forest count" + at_n);
        }
    }
    return rep.all_ok;
}

}  // namespace permforest
