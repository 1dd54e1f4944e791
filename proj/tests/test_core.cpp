#include <doctest.h>

#include <set>

#include "permforest/graph.hpp"
#include "permforest/permutation.hpp"
#include "test_util.hpp"

using namespace permforest;
using permforest::testing::for_each_permutation;

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(make_permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({2, 3}), std::invalid_argument);
    CHECK(make_permutation({1}).size() == 1);
    CHECK(make_permutation({6, 4, 3, 7, 5, 1, 8, 2}).size() == 8);
}

TEST_CASE("permutation parsing formats") {
    const Permutation expect = make_permutation({6, 4, 3, 7, 5, 1, 8, 2});
    CHECK(parse_permutation("6 4 3 7 5 1 8 2") == expect);
    CHECK(parse_permutation("6,4,3,7,5,1,8,2") == expect);
    CHECK(parse_permutation("64375182") == expect);
    CHECK(parse_permutation("1") == identity_permutation(1));
    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("10"), std::invalid_argument);  // digit 0
    CHECK_THROWS_AS(parse_permutation("2 x 1"), std::invalid_argument);
    CHECK(to_string(parse_permutation("2143")) == "2 1 4 3");
}

TEST_CASE("graph of the running example") {
    const PermGraph g = build_graph(parse_permutation("64375182"));
    const std::vector<Edge> expect{{1, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                                   {4, 7}, {5, 7}, {6, 7}, {6, 8}};
    CHECK(g.edges == expect);
}

TEST_CASE("graph shapes for identity, reverse and 2143") {
    const PermGraph id5 = build_graph(identity_permutation(5));
    CHECK(id5.edges == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});

    const PermGraph rev = build_graph(parse_permutation("54321"));
    CHECK(rev.edges.empty());

    const PermGraph four_cycle = build_graph(parse_permutation("2143"));
    CHECK(four_cycle.edges == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK_FALSE(is_acyclic(four_cycle));
    CHECK(find_cycle(four_cycle).has_value());
}

TEST_CASE("bar diagram mirrors the edge set in canonical order") {
    const BarDiagram d = build_bar_diagram(parse_permutation("64375182"));
    CHECK(d.bars == build_graph(parse_permutation("64375182")).edges);
    CHECK(d.bars.front() == Edge{1, 4});  // crosses dividers 1, 2, 3

    const BarDiagram single = build_bar_diagram(identity_permutation(1));
    CHECK(single.bars.empty());
    CHECK(single.n == 1);

    const BarDiagram d2143 = build_bar_diagram(parse_permutation("2143"));
    int crossing_divider_2 = 0;
    for (const Edge& bar : d2143.bars)
        if (bar.first <= 2 && 2 < bar.second) ++crossing_divider_2;
    CHECK(crossing_divider_2 == 4);
}

TEST_CASE("rl-minima and final ascent") {
    CHECK(rl_minima(parse_permutation("123")) == std::vector<int>{1, 2, 3});
    CHECK(rl_minima(parse_permutation("2143")) == std::vector<int>{2, 4});
    CHECK(rl_minima(parse_permutation("321")) == std::vector<int>{3});

    CHECK(final_ascent(parse_permutation("123")) == 3);
    CHECK(final_ascent(parse_permutation("2143")) == 1);
    CHECK(final_ascent(identity_permutation(1)) == 1);

    for_each_permutation(6, [](const Permutation& p) {
        const auto minima = rl_minima(p);
        REQUIRE(!minima.empty());
        CHECK(minima.back() == p.size());  // the last position always qualifies
        CHECK(final_ascent(p) >= 1);
    });
}

TEST_CASE("inverse") {
    CHECK(inverse(parse_permutation("312")) == parse_permutation("231"));
    CHECK(inverse(parse_permutation("2143")) == parse_permutation("2143"));
    for_each_permutation(5, [](const Permutation& p) {
        CHECK(inverse(inverse(p)) == p);
    });
}

TEST_CASE("reconstruct inverts the graph construction") {
    const Permutation p = parse_permutation("64375182");
    auto rec = reconstruct(build_graph(p));
    REQUIRE(rec.has_value());
    CHECK(*rec == p);

    PermGraph edgeless;
    edgeless.n = 4;
    CHECK(*reconstruct(edgeless) == parse_permutation("4321"));

    PermGraph path3;
    path3.n = 3;
    path3.edges = {{1, 2}, {2, 3}};
    CHECK(*reconstruct(path3) == parse_permutation("123"));
}

TEST_CASE("reconstruct rejects unrealizable graphs") {
    PermGraph triangle;
    triangle.n = 3;
    triangle.edges = {{1, 2}, {1, 3}, {2, 3}};
    CHECK_FALSE(reconstruct(triangle).has_value());

    // 1 < 3 alone is a natural order of dimension > 2 on three elements.
    PermGraph gap;
    gap.n = 3;
    gap.edges = {{1, 3}};
    CHECK_FALSE(reconstruct(gap).has_value());
}

TEST_CASE("round trip over all small permutations") {
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            auto rec = reconstruct(build_graph(p));
            REQUIRE(rec.has_value());
            CHECK(*rec == p);
        });
}

TEST_CASE("triangle-free and the edge bound is tight") {
    for (int n = 1; n <= 7; ++n) {
        int max_edges = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const PermGraph g = build_graph(p);
            const int e = static_cast<int>(g.edges.size());
            max_edges = std::max(max_edges, e);
            CHECK(e <= n * n / 4);
            const auto adj = g.adjacency();
            for (const Edge& ed : g.edges)
                for (int w : adj[static_cast<size_t>(ed.first)])
                    if (w != ed.second) {
                        bool closes = std::binary_search(
                            adj[static_cast<size_t>(ed.second)].begin(),
                            adj[static_cast<size_t>(ed.second)].end(), w);
                        CHECK_FALSE(closes);
                    }
        });
        CHECK(max_edges == n * n / 4);
    }
}

TEST_CASE("relabelling by p maps the graph onto the graph of the inverse") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [](const Permutation& p) {
            std::vector<Edge> relabelled;
            for (const Edge& e : build_graph(p).edges) {
                int a = p(e.first), b = p(e.second);
                relabelled.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(relabelled.begin(), relabelled.end());
            CHECK(relabelled == build_graph(inverse(p)).edges);
        });
}

TEST_CASE("every increasing pair is joined by a monotone bar path") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [n](const Permutation& p) {
            const PermGraph g = build_graph(p);
            std::vector<std::vector<int>> succ(static_cast<size_t>(n) + 1);
            for (const Edge& e : g.edges) succ[static_cast<size_t>(e.first)].push_back(e.second);
            std::vector<unsigned> reach(static_cast<size_t>(n) + 1, 0);
            for (int v = n; v >= 1; --v) {
                unsigned r = 1u << v;
                for (int w : succ[static_cast<size_t>(v)]) r |= reach[static_cast<size_t>(w)];
                reach[static_cast<size_t>(v)] = r;
            }
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (p(a) < p(b)) CHECK((reach[static_cast<size_t>(a)] >> b & 1) == 1);
        });
}

TEST_CASE("reconstruction works beyond the bitmask width") {
    std::vector<int> vals;
    for (int i = 70; i >= 1; --i) vals.push_back(i);
    std::swap(vals[10], vals[40]);
    const Permutation p(vals);
    auto rec = reconstruct(build_graph(p));
    REQUIRE(rec.has_value());
    CHECK(*rec == p);
}

TEST_CASE("reach counts count the dominated suffix values") {
    for_each_permutation(6, [](const Permutation& p) {
        const auto counts = reach_counts(build_graph(p));
        for (int i = 1; i <= p.size(); ++i) {
            int direct = 0;
            for (int j = i; j <= p.size(); ++j)
                if (p(j) >= p(i)) ++direct;
            CHECK(counts[static_cast<size_t>(i)] == direct);
        }
    });
}
