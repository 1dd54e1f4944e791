#include <doctest.h>

#include "permforest/classify.hpp"
#include "permforest/decompose.hpp"
#include "permforest/graph.hpp"
#include "test_util.hpp"

using namespace permforest;
using permforest::testing::for_each_permutation;

TEST_CASE("phi on the worked examples") {
    const DecompTriple a = phi(parse_permutation("312"));
    CHECK(a.tau == identity_permutation(1));
    CHECK(a.sigma == parse_permutation("21"));
    CHECK(a.k == 1);

    const DecompTriple b = phi(parse_permutation("3142"));
    CHECK(b.tau == parse_permutation("12"));
    CHECK(b.sigma == parse_permutation("12"));
    CHECK(b.k == 1);

    const DecompTriple c = phi(parse_permutation("1675342"));
    CHECK(c.tau == parse_permutation("15342"));
    CHECK(c.sigma == parse_permutation("12"));
    CHECK(c.k == static_cast<int>(rl_minima(c.sigma).size()));  // rooted forces k = m
}

TEST_CASE("phi rejects the base case and non-forests") {
    CHECK_THROWS_AS(phi(parse_permutation("21")), std::invalid_argument);
    CHECK_THROWS_AS(phi(parse_permutation("2143")), std::invalid_argument);
}

TEST_CASE("phi_inverse on the worked examples") {
    CHECK(phi_inverse({identity_permutation(1), parse_permutation("21"), 1}) ==
          parse_permutation("312"));
    CHECK(phi_inverse({parse_permutation("12"), parse_permutation("12"), 1}) ==
          parse_permutation("3142"));
    // The smallest composite case: phi(12) = (1, 1, 1), so the inverse of
    // (1, 1, 1) is 12 (21 has its 1 in the last position and is the base case).
    CHECK(phi_inverse({identity_permutation(1), identity_permutation(1), 1}) ==
          parse_permutation("12"));
}

TEST_CASE("phi_inverse validates its input") {
    CHECK_THROWS_AS(phi_inverse({parse_permutation("21"), identity_permutation(1), 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse({identity_permutation(1), identity_permutation(1), 2}),
                    std::invalid_argument);
    // 2143 is not forest-like, so it cannot appear as sigma.
    CHECK_THROWS_AS(phi_inverse({identity_permutation(1), parse_permutation("2143"), 1}),
                    std::invalid_argument);
}

TEST_CASE("trailing-one base case") {
    CHECK(drop_trailing_one(parse_permutation("21")) == identity_permutation(1));
    CHECK(drop_trailing_one(parse_permutation("3421")) == parse_permutation("231"));
    CHECK(add_trailing_one(parse_permutation("231")) == parse_permutation("3421"));
    CHECK_THROWS_AS(drop_trailing_one(parse_permutation("12")), std::invalid_argument);
    CHECK_THROWS_AS(drop_trailing_one(identity_permutation(1)), std::invalid_argument);
    for_each_permutation(5, [](const Permutation& p) {
        CHECK(drop_trailing_one(add_trailing_one(p)) == p);
        // Appending the 1 preserves forest-likeness both ways.
        CHECK(is_acyclic(build_graph(add_trailing_one(p))) == is_acyclic(build_graph(p)));
    });
}

TEST_CASE("statistics of the worked examples") {
    const Permutation p312 = parse_permutation("312");
    const StatisticsRecord r1 = statistics_check(p312, phi(p312));
    CHECK(r1.m_pi == 2);  // k + 1 with tau = 1, k = 1
    CHECK(r1.ok());

    const Permutation p3142 = parse_permutation("3142");
    const StatisticsRecord r2 = statistics_check(p3142, phi(p3142));
    CHECK(r2.m_pi == 2);  // m(tau) since tau = 12
    CHECK(r2.m_expected == 2);
    CHECK(r2.ok());
}

TEST_CASE("round trip forward and statistics hold exhaustively") {
    for (int n = 2; n <= 7; ++n)
        for_each_permutation(n, [n](const Permutation& p) {
            if (!is_acyclic(build_graph(p)) || p(n) == 1) return;
            const DecompTriple t = phi(p);
            CHECK(p.size() == t.tau.size() + t.sigma.size());
            CHECK(phi_inverse(t) == p);
            CHECK(statistics_check(p, t).ok());
        });
}

TEST_CASE("round trip from the triple side and the counting identity") {
    // Collect rooted tree-like and forest-like permutations by size.
    std::map<int, std::vector<Permutation>> rooted, forest;
    std::map<int, std::uint64_t> forest_count;
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            const ClassReport r = classify(p);
            if (r.rooted_tree_like) rooted[n].push_back(p);
            if (r.forest_like) {
                forest[n].push_back(p);
                ++forest_count[n];
            }
        });

    for (int n = 2; n <= 6; ++n) {
        std::uint64_t triples = 0;
        for (int a = 1; a < n; ++a)
            for (const Permutation& tau : rooted[a])
                for (const Permutation& sigma : forest[n - a]) {
                    const int m = static_cast<int>(rl_minima(sigma).size());
                    for (int k = 1; k <= m; ++k) {
                        const DecompTriple t{tau, sigma, k};
                        const Permutation q = phi_inverse(t);
                        ++triples;
                        CHECK(is_acyclic(build_graph(q)));
                        const DecompTriple back = phi(q);
                        CHECK(back.tau == tau);
                        CHECK(back.sigma == sigma);
                        CHECK(back.k == k);
                    }
                }
        // Every forest-like permutation is a triple image or the base case.
        CHECK(forest_count[n] == forest_count[n - 1] + triples);
    }
}
