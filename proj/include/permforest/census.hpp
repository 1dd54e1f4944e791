#ifndef PERMFOREST_CENSUS_HPP
#define PERMFOREST_CENSUS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "permforest/graph.hpp"
#include "permforest/permutation.hpp"

namespace permforest {

// Aggregate results of classifying all of S_n. Histograms are indexed by the
// statistic value (index 0 unused); bar_count[i][j] counts permutations whose
// diagram contains the bar (i, j).
struct CensusRow {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t forest = 0, tree = 0, rooted = 0, path = 0, smooth = 0, plane = 0;
    std::vector<std::uint64_t> forest_by_m, tree_by_m, rooted_by_m;
    std::vector<std::uint64_t> smooth_by_a, rooted_by_a;
    std::uint64_t total_edges = 0;
    std::vector<std::vector<std::uint64_t>> bar_count;

    void merge(const CensusRow& o);
};

inline constexpr int kCensusLimit = 11;

// Iterates all n! permutations, partitioned by first entry across workers
// (workers <= 0 picks the hardware concurrency). Totals are exact and
// independent of the scheduling.
CensusRow run_census(int n, int workers = 0);

// Number of permutations covering p in the Bruhat order: transpositions that
// raise the inversion count by exactly one. Inversions are recounted from
// scratch for each candidate; no bar-diagram shortcut.
int bruhat_covers(const Permutation& p);

// Isomorphism of small graphs by backtracking over vertex bijections with
// degree pruning.
bool graphs_isomorphic(const PermGraph& a, const PermGraph& b);

// Searches S_n for a permutation whose graph is isomorphic (as an unlabelled
// graph) to the target; returns the lexicographically least witness.
std::optional<Permutation> realizability_scan(int n, const PermGraph& target);

// (n+1)! (H(n+1) - 2) + n!, the total number of bars over S_n.
mpz_class total_edges_formula(int n);

mpz_class factorial(int n);

}  // namespace permforest

#endif
