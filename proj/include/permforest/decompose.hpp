#ifndef PERMFOREST_DECOMPOSE_HPP
#define PERMFOREST_DECOMPOSE_HPP

#include "permforest/permutation.hpp"

namespace permforest {

// Image of the decomposition map: tau rooted tree-like, sigma forest-like,
// 1 <= k <= m(sigma). |p| = |tau| + |sigma|.
struct DecompTriple {
    Permutation tau;
    Permutation sigma;
    int k;
};

// Decomposes a forest-like permutation with p^{-1}(1) < n. Splits off the
// h-1 smallest entries (the 1 and the trailing block 2..h-1) as tau; the
// rest, renormalized, is sigma; k is the right-to-left rank of the entry
// following the 1 among sigma's rl-minima.
DecompTriple phi(const Permutation& p);

// Inverse: shift sigma up by |tau|, insert 1 immediately before sigma's k-th
// rl-minimum counted from the right, append tau's entries after the first.
Permutation phi_inverse(const DecompTriple& t);

// The p^{-1}(1) = n base case, kept separate from phi: strip the trailing 1
// and decrement every entry, and the converse.
Permutation drop_trailing_one(const Permutation& p);
Permutation add_trailing_one(const Permutation& p);

// Checks of the statistic recurrences carried by the decomposition.
struct StatisticsRecord {
    int m_pi = 0, m_expected = 0;
    bool m_consistent = false;

    bool a_applicable = false;  // the ascent recurrence is asserted for smooth p
    int a_pi = 0, a_expected = 0;
    bool a_consistent = true;

    bool tree_transfer = false;
    bool rooted_transfer = false;
    bool path_transfer = false;
    bool smooth_transfer = false;

    bool ok() const {
        return m_consistent && a_consistent && tree_transfer && rooted_transfer &&
               path_transfer && smooth_transfer;
    }
};

// Requires t == phi(p).
StatisticsRecord statistics_check(const Permutation& p, const DecompTriple& t);

}  // namespace permforest

#endif
