#ifndef PERMFOREST_PATTERNS_HPP
#define PERMFOREST_PATTERNS_HPP

#include <array>
#include <optional>
#include <vector>

#include "permforest/permutation.hpp"

namespace permforest {

// Positions p < q < r < s of a length-4 pattern occurrence.
using PatternOccurrence = std::array<int, 4>;

// Occurrence of 1324: p(p) < p(r) < p(q) < p(s). Lexicographically least
// witness, or nothing if the pattern is avoided.
std::optional<PatternOccurrence> contains_1324(const Permutation& p);

// Occurrence of 2143: p(q) < p(p) < p(s) < p(r).
std::optional<PatternOccurrence> contains_2143(const Permutation& p);

// Occurrence of the barred pattern 21-bar-3-54: an occurrence (p,q,r,s) of
// 2154 (p(q) < p(p) < p(s) < p(r)) with no t, q < t < r, p(p) < p(t) < p(s).
// Nothing means every 2154 occurrence extends to 21354, i.e. the barred
// pattern is avoided.
std::optional<PatternOccurrence> contains_21bar354(const Permutation& p);

// Witness-free versions used on enumeration hot paths.
bool has_1324(const Permutation& p);
bool has_2143(const Permutation& p);
bool has_21bar354(const Permutation& p);

// Generic classical containment: positions of a subsequence of p order-
// isomorphic to pattern, lexicographically least, or nothing.
std::optional<std::vector<int>> contains_classical(const Permutation& p,
                                                   const Permutation& pattern);

// Whether the natural embedding of G_p (vertex i at (i, p(i)), straight-line
// edges) has no two edges crossing at a point interior to both. Decided with
// exact integer orientation predicates.
bool natural_embedding_planar(const Permutation& p);

}  // namespace permforest

#endif
