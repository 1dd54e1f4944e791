#ifndef PERMFOREST_SORTING_HPP
#define PERMFOREST_SORTING_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "permforest/graph.hpp"

namespace permforest {

// 0/1 interval matrix of the divider-to-bar map: row k has ones in columns
// i..j-1 for bar k = (i, j), rows in canonical bar order.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entries;
};

struct SortTrace {
    std::vector<std::pair<Edge, int>> moves;  // (bar, divider that triggered it)
    std::vector<Edge> residual;               // bars never moved
    bool fully_sorted = false;
};

// The bar-sorting scan: repeatedly look for the leftmost divider crossed by
// exactly one remaining bar, move that bar, restart from the leftmost
// divider; stop when no divider is singly crossed.
SortTrace sort_bars(const BarDiagram& d);

// Variant that keeps scanning rightward after each move, wrapping around,
// instead of restarting at the leftmost divider. Kept for an empirical
// comparison of scan policies; not part of the main decision path.
SortTrace sort_bars_wraparound(const BarDiagram& d);

IncidenceMatrix incidence_matrix(const BarDiagram& d);

// Diagonal of the Smith normal form (nonzero entries only, each dividing the
// next). Exact arbitrary-precision arithmetic throughout.
std::vector<mpz_class> elementary_divisors(std::vector<std::vector<mpz_class>> m);

// Surjectivity of the integer-linear map Z^cols -> Z^rows: rank equals the
// row count and every elementary divisor is 1. Independent of the sorting
// procedure; this is the cross-check oracle.
bool is_onto(const IncidenceMatrix& m);

// Onto and square (rows == cols).
bool is_bijective(const IncidenceMatrix& m);

}  // namespace permforest

#endif
