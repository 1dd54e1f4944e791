#ifndef PERMFOREST_CLASSIFY_HPP
#define PERMFOREST_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "permforest/graph.hpp"
#include "permforest/patterns.hpp"

namespace permforest {

// Class membership of a permutation together with the statistics the rest of
// the library keys on and at most one witness per failed property.
struct ClassReport {
    int n = 0;
    int edges = 0;          // e(p)
    int rl_minima_count = 0;  // m(p)
    int ascent = 0;           // a(p)

    bool forest_like = false;
    bool tree_like = false;
    bool rooted_tree_like = false;
    bool path_like = false;
    bool smooth = false;
    bool plane = false;
    bool increasing = false;

    std::optional<PatternOccurrence> occurrence_1324;
    std::optional<PatternOccurrence> occurrence_2143;
    std::optional<PatternOccurrence> occurrence_21bar354;
    std::optional<std::vector<int>> cycle;               // present iff not forest_like
    std::optional<std::vector<int>> non_tree_component;  // present iff forest but not tree
};

ClassReport classify(const Permutation& p);

// Outcome of deciding forest-likeness four independent ways.
struct CrossValidation {
    bool graph_acyclic = false;
    bool bars_sortable = false;
    bool map_onto = false;
    bool avoids_patterns = false;  // avoids both 1324 and 21-bar-3-54
    bool agree = false;
};

CrossValidation cross_validate(const Permutation& p);

}  // namespace permforest

#endif
