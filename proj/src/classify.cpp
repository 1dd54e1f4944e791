#include "permforest/classify.hpp"

#include <algorithm>

#include "permforest/sorting.hpp"

namespace permforest {

ClassReport classify(const Permutation& p) {
    ClassReport r;
    r.n = p.size();
    r.rl_minima_count = static_cast<int>(rl_minima(p).size());
    r.ascent = final_ascent(p);
    r.increasing = is_increasing(p);

    const PermGraph g = build_graph(p);
    r.edges = static_cast<int>(g.edges.size());
    r.cycle = find_cycle(g);
    r.forest_like = !r.cycle.has_value();

    if (r.forest_like) {
        auto comps = components(g);
        r.tree_like = comps.size() == 1 && r.edges == r.n - 1;
        if (!r.tree_like) {
            // First component not containing vertex 1 (vertex 1 is always in
            // comps[0] by construction).
            r.non_tree_component = comps.size() > 1 ? comps[1] : comps[0];
        }
    }
    r.rooted_tree_like = r.tree_like && p(1) == 1;
    if (r.tree_like) {
        auto deg = g.degrees();
        r.path_like = *std::max_element(deg.begin() + 1, deg.end()) <= 2;
    }

    r.occurrence_1324 = contains_1324(p);
    r.occurrence_2143 = contains_2143(p);
    r.occurrence_21bar354 = contains_21bar354(p);
    r.smooth = !r.occurrence_1324 && !r.occurrence_2143;
    r.plane = !r.occurrence_21bar354;
    return r;
}

CrossValidation cross_validate(const Permutation& p) {
    CrossValidation v;
    const PermGraph g = build_graph(p);
    v.graph_acyclic = is_acyclic(g);

    const BarDiagram d = build_bar_diagram(p);
    v.bars_sortable = sort_bars(d).fully_sorted;
    v.map_onto = is_onto(incidence_matrix(d));
    v.avoids_patterns = !has_1324(p) && !has_21bar354(p);

    v.agree = v.graph_acyclic == v.bars_sortable && v.bars_sortable == v.map_onto &&
              v.map_onto == v.avoids_patterns;
    return v;
}

}  // namespace permforest
