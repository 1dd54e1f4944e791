#include "permforest/graph.hpp"

#include <algorithm>

namespace permforest {

std::vector<std::vector<int>> PermGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
    for (const Edge& e : edges) {
        adj[static_cast<size_t>(e.first)].push_back(e.second);
        adj[static_cast<size_t>(e.second)].push_back(e.first);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

std::vector<int> PermGraph::degrees() const {
    std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<size_t>(e.first)];
        ++deg[static_cast<size_t>(e.second)];
    }
    return deg;
}

PermGraph build_graph(const Permutation& p) {
    const int n = p.size();
    PermGraph g;
    g.n = n;
    // Scanning j rightward from i, (i, j) is an edge exactly when p(j) > p(i)
    // and p(j) is below every previously seen value above p(i).
    for (int i = 1; i <= n; ++i) {
        int ceiling = n + 1;
        for (int j = i + 1; j <= n; ++j) {
            if (p(j) > p(i) && p(j) < ceiling) {
                g.edges.emplace_back(i, j);
                ceiling = p(j);
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

BarDiagram build_bar_diagram(const Permutation& p) {
    PermGraph g = build_graph(p);
    return BarDiagram{g.n, std::move(g.edges)};
}

int edge_count(const Permutation& p) {
    return static_cast<int>(build_graph(p).edges.size());
}

bool is_acyclic(const PermGraph& g) {
    return !find_cycle(g).has_value();
}

bool is_connected(const PermGraph& g) {
    return components(g).size() <= 1;
}

std::optional<std::vector<int>> find_cycle(const PermGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> parent(static_cast<size_t>(g.n) + 1, 0);
    std::vector<char> state(static_cast<size_t>(g.n) + 1, 0);  // 0 new, 1 on stack path
    for (int root = 1; root <= g.n; ++root) {
        if (state[static_cast<size_t>(root)]) continue;
        // Iterative DFS keeping the tree path so the cycle can be read back.
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        parent[static_cast<size_t>(root)] = 0;
        state[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& nb = adj[static_cast<size_t>(v)];
            if (idx == nb.size()) {
                stack.pop_back();
                continue;
            }
            int w = nb[idx++];
            if (w == parent[static_cast<size_t>(v)]) continue;
            if (state[static_cast<size_t>(w)]) {
                // Back edge v-w: the cycle is w .. v along the tree path.
                std::vector<int> cycle;
                for (int u = v; u != w; u = parent[static_cast<size_t>(u)])
                    cycle.push_back(u);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            parent[static_cast<size_t>(w)] = v;
            state[static_cast<size_t>(w)] = 1;
            stack.emplace_back(w, 0);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> components(const PermGraph& g) {
    const auto adj = g.adjacency();
    std::vector<char> seen(static_cast<size_t>(g.n) + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int root = 1; root <= g.n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        std::vector<int> comp, stack{root};
        seen[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> reach_counts(const PermGraph& g) {
    // Edges are oriented toward the higher label, so processing vertices from
    // n down to 1 sees all successors first. Reachable sets are accumulated
    // as bitmasks (n stays small in every supported use).
    const int n = g.n;
    std::vector<std::vector<int>> succ(static_cast<size_t>(n) + 1);
    for (const Edge& e : g.edges) succ[static_cast<size_t>(e.first)].push_back(e.second);

    std::vector<int> counts(static_cast<size_t>(n) + 1, 0);
    if (n <= 64) {
        std::vector<unsigned long long> reach(static_cast<size_t>(n) + 1, 0);
        for (int v = n; v >= 1; --v) {
            unsigned long long r = 1ULL << (v - 1);
            for (int w : succ[static_cast<size_t>(v)]) r |= reach[static_cast<size_t>(w)];
            reach[static_cast<size_t>(v)] = r;
            counts[static_cast<size_t>(v)] = __builtin_popcountll(r);
        }
    } else {
        std::vector<std::vector<char>> reach(static_cast<size_t>(n) + 1,
                                             std::vector<char>(static_cast<size_t>(n) + 1, 0));
        for (int v = n; v >= 1; --v) {
            auto& r = reach[static_cast<size_t>(v)];
            r[static_cast<size_t>(v)] = 1;
            for (int w : succ[static_cast<size_t>(v)])
                for (int u = 1; u <= n; ++u)
                    if (reach[static_cast<size_t>(w)][static_cast<size_t>(u)])
                        r[static_cast<size_t>(u)] = 1;
            int c = 0;
            for (int u = 1; u <= n; ++u) c += r[static_cast<size_t>(u)];
            counts[static_cast<size_t>(v)] = c;
        }
    }
    return counts;
}

std::optional<Permutation> reconstruct(const PermGraph& g) {
    const int n = g.n;
    if (n < 1) return std::nullopt;
    for (const Edge& e : g.edges)
        if (e.first < 1 || e.second > n || e.first >= e.second) return std::nullopt;

    const std::vector<int> counts = reach_counts(g);

    // a(i) vertices are reachable from i, so p(i) must leave exactly a(i)-1
    // larger values at later positions: take the a(i)-th largest value still
    // unassigned. The choice is a unique order statistic, hence forced.
    std::vector<int> unused;
    for (int v = n; v >= 1; --v) unused.push_back(v);  // descending
    std::vector<int> values;
    values.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int a = counts[static_cast<size_t>(i)];
        if (a < 1 || a > static_cast<int>(unused.size())) return std::nullopt;
        values.push_back(unused[static_cast<size_t>(a) - 1]);
        unused.erase(unused.begin() + (a - 1));
    }

    Permutation p(values);
    if (build_graph(p).edges != g.edges) return std::nullopt;
    return p;
}

}  // namespace permforest
