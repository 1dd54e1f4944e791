#include "permforest/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "permforest/decompose.hpp"
#include "permforest/graph.hpp"

namespace permforest {

int PlaneTree::edge_count() const {
    int total = 0;
    for (const PlaneTree& c : children) total += 1 + c.edge_count();
    return total;
}

std::string serialize(const PlaneTree& t) {
    std::string out;
    for (const PlaneTree& c : t.children) {
        out += '(';
        out += serialize(c);
        out += ')';
    }
    return out;
}

namespace {

PlaneTree parse_children(const std::string& s, size_t& pos, bool top) {
    PlaneTree node;
    while (pos < s.size() && s[pos] == '(') {
        ++pos;
        node.children.push_back(parse_children(s, pos, false));
        if (pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("unbalanced plane-tree string");
        ++pos;
    }
    if (!top && pos < s.size() && s[pos] != ')')
        throw std::invalid_argument("invalid character in plane-tree string");
    return node;
}

bool is_tree_like(const Permutation& p) {
    const PermGraph g = build_graph(p);
    return static_cast<int>(g.edges.size()) == p.size() - 1 && is_acyclic(g) &&
           is_connected(g);
}

}  // namespace

PlaneTree parse_plane_tree(const std::string& s) {
    size_t pos = 0;
    PlaneTree t = parse_children(s, pos, true);
    if (pos != s.size())
        throw std::invalid_argument("unbalanced plane-tree string");
    return t;
}

PlaneTree to_plane_tree(const Permutation& p) {
    if (p(1) != 1 || !is_tree_like(p))
        throw std::invalid_argument("to_plane_tree: permutation is not rooted tree-like");
    if (p.size() == 1) return PlaneTree{};
    DecompTriple t = phi(p);
    if (t.k != static_cast<int>(rl_minima(t.sigma).size()))
        throw std::logic_error("rooted decomposition must insert before sigma's 1");
    PlaneTree tree = to_plane_tree(t.sigma);
    tree.children.insert(tree.children.begin(), to_plane_tree(t.tau));
    return tree;
}

Permutation from_plane_tree(const PlaneTree& t) {
    if (t.children.empty()) return identity_permutation(1);
    PlaneTree rest{std::vector<PlaneTree>(t.children.begin() + 1, t.children.end())};
    Permutation tau = from_plane_tree(t.children.front());
    Permutation sigma = from_plane_tree(rest);
    const int k = static_cast<int>(rl_minima(sigma).size());
    return phi_inverse(DecompTriple{std::move(tau), std::move(sigma), k});
}

PlaneTree embedding_plane_tree(const Permutation& p) {
    if (p(1) != 1 || !is_tree_like(p))
        throw std::invalid_argument(
            "embedding_plane_tree: permutation is not rooted tree-like");
    const auto adj = build_graph(p).adjacency();
    // Every edge joins a lower position to a higher one, so orienting away
    // from vertex 1 makes the children of v its neighbors above v.
    struct Builder {
        const std::vector<std::vector<int>>& adj;
        PlaneTree build(int v) const {
            PlaneTree node;
            for (int w : adj[static_cast<size_t>(v)])
                if (w > v) node.children.push_back(build(w));
            return node;
        }
    };
    return Builder{adj}.build(1);
}

UDWord to_ud_word(const Permutation& p) {
    const int n = p.size();
    const PermGraph g = build_graph(p);
    const auto deg = g.degrees();
    bool path = n >= 2 && static_cast<int>(g.edges.size()) == n - 1 && is_acyclic(g) &&
                is_connected(g) &&
                *std::max_element(deg.begin() + 1, deg.end()) <= 2;
    if (!path)
        throw std::invalid_argument("to_ud_word: permutation is not path-like of size >= 2");

    int start = 0;
    for (int v = 1; v <= n && start == 0; ++v)
        if (deg[static_cast<size_t>(v)] == 1) start = v;

    const auto adj = g.adjacency();
    UDWord w;
    int prev = 0, cur = start;
    while (static_cast<int>(w.letters.size()) < n - 1) {
        int next = 0;
        for (int cand : adj[static_cast<size_t>(cur)])
            if (cand != prev) next = cand;
        w.letters += next > cur ? 'U' : 'D';
        prev = cur;
        cur = next;
    }
    return w;
}

Permutation from_ud_word(const UDWord& w) {
    const std::string& s = w.letters;
    if (s.empty())
        throw std::invalid_argument("from_ud_word: empty word");
    for (char c : s)
        if (c != 'U' && c != 'D')
            throw std::invalid_argument("from_ud_word: letters must be U or D");
    const size_t first_u = s.find('U');
    if (first_u == std::string::npos)
        throw std::invalid_argument("from_ud_word: all-descending words are not in the image");

    const size_t last_d = s.rfind('D');
    if (last_d == std::string::npos)
        return identity_permutation(static_cast<int>(s.size()) + 1);

    if (first_u > last_d) {
        // D^b U^a: an increasing sigma with the 1 inserted in front and an
        // increasing tail appended.
        const int b = static_cast<int>(first_u);
        const int a = static_cast<int>(s.size()) - b;
        return phi_inverse(
            DecompTriple{identity_permutation(a + 1), identity_permutation(b), b});
    }

    // General case: the word is W(sigma) D U^j. The step reattaches at the
    // higher-labelled endpoint of the path of sigma, which is always one of
    // its rl-minima.
    const int j = static_cast<int>(s.size()) - static_cast<int>(last_d) - 1;
    Permutation sigma = from_ud_word(UDWord{s.substr(0, last_d)});
    const auto deg = build_graph(sigma).degrees();
    int attach = 0;
    for (int v = 1; v <= sigma.size(); ++v)
        if (deg[static_cast<size_t>(v)] == 1) attach = v;  // keeps the largest
    const auto minima = rl_minima(sigma);
    const auto it = std::find(minima.begin(), minima.end(), attach);
    if (it == minima.end())
        throw std::logic_error("from_ud_word: attachment endpoint is not an rl-minimum");
    const int k = static_cast<int>(minima.end() - it);
    return phi_inverse(DecompTriple{identity_permutation(j + 1), std::move(sigma), k});
}

}  // namespace permforest
