#ifndef PERMFOREST_BIJECTIONS_HPP
#define PERMFOREST_BIJECTIONS_HPP

#include <string>
#include <vector>

#include "permforest/permutation.hpp"

namespace permforest {

// Rooted plane tree with ordered children. A tree with m edges serializes to
// m balanced parenthesis pairs: each child subtree prints as
// "(" + its own serialization + ")", children left to right, and the root's
// children are concatenated at top level (a single node prints as "").
struct PlaneTree {
    std::vector<PlaneTree> children;

    int edge_count() const;
    bool operator==(const PlaneTree& o) const { return children == o.children; }
};

std::string serialize(const PlaneTree& t);
PlaneTree parse_plane_tree(const std::string& s);

// Bijection between rooted tree-like permutations of size n and plane trees
// with n-1 edges: recursively, the tree of sigma gains the tree of tau as a
// new leftmost child subtree of its root.
PlaneTree to_plane_tree(const Permutation& p);
Permutation from_plane_tree(const PlaneTree& t);

// Reading of the natural embedding of G_p as a tree rooted at vertex 1 with
// the children of each vertex ordered by position. Exploratory companion to
// to_plane_tree; the two readings need not coincide.
PlaneTree embedding_plane_tree(const Permutation& p);

struct UDWord {
    std::string letters;  // over {U, D}

    bool operator==(const UDWord& o) const { return letters == o.letters; }
};

// Walk of the path G_p from its lowest-labelled endpoint to the other end,
// one letter per edge: U when the label increases, D when it decreases.
// Defined for path-like permutations of size >= 2.
UDWord to_ud_word(const Permutation& p);

// Inverse; the image is every word over {U, D} containing at least one U, so
// D^m and the empty word are rejected.
Permutation from_ud_word(const UDWord& w);

}  // namespace permforest

#endif
