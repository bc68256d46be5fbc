#pragma once

// Finite windows of the repetitive tree quiver ZT_{r,s,t}: the universal
// cover of the polygon quivers. Slices are indexed -W..W; slice n carries
// one copy of the tree, arrows run within a slice along the chosen tree
// orientation and across to slice n+1 against it, tau is the left shift.

#include <utility>
#include <vector>

#include "polyclus/diagonal.hpp"

namespace polyclus {

struct CoveringQuiver {
    TreeShape shape;
    int window = 0;  // slices -window .. window
    int tree_n = 0;
    std::vector<std::pair<int, int>> tree_arrows;  // oriented tree arrows
    std::vector<int> swap_legs;                    // deck twist on tree vertices
    std::vector<int> depth;                        // grade contribution of a tree vertex

    std::vector<std::vector<int>> in_tree;   // tree sources of within-slice arrows into v
    std::vector<std::vector<int>> out_tree;

    int slices() const { return 2 * window + 1; }
    int size() const { return slices() * tree_n; }
    int id(int slice, int v) const { return (slice + window) * tree_n + v; }
    int slice_of(int vid) const { return vid / tree_n - window; }
    int tree_vertex_of(int vid) const { return vid % tree_n; }
    bool in_window(int slice) const { return slice >= -window && slice <= window; }
};

CoveringQuiver build_covering(const TreeShape& shape, int window);

// Dimensions of Hom(x, -) in the mesh category of the window, by the
// clamped additive recursion h(y) = max(0, sum_in h - h(tau y)).
// Hard error if the support reaches the last two slices of the window.
std::vector<int> hom_dims_from(const CoveringQuiver& cover, int x_id);

// The deck transformation g = tau^{-m} (composed with the leg swap when
// twisted) applied k times to a cover vertex; returns -1 if it leaves the
// window.
int deck_power(const CoveringQuiver& cover, int vid, int k, int m, bool twist);

}  // namespace polyclus
