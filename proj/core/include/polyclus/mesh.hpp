#pragma once

// Hom and Ext dimension tables of the mesh category of a quotient
// translation quiver, computed through the universal cover: lift, run the
// additive mesh recursion, and sum the contributions of all deck
// translates of the target.

#include <functional>
#include <vector>

#include "polyclus/covering.hpp"
#include "polyclus/quiver.hpp"

namespace polyclus {

struct CoverContext {
    CoveringQuiver cover;
    TranslationQuiver standard;     // ZT / deck, the reference quotient
    std::vector<int> to_standard;   // quiver vertex -> standard vertex
    int deck_exponent = 0;
    bool deck_twist = false;

    int lift_slice(int quiver_vertex) const;   // in [0, deck_exponent)
    int lift_tree_vertex(int quiver_vertex) const;
    int lift_id(int quiver_vertex) const;      // cover id of the base lift
};

// Builds cover, standard quotient and the identification of q with it.
// Throws if q carries no cover data or is not isomorphic to its standard
// model. window_override = 0 picks 4*(r+s+t+1) + 2m slices.
CoverContext make_cover_context(const TranslationQuiver& q, int window_override = 0);

int default_window(const TreeShape& shape, int deck_exponent);

// dim Hom(x, y) in the mesh category of the quotient: the sum of cover
// Hom dims over all in-window deck translates of a lift of y. The extreme
// in-window translates must contribute zero, else the window is too small.
int hom_dim_quotient(const CoverContext& ctx, const std::vector<int>& cover_dims_from_x, int y);

struct HomTable {
    PolygonSpec spec;
    std::vector<std::vector<int>> dims;
    int operator()(int x, int y) const { return dims[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
    int size() const { return static_cast<int>(dims.size()); }
};

struct ExtTable {
    PolygonSpec spec;
    std::vector<std::vector<int>> dims;
    bool cy2 = false;
    int operator()(int x, int y) const { return dims[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
    int size() const { return static_cast<int>(dims.size()); }
};

// All-pairs Hom dims of the mesh category of q (any quotient with cover data).
HomTable hom_table(const TranslationQuiver& q, int threads = 1, int window_override = 0);

// Ext^1 table of a cluster (2-Calabi-Yau) quotient: ext(x,y) =
// hom(tau^{-1} x, y). Refuses quivers whose mesh category is not a cluster
// category; asserts symmetry and zero diagonal.
ExtTable ext_table(const TranslationQuiver& q, int threads = 1, int window_override = 0);

// Deterministic chunked parallel for over [0, n).
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace polyclus
