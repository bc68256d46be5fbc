#pragma once

// Curve decomposition of the Ext-hammocks of the heptagon (type E6)
// quiver: each vertex carries two or four curves, explicit rotation paths
// for the first slice and tau-shifts of those everywhere else. The number
// of curves of x through y equals dim Ext^1(x, y).

#include <vector>

#include "polyclus/mesh.hpp"
#include "polyclus/quiver.hpp"

namespace polyclus {

struct Curve {
    int index = 0;                // 1-based curve label
    int base = -1;                // the vertex the curve belongs to
    std::vector<int> members;     // quiver vertex ids, path order
};

// The curves of x in the heptagon quiver; 2 for reach-5 singles and the
// short paired diagonals, 4 for reach-4 singles and the long paired ones.
std::vector<Curve> curves_e6(const TranslationQuiver& q, int x);

// Number of curves of x passing through y.
int ext_via_curves(const TranslationQuiver& q, int x, int y);

struct CrossingLift {
    int base = -1;
    std::vector<int> front;  // contains tau^{-1} x
    std::vector<int> back;   // contains tau x
};

// Front/back crossing of x: the connected pieces of the Ext-hammock of x
// lying over the crossing chords of the underlying unoriented diagonal.
CrossingLift crossing_lift(const TranslationQuiver& q, const ExtTable& ext, int x);

// Underlying chord of y has its head strictly inside the smaller region
// cut off by the chord of x (only meaningful when the regions differ).
bool enters_smaller_region(const TranslationQuiver& q, int x, int y);

}  // namespace polyclus
