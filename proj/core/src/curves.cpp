#include "polyclus/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyclus {

namespace {

// First-slice curves of the heptagon quiver, as rotation paths in Gamma.
// Single-diagonal curves are directed paths (C1 forward from tau^{-1}x,
// the last one backward from tau x); paired-diagonal curves carry both
// colour branches and are rho-stable. The member sets are pinned against
// the Ext table: the number of curves through y equals dim Ext^1(x, y)
// for all pairs.
using CurveSpec = std::vector<const char*>;

const std::vector<CurveSpec>& base_curves(const Diagonal& d) {
    static const std::vector<CurveSpec> r16{
        {"[2,7]R", "[3,7]R", "[4,7]P", "[5,7]P", "[5,1]P", "[5,2]R", "[5,3]R", "[6,3]R"},
        {"[5,7]B", "[4,7]B", "[7,3]P", "[7,2]P", "[6,2]P", "[2,5]B", "[2,4]B", "[1,4]B"},
    };
    static const std::vector<CurveSpec> r15{
        {"[2,6]R", "[3,6]P", "[4,6]P", "[4,7]P", "[4,1]R", "[4,2]R", "[5,2]R"},
        r16[0],
        {"[4,7]B", "[7,3]P", "[7,2]P", "[6,2]P", "[2,5]B", "[2,4]B", "[1,4]B"},
        {"[7,3]B", "[1,3]B", "[1,4]B", "[5,1]P", "[6,1]P", "[6,2]P", "[3,6]B", "[4,6]B"},
    };
    static const std::vector<CurveSpec> p13{
        {"[2,4]P", "[2,5]P", "[2,6]R", "[6,2]B", "[2,7]R", "[7,2]B", "[3,7]R", "[7,3]B",
         "[4,7]P", "[5,7]P", "[5,1]P"},
        {"[3,6]P", "[4,6]P", "[4,7]P", "[4,1]R", "[1,4]B", "[4,2]R", "[2,4]B", "[5,2]R",
         "[2,5]B", "[6,2]P", "[7,2]P"},
    };
    static const std::vector<CurveSpec> p14{
        {"[2,5]P", "[2,6]R", "[6,2]B", "[2,7]R", "[7,2]B", "[3,7]R", "[7,3]B", "[4,7]P",
         "[5,7]P", "[5,1]P"},
        // tau^{-1} image of the first curve of [1,3]P
        {"[3,5]P", "[3,6]P", "[3,7]R", "[7,3]B", "[3,1]R", "[1,3]B", "[4,1]R", "[1,4]B",
         "[5,1]P", "[6,1]P", "[6,2]P"},
        {"[7,3]P", "[6,3]R", "[3,6]B", "[5,3]R", "[3,5]B", "[5,2]R", "[2,5]B", "[5,1]P",
         "[5,7]P", "[4,7]P"},
        p13[1],
    };
    if (d == Diagonal{1, 6, Colour::red}) return r16;
    if (d == Diagonal{1, 5, Colour::red}) return r15;
    if (d == Diagonal{1, 3, Colour::paired}) return p13;
    if (d == Diagonal{1, 4, Colour::paired}) return p14;
    throw std::logic_error("no base curves for " + to_string(d));
}

bool has_base_curves(const Diagonal& d) {
    return d == Diagonal{1, 6, Colour::red} || d == Diagonal{1, 5, Colour::red} ||
           d == Diagonal{1, 3, Colour::paired} || d == Diagonal{1, 4, Colour::paired};
}

}  // namespace

std::vector<Curve> curves_e6(const TranslationQuiver& q, int x) {
    if (!(q.spec.m == 7 && q.spec.shape.r == 1 && q.spec.shape.s == 2 && q.spec.shape.t == 2))
        throw std::invalid_argument("curves are defined on the heptagon quiver only");
    // walk forward with tau until a base vertex is reached; the curves of x
    // are the tau^{-shifts} images of the base curves (rho images arise as
    // tau^{7}-shifts)
    Diagonal base = q.verts[x];
    int shifts = 0;
    while (!has_base_curves(base)) {
        base = tau(base, q.spec);
        if (++shifts > 14) throw std::logic_error("no base curve found along the tau orbit");
    }
    std::vector<Curve> out;
    int index = 0;
    for (const auto& spec_list : base_curves(base)) {
        Curve c;
        c.index = ++index;
        c.base = x;
        for (const char* name : spec_list) {
            Diagonal d = parse_diagonal(name);
            for (int k = 0; k < shifts; ++k) d = tau_inverse(d, q.spec);
            int v = q.vertex_id(d);
            if (v < 0) throw std::logic_error("curve member left the diagonal set");
            c.members.push_back(v);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int ext_via_curves(const TranslationQuiver& q, int x, int y) {
    int count = 0;
    for (const Curve& c : curves_e6(q, x))
        count += std::count(c.members.begin(), c.members.end(), y) > 0 ? 1 : 0;
    return count;
}

CrossingLift crossing_lift(const TranslationQuiver& q, const ExtTable& ext, int x) {
    const int m = q.spec.m;
    // vertices of the hammock lying over chords crossing the chord of x
    std::vector<int> zone;
    std::vector<char> in_zone(static_cast<size_t>(q.size()), 0);
    for (int y = 0; y < q.size(); ++y)
        if (ext(x, y) >= 1 && crosses(q.verts[x], q.verts[y], m)) {
            zone.push_back(y);
            in_zone[static_cast<size_t>(y)] = 1;
        }
    // connected components w.r.t. the arrows of Gamma
    std::vector<int> comp(static_cast<size_t>(q.size()), -1);
    int ncomp = 0;
    for (int seed : zone) {
        if (comp[static_cast<size_t>(seed)] >= 0) continue;
        std::vector<int> stack{seed};
        comp[static_cast<size_t>(seed)] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (in_zone[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
            };
            for (int w : q.out[v]) visit(w);
            for (int w : q.in[v]) visit(w);
        }
        ++ncomp;
    }
    CrossingLift lift;
    lift.base = x;
    int front_comp = comp[static_cast<size_t>(q.tau_inv[x])];
    int back_comp = comp[static_cast<size_t>(q.tau[x])];
    if (front_comp < 0 || back_comp < 0)
        throw std::logic_error("tau translates of the base are not in the crossing zone");
    for (int y : zone) {
        if (comp[static_cast<size_t>(y)] == front_comp) lift.front.push_back(y);
        if (comp[static_cast<size_t>(y)] == back_comp) lift.back.push_back(y);
    }
    return lift;
}

bool enters_smaller_region(const TranslationQuiver& q, int x, int y) {
    const int m = q.spec.m;
    const Diagonal& dx = q.verts[x];
    const Diagonal& dy = q.verts[y];
    auto side_size = [&](int from, int to) {
        int cnt = 0;
        for (int v = normalize_vertex(from + 1, m); v != to; v = normalize_vertex(v + 1, m)) ++cnt;
        return cnt;
    };
    int s1 = side_size(dx.from, dx.to);
    int s2 = side_size(dx.to, dx.from);
    if (s1 == s2) return false;  // regions tie; the notion is undefined
    int lo = s1 < s2 ? dx.from : dx.to;
    int hi = s1 < s2 ? dx.to : dx.from;
    // a blue diagonal sees the region through the rho mirror, so the
    // relevant end of y is the head of rho(y)
    Diagonal probe = dx.colour == Colour::blue ? rho(dy) : dy;
    for (int v = normalize_vertex(lo + 1, m); v != hi; v = normalize_vertex(v + 1, m))
        if (probe.to == v) return true;
    return false;
}

}  // namespace polyclus
