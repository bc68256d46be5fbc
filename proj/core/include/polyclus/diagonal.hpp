#pragma once

// Coloured oriented diagonals of a regular m-gon and the point symmetries
// acting on them. Vertices of the polygon are numbered 1..m clockwise and
// all vertex arithmetic is mod m. A diagonal [i,j]c runs from i to j and
// carries a colour tag: single red, single blue, or paired (a red/blue
// pair treated as one object; [i,j]P != [j,i]P).

#include <cstdint>
#include <string>
#include <vector>

namespace polyclus {

enum class Colour : std::uint8_t { paired = 0, red = 1, blue = 2 };

char colour_suffix(Colour c);

// Leg lengths of the tree T_{r,s,t}: three legs with r, s, t vertices
// joined to one central vertex. Symmetric means s == t.
struct TreeShape {
    int r = 0;
    int s = 0;
    int t = 0;

    int vertex_count() const { return r + s + t + 1; }
    bool symmetric() const { return s == t; }
    void validate() const;  // throws std::invalid_argument
};

// An m-gon together with the tree shape generating its diagonal set.
// Standard mode requires m >= max(r+s+1, r+t+1) + 3. Relaxed mode lifts
// the bound so the punctured-disc model on an m = n polygon can be built;
// there reach-0 single arcs and reach-(m-1) paired arcs are legal.
struct PolygonSpec {
    int m = 0;
    TreeShape shape;
    bool relaxed = false;

    void validate() const;
    int slice_size() const;            // diagonals per anchor vertex
    int object_count() const;          // slice_size * m
    int k() const { return shape.vertex_count(); }
};

struct Diagonal {
    int from = 0;  // 1-based polygon vertex
    int to = 0;
    Colour colour = Colour::paired;

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

// Red and paired diagonals are anchored at their source vertex, blue ones
// at their target; the anchor is the index i of the slice listing.
int anchor_of(const Diagonal& d);
// Cyclic distance from the anchor to the other endpoint, in [0, m).
int reach_of(const Diagonal& d, int m);
// Canonical order (anchor, reach, colour); matches the slice listing.
bool canonical_less(const Diagonal& a, const Diagonal& b, int m);

std::string to_string(const Diagonal& d);              // "[i,j]R"
Diagonal parse_diagonal(const std::string& text);      // throws on junk

int normalize_vertex(int v, int m);                    // into 1..m

// The generating set of coloured oriented diagonals, one slice per anchor:
// paired reaches 2..r+2, red reaches r+3..r+s+2, blue reaches r+3..r+t+2
// (blue written [anchor+reach, anchor]). No paired diagonals when r = 0.
struct DiagonalSet {
    PolygonSpec spec;
    std::vector<Diagonal> members;  // canonical order

    int size() const { return static_cast<int>(members.size()); }
    const Diagonal& operator[](int id) const { return members[static_cast<size_t>(id)]; }
    int id_of(const Diagonal& d) const;  // -1 if absent
    bool contains(const Diagonal& d) const { return id_of(d) >= 0; }
};

DiagonalSet build_diagonal_set(const PolygonSpec& spec);

// Membership in the generating set, computed arithmetically.
bool in_generating_set(const Diagonal& d, const PolygonSpec& spec);
// Anchored at vertex 1.
bool in_first_slice(const Diagonal& d, const PolygonSpec& spec);

// True iff the underlying unoriented chords cross in an interior point:
// endpoint pairs strictly interleave in cyclic order. Colour and
// orientation are ignored; a shared endpoint is not a crossing.
bool crosses(const Diagonal& a, const Diagonal& b, int m);

// Simultaneous colour and orientation switch: [i,j]R <-> [j,i]B, paired
// diagonals fixed. An involution.
Diagonal rho(const Diagonal& d);

// Translation: anticlockwise rotation [i,j] -> [i-1,j-1]; on a symmetric
// shape in an odd-sided polygon, first-slice diagonals additionally pick
// up a rho flip (the Moebius seam).
Diagonal tau(const Diagonal& d, const PolygonSpec& spec);
Diagonal tau_inverse(const Diagonal& d, const PolygonSpec& spec);

// Heptagon reflection along the axis through vertex i and the midpoint of
// edge (i+3, i+4), followed by an orientation switch; the two axis-chord
// diagonals [i+1,i-1]R, [i-1,i+1]B map to their rho images instead.
// Throws unless polygon_size == 7.
Diagonal sigma(int axis_vertex, const Diagonal& d, int polygon_size = 7);

}  // namespace polyclus
