#include "polyclus/diagonal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace polyclus {

char colour_suffix(Colour c) {
    switch (c) {
        case Colour::paired: return 'P';
        case Colour::red: return 'R';
        case Colour::blue: return 'B';
    }
    return '?';
}

void TreeShape::validate() const {
    if (r < 0 || s < 0 || t < 0)
        throw std::invalid_argument("tree shape legs must be non-negative");
    if (r + s + t < 1)
        throw std::invalid_argument("tree shape needs at least one leg vertex");
}

void PolygonSpec::validate() const {
    shape.validate();
    if (m < 4) throw std::invalid_argument("polygon needs at least 4 vertices");
    if (!relaxed) {
        int bound = std::max(shape.r + shape.s + 1, shape.r + shape.t + 1) + 3;
        if (m < bound)
            throw std::invalid_argument("polygon too small for shape: need m >= " +
                                        std::to_string(bound) + ", got " + std::to_string(m));
    }
}

int PolygonSpec::slice_size() const {
    return (shape.r > 0 ? shape.r + 1 : 0) + shape.s + shape.t;
}

int PolygonSpec::object_count() const { return slice_size() * m; }

int normalize_vertex(int v, int m) {
    int w = v % m;
    if (w <= 0) w += m;
    return w;
}

int anchor_of(const Diagonal& d) {
    return d.colour == Colour::blue ? d.to : d.from;
}

int reach_of(const Diagonal& d, int m) {
    int a = anchor_of(d);
    int b = d.colour == Colour::blue ? d.from : d.to;
    return ((b - a) % m + m) % m;
}

bool canonical_less(const Diagonal& a, const Diagonal& b, int m) {
    int aa = anchor_of(a), ab = anchor_of(b);
    if (aa != ab) return aa < ab;
    int ra = reach_of(a, m), rb = reach_of(b, m);
    if (ra != rb) return ra < rb;
    return static_cast<int>(a.colour) < static_cast<int>(b.colour);
}

std::string to_string(const Diagonal& d) {
    return "[" + std::to_string(d.from) + "," + std::to_string(d.to) + "]" +
           colour_suffix(d.colour);
}

Diagonal parse_diagonal(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("malformed diagonal: '" + text + "'"); };
    size_t i = 0;
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c) fail();
        ++i;
    };
    auto number = [&]() -> int {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        return std::stoi(text.substr(start, i - start));
    };
    expect('[');
    int from = number();
    expect(',');
    int to = number();
    expect(']');
    if (i + 1 != text.size()) fail();
    Colour c;
    switch (text[i]) {
        case 'P': c = Colour::paired; break;
        case 'R': c = Colour::red; break;
        case 'B': c = Colour::blue; break;
        default: fail(); c = Colour::paired;
    }
    return Diagonal{from, to, c};
}

bool in_generating_set(const Diagonal& d, const PolygonSpec& spec) {
    const int m = spec.m;
    if (d.from < 1 || d.from > m || d.to < 1 || d.to > m) return false;
    int reach = reach_of(d, m);
    if (reach == 0) reach = m;  // loop arcs count as full-turn reach
    const TreeShape& sh = spec.shape;
    switch (d.colour) {
        case Colour::paired:
            return sh.r >= 1 && reach >= 2 && reach <= sh.r + 2;
        case Colour::red:
            return reach >= sh.r + 3 && reach <= sh.r + sh.s + 2;
        case Colour::blue:
            return reach >= sh.r + 3 && reach <= sh.r + sh.t + 2;
    }
    return false;
}

bool in_first_slice(const Diagonal& d, const PolygonSpec& spec) {
    return anchor_of(d) == 1 && in_generating_set(d, spec);
}

DiagonalSet build_diagonal_set(const PolygonSpec& spec) {
    spec.validate();
    DiagonalSet set;
    set.spec = spec;
    const int m = spec.m;
    const TreeShape& sh = spec.shape;
    auto push = [&](int from, int to, Colour c) {
        set.members.push_back(Diagonal{normalize_vertex(from, m), normalize_vertex(to, m), c});
    };
    for (int i = 1; i <= m; ++i) {
        if (sh.r >= 1)
            for (int reach = 2; reach <= sh.r + 2; ++reach) push(i, i + reach, Colour::paired);
        for (int reach = sh.r + 3; reach <= sh.r + sh.s + 2; ++reach) push(i, i + reach, Colour::red);
        for (int reach = sh.r + 3; reach <= sh.r + sh.t + 2; ++reach) push(i + reach, i, Colour::blue);
    }
    for (const Diagonal& d : set.members) {
        int gap = ((d.to - d.from) % m + m) % m;
        bool boundary = spec.relaxed ? (gap == 1) : (gap == 0 || gap == 1 || gap == m - 1);
        if (boundary)
            throw std::invalid_argument("diagonal set contains a boundary segment " + to_string(d) +
                                        "; polygon too small");
    }
    std::sort(set.members.begin(), set.members.end(),
              [m](const Diagonal& a, const Diagonal& b) { return canonical_less(a, b, m); });
    return set;
}

int DiagonalSet::id_of(const Diagonal& d) const {
    const int m = spec.m;
    auto it = std::lower_bound(members.begin(), members.end(), d,
                               [m](const Diagonal& a, const Diagonal& b) { return canonical_less(a, b, m); });
    if (it != members.end() && *it == d) return static_cast<int>(it - members.begin());
    return -1;
}

bool crosses(const Diagonal& a, const Diagonal& b, int m) {
    // Walk the cycle once starting after a.from; b crosses a iff exactly one
    // of b's endpoints lies strictly between a's endpoints.
    int a1 = normalize_vertex(a.from, m), a2 = normalize_vertex(a.to, m);
    int b1 = normalize_vertex(b.from, m), b2 = normalize_vertex(b.to, m);
    if (a1 == a2 || b1 == b2) return false;
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    auto pos = [&](int v) { return ((v - a1) % m + m) % m; };  // a1 -> 0
    int cut = pos(a2);
    bool in1 = pos(b1) < cut;
    bool in2 = pos(b2) < cut;
    return in1 != in2;
}

Diagonal rho(const Diagonal& d) {
    switch (d.colour) {
        case Colour::red: return Diagonal{d.to, d.from, Colour::blue};
        case Colour::blue: return Diagonal{d.to, d.from, Colour::red};
        case Colour::paired: return d;
    }
    return d;
}

static Diagonal rotate(const Diagonal& d, int steps, int m) {
    return Diagonal{normalize_vertex(d.from + steps, m), normalize_vertex(d.to + steps, m), d.colour};
}

Diagonal tau(const Diagonal& d, const PolygonSpec& spec) {
    if (!in_generating_set(d, spec))
        throw std::invalid_argument("tau: " + to_string(d) + " is not in the generating set");
    Diagonal rotated = rotate(d, -1, spec.m);
    if (spec.shape.symmetric() && spec.m % 2 == 1 && in_first_slice(d, spec))
        return rho(rotated);
    return rotated;
}

Diagonal tau_inverse(const Diagonal& d, const PolygonSpec& spec) {
    if (!in_generating_set(d, spec))
        throw std::invalid_argument("tau_inverse: " + to_string(d) + " is not in the generating set");
    // rho commutes with rotation, so the first-slice preimage is the rho
    // image of the plain clockwise rotation
    Diagonal rotated = rotate(d, 1, spec.m);
    if (spec.shape.symmetric() && spec.m % 2 == 1 && in_first_slice(rotated, spec))
        return rho(rotated);
    return rotated;
}

Diagonal sigma(int axis_vertex, const Diagonal& d, int polygon_size) {
    if (polygon_size != 7)
        throw std::invalid_argument("sigma is only defined on the heptagon");
    const int m = 7;
    int i = normalize_vertex(axis_vertex, m);
    // axis-chord special case: [i+1,i-1]R and [i-1,i+1]B swap via rho
    Diagonal special_r{normalize_vertex(i + 1, m), normalize_vertex(i - 1, m), Colour::red};
    Diagonal special_b{normalize_vertex(i - 1, m), normalize_vertex(i + 1, m), Colour::blue};
    if (d == special_r || d == special_b) return rho(d);
    auto reflect = [&](int v) { return normalize_vertex(2 * i - v, m); };
    return Diagonal{reflect(d.to), reflect(d.from), d.colour};
}

}  // namespace polyclus
