#include "polyclus/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polyclus {

void TranslationQuiver::finalize() {
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    const int n = size();
    out.assign(n, {});
    in.assign(n, {});
    for (auto [u, v] : arrows) {
        out[u].push_back(v);
        in[v].push_back(u);
    }
    tau_inv.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (tau[v] >= 0) tau_inv[tau[v]] = v;
    if (labels.empty()) {
        labels.reserve(verts.size());
        for (const Diagonal& d : verts) labels.push_back(to_string(d));
    }
}

int TranslationQuiver::vertex_id(const Diagonal& d) const {
    const int m = spec.m;
    auto it = std::lower_bound(verts.begin(), verts.end(), d,
                               [m](const Diagonal& a, const Diagonal& b) { return canonical_less(a, b, m); });
    if (it != verts.end() && *it == d) return static_cast<int>(it - verts.begin());
    return -1;
}

int TranslationQuiver::tau_orbit_length(int v) const {
    int len = 1;
    for (int w = tau[v]; w != v; w = tau[w]) ++len;
    return len;
}

namespace {

// CategoryKind of the polygon quiver: the 2-CY cluster quotients are the
// three type-E heptagon/10-gon/16-gon models and the relaxed D_n model.
CategoryKind classify_kind(const PolygonSpec& spec) {
    const TreeShape& sh = spec.shape;
    if (sh.r == 1 && sh.s == 2 && sh.t == 2 && spec.m == 7) return CategoryKind::cluster;
    if (sh.r == 1 && sh.s == 2 && sh.t == 3 && spec.m == 10) return CategoryKind::cluster;
    if (sh.r == 1 && sh.s == 2 && sh.t == 4 && spec.m == 16) return CategoryKind::cluster;
    if (spec.relaxed && sh.s == 1 && sh.t == 1 && spec.m == sh.r + 3) return CategoryKind::cluster;
    if (sh.s == sh.t || sh.s == 0 || sh.t == 0) return CategoryKind::repetitive;
    return CategoryKind::other;
}

}  // namespace

TranslationQuiver build_gamma(const PolygonSpec& spec) {
    DiagonalSet ds = build_diagonal_set(spec);
    TranslationQuiver q;
    q.spec = spec;
    q.verts = ds.members;
    const int m = spec.m;
    const TreeShape& sh = spec.shape;
    const bool seam = sh.symmetric() && m % 2 == 1;

    q.tau.resize(q.size());
    for (int v = 0; v < q.size(); ++v) {
        int image = ds.id_of(tau(q.verts[v], spec));
        if (image < 0) throw std::logic_error("tau image escaped the diagonal set");
        q.tau[v] = image;
    }

    auto add_arrow = [&](int u, Diagonal cand) {
        cand.from = normalize_vertex(cand.from, m);
        cand.to = normalize_vertex(cand.to, m);
        if (!in_generating_set(cand, spec)) return;
        // Moebius seam: arrows crossing from the last slice into the first
        // also switch colour and orientation.
        if (seam && anchor_of(q.verts[u]) == m && anchor_of(cand) == 1) cand = rho(cand);
        int v = ds.id_of(cand);
        if (v >= 0 && v != u) q.arrows.emplace_back(u, v);
    };

    for (int u = 0; u < q.size(); ++u) {
        const Diagonal& d = q.verts[u];
        add_arrow(u, Diagonal{d.from, d.to + 1, d.colour});
        add_arrow(u, Diagonal{d.from + 1, d.to, d.colour});
        int reach = reach_of(d, m);
        if (reach == 0) reach = m;
        if (d.colour == Colour::paired && reach == sh.r + 2) {
            // three-way splice at the paired/single interface
            add_arrow(u, Diagonal{d.from, d.from + sh.r + 3, Colour::red});
            add_arrow(u, Diagonal{d.from + sh.r + 3, d.from, Colour::blue});
        }
        if (d.colour == Colour::red && reach == sh.r + 3)
            add_arrow(u, Diagonal{d.from + 1, d.to, Colour::paired});
        if (d.colour == Colour::blue && reach == sh.r + 3)
            add_arrow(u, Diagonal{d.to + 1, d.from, Colour::paired});
    }

    q.kind = classify_kind(spec);
    q.cover_shape = sh;
    q.deck_exponent = m;
    q.deck_twist = seam;
    q.has_cover = true;
    q.finalize();
    return q;
}

TranslationQuiver build_gamma_e6() { return build_gamma({7, {1, 2, 2}, false}); }
TranslationQuiver build_gamma_e7() { return build_gamma({10, {1, 2, 3}, false}); }
TranslationQuiver build_gamma_e8() { return build_gamma({16, {1, 2, 4}, false}); }

TranslationQuiver build_gamma_dn(int n) {
    if (n < 4) throw std::invalid_argument("D_n model needs n >= 4");
    return build_gamma({n, {n - 3, 1, 1}, true});
}

TranslationQuiver build_gamma_a_repetitive(int r) {
    if (r < 1) throw std::invalid_argument("paired-only model needs r >= 1");
    return build_gamma({r + 4, {r, 0, 0}, false});
}

ValidationReport validate_stable_translation(const TranslationQuiver& q) {
    ValidationReport rep;
    const int n = q.size();
    auto name = [&](int v) { return q.labels[static_cast<size_t>(v)]; };

    for (auto [u, v] : q.arrows)
        if (u == v) rep.violations.push_back("loop at " + name(u));
    for (size_t i = 1; i < q.arrows.size(); ++i)
        if (q.arrows[i] == q.arrows[i - 1])
            rep.violations.push_back("multiple arrow " + name(q.arrows[i].first) + " -> " +
                                     name(q.arrows[i].second));

    std::vector<int> hits(n, 0);
    bool tau_ok = true;
    for (int v = 0; v < n; ++v) {
        if (q.tau[v] < 0 || q.tau[v] >= n) {
            rep.violations.push_back("tau undefined at " + name(v));
            tau_ok = false;
            continue;
        }
        ++hits[q.tau[v]];
    }
    for (int v = 0; v < n; ++v)
        if (hits[v] != 1) {
            rep.violations.push_back("tau not bijective at " + name(v));
            tau_ok = false;
        }

    if (tau_ok) {
        for (int x = 0; x < n; ++x) {
            std::vector<int> sources = q.in[x];
            std::vector<int> targets = q.out[q.tau[x]];
            std::sort(sources.begin(), sources.end());
            std::sort(targets.begin(), targets.end());
            if (sources != targets)
                rep.violations.push_back("mesh axiom fails at " + name(x));
        }
    }

    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            auto visit = [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            };
            for (int w : q.out[v]) visit(w);
            for (int w : q.in[v]) visit(w);
        }
        if (count != n) rep.violations.push_back("quiver not connected");
    }
    return rep;
}

TranslationQuiver fold_rho(const TranslationQuiver& q) {
    if (!q.spec.shape.symmetric())
        throw std::invalid_argument("fold_rho requires a symmetric shape (s == t)");
    const int n = q.size();
    // orbit representative: the paired diagonal itself, or the red member
    std::vector<int> rep(n), cls(n, -1);
    for (int v = 0; v < n; ++v) {
        Diagonal img = rho(q.verts[v]);
        int w = q.vertex_id(img);
        rep[v] = (q.verts[v].colour == Colour::blue) ? w : v;
    }
    TranslationQuiver f;
    f.spec = q.spec;
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v) {
            cls[v] = static_cast<int>(reps.size());
            reps.push_back(v);
        }
    for (int v = 0; v < n; ++v) cls[v] = cls[rep[v]];
    for (int r0 : reps) f.verts.push_back(q.verts[r0]);
    f.tau.resize(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) f.tau[i] = cls[q.tau[reps[i]]];
    for (auto [u, v] : q.arrows) f.arrows.emplace_back(cls[u], cls[v]);
    for (size_t i = 0; i < reps.size(); ++i) {
        const Diagonal& d = f.verts[i];
        if (d.colour == Colour::paired)
            f.labels.push_back(to_string(d));
        else
            f.labels.push_back("{" + to_string(d) + "," + to_string(rho(d)) + "}");
    }
    f.kind = CategoryKind::other;
    f.finalize();
    return f;
}

TranslationQuiver forget_orientation(const TranslationQuiver& folded) {
    // chords keyed by endpoints seen from the smaller vertex
    auto chord_of = [&](const Diagonal& d) {
        int a = std::min(d.from, d.to), b = std::max(d.from, d.to);
        return std::pair<int, int>{a, b};
    };
    std::map<std::pair<int, int>, int> chord_ids;
    std::vector<int> cls(folded.size());
    std::vector<std::pair<int, int>> chords;
    for (int v = 0; v < folded.size(); ++v) {
        auto key = chord_of(folded.verts[v]);
        auto it = chord_ids.find(key);
        if (it == chord_ids.end()) {
            it = chord_ids.emplace(key, static_cast<int>(chords.size())).first;
            chords.push_back(key);
        }
        cls[v] = it->second;
    }
    TranslationQuiver g;
    g.spec = folded.spec;
    g.verts.resize(chords.size());
    g.tau.assign(chords.size(), -1);
    for (int v = 0; v < folded.size(); ++v) {
        g.verts[cls[v]] = Diagonal{chords[cls[v]].first, chords[cls[v]].second, Colour::red};
        int img = cls[folded.tau[v]];
        if (g.tau[cls[v]] >= 0 && g.tau[cls[v]] != img)
            throw std::logic_error("translation does not descend to unoriented diagonals");
        g.tau[cls[v]] = img;
    }
    for (auto [u, v] : folded.arrows) g.arrows.emplace_back(cls[u], cls[v]);
    for (auto [a, b] : chords)
        g.labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    g.kind = CategoryKind::other;
    g.finalize();
    return g;
}

namespace {

// class key of a diagonal of Gamma^{2n}_{n-3,n-1,n-1} in the triple model
// id scheme: triples (i,k) with 2 <= k <= n-1 -> (i-1)*(n-2) + (k-2);
// central red i -> 2n(n-2) + (i-1); central blue i -> 2n(n-2) + 2n + (i-1)
int dn_class_of(const Diagonal& d, int n) {
    const int m = 2 * n;
    int reach = reach_of(d, m);
    int a = anchor_of(d);
    if (d.colour == Colour::paired) {
        return (a - 1) * (n - 2) + (reach - 2);
    }
    if (reach == n) {
        int base = 2 * n * (n - 2);
        if (d.colour == Colour::red) return base + (a - 1);
        return base + 2 * n + (a - 1);
    }
    // red member [i+k+n, i+n]R and blue member [i+n, i+k+n]B both satisfy
    // anchor + reach = i + n
    int k = m - reach;
    int i = normalize_vertex(a + reach - n, m);
    return (i - 1) * (n - 2) + (k - 2);
}

}  // namespace

TranslationQuiver build_gamma_dn_triples(int n) {
    if (n < 4) throw std::invalid_argument("triple model needs n >= 4");
    TranslationQuiver big = build_gamma({2 * n, {n - 3, n - 1, n - 1}, false});
    const int classes = 2 * n * n;
    TranslationQuiver q;
    q.spec = big.spec;
    q.verts.resize(classes);
    q.labels.assign(classes, "");
    q.tau.assign(classes, -1);
    std::vector<int> cls(big.size());
    for (int v = 0; v < big.size(); ++v) {
        cls[v] = dn_class_of(big.verts[v], n);
        if (cls[v] < 0 || cls[v] >= classes) throw std::logic_error("triple class out of range");
    }
    for (int v = 0; v < big.size(); ++v) {
        int c = cls[v];
        q.verts[c] = big.verts[v];  // one member as payload; label lists all
        if (!q.labels[c].empty()) q.labels[c] += "=";
        q.labels[c] += to_string(big.verts[v]);
        int img = cls[big.tau[v]];
        if (q.tau[c] >= 0 && q.tau[c] != img)
            throw std::logic_error("translation does not descend to triples");
        q.tau[c] = img;
    }
    for (auto [u, v] : big.arrows) {
        if (cls[u] == cls[v]) throw std::logic_error("triple quotient produced a loop");
        q.arrows.emplace_back(cls[u], cls[v]);
    }
    q.kind = CategoryKind::repetitive;
    q.cover_shape = TreeShape{n - 3, 1, 1};
    q.deck_exponent = 2 * n;
    q.deck_twist = false;
    q.has_cover = true;
    q.finalize();
    return q;
}

std::vector<int> dn_triples_projection(const TranslationQuiver& big, const TranslationQuiver& triples) {
    int n = triples.spec.m / 2;
    std::vector<int> cls(big.size());
    for (int v = 0; v < big.size(); ++v) cls[v] = dn_class_of(big.verts[v], n);
    return cls;
}

// ---------------------------------------------------------------------------
// ZT_{r,s,t} deck quotients

namespace {

// Tree vertex layout: 0 = centre, then the r-leg (depth 1..r), the s-leg,
// the t-leg. Within-slice arrows run r-leg -> centre -> s/t-legs.
struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // oriented tree arrows u -> v
    std::vector<int> swap_legs;               // the s<->t automorphism (identity if s != t)
};

Tree make_tree(const TreeShape& sh) {
    Tree tr;
    tr.n = sh.vertex_count();
    auto r_at = [&](int depth) { return depth; };                 // 1..r
    auto s_at = [&](int depth) { return sh.r + depth; };          // 1..s
    auto t_at = [&](int depth) { return sh.r + sh.s + depth; };   // 1..t
    for (int d = sh.r; d >= 2; --d) tr.arrows.emplace_back(r_at(d), r_at(d - 1));
    if (sh.r >= 1) tr.arrows.emplace_back(r_at(1), 0);
    if (sh.s >= 1) tr.arrows.emplace_back(0, s_at(1));
    for (int d = 1; d < sh.s; ++d) tr.arrows.emplace_back(s_at(d), s_at(d + 1));
    if (sh.t >= 1) tr.arrows.emplace_back(0, t_at(1));
    for (int d = 1; d < sh.t; ++d) tr.arrows.emplace_back(t_at(d), t_at(d + 1));
    tr.swap_legs.resize(tr.n);
    std::iota(tr.swap_legs.begin(), tr.swap_legs.end(), 0);
    if (sh.symmetric()) {
        for (int d = 1; d <= sh.s; ++d) {
            tr.swap_legs[s_at(d)] = t_at(d);
            tr.swap_legs[t_at(d)] = s_at(d);
        }
    }
    return tr;
}

}  // namespace

TranslationQuiver build_deck_quotient(const TreeShape& shape, int deck_exponent, bool twist) {
    shape.validate();
    if (deck_exponent < 1) throw std::invalid_argument("deck exponent must be positive");
    Tree tr = make_tree(shape);
    const int M = deck_exponent;
    const int N = M * tr.n;
    auto vid = [&](int slice, int v) {
        slice %= M;
        if (slice < 0) slice += M;
        return slice * tr.n + v;
    };
    TranslationQuiver q;
    q.spec = PolygonSpec{};  // not a polygon quiver
    q.verts.assign(N, Diagonal{});
    q.labels.resize(N);
    q.tau.resize(N);
    for (int s0 = 0; s0 < M; ++s0)
        for (int v = 0; v < tr.n; ++v)
            q.labels[vid(s0, v)] = "(" + std::to_string(s0) + "," + std::to_string(v) + ")";
    auto wrap = [&](int slice, int v) -> std::pair<int, int> {
        // identify (slice + M, v) with (slice, twist ? swap(v) : v)
        int s0 = slice, w = v;
        while (s0 >= M) {
            s0 -= M;
            if (twist) w = tr.swap_legs[w];
        }
        while (s0 < 0) {
            s0 += M;
            if (twist) w = tr.swap_legs[w];
        }
        return {s0, w};
    };
    for (int s0 = 0; s0 < M; ++s0) {
        for (auto [u, v] : tr.arrows) {
            q.arrows.emplace_back(vid(s0, u), vid(s0, v));
            auto [s1, w] = wrap(s0 + 1, u);
            q.arrows.emplace_back(vid(s0, v), vid(s1, w));
        }
        for (int v = 0; v < tr.n; ++v) {
            auto [s1, w] = wrap(s0 - 1, v);
            q.tau[vid(s0, v)] = vid(s1, w);
        }
    }
    q.kind = CategoryKind::other;
    q.finalize();
    return q;
}

// ---------------------------------------------------------------------------
// Isomorphism of translation quivers

namespace {

std::vector<long long> stable_colours(const TranslationQuiver& q) {
    const int n = q.size();
    std::vector<long long> col(n);
    for (int v = 0; v < n; ++v)
        col[v] = (static_cast<long long>(q.out[v].size()) << 24) ^
                 (static_cast<long long>(q.in[v].size()) << 16) ^ q.tau_orbit_length(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long long>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<long long> outs, ins;
            for (int w : q.out[v]) outs.push_back(col[w]);
            for (int w : q.in[v]) ins.push_back(col[w]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig[v].push_back(col[v]);
            sig[v].push_back(col[q.tau[v]]);
            sig[v].insert(sig[v].end(), outs.begin(), outs.end());
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), ins.begin(), ins.end());
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<long long> next(n);
        long long c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (next == col) break;
        col = next;
    }
    return col;
}

struct IsoSearch {
    const TranslationQuiver& a;
    const TranslationQuiver& b;
    std::vector<long long> ca, cb;
    std::vector<int> map_ab, map_ba;

    bool arrows_consistent(int va, int vb) {
        // check arrows between vb and already-mapped vertices both ways
        for (int w : a.out[va]) {
            int mw = map_ab[w];
            if (mw >= 0 && !has_arrow(b, vb, mw)) return false;
        }
        for (int w : a.in[va]) {
            int mw = map_ab[w];
            if (mw >= 0 && !has_arrow(b, mw, vb)) return false;
        }
        for (int w : b.out[vb]) {
            int pw = map_ba[w];
            if (pw >= 0 && !has_arrow(a, va, pw)) return false;
        }
        for (int w : b.in[vb]) {
            int pw = map_ba[w];
            if (pw >= 0 && !has_arrow(a, pw, va)) return false;
        }
        return true;
    }

    static bool has_arrow(const TranslationQuiver& q, int u, int v) {
        return std::binary_search(q.arrows.begin(), q.arrows.end(), std::make_pair(u, v));
    }

    bool assign_orbit(int va, int vb) {
        // propagate along the tau orbit; records assignments, returns false
        // (without rollback; caller tracks trail) on clash
        int x = va, y = vb;
        do {
            if (map_ab[x] >= 0 || map_ba[y] >= 0) return map_ab[x] == y && map_ba[y] == x;
            if (ca[x] != cb[y]) return false;
            if (!arrows_consistent(x, y)) return false;
            map_ab[x] = y;
            map_ba[y] = x;
            trail.push_back({x, y});
            x = a.tau[x];
            y = b.tau[y];
        } while (x != va || y != vb);
        return x == va && y == vb;
    }

    std::vector<std::pair<int, int>> trail;

    bool solve(int v) {
        while (v < a.size() && map_ab[v] >= 0) ++v;
        if (v >= a.size()) return true;
        for (int w = 0; w < b.size(); ++w) {
            if (map_ba[w] >= 0 || ca[v] != cb[w]) continue;
            size_t mark = trail.size();
            if (assign_orbit(v, w) && solve(v + 1)) return true;
            while (trail.size() > mark) {
                auto [x, y] = trail.back();
                trail.pop_back();
                map_ab[x] = -1;
                map_ba[y] = -1;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> isomorphic_translation_quivers(const TranslationQuiver& a,
                                                               const TranslationQuiver& b) {
    if (a.size() != b.size() || a.arrows.size() != b.arrows.size()) return std::nullopt;
    IsoSearch s{a, b, stable_colours(a), stable_colours(b), {}, {}, {}};
    {
        auto sa = s.ca, sb = s.cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    s.map_ab.assign(a.size(), -1);
    s.map_ba.assign(b.size(), -1);
    if (!s.solve(0)) return std::nullopt;
    // full arrow check (search already enforced it incrementally)
    for (auto [u, v] : a.arrows)
        if (!IsoSearch::has_arrow(b, s.map_ab[u], s.map_ab[v])) return std::nullopt;
    return s.map_ab;
}

int count_triangulations(const std::vector<std::pair<int, int>>& chords, int m) {
    // brute force: count maximal pairwise non-crossing subsets
    const int n = static_cast<int>(chords.size());
    std::vector<std::vector<char>> comp(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            comp[i][j] = i != j && !crosses(Diagonal{chords[i].first, chords[i].second, Colour::red},
                                            Diagonal{chords[j].first, chords[j].second, Colour::red}, m);
    int count = 0;
    std::vector<int> cur;
    auto maximal = [&]() {
        for (int v = 0; v < n; ++v) {
            if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
            bool ok = true;
            for (int u : cur)
                if (!comp[u][v]) { ok = false; break; }
            if (ok) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int start) -> void {
        if (maximal()) ++count;
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!comp[u][v]) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace polyclus
