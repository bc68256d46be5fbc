#include "polyclus/tilting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polyclus {

namespace {

std::vector<std::vector<char>> compatibility(const ExtTable& ext) {
    const int n = ext.size();
    std::vector<std::vector<char>> comp(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) comp[x][y] = x != y && ext(x, y) == 0;
    return comp;
}

// Bron-Kerbosch with pivoting; emits every maximal clique.
void bron_kerbosch(const std::vector<std::vector<char>>& comp, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (P.empty() && X.empty()) {
        emit(R);
        return;
    }
    int pivot = -1;
    size_t best = 0;
    for (int u : P) {
        size_t cnt = 0;
        for (int v : P) cnt += comp[u][v];
        if (pivot < 0 || cnt > best) {
            pivot = u;
            best = cnt;
        }
    }
    for (int u : X) {
        size_t cnt = 0;
        for (int v : P) cnt += comp[u][v];
        if (pivot < 0 || cnt > best) {
            pivot = u;
            best = cnt;
        }
    }
    std::vector<int> candidates;
    for (int v : P)
        if (pivot < 0 || !comp[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (comp[v][w]) P2.push_back(w);
        for (int w : X)
            if (comp[v][w]) X2.push_back(w);
        R.push_back(v);
        bron_kerbosch(comp, R, std::move(P2), std::move(X2), emit);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

std::vector<int> degeneracy_order(const std::vector<std::vector<char>>& comp) {
    const int n = static_cast<int>(comp.size());
    std::vector<int> deg(n, 0), order;
    std::vector<char> used(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) deg[x] += comp[x][y];
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (best < 0 || deg[v] < deg[best])) best = v;
        used[best] = 1;
        order.push_back(best);
        for (int w = 0; w < n; ++w)
            if (!used[w] && comp[best][w]) --deg[w];
    }
    return order;
}

}  // namespace

std::vector<Config> enumerate_configurations(const ExtTable& ext, int k, int threads) {
    auto comp = compatibility(ext);
    const int n = ext.size();
    std::vector<int> order = degeneracy_order(comp);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    // one independent search branch per vertex, later vertices as candidates
    std::vector<std::vector<Config>> found(static_cast<size_t>(n));
    parallel_for(n, threads, [&](int i) {
        int v = order[i];
        std::vector<int> P, X;
        for (int w = 0; w < n; ++w) {
            if (!comp[v][w]) continue;
            (rank[w] > i ? P : X).push_back(w);
        }
        std::vector<int> R{v};
        bron_kerbosch(comp, R, std::move(P), std::move(X), [&](const std::vector<int>& clique) {
            Config c = clique;
            std::sort(c.begin(), c.end());
            found[static_cast<size_t>(i)].push_back(std::move(c));
        });
    });

    std::vector<Config> all;
    for (auto& part : found)
        for (auto& c : part) all.push_back(std::move(c));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const Config& c : all)
        if (static_cast<int>(c.size()) != k)
            throw std::runtime_error("maximal compatible set of size " + std::to_string(c.size()) +
                                     " found; expected uniform size " + std::to_string(k));
    return all;
}

long long count_configurations_bruteforce(const ExtTable& ext, int k) {
    auto comp = compatibility(ext);
    const int n = ext.size();
    long long count = 0;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            ++count;
            return;
        }
        if (n - start < k - static_cast<int>(cur.size())) return;
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

ConfigClass classify(const TranslationQuiver& q, const Config& config) {
    ConfigClass cc;
    const int m = q.spec.m;
    for (int id : config) {
        const Diagonal& d = q.verts[id];
        if (d.colour != Colour::paired) continue;
        int reach = reach_of(d, m);
        if (reach == 3) cc.has_long_paired = true;
        if (reach == 2) ++cc.short_paired_count;
    }
    cc.family = cc.has_long_paired ? "F1" : "F2";
    return cc;
}

LongDiagonalSplit long_diagonal_split(const Diagonal& long_diagonal, int m) {
    LongDiagonalSplit split;
    split.long_diagonal = long_diagonal;
    int a = normalize_vertex(long_diagonal.from, m);
    int b = normalize_vertex(long_diagonal.to, m);
    std::vector<int> side1{a}, side2{b};
    for (int v = a; v != b; v = normalize_vertex(v + 1, m))
        if (v != a) side1.push_back(v);
    side1.push_back(b);
    for (int v = b; v != a; v = normalize_vertex(v + 1, m))
        if (v != b) side2.push_back(v);
    side2.push_back(a);
    if (side1.size() > side2.size()) std::swap(side1, side2);
    if (side1.size() != 4 || side2.size() != 5)
        throw std::invalid_argument("not a long diagonal of a heptagon: " + to_string(long_diagonal));
    split.quadrilateral = side1;
    split.pentagon = side2;
    return split;
}

namespace {

// all 2-chord triangulations of a pentagon given by its vertex cycle
std::vector<std::array<std::pair<int, int>, 2>> pentagon_triangulations(const std::vector<int>& penta) {
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 2; j < 5; ++j)
            if (!(i == 0 && j == 4)) chords.emplace_back(penta[static_cast<size_t>(i)], penta[static_cast<size_t>(j)]);
    std::vector<std::array<std::pair<int, int>, 2>> tris;
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            // two pentagon chords triangulate iff they share an endpoint
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if (a == c || a == d || b == c || b == d) tris.push_back({chords[i], chords[j]});
        }
    return tris;
}

int oriented_single_id(const TranslationQuiver& q, int a, int b, Colour colour) {
    int v = q.vertex_id(Diagonal{a, b, colour});
    if (v < 0) v = q.vertex_id(Diagonal{b, a, colour});
    if (v < 0)
        throw std::logic_error("no oriented single diagonal over chord (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    return v;
}

}  // namespace

std::vector<Config> generate_family_f1(const TranslationQuiver& q, const ExtTable& ext,
                                       const Diagonal& long_paired) {
    const int m = q.spec.m;
    if (m != 7 || long_paired.colour != Colour::paired || reach_of(long_paired, m) != 3)
        throw std::invalid_argument("family generator needs a long paired heptagon diagonal");
    // build where the pentagon region avoids the colour seam, transport by tau
    const int base_anchor = 4;
    int shifts = ((base_anchor - anchor_of(long_paired)) % m + m) % m;

    Diagonal base{base_anchor, base_anchor + 3, Colour::paired};
    LongDiagonalSplit split = long_diagonal_split(base, m);
    std::vector<int> shorts;
    shorts.push_back(q.vertex_id(Diagonal{split.quadrilateral[0], split.quadrilateral[2], Colour::paired}));
    shorts.push_back(q.vertex_id(Diagonal{split.quadrilateral[1], split.quadrilateral[3], Colour::paired}));
    auto tris = pentagon_triangulations(split.pentagon);
    if (tris.size() != 5) throw std::logic_error("pentagon should have 5 triangulations");

    std::vector<Config> result;
    int base_id = q.vertex_id(base);
    for (int s : shorts)
        for (const auto& red : tris)
            for (const auto& blue : tris) {
                Config c{base_id, s};
                for (const auto& [a, b] : red) c.push_back(oriented_single_id(q, a, b, Colour::red));
                for (const auto& [a, b] : blue) c.push_back(oriented_single_id(q, a, b, Colour::blue));
                std::sort(c.begin(), c.end());
                for (int step = 0; step < shifts; ++step) c = apply_tau(q, c);
                if (!is_configuration(ext, c))
                    throw std::logic_error("family construction produced an incompatible set");
                result.push_back(std::move(c));
            }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool is_configuration(const ExtTable& ext, const Config& config) {
    std::set<int> uniq(config.begin(), config.end());
    if (uniq.size() != config.size()) return false;
    for (size_t i = 0; i < config.size(); ++i)
        for (size_t j = i + 1; j < config.size(); ++j)
            if (ext(config[i], config[j]) != 0) return false;
    return true;
}

int complement_of(const ExtTable& ext, const Config& config, int d) {
    Config rest;
    for (int v : config)
        if (v != d) rest.push_back(v);
    if (rest.size() + 1 != config.size())
        throw std::invalid_argument("mutation slot is not a member of the configuration");
    std::vector<int> candidates;
    for (int v = 0; v < ext.size(); ++v) {
        if (v == d) continue;
        if (std::binary_search(rest.begin(), rest.end(), v)) continue;
        bool ok = true;
        for (int u : rest)
            if (ext(u, v) != 0) { ok = false; break; }
        if (ok) candidates.push_back(v);
    }
    if (candidates.size() != 1)
        throw std::runtime_error("expected exactly one complement, found " +
                                 std::to_string(candidates.size()));
    if (ext(d, candidates[0]) != 1)
        throw std::runtime_error("complement pair does not have Ext dimension 1");
    return candidates[0];
}

Config mutate(const ExtTable& ext, const Config& config, int d) {
    int star = complement_of(ext, config, d);
    Config result;
    for (int v : config) result.push_back(v == d ? star : v);
    std::sort(result.begin(), result.end());
    return result;
}

FlipWitness is_flip_mutation(const TranslationQuiver& q, const ExtTable& ext,
                             const Config& config, int d) {
    FlipWitness w;
    w.complement = complement_of(ext, config, d);
    w.is_flip = crosses(q.verts[d], q.verts[w.complement], q.spec.m);
    return w;
}

bool ExchangeGraph::connected() const {
    if (configs.empty()) return true;
    std::vector<char> seen(configs.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adjacency[static_cast<size_t>(v)])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count == configs.size();
}

ExchangeGraph exchange_graph(const ExtTable& ext, const std::vector<Config>& configs) {
    ExchangeGraph g;
    g.configs = configs;
    std::sort(g.configs.begin(), g.configs.end());
    auto index_of = [&](const Config& c) {
        auto it = std::lower_bound(g.configs.begin(), g.configs.end(), c);
        if (it == g.configs.end() || *it != c)
            throw std::runtime_error("mutation left the configuration list");
        return static_cast<int>(it - g.configs.begin());
    };
    g.adjacency.assign(g.configs.size(), {});
    std::set<std::pair<int, int>> seen;
    for (int u = 0; u < static_cast<int>(g.configs.size()); ++u) {
        for (int d : g.configs[static_cast<size_t>(u)]) {
            int star = complement_of(ext, g.configs[static_cast<size_t>(u)], d);
            Config next;
            for (int v : g.configs[static_cast<size_t>(u)]) next.push_back(v == d ? star : v);
            std::sort(next.begin(), next.end());
            int v = index_of(next);
            auto key = std::minmax(u, v);
            if (seen.insert({key.first, key.second}).second) {
                g.edges.push_back({key.first, key.second, u < v ? d : star, u < v ? star : d});
                g.adjacency[static_cast<size_t>(u)].push_back(v);
                g.adjacency[static_cast<size_t>(v)].push_back(u);
            }
        }
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

SplitPlacement noncrossing_split(const TranslationQuiver& q, const Config& config) {
    // paired members never cross anything in a configuration, so they sit
    // in both polygons; singles that cross must land in different ones.
    // A placement exists iff the crossing graph on the singles is
    // bipartite. Components are seeded by their least member's own colour,
    // which reproduces the by-colour picture whenever that one works.
    SplitPlacement p;
    const int m = q.spec.m;
    std::vector<int> singles, side(config.size(), -1);
    for (int v : config)
        if (q.verts[v].colour == Colour::paired) {
            p.first.push_back(v);
            p.second.push_back(v);
        } else {
            singles.push_back(v);
        }
    std::vector<int> assign(singles.size(), -1);
    p.noncrossing = true;
    for (size_t seed = 0; seed < singles.size(); ++seed) {
        if (assign[seed] >= 0) continue;
        assign[seed] = q.verts[singles[seed]].colour == Colour::blue ? 1 : 0;
        std::vector<size_t> stack{seed};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < singles.size(); ++j) {
                if (i == j || !crosses(q.verts[singles[i]], q.verts[singles[j]], m)) continue;
                if (assign[j] < 0) {
                    assign[j] = 1 - assign[i];
                    stack.push_back(j);
                } else if (assign[j] == assign[i]) {
                    p.noncrossing = false;
                }
            }
        }
    }
    for (size_t i = 0; i < singles.size(); ++i)
        (assign[i] == 0 ? p.first : p.second).push_back(singles[i]);
    std::sort(p.first.begin(), p.first.end());
    std::sort(p.second.begin(), p.second.end());
    // paired members must not cross anything placed with them
    for (const auto& part : {p.first, p.second})
        for (size_t i = 0; i < part.size() && p.noncrossing; ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (crosses(q.verts[part[i]], q.verts[part[j]], m)) p.noncrossing = false;
    return p;
}

namespace {

Config map_members(const TranslationQuiver& q, const Config& config,
                   const std::function<Diagonal(const Diagonal&)>& f) {
    Config out;
    for (int v : config) {
        int w = q.vertex_id(f(q.verts[v]));
        if (w < 0) throw std::logic_error("symmetry image left the diagonal set");
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Config apply_rho(const TranslationQuiver& q, const Config& config) {
    return map_members(q, config, [](const Diagonal& d) { return rho(d); });
}

Config apply_tau(const TranslationQuiver& q, const Config& config) {
    return map_members(q, config, [&](const Diagonal& d) { return tau(d, q.spec); });
}

Config apply_sigma(const TranslationQuiver& q, int axis_vertex, const Config& config) {
    return map_members(q, config,
                       [&](const Diagonal& d) { return sigma(axis_vertex, d, q.spec.m); });
}

Config sigma_image(const TranslationQuiver& q, const ExtTable& ext, const Config& config) {
    Config img = apply_sigma(q, 6, config);
    if (!is_configuration(ext, img))
        throw std::runtime_error("sigma image is not a cluster configuration");
    return img;
}

// ---------------------------------------------------------------------------
// Exchange quivers

bool ExchangeQuiver::has_loops_or_two_cycles() const {
    const size_t k = b.size();
    for (size_t i = 0; i < k; ++i) {
        if (b[i][i] != 0) return true;
        for (size_t j = 0; j < k; ++j)
            if (b[i][j] > 0 && b[j][i] > 0) return true;
    }
    return false;
}

ExchangeQuiver mutate_quiver(const ExchangeQuiver& bq, int slot, int new_label) {
    const int k = static_cast<int>(bq.labels.size());
    ExchangeQuiver out = bq;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == slot || j == slot)
                out.b[i][j] = -bq.b[i][j];
            else if (bq.b[i][slot] > 0 && bq.b[slot][j] > 0)
                out.b[i][j] = bq.b[i][j] + bq.b[i][slot] * bq.b[slot][j];
            else if (bq.b[i][slot] < 0 && bq.b[slot][j] < 0)
                out.b[i][j] = bq.b[i][j] - bq.b[i][slot] * bq.b[slot][j];
            else
                out.b[i][j] = bq.b[i][j];
        }
    out.labels[static_cast<size_t>(slot)] = new_label;
    // restore canonical label order
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int c) { return out.labels[static_cast<size_t>(a)] < out.labels[static_cast<size_t>(c)]; });
    ExchangeQuiver sorted;
    sorted.labels.resize(static_cast<size_t>(k));
    sorted.b.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
        sorted.labels[static_cast<size_t>(i)] = out.labels[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        for (int j = 0; j < k; ++j)
            sorted.b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                out.b[static_cast<size_t>(perm[static_cast<size_t>(i)])][static_cast<size_t>(perm[static_cast<size_t>(j)])];
    }
    return sorted;
}

namespace {

// faces of a polygon triangulation: vertex triples whose three sides are
// all chords or boundary edges
std::vector<std::array<int, 3>> triangulation_faces(const std::vector<std::pair<int, int>>& chords, int m) {
    auto is_side = [&](int a, int b) {
        int gap = ((b - a) % m + m) % m;
        if (gap == 1 || gap == m - 1) return true;
        for (auto [c, d] : chords)
            if ((c == a && d == b) || (c == b && d == a)) return true;
        return false;
    };
    std::vector<std::array<int, 3>> faces;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                if (is_side(a, b) && is_side(b, c) && is_side(a, c)) faces.push_back({a, b, c});
    return faces;
}

}  // namespace

ExchangeQuiver base_exchange_quiver(const TranslationQuiver& q, const ExtTable& ext) {
    const int m = q.spec.m;
    // long paired diagonal at anchor 2, quadrilateral and both pentagons
    // fanned from vertex 2: chords (2,4), (2,5), (2,6), (2,7)
    std::vector<Diagonal> members{
        Diagonal{2, 5, Colour::paired}, Diagonal{2, 4, Colour::paired},
        Diagonal{2, 6, Colour::red},    Diagonal{2, 7, Colour::red},
        Diagonal{6, 2, Colour::blue},   Diagonal{7, 2, Colour::blue}};
    ExchangeQuiver bq;
    for (const Diagonal& d : members) {
        int v = q.vertex_id(d);
        if (v < 0) throw std::logic_error("base member missing from quiver");
        bq.labels.push_back(v);
    }
    std::sort(bq.labels.begin(), bq.labels.end());
    if (!is_configuration(ext, bq.labels))
        throw std::logic_error("base exchange configuration is not Ext-orthogonal");
    const int k = static_cast<int>(bq.labels.size());
    bq.b.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));

    auto chord_of = [&](int label) {
        const Diagonal& d = q.verts[label];
        return std::pair<int, int>{std::min(d.from, d.to), std::max(d.from, d.to)};
    };
    std::set<std::pair<int, int>> arrow_set;
    for (Colour side : {Colour::red, Colour::blue}) {
        std::vector<int> side_labels;
        std::vector<std::pair<int, int>> side_chords;
        for (int label : bq.labels) {
            Colour c = q.verts[label].colour;
            if (c == Colour::paired || c == side) {
                side_labels.push_back(label);
                side_chords.push_back(chord_of(label));
            }
        }
        for (const auto& face : triangulation_faces(side_chords, m)) {
            for (size_t i = 0; i < side_labels.size(); ++i)
                for (size_t j = 0; j < side_labels.size(); ++j) {
                    if (i == j) continue;
                    auto [a1, b1] = side_chords[i];
                    auto [a2, b2] = side_chords[j];
                    auto in_face = [&](int v) { return v == face[0] || v == face[1] || v == face[2]; };
                    if (!(in_face(a1) && in_face(b1) && in_face(a2) && in_face(b2))) continue;
                    // shared vertex and far endpoints
                    int shared = (a1 == a2 || a1 == b2) ? a1 : b1;
                    int far_i = a1 == shared ? b1 : a1;
                    int far_j = a2 == shared ? b2 : a2;
                    // walking clockwise from the shared vertex, the first far
                    // endpoint met is the anticlockwise-rotation target
                    int steps_i = ((far_i - shared) % m + m) % m;
                    int steps_j = ((far_j - shared) % m + m) % m;
                    if (steps_j < steps_i) arrow_set.insert({side_labels[i], side_labels[j]});
                }
        }
    }
    auto slot_of = [&](int label) {
        return static_cast<int>(std::lower_bound(bq.labels.begin(), bq.labels.end(), label) - bq.labels.begin());
    };
    for (auto [u, v] : arrow_set) {
        bq.b[static_cast<size_t>(slot_of(u))][static_cast<size_t>(slot_of(v))] += 1;
        bq.b[static_cast<size_t>(slot_of(v))][static_cast<size_t>(slot_of(u))] -= 1;
    }
    return bq;
}

std::vector<ExchangeQuiver> transport_quivers(const TranslationQuiver& q, const ExtTable& ext,
                                              const ExchangeGraph& graph, bool check_all_edges) {
    ExchangeQuiver base = base_exchange_quiver(q, ext);
    auto find_index = [&](const Config& c) {
        auto it = std::lower_bound(graph.configs.begin(), graph.configs.end(), c);
        if (it == graph.configs.end() || *it != c)
            throw std::runtime_error("configuration missing from exchange graph");
        return static_cast<int>(it - graph.configs.begin());
    };
    int base_index = find_index(base.labels);

    std::vector<ExchangeQuiver> quivers(graph.configs.size());
    std::vector<char> known(graph.configs.size(), 0);
    quivers[static_cast<size_t>(base_index)] = base;
    known[static_cast<size_t>(base_index)] = 1;

    // edge lookup: (u, v) -> (removed from u, added)
    std::map<std::pair<int, int>, std::pair<int, int>> edge_info;
    for (const auto& e : graph.edges) {
        edge_info[{e.u, e.v}] = {e.removed, e.added};
        edge_info[{e.v, e.u}] = {e.added, e.removed};
    }

    std::vector<int> queue{base_index};
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : graph.adjacency[static_cast<size_t>(u)]) {
            if (known[static_cast<size_t>(v)]) continue;
            auto [removed, added] = edge_info.at({u, v});
            const ExchangeQuiver& qu = quivers[static_cast<size_t>(u)];
            int slot = static_cast<int>(std::lower_bound(qu.labels.begin(), qu.labels.end(), removed) -
                                        qu.labels.begin());
            quivers[static_cast<size_t>(v)] = mutate_quiver(qu, slot, added);
            known[static_cast<size_t>(v)] = 1;
            queue.push_back(v);
        }
    }
    for (char flag : known)
        if (!flag) throw std::runtime_error("exchange graph is not connected");

    for (const auto& eq : quivers)
        if (eq.has_loops_or_two_cycles())
            throw std::runtime_error("transported quiver has a loop or 2-cycle");

    if (check_all_edges) {
        for (const auto& e : graph.edges) {
            const ExchangeQuiver& qu = quivers[static_cast<size_t>(e.u)];
            int slot = static_cast<int>(std::lower_bound(qu.labels.begin(), qu.labels.end(), e.removed) -
                                        qu.labels.begin());
            ExchangeQuiver mutated = mutate_quiver(qu, slot, e.added);
            const ExchangeQuiver& qv = quivers[static_cast<size_t>(e.v)];
            if (mutated.labels != qv.labels || mutated.b != qv.b)
                throw std::runtime_error("quiver transport is path dependent");
        }
    }
    return quivers;
}

}  // namespace polyclus
