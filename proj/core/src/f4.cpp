#include "polyclus/f4.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyclus {

char sym_kind_letter(SymKind k) {
    switch (k) {
        case SymKind::T: return 'T';
        case SymKind::C: return 'C';
        case SymKind::L: return 'L';
    }
    return '?';
}

namespace {

std::pair<int, int> chord_of(const Diagonal& d) {
    return {std::min(d.from, d.to), std::max(d.from, d.to)};
}

SymmetricConfiguration analyse(const TranslationQuiver& q, const Config& config) {
    SymmetricConfiguration sc;
    sc.config = config;
    std::vector<int> paired, singles;
    for (int v : config)
        (q.verts[v].colour == Colour::paired ? paired : singles).push_back(v);
    if (paired.size() != 2 || singles.size() != 4)
        throw std::logic_error("rho-symmetric configuration must have 2 paired members");
    sc.paired = {paired[0], paired[1]};
    std::vector<std::pair<int, int>> orbits;
    std::set<int> used;
    for (int v : singles) {
        if (used.count(v)) continue;
        int w = q.vertex_id(rho(q.verts[v]));
        used.insert(v);
        used.insert(w);
        orbits.push_back({std::min(v, w), std::max(v, w)});
    }
    if (orbits.size() != 2) throw std::logic_error("expected two single-diagonal rho orbits");
    std::sort(orbits.begin(), orbits.end());
    sc.single_orbits = {orbits[0], orbits[1]};

    // kind by chord pattern: both paired chords doubled by a single orbit
    // -> L; one doubled -> C; none, with four distinct pairwise
    // non-crossing chords -> T (the configuration projects onto a
    // triangulation of the polygon)
    const int m = q.spec.m;
    std::vector<std::pair<int, int>> pchords{chord_of(q.verts[paired[0]]), chord_of(q.verts[paired[1]])};
    std::vector<std::pair<int, int>> schords{chord_of(q.verts[orbits[0].first]),
                                             chord_of(q.verts[orbits[1].first])};
    int coincidences = 0;
    for (auto pc : pchords)
        for (auto scd : schords) coincidences += pc == scd;
    if (coincidences == 2) {
        sc.kind = SymKind::L;
        return sc;
    }
    if (coincidences == 1) {
        sc.kind = SymKind::C;
        return sc;
    }
    std::vector<std::pair<int, int>> all = {pchords[0], pchords[1], schords[0], schords[1]};
    std::sort(all.begin(), all.end());
    bool distinct = std::adjacent_find(all.begin(), all.end()) == all.end();
    bool noncross = true;
    for (size_t i = 0; i < all.size() && noncross; ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (crosses(Diagonal{all[i].first, all[i].second, Colour::red},
                        Diagonal{all[j].first, all[j].second, Colour::red}, m)) {
                noncross = false;
                break;
            }
    if (!(distinct && noncross))
        throw std::logic_error("rho-symmetric configuration fits no T/C/L pattern");
    sc.kind = SymKind::T;
    return sc;
}

}  // namespace

std::vector<SymmetricConfiguration> rho_symmetric_configs(const TranslationQuiver& q,
                                                          const std::vector<Config>& configs) {
    std::vector<SymmetricConfiguration> out;
    for (const Config& c : configs)
        if (apply_rho(q, c) == c) out.push_back(analyse(q, c));
    return out;
}

SymmetricConfiguration orbit_mutate(const TranslationQuiver& q, const ExtTable& ext,
                                    const SymmetricConfiguration& sc, int slot) {
    if (slot < 0 || slot > 3) throw std::invalid_argument("mutation slot must be 0..3");
    Config next;
    if (slot < 2) {
        int d = sc.paired[static_cast<size_t>(slot)];
        int star = complement_of(ext, sc.config, d);
        if (q.verts[star].colour != Colour::paired)
            throw std::runtime_error("paired member exchanged with a single diagonal");
        for (int v : sc.config) next.push_back(v == d ? star : v);
    } else {
        auto [s, rs] = sc.single_orbits[static_cast<size_t>(slot - 2)];
        int s_star = complement_of(ext, sc.config, s);
        int rs_star = complement_of(ext, sc.config, rs);
        if (q.vertex_id(rho(q.verts[s_star])) != rs_star)
            throw std::runtime_error("single-orbit complements are not a rho orbit");
        for (int v : sc.config) {
            if (v == s)
                next.push_back(s_star);
            else if (v == rs)
                next.push_back(rs_star);
            else
                next.push_back(v);
        }
    }
    std::sort(next.begin(), next.end());
    if (apply_rho(q, next) != next)
        throw std::runtime_error("orbit mutation broke the rho symmetry");
    if (!is_configuration(ext, next))
        throw std::runtime_error("orbit mutation left the configuration set");
    return analyse(q, next);
}

std::string classify_move(const TranslationQuiver& q, const ExtTable& ext,
                          const SymmetricConfiguration& sc, int slot) {
    SymmetricConfiguration image = orbit_mutate(q, ext, sc, slot);
    char a = sym_kind_letter(sc.kind), b = sym_kind_letter(image.kind);
    // canonical order L < C < T for the label
    auto rank = [](char c) { return c == 'L' ? 0 : c == 'C' ? 1 : 2; };
    if (rank(b) < rank(a)) std::swap(a, b);
    return std::string{a} + "-" + std::string{b};
}

bool F4Graph::connected() const {
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

F4Graph f4_exchange_graph(const TranslationQuiver& q, const ExtTable& ext,
                          const std::vector<SymmetricConfiguration>& symmetric) {
    F4Graph g;
    g.configs = symmetric;
    std::sort(g.configs.begin(), g.configs.end(),
              [](const SymmetricConfiguration& a, const SymmetricConfiguration& b) {
                  return a.config < b.config;
              });
    auto index_of = [&](const Config& c) {
        auto it = std::lower_bound(g.configs.begin(), g.configs.end(), c,
                                   [](const SymmetricConfiguration& a, const Config& b) {
                                       return a.config < b;
                                   });
        if (it == g.configs.end() || it->config != c)
            throw std::runtime_error("orbit mutation left the rho-symmetric set");
        return static_cast<int>(it - g.configs.begin());
    };
    g.adjacency.assign(g.configs.size(), {});
    std::set<std::pair<int, int>> seen;
    for (int u = 0; u < static_cast<int>(g.configs.size()); ++u) {
        const SymmetricConfiguration& sc = g.configs[static_cast<size_t>(u)];
        for (int slot = 0; slot < 4; ++slot) {
            SymmetricConfiguration image = orbit_mutate(q, ext, sc, slot);
            int v = index_of(image.config);
            auto key = std::minmax(u, v);
            if (seen.insert({key.first, key.second}).second) {
                char a = sym_kind_letter(sc.kind), b = sym_kind_letter(image.kind);
                auto rank = [](char c) { return c == 'L' ? 0 : c == 'C' ? 1 : 2; };
                if (rank(b) < rank(a)) std::swap(a, b);
                std::string move = std::string{a} + "-" + std::string{b};
                g.edges.push_back({key.first, key.second, move});
                g.adjacency[static_cast<size_t>(u)].push_back(v);
                g.adjacency[static_cast<size_t>(v)].push_back(u);
                ++g.move_counts[move];
            }
        }
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

F4Census f4_census(const TranslationQuiver& q, const std::vector<SymmetricConfiguration>& symmetric) {
    F4Census c;
    c.total = static_cast<int>(symmetric.size());
    for (const auto& sc : symmetric) {
        switch (sc.kind) {
            case SymKind::T: ++c.type_t; break;
            case SymKind::C: ++c.type_c; break;
            case SymKind::L: ++c.type_l; break;
        }
    }
    for (int v = 0; v < q.size(); ++v) {
        if (q.verts[v].colour == Colour::paired)
            ++c.rho_orbits_paired;
        else if (q.vertex_id(rho(q.verts[v])) > v)
            ++c.rho_orbits_single;
    }
    return c;
}

}  // namespace polyclus
