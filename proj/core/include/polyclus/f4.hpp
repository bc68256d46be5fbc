#pragma once

// rho-symmetric cluster configurations of the heptagon model: the
// configurations fixed by the simultaneous colour/orientation switch.
// They carry two paired members and two single-diagonal rho-orbits,
// mutate orbitwise, and their exchange graph is 4-regular on 105 vertices.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polyclus/tilting.hpp"

namespace polyclus {

enum class SymKind { T, C, L };

char sym_kind_letter(SymKind k);

struct SymmetricConfiguration {
    Config config;
    SymKind kind = SymKind::T;
    std::array<int, 2> paired{-1, -1};                          // paired member ids
    std::array<std::pair<int, int>, 2> single_orbits{{{-1, -1}, {-1, -1}}};  // {v, rho v}
};

// Filter and classify the rho-fixed configurations. Kind detection is
// structural: a paired member sharing its chord with a single orbit means
// L; four distinct pairwise non-crossing chords mean T (the configuration
// projects onto a triangulation); anything else is C.
std::vector<SymmetricConfiguration> rho_symmetric_configs(const TranslationQuiver& q,
                                                          const std::vector<Config>& configs);

// Mutation slots: 0,1 the paired members, 2,3 the single orbits (both
// orbit members replaced together). The image is again rho-symmetric.
SymmetricConfiguration orbit_mutate(const TranslationQuiver& q, const ExtTable& ext,
                                    const SymmetricConfiguration& sc, int slot);

// Move label "L-C", "C-T" or "T-T" (kinds of the two endpoints, sorted).
std::string classify_move(const TranslationQuiver& q, const ExtTable& ext,
                          const SymmetricConfiguration& sc, int slot);

struct F4Graph {
    std::vector<SymmetricConfiguration> configs;  // canonical order
    struct Edge {
        int u, v;
        std::string move;  // kind-pair label
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;
    std::map<std::string, int> move_counts;

    bool connected() const;
};

F4Graph f4_exchange_graph(const TranslationQuiver& q, const ExtTable& ext,
                          const std::vector<SymmetricConfiguration>& symmetric);

struct F4Census {
    int total = 0;
    int type_t = 0, type_c = 0, type_l = 0;
    int rho_orbits_paired = 0;   // paired diagonals (rho fixed points)
    int rho_orbits_single = 0;   // two-element single-diagonal orbits
};

F4Census f4_census(const TranslationQuiver& q, const std::vector<SymmetricConfiguration>& symmetric);

}  // namespace polyclus
