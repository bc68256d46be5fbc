#pragma once

// Cluster configurations: maximal Ext-orthogonal sets of diagonals.
// Enumeration over the compatibility graph, classification by paired
// diagonal content, the long-paired generating family, complements and
// mutation, the exchange graph, and quiver transport along it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyclus/mesh.hpp"
#include "polyclus/quiver.hpp"

namespace polyclus {

// A cluster configuration as sorted vertex ids of the quiver.
using Config = std::vector<int>;

// All maximal cliques of the zero-Ext compatibility graph, each of size
// exactly k = r+s+t+1 (a clique of any other size is a consistency error).
// Canonically sorted. Deterministic for any thread count.
std::vector<Config> enumerate_configurations(const ExtTable& ext, int k, int threads = 1);

// Independent check: all k-subsets extending pairwise-compatible prefixes
// (plain backtracking, no ordering heuristics).
long long count_configurations_bruteforce(const ExtTable& ext, int k);

struct ConfigClass {
    bool has_long_paired = false;   // contains some [i,i+3]P (heptagon)
    int short_paired_count = 0;     // number of [i,i+2]P members
    std::string family;             // "F1" or "F2"
};

ConfigClass classify(const TranslationQuiver& q, const Config& config);

struct LongDiagonalSplit {
    Diagonal long_diagonal;
    std::vector<int> quadrilateral;  // polygon vertices of Pi_4
    std::vector<int> pentagon;       // polygon vertices of Pi_5
};

LongDiagonalSplit long_diagonal_split(const Diagonal& long_diagonal, int m);

// The 50 configurations with long paired diagonal L = [i,i+3]P: one of
// two short paired diagonals in the quadrilateral, independent red and
// blue triangulations of the pentagon. Built at a seam-free anchor and
// transported by tau.
std::vector<Config> generate_family_f1(const TranslationQuiver& q, const ExtTable& ext,
                                       const Diagonal& long_paired);

// The unique replacement of member d: consistency error unless exactly one
// exists, and dim Ext(d, d*) must be 1.
int complement_of(const ExtTable& ext, const Config& config, int d);

Config mutate(const ExtTable& ext, const Config& config, int d);

struct FlipWitness {
    bool is_flip = false;
    int complement = -1;   // vertex id of d*
};

// Mutation at d is a flip when the underlying chords of d and d* cross.
FlipWitness is_flip_mutation(const TranslationQuiver& q, const ExtTable& ext,
                             const Config& config, int d);

struct ExchangeGraph {
    std::vector<Config> configs;               // canonical order
    // edges (u, v, removed vertex of u, added vertex) with u < v
    struct Edge {
        int u, v, removed, added;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;   // neighbour config indices

    int degree(int v) const { return static_cast<int>(adjacency[static_cast<size_t>(v)].size()); }
    bool connected() const;
};

ExchangeGraph exchange_graph(const ExtTable& ext, const std::vector<Config>& configs);

// Splits members into two polygons (red+paired / blue+paired) and reports
// whether each side is crossing-free.
struct SplitPlacement {
    std::vector<int> first;   // red and paired member ids
    std::vector<int> second;  // blue and paired member ids
    bool noncrossing = false;
};

SplitPlacement noncrossing_split(const TranslationQuiver& q, const Config& config);

// Memberwise heptagon symmetries acting on configurations.
Config apply_rho(const TranslationQuiver& q, const Config& config);
Config apply_tau(const TranslationQuiver& q, const Config& config);
Config apply_sigma(const TranslationQuiver& q, int axis_vertex, const Config& config);
// sigma_6 image, validated as a configuration against the Ext table.
Config sigma_image(const TranslationQuiver& q, const ExtTable& ext, const Config& config);

bool is_configuration(const ExtTable& ext, const Config& config);

// Skew-symmetric exchange matrix with member labels.
struct ExchangeQuiver {
    Config labels;                       // vertex ids of the configuration, sorted
    std::vector<std::vector<int>> b;     // b[i][j] arrows i -> j minus j -> i

    bool has_loops_or_two_cycles() const;
};

// Matrix mutation at slot k (Fomin-Zelevinsky rule).
ExchangeQuiver mutate_quiver(const ExchangeQuiver& bq, int slot, int new_label);

// The quiver of the designated base configuration (a long-paired family
// member whose chords triangulate the polygon), read off the triangles.
ExchangeQuiver base_exchange_quiver(const TranslationQuiver& q, const ExtTable& ext);

// Quivers for every configuration, transported from the base through a
// breadth-first tree of the exchange graph; consistency across every
// non-tree edge is checked (path independence).
std::vector<ExchangeQuiver> transport_quivers(const TranslationQuiver& q, const ExtTable& ext,
                                              const ExchangeGraph& graph, bool check_all_edges = true);

}  // namespace polyclus
