#pragma once

// Translation quivers of coloured oriented diagonals: arrows are minimal
// clockwise rotations, the translation is the polygon rotation tau. Also
// the fold/forget projections, the centrally-symmetric-triple model, and
// isomorphism search between small translation quivers.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyclus/diagonal.hpp"

namespace polyclus {

// Which orbit category the mesh category of the quiver realizes. Ext
// computation is only meaningful on the 2-Calabi-Yau (cluster) quotients.
enum class CategoryKind { cluster, repetitive, other };

struct TranslationQuiver {
    PolygonSpec spec;                    // polygon context (when applicable)
    std::vector<Diagonal> verts;         // canonical vertex payloads
    std::vector<std::string> labels;     // display names, defaults to diagonal strings
    std::vector<std::pair<int, int>> arrows;  // sorted, no duplicates
    std::vector<int> tau;                // vertex permutation
    std::vector<int> tau_inv;
    std::vector<std::vector<int>> out;   // adjacency
    std::vector<std::vector<int>> in;

    CategoryKind kind = CategoryKind::other;
    // Universal cover data when known: ZT_{r,s,t} modulo tau^{-deck_exponent}
    // (composed with the leg swap when deck_twist is set).
    TreeShape cover_shape;
    int deck_exponent = 0;
    bool deck_twist = false;
    bool has_cover = false;

    int size() const { return static_cast<int>(verts.size()); }
    int vertex_id(const Diagonal& d) const;  // -1 if absent
    int tau_orbit_length(int v) const;

    void finalize();  // sort arrows, build adjacency and tau_inv
};

TranslationQuiver build_gamma(const PolygonSpec& spec);

// Named instances.
TranslationQuiver build_gamma_e6();   // heptagon, shape (1,2,2)
TranslationQuiver build_gamma_e7();   // 10-gon, shape (1,2,3)
TranslationQuiver build_gamma_e8();   // 16-gon, shape (1,2,4)
TranslationQuiver build_gamma_dn(int n);        // relaxed n-gon, shape (n-3,1,1)
TranslationQuiver build_gamma_a_repetitive(int r);  // (r+4)-gon, shape (r,0,0)

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks connectivity, absence of loops and multiple arrows, bijectivity
// of tau, and the mesh axiom (in-arrow sources of x = out-arrow targets of
// tau x) at every vertex. Violations are reported, not thrown.
ValidationReport validate_stable_translation(const TranslationQuiver& q);

// Quotient by the colour/orientation switch: vertices are rho-orbits
// (paired diagonals are fixed points), arrows single, translation induced.
// Requires a symmetric shape. Vertex payload is the orbit representative
// (the paired diagonal, or the red member of a single pair).
TranslationQuiver fold_rho(const TranslationQuiver& q);

// Collapse a folded quiver onto unoriented diagonals: parallel arrow pairs
// become one arrow. Labels are "(i,j)" chords.
TranslationQuiver forget_orientation(const TranslationQuiver& folded);

// The model on unordered triples of centrally symmetric diagonals of a
// 2n-gon plus the central oriented diagonals; induced from
// Gamma^{2n}_{n-3,n-1,n-1}. 2n^2 vertices.
TranslationQuiver build_gamma_dn_triples(int n);

// Vertex map q -> triples quiver (class projection), for tests.
std::vector<int> dn_triples_projection(const TranslationQuiver& big, const TranslationQuiver& triples);

// Finite window quotient ZT_{r,s,t} / tau^{-deck} (twisted by the leg swap
// if requested); the standard model the polygon quivers are compared with.
TranslationQuiver build_deck_quotient(const TreeShape& shape, int deck_exponent, bool twist);

// Vertex bijection preserving arrows and commuting with tau, or nullopt.
// Deterministic: backtracking in canonical vertex order, so the first hit
// is the lexicographically least tau-compatible isomorphism.
std::optional<std::vector<int>> isomorphic_translation_quivers(const TranslationQuiver& a,
                                                               const TranslationQuiver& b);

// All maximal sets of pairwise non-crossing chords among the given ones
// (used as the triangulation oracle for the unoriented heptagon model).
int count_triangulations(const std::vector<std::pair<int, int>>& chords, int m);

}  // namespace polyclus
