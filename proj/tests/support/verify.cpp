#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mesh_oracle.hpp"
#include "polyclus/curves.hpp"
#include "polyclus/f4.hpp"
#include "polyclus/io.hpp"
#include "polyclus/mesh.hpp"
#include "polyclus/quiver.hpp"
#include "polyclus/tilting.hpp"

namespace polyclus::verify {

namespace {

struct Check {
    int id;
    std::string name;
    long long budget_millis;
    std::function<std::string(int threads)> body;  // returns "" on success
};

std::string fail(const std::string& message) { return message; }

// criterion 1: structure of the whole build matrix
std::string check_structure(int) {
    std::vector<std::pair<std::string, TranslationQuiver>> matrix;
    matrix.emplace_back("e6", build_gamma_e6());
    matrix.emplace_back("e7", build_gamma_e7());
    matrix.emplace_back("e8", build_gamma_e8());
    matrix.emplace_back("hexagon(1,1,1)", build_gamma({6, {1, 1, 1}, false}));
    for (int r = 1; r <= 4; ++r)
        matrix.emplace_back("paired-only r=" + std::to_string(r), build_gamma_a_repetitive(r));
    for (int n = 4; n <= 6; ++n)
        matrix.emplace_back("punctured d" + std::to_string(n), build_gamma_dn(n));
    for (int n = 4; n <= 5; ++n)
        matrix.emplace_back("triples d" + std::to_string(n), build_gamma_dn_triples(n));
    for (auto& [name, q] : matrix) {
        ValidationReport rep = validate_stable_translation(q);
        if (!rep.ok()) return fail(name + ": " + rep.violations.front());
    }
    if (matrix[0].second.size() != 42) return fail("e6 vertex count");
    if (matrix[1].second.size() != 70) return fail("e7 vertex count");
    if (matrix[2].second.size() != 128) return fail("e8 vertex count");
    return {};
}

// criterion 2: isomorphisms with the standard deck quotients
std::string check_isomorphism(int) {
    auto need = [&](const TranslationQuiver& q, const TranslationQuiver& s, const std::string& name) {
        if (!isomorphic_translation_quivers(q, s)) return fail(name + ": no isomorphism");
        return std::string{};
    };
    std::string r;
    r = need(build_gamma_e6(), build_deck_quotient({1, 2, 2}, 7, true), "e6 twisted quotient");
    if (!r.empty()) return r;
    r = need(build_gamma_e7(), build_deck_quotient({1, 2, 3}, 10, false), "e7 quotient");
    if (!r.empty()) return r;
    r = need(build_gamma_e8(), build_deck_quotient({1, 2, 4}, 16, false), "e8 quotient");
    if (!r.empty()) return r;
    // the paired-only strips: deck exponent m = r + 4
    for (int rr = 1; rr <= 4; ++rr) {
        r = need(build_gamma_a_repetitive(rr), build_deck_quotient({rr, 0, 0}, rr + 4, false),
                 "paired-only r=" + std::to_string(rr));
        if (!r.empty()) return r;
    }
    return {};
}

// criterion 3: mesh recursion vs the rational oracle, all quivers <= 50
std::string check_mesh_oracle(int threads) {
    std::vector<std::pair<std::string, TranslationQuiver>> matrix;
    matrix.emplace_back("e6", build_gamma_e6());
    matrix.emplace_back("hexagon(1,1,1)", build_gamma({6, {1, 1, 1}, false}));
    for (int r = 1; r <= 4; ++r)
        matrix.emplace_back("paired-only r=" + std::to_string(r), build_gamma_a_repetitive(r));
    for (int n = 4; n <= 6; ++n)
        matrix.emplace_back("punctured d" + std::to_string(n), build_gamma_dn(n));
    for (int n = 4; n <= 5; ++n)
        matrix.emplace_back("triples d" + std::to_string(n), build_gamma_dn_triples(n));
    for (auto& [name, q] : matrix) {
        if (q.size() > 50) return fail(name + ": quiver exceeds the oracle matrix");
        HomTable hom = hom_table(q, threads);
        auto oracle = testing::mesh_hom_oracle(q, threads);
        for (int x = 0; x < q.size(); ++x)
            for (int y = 0; y < q.size(); ++y)
                if (hom(x, y) != oracle[static_cast<size_t>(x)][static_cast<size_t>(y)])
                    return fail(name + ": mismatch at " + q.labels[static_cast<size_t>(x)] + " -> " +
                                q.labels[static_cast<size_t>(y)]);
    }
    return {};
}

// criterion 4: Ext properties, curves and crossing checks on the heptagon
std::string check_ext_properties(int threads) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q, threads);
    int max_entry = 0;
    for (int x = 0; x < q.size(); ++x) {
        if (ext(x, x) != 0) return fail("nonzero diagonal");
        for (int y = 0; y < q.size(); ++y) {
            if (ext(x, y) != ext(y, x)) return fail("asymmetric table");
            if (ext(q.tau[x], q.tau[y]) != ext(x, y)) return fail("not tau equivariant");
            max_entry = std::max(max_entry, ext(x, y));
        }
    }
    if (max_entry != 3) return fail("maximal entry is " + std::to_string(max_entry));
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (ext_via_curves(q, x, y) != ext(x, y))
                return fail("curve count differs at " + q.labels[static_cast<size_t>(x)] + " -> " +
                            q.labels[static_cast<size_t>(y)]);
    // crossing checks on the first slice; the strict single-diagonal
    // exception set is exactly the reach-4 pair over the long paired chord
    const int m = q.spec.m;
    std::set<std::pair<std::string, std::string>> strict_exceptions;
    for (int x = 0; x < q.size(); ++x) {
        const Diagonal& dx = q.verts[x];
        if (anchor_of(dx) != 1) continue;
        for (int y = 0; y < q.size(); ++y) {
            if (y == x || !crosses(dx, q.verts[y], m)) continue;
            if (dx.colour == Colour::paired) {
                if (ext(x, y) < 1) return fail("paired crossing with zero Ext");
                if (reach_of(dx, m) == 2 && ext(x, y) != 1)
                    return fail("short paired crossing with Ext != 1");
            } else if (enters_smaller_region(q, x, y)) {
                if (ext(x, y) < 1) return fail("entering crossing with zero Ext");
                if (ext(x, y) != 1)
                    strict_exceptions.insert({to_string(dx), to_string(q.verts[y])});
            }
        }
        CrossingLift lift = crossing_lift(q, ext, x);
        for (int v : lift.front)
            for (int w : lift.back)
                if (v == w) return fail("front and back crossings intersect");
    }
    std::set<std::pair<std::string, std::string>> expected{{"[1,5]R", "[4,7]P"}, {"[5,1]B", "[4,7]P"}};
    if (strict_exceptions != expected) return fail("unexpected strict crossing exceptions");
    return {};
}

// criterion 5: enumeration counts
std::string check_enumeration(int threads) {
    TranslationQuiver e6 = build_gamma_e6();
    ExtTable ext6 = ext_table(e6, threads);
    auto configs = enumerate_configurations(ext6, 6, threads);
    if (configs.size() != 833) return fail("e6 count " + std::to_string(configs.size()));
    int longp = 0, s0 = 0, s1 = 0, s2 = 0;
    for (const auto& c : configs) {
        ConfigClass cc = classify(e6, c);
        if (cc.has_long_paired) ++longp;
        else if (cc.short_paired_count == 0) ++s0;
        else if (cc.short_paired_count == 1) ++s1;
        else ++s2;
    }
    if (longp != 350 || s1 != 224 || s2 != 175 || s0 != 84)
        return fail("census " + std::to_string(longp) + "/" + std::to_string(s1) + "/" +
                    std::to_string(s2) + "/" + std::to_string(s0));
    std::set<Config> family;
    for (int i = 1; i <= 7; ++i) {
        auto part = generate_family_f1(e6, ext6, Diagonal{i, normalize_vertex(i + 3, 7), Colour::paired});
        if (part.size() != 50) return fail("family size per long diagonal");
        family.insert(part.begin(), part.end());
    }
    std::set<Config> with_long;
    for (const auto& c : configs)
        if (classify(e6, c).has_long_paired) with_long.insert(c);
    if (family != with_long) return fail("long-paired family mismatch");

    TranslationQuiver d4 = build_gamma_dn(4);
    auto configs_d4 = enumerate_configurations(ext_table(d4, threads), 4, threads);
    if (configs_d4.size() != 50) return fail("d4 count " + std::to_string(configs_d4.size()));
    if (count_configurations_bruteforce(ext_table(d4, threads), 4) != 50)
        return fail("d4 brute-force count");

    TranslationQuiver e7 = build_gamma_e7();
    auto configs_e7 = enumerate_configurations(ext_table(e7, threads), 7, threads);
    if (configs_e7.size() != 4160) return fail("e7 count " + std::to_string(configs_e7.size()));

    TranslationQuiver e8 = build_gamma_e8();
    auto configs_e8 = enumerate_configurations(ext_table(e8, threads), 8, threads);
    if (configs_e8.size() != 25080) return fail("e8 count " + std::to_string(configs_e8.size()));
    return {};
}

// criterion 6: mutation and the exchange graph
std::string check_mutation(int threads) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q, threads);
    auto configs = enumerate_configurations(ext, 6, threads);
    for (const auto& c : configs)
        for (int d : c) {
            int star = complement_of(ext, c, d);  // throws unless unique
            if (ext(d, star) != 1) return fail("complement without Ext 1");
        }
    ExchangeGraph g = exchange_graph(ext, configs);
    if (g.configs.size() != 833) return fail("graph size");
    for (int v = 0; v < 833; ++v)
        if (g.degree(v) != 6) return fail("graph not 6-regular");
    if (!g.connected()) return fail("graph not connected");
    bool nonflip = false;
    for (const auto& c : configs) {
        ConfigClass cc = classify(q, c);
        for (int d : c) {
            FlipWitness w = is_flip_mutation(q, ext, c, d);
            if (!w.is_flip) nonflip = true;
            const Diagonal& dd = q.verts[d];
            if (cc.has_long_paired && dd.colour == Colour::paired && reach_of(dd, q.spec.m) == 2 &&
                !w.is_flip)
                return fail("short paired member of a long-paired family does not flip");
        }
    }
    if (!nonflip) return fail("every mutation was a flip");
    return {};
}

// criterion 7: geometry of configurations
std::string check_geometry(int threads) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q, threads);
    auto configs = enumerate_configurations(ext, 6, threads);
    for (const auto& c : configs)
        if (!noncrossing_split(q, c).noncrossing) return fail("configuration fails the split");
    Config witness;
    for (const char* n : {"[1,4]P", "[1,5]R", "[5,1]B", "[1,6]R", "[6,1]B", "[3,1]R"})
        witness.push_back(q.vertex_id(parse_diagonal(n)));
    std::sort(witness.begin(), witness.end());
    if (!noncrossing_split(q, witness).noncrossing) return fail("witness no longer splits");
    if (is_configuration(ext, witness)) return fail("witness became a configuration");
    return {};
}

// criterion 8: the rho-symmetric quotient
std::string check_f4(int threads) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q, threads);
    auto configs = enumerate_configurations(ext, 6, threads);
    auto sym = rho_symmetric_configs(q, configs);
    F4Census census = f4_census(q, sym);
    if (census.total != 105 || census.type_t != 84 || census.type_c != 14 || census.type_l != 7)
        return fail("census " + std::to_string(census.total) + "=" + std::to_string(census.type_t) +
                    "+" + std::to_string(census.type_c) + "+" + std::to_string(census.type_l));
    F4Graph g = f4_exchange_graph(q, ext, sym);
    if (g.edges.size() != 210) return fail("edge count");
    for (size_t v = 0; v < g.configs.size(); ++v)
        if (g.adjacency[v].size() != 4) return fail("not 4-regular");
    if (!g.connected()) return fail("not connected");
    // T-T moves are ordinary triangulation flips after forgetting colours
    auto chord_set = [&](const Config& c) {
        std::set<std::pair<int, int>> chords;
        for (int v : c)
            chords.insert({std::min(q.verts[v].from, q.verts[v].to),
                           std::max(q.verts[v].from, q.verts[v].to)});
        return chords;
    };
    for (const auto& e : g.edges) {
        if (e.move != "T-T") continue;
        auto c1 = chord_set(g.configs[static_cast<size_t>(e.u)].config);
        auto c2 = chord_set(g.configs[static_cast<size_t>(e.v)].config);
        std::vector<std::pair<int, int>> d1, d2;
        for (auto ch : c1)
            if (!c2.count(ch)) d1.push_back(ch);
        for (auto ch : c2)
            if (!c1.count(ch)) d2.push_back(ch);
        if (d1.size() != 1 || d2.size() != 1) return fail("T-T move is not a single chord exchange");
        if (!crosses(Diagonal{d1[0].first, d1[0].second, Colour::red},
                     Diagonal{d2[0].first, d2[0].second, Colour::red}, q.spec.m))
            return fail("T-T exchanged chords do not cross");
    }
    return {};
}

// criterion 9: quiver transport
std::string check_transport(int threads) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q, threads);
    auto configs = enumerate_configurations(ext, 6, threads);
    ExchangeGraph g = exchange_graph(ext, configs);
    auto quivers = transport_quivers(q, ext, g, true);  // throws on path dependence
    for (const auto& eq : quivers)
        if (eq.has_loops_or_two_cycles()) return fail("loop or 2-cycle in a transported quiver");
    // base quiver shape: degrees 1,1,1,2,2,3 with one leaf on the branch
    ExchangeQuiver base = base_exchange_quiver(q, ext);
    std::vector<int> deg(6, 0);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            if (base.b[i][j] != 0) ++deg[i];
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{1, 1, 1, 2, 2, 3}) return fail("base quiver degrees");
    int branch = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    int leaf_neighbours = 0;
    for (size_t j = 0; j < 6; ++j)
        if (base.b[static_cast<size_t>(branch)][j] != 0 && deg[j] == 1) ++leaf_neighbours;
    if (leaf_neighbours != 1) return fail("base quiver is not the three-legged 1,2,2 tree");
    return {};
}

// criterion 10: determinism across runs and thread counts
std::string check_determinism(int) {
    TranslationQuiver q = build_gamma_e6();
    std::string first;
    for (int threads : {1, 2, 4, 1}) {
        ExtTable ext = ext_table(q, threads);
        auto configs = enumerate_configurations(ext, 6, threads);
        ExchangeGraph g = exchange_graph(ext, configs);
        std::string out = configs_to_json(q, configs) + exchange_graph_to_dot(q, g) +
                          ext_table_to_json(q, ext) + quiver_to_json(q);
        if (first.empty())
            first = out;
        else if (out != first)
            return fail("output differs at " + std::to_string(threads) + " threads");
    }
    return {};
}

const std::vector<Check>& checks() {
    static const std::vector<Check> all{
        {1, "structure", 1000, check_structure},
        {2, "isomorphism", 10000, check_isomorphism},
        {3, "mesh-oracle", 60000, check_mesh_oracle},
        {4, "ext-properties", 10000, check_ext_properties},
        {5, "enumeration", 17 * 60000, check_enumeration},
        {6, "mutation", 60000, check_mutation},
        {7, "geometry", 5000, check_geometry},
        {8, "f4", 5000, check_f4},
        {9, "quiver-transport", 60000, check_transport},
        {10, "determinism", 60000, check_determinism},
    };
    return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Options& options) {
    std::vector<CriterionResult> results;
    for (const Check& check : checks()) {
        if (!options.only.empty() && check.name.find(options.only) == std::string::npos) continue;
        CriterionResult res;
        res.id = check.id;
        res.name = check.name;
        res.budget_millis = check.budget_millis;
        auto start = std::chrono::steady_clock::now();
        try {
            res.details = check.body(options.threads);
            res.passed = res.details.empty();
        } catch (const std::exception& e) {
            res.passed = false;
            res.details = e.what();
        }
        res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        if (res.passed && res.millis > res.budget_millis) {
            res.passed = false;
            res.details = "exceeded time budget of " + std::to_string(res.budget_millis) + " ms";
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string format_report(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.millis
            << " ms)";
        if (!r.details.empty()) out << " - " << r.details;
        out << "\n";
    }
    out << (all_passed(results) ? "all criteria passed\n" : "FAILURES PRESENT\n");
    return out.str();
}

std::string format_report_json(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    out << "{\n  \"schema\": 1,\n  \"criteria\": [\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out << "    {\"id\": " << r.id << ", \"name\": \"" << r.name
            << "\", \"passed\": " << (r.passed ? "true" : "false") << ", \"millis\": " << r.millis;
        if (!r.details.empty()) out << ", \"details\": \"" << r.details << "\"";
        out << "}" << (i + 1 < results.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"passed\": " << (all_passed(results) ? "true" : "false") << "\n}\n";
    return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return !results.empty();
}

}  // namespace polyclus::verify
