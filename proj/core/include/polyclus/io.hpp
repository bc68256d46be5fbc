#pragma once

// Serialization: JSON quiver dumps, CSV/JSON dimension tables, DOT
// exchange graphs, configuration JSON. All outputs are canonically
// ordered and byte-stable across runs and thread counts.

#include <string>
#include <vector>

#include "polyclus/f4.hpp"
#include "polyclus/mesh.hpp"
#include "polyclus/quiver.hpp"
#include "polyclus/tilting.hpp"

namespace polyclus {

std::string quiver_to_json(const TranslationQuiver& q);

std::string table_to_csv(const TranslationQuiver& q, const std::vector<std::vector<int>>& dims);
std::string ext_table_to_json(const TranslationQuiver& q, const ExtTable& ext);
std::string hom_table_to_json(const TranslationQuiver& q, const HomTable& hom);

// One named diagonal's Ext-hammock: the support with dimensions.
std::string hammock_to_json(const TranslationQuiver& q, const ExtTable& ext, int x);

std::string config_to_json(const TranslationQuiver& q, const Config& config);
Config config_from_json(const TranslationQuiver& q, const std::string& text);
std::string configs_to_json(const TranslationQuiver& q, const std::vector<Config>& configs);

// Short stable hash for DOT node names.
std::string config_hash(const TranslationQuiver& q, const Config& config);

std::string exchange_graph_to_dot(const TranslationQuiver& q, const ExchangeGraph& graph);
std::string f4_graph_to_dot(const TranslationQuiver& q, const F4Graph& graph);

}  // namespace polyclus
