#include "polyclus/io.hpp"

#include <json.hpp>

#include <sstream>

namespace polyclus {

using nlohmann::json;

namespace {

json spec_to_json(const PolygonSpec& spec) {
    json j{{"m", spec.m}, {"r", spec.shape.r}, {"s", spec.shape.s}, {"t", spec.shape.t}};
    if (spec.relaxed) j["relaxed"] = true;
    return j;
}

json labels_json(const TranslationQuiver& q, const Config& config) {
    json arr = json::array();
    for (int v : config) arr.push_back(to_string(q.verts[v]));
    return arr;
}

}  // namespace

std::string quiver_to_json(const TranslationQuiver& q) {
    json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(q.spec);
    json verts = json::array();
    for (const auto& label : q.labels) verts.push_back(label);
    j["vertices"] = verts;
    json arrows = json::array();
    for (auto [u, v] : q.arrows) arrows.push_back(json::array({u, v}));
    j["arrows"] = arrows;
    j["tau"] = q.tau;
    return j.dump(2) + "\n";
}

std::string table_to_csv(const TranslationQuiver& q, const std::vector<std::vector<int>>& dims) {
    std::ostringstream out;
    out << "diagonal";
    for (const auto& label : q.labels) out << "," << label;
    out << "\n";
    for (size_t x = 0; x < dims.size(); ++x) {
        out << q.labels[x];
        for (int d : dims[x]) out << "," << d;
        out << "\n";
    }
    return out.str();
}

namespace {

json table_json(const TranslationQuiver& q, const std::vector<std::vector<int>>& dims,
                const char* kind) {
    json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["spec"] = spec_to_json(q.spec);
    json verts = json::array();
    for (const auto& label : q.labels) verts.push_back(label);
    j["vertices"] = verts;
    j["dims"] = dims;
    return j;
}

}  // namespace

std::string ext_table_to_json(const TranslationQuiver& q, const ExtTable& ext) {
    json j = table_json(q, ext.dims, "ext1");
    j["cy2"] = ext.cy2;
    return j.dump(2) + "\n";
}

std::string hom_table_to_json(const TranslationQuiver& q, const HomTable& hom) {
    return table_json(q, hom.dims, "hom").dump(2) + "\n";
}

std::string hammock_to_json(const TranslationQuiver& q, const ExtTable& ext, int x) {
    json j;
    j["schema"] = 1;
    j["diagonal"] = to_string(q.verts[x]);
    json support = json::array();
    for (int y = 0; y < q.size(); ++y)
        if (ext(x, y) > 0)
            support.push_back(json{{"diagonal", to_string(q.verts[y])}, {"dim", ext(x, y)}});
    j["hammock"] = support;
    return j.dump(2) + "\n";
}

std::string config_to_json(const TranslationQuiver& q, const Config& config) {
    return labels_json(q, config).dump() + "\n";
}

Config config_from_json(const TranslationQuiver& q, const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("configuration JSON must be an array");
    Config c;
    for (const auto& item : j) {
        int v = q.vertex_id(parse_diagonal(item.get<std::string>()));
        if (v < 0)
            throw std::invalid_argument("diagonal " + item.get<std::string>() +
                                        " is not a vertex of this quiver");
        c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    return c;
}

std::string configs_to_json(const TranslationQuiver& q, const std::vector<Config>& configs) {
    json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(q.spec);
    j["count"] = configs.size();
    json arr = json::array();
    for (const Config& c : configs) arr.push_back(labels_json(q, c));
    j["configurations"] = arr;
    return j.dump(2) + "\n";
}

std::string config_hash(const TranslationQuiver& q, const Config& config) {
    // FNV-1a over the canonical member string
    std::string text;
    for (int v : config) {
        text += to_string(q.verts[v]);
        text += ';';
    }
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string exchange_graph_to_dot(const TranslationQuiver& q, const ExchangeGraph& graph) {
    std::ostringstream out;
    out << "graph exchange {\n";
    for (const Config& c : graph.configs) {
        out << "  n" << config_hash(q, c) << " [label=\"";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << " ";
            out << to_string(q.verts[c[i]]);
        }
        out << "\"];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  n" << config_hash(q, graph.configs[static_cast<size_t>(e.u)]) << " -- n"
            << config_hash(q, graph.configs[static_cast<size_t>(e.v)]) << " [label=\""
            << to_string(q.verts[e.removed]) << "/" << to_string(q.verts[e.added]) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string f4_graph_to_dot(const TranslationQuiver& q, const F4Graph& graph) {
    std::ostringstream out;
    out << "graph f4exchange {\n";
    for (const auto& sc : graph.configs) {
        out << "  n" << config_hash(q, sc.config) << " [label=\"" << sym_kind_letter(sc.kind)
            << "\"];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  n" << config_hash(q, graph.configs[static_cast<size_t>(e.u)].config) << " -- n"
            << config_hash(q, graph.configs[static_cast<size_t>(e.v)].config) << " [label=\"" << e.move
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace polyclus
