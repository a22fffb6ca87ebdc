#include "tracegen/graph_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tracegen/errors.hpp"

namespace tracegen {

namespace {

DependenceGraph graph_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("letters"))
        throw input_error("graph document must be an object with a 'letters' array");

    std::vector<std::string> letters;
    for (const auto& item : doc.at("letters")) {
        if (!item.is_string())
            throw input_error("letters must be strings");
        letters.push_back(item.get<std::string>());
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    if (doc.contains("dependence")) {
        for (const auto& edge : doc.at("dependence")) {
            if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string())
                throw input_error("dependence entries must be pairs of letter names");
            pairs.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
        }
    }
    return DependenceGraph(std::move(letters), pairs);
}

} // namespace

DependenceGraph load_graph_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

DependenceGraph load_graph_json_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_graph_json(in);
}

DependenceGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open graph file '" + path + "'");
    return load_graph_json(in);
}

std::string graph_to_json(const DependenceGraph& g) {
    nlohmann::json doc;
    doc["letters"] = g.letters();
    nlohmann::json edges = nlohmann::json::array();
    for (int a = 0; a < g.size(); ++a)
        for (int b : g.link(a))
            if (b > a)
                edges.push_back({g.name(a), g.name(b)});
    doc["dependence"] = std::move(edges);
    return doc.dump();
}

} // namespace tracegen
