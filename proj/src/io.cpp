#include "latcut/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "latcut/levels.hpp"

namespace latcut {

ParseResult parse_document(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") ||
        !doc["n"].is_number_integer() || !doc.contains("covers") ||
        !doc["covers"].is_array())
        throw SyntaxError("document must be an object with integer \"n\" "
                          "and array \"covers\"");
    int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& pair : doc["covers"]) {
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw SyntaxError("covers entries must be [lower, upper] "
                              "integer pairs");
        edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    std::vector<std::string> labels;
    if (doc.contains("labels") && !doc["labels"].is_null()) {
        if (!doc["labels"].is_array())
            throw SyntaxError("labels must be an array of strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw SyntaxError("labels must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    if (doc.contains("meta") && !doc["meta"].is_null() &&
        !doc["meta"].is_object())
        throw SyntaxError("meta must be an object");

    FinitePoset p(n, edges, std::move(labels));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    bool normalized = edges != p.covers();
    return {std::move(p), normalized};
}

std::string emit_document(const FinitePoset& p) {
    nlohmann::ordered_json doc;
    doc["n"] = p.size();
    auto covers = nlohmann::ordered_json::array();
    for (auto [a, b] : p.covers())
        covers.push_back(nlohmann::ordered_json::array({a, b}));
    doc["covers"] = std::move(covers);
    if (!p.labels().empty()) doc["labels"] = p.labels();
    return doc.dump() + "\n";
}

std::string emit_dot(const FinitePoset& p,
                     const std::vector<std::vector<int>>& highlight,
                     bool rank_by_level) {
    static const char* kColors[] = {"lightblue",  "lightgoldenrod",
                                    "lightpink",  "palegreen",
                                    "lightsalmon", "plum"};
    std::vector<int> color(p.size(), -1);
    for (std::size_t s = 0; s < highlight.size(); ++s)
        for (int v : highlight[s]) {
            p.check_id(v);
            if (color[v] < 0) color[v] = static_cast<int>(s % 6);
        }
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (int v = 0; v < p.size(); ++v) {
        std::string label =
            p.labels().empty() ? std::to_string(v) : p.labels()[v];
        out += "  v" + std::to_string(v) + " [label=\"" + label + "\"";
        if (color[v] >= 0)
            out += ", style=filled, fillcolor=" +
                   std::string(kColors[color[v]]);
        out += "];\n";
    }
    if (rank_by_level) {
        for (const auto& cls : level_classes(p).classes) {
            out += "  {rank=same;";
            for (int v : cls) out += " v" + std::to_string(v) + ";";
            out += "}\n";
        }
    }
    for (auto [a, b] : p.covers())
        out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace latcut
