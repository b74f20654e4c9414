#include "graceful/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace graceful::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(std::string("invalid ") + what + " JSON");
    return j;
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Tree tree_from_json(const std::string& text) {
    json j = parse_json(text, "tree");
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error("tree JSON needs fields n and edges");
    const int n = as_int(j["n"], "n");
    if (!j["edges"].is_array()) throw Error("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw Error("each edge must be a pair");
        edges.push_back(make_edge(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")));
    }
    return Tree(n, std::move(edges));
}

std::string tree_to_json(const Tree& t) {
    json j;
    j["n"] = t.order();
    j["edges"] = json::array();
    for (auto [u, v] : t.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

ParsedTree read_tree(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            Tree t = tree_from_json(text);
            ParsedTree out{std::move(t), {}, false};
            out.original_ids.resize(static_cast<std::size_t>(out.tree.order()));
            for (int i = 0; i < out.tree.order(); ++i)
                out.original_ids[static_cast<std::size_t>(i)] = i;
            return out;
        }
        break;
    }
    return parse_tree(text);
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Labeling labeling_from_json(const std::string& text) {
    json j = parse_json(text, "labeling");
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("labels")) throw Error("labeling JSON needs a labels field");
        arr = &j["labels"];
    }
    if (!arr->is_array()) throw Error("labels must be an array");
    Labeling f;
    for (const auto& l : *arr) f.values.push_back(as_int(l, "label"));
    return f;
}

std::string labeling_to_json(const Labeling& f) {
    json j;
    j["labels"] = f.values;
    return j.dump();
}

Matching matching_from_json(const std::string& text) {
    json j = parse_json(text, "matching");
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("pairs")) throw Error("matching JSON needs a pairs field");
        arr = &j["pairs"];
    }
    if (!arr->is_array()) throw Error("pairs must be an array");
    Matching m;
    for (const auto& e : *arr) {
        if (!e.is_array() || e.size() != 2) throw Error("each pair must be two vertices");
        m.pairs.push_back(make_edge(as_int(e[0], "pair endpoint"), as_int(e[1], "pair endpoint")));
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

std::string matching_to_json(const Matching& m) {
    json j;
    j["pairs"] = json::array();
    for (auto [a, b] : m.pairs) j["pairs"].push_back({a, b});
    return j.dump();
}

std::string kind_name(TreeKind k) {
    switch (k) {
        case TreeKind::Path: return "Path";
        case TreeKind::Caterpillar: return "Caterpillar";
        case TreeKind::Lobster: return "Lobster";
        case TreeKind::Other: return "Other";
    }
    return "Other";
}

std::string to_dot(const Tree& t, const Labeling* f) {
    if (f && f->order() != t.order()) throw Error("labeling order mismatch");
    std::ostringstream out;
    out << "graph tree {\n  node [shape=circle];\n";
    for (int v = 0; v < t.order(); ++v) {
        out << "  v" << v << " [label=\"" << (f ? (*f)(v) : v) << "\"];\n";
    }
    for (auto [u, v] : t.edges()) {
        out << "  v" << u << " -- v" << v;
        if (f) out << " [label=\"" << std::abs((*f)(u) - (*f)(v)) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace graceful::io
