#pragma once

#include <string>

#include "graceful/labeling.hpp"
#include "graceful/matching.hpp"
#include "graceful/tree.hpp"

namespace graceful::io {

// {"n": N, "edges": [[u,v], ...]}
Tree tree_from_json(const std::string& text);
std::string tree_to_json(const Tree& t);

// Auto-detects JSON (first non-space byte '{') vs edge-list text.
ParsedTree read_tree(const std::string& text);

// Whole file contents; "-" reads standard input to end.
std::string slurp(const std::string& path);

// {"labels": [l0, ...]}
Labeling labeling_from_json(const std::string& text);
std::string labeling_to_json(const Labeling& f);

// {"pairs": [[a,b], ...]}
Matching matching_from_json(const std::string& text);
std::string matching_to_json(const Matching& m);

// Capitalized kind name used in JSON payloads.
std::string kind_name(TreeKind k);

// Undirected DOT text. Nodes show their label when a labeling is given
// (vertex ids otherwise); edges show their weight.
std::string to_dot(const Tree& t, const Labeling* f = nullptr);

}  // namespace graceful::io
