#ifndef TRACEGEN_GRAPH_JSON_HPP
#define TRACEGEN_GRAPH_JSON_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "tracegen/dependence_graph.hpp"

namespace tracegen {

/// Loads the graph document
///   {"letters": ["a","b","c","d"], "dependence": [["a","b"],["b","c"]]}
/// Reflexive pairs are implicit; the symmetric closure is applied.
/// Throws input_error on malformed JSON, duplicate letters, unknown
/// letters in a pair, or more than 64 letters.
DependenceGraph load_graph_json(std::istream& in);
DependenceGraph load_graph_json_text(std::string_view text);
DependenceGraph load_graph_file(const std::string& path);

std::string graph_to_json(const DependenceGraph& g);

} // namespace tracegen

#endif
