#pragma once

#include <ramsey/graph.hpp>

#include <string>
#include <string_view>

namespace ramsey
{
    // Graph text: "p <n> <m>" followed by exactly m lines "e <u> <v>", 1-based ids.
    // Colouring text: "n <N>" followed by zero or more "r <u> <v>"; unlisted pairs are blue.
    // Blank lines are ignored. Serializers emit edges in lexicographic order, one per
    // line, each line terminated by '\n'. Every rejection is a ParseError carrying the
    // 1-based line number.

    auto parse_graph(std::string_view text) -> Graph;
    auto serialize_graph(const Graph & g) -> std::string;

    auto parse_coloring(std::string_view text) -> TwoColoring;
    auto serialize_coloring(const TwoColoring & c) -> std::string;

    auto read_graph_file(const std::string & path) -> Graph;
    auto read_coloring_file(const std::string & path) -> TwoColoring;
    void write_text_file(const std::string & path, const std::string & contents);
}
