#ifndef MUIG_GRAPH_IO_HH
#define MUIG_GRAPH_IO_HH

#include <muig/graph.hh>

#include <string>
#include <string_view>

namespace muig
{
    enum class GraphFormat
    {
        graph6,
        edge_list
    };

    /// Throws ParseError naming the line and byte offset of the problem.
    auto parse_graph(std::string_view text, GraphFormat format) -> Graph;

    /// graph6 output has no trailing newline; edge-list output is "n N" then
    /// one sorted "u v" per line, each newline terminated.
    auto emit_graph(const Graph & g, GraphFormat format) -> std::string;

    auto parse_format(std::string_view name) -> GraphFormat;

    /// Picks edge-list if the text contains whitespace between tokens,
    /// graph6 otherwise.
    auto guess_format(std::string_view text) -> GraphFormat;
}

#endif
