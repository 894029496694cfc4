#include <muig/graph_io.hh>
#include <muig/errors.hh>

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>

using std::string;
using std::string_view;
using std::vector;

namespace muig
{
    namespace
    {
        constexpr string_view graph6_header = ">>graph6<<";

        auto parse_graph6(string_view text) -> Graph
        {
            std::size_t base = 0;
            if (text.substr(0, graph6_header.size()) == graph6_header)
                base = graph6_header.size();

            // strip one trailing newline (and a CR before it)
            std::size_t end = text.size();
            if (end > base && text[end - 1] == '\n')
                --end;
            if (end > base && text[end - 1] == '\r')
                --end;

            std::size_t pos = base;
            auto next = [&] () -> long {
                if (pos >= end)
                    throw ParseError("graph6 code truncated", 1, pos);
                auto c = static_cast<unsigned char>(text[pos]);
                if (c < 63 || c > 126)
                    throw ParseError("byte outside graph6 range", 1, pos);
                ++pos;
                return c - 63;
            };

            long n;
            if (pos < end && text[pos] == '~') {
                ++pos;
                if (pos < end && text[pos] == '~') {
                    ++pos;
                    n = 0;
                    for (int i = 0; i < 6; ++i)
                        n = (n << 6) | next();
                }
                else {
                    n = 0;
                    for (int i = 0; i < 3; ++i)
                        n = (n << 6) | next();
                }
            }
            else
                n = next();

            if (n > 100000)
                throw ParseError("graph6 vertex count " + std::to_string(n) + " too large", 1, base);

            vector<Edge> edges;
            long bits_needed = n * (n - 1) / 2;
            long bytes_needed = (bits_needed + 5) / 6;
            if (static_cast<long>(end - pos) != bytes_needed)
                throw ParseError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " + std::to_string(bytes_needed), 1, pos);

            long bit = 0;
            long current = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    if (bit % 6 == 0)
                        current = next();
                    if (current & (1 << (5 - bit % 6)))
                        edges.emplace_back(i, j);
                    ++bit;
                }

            // padding bits must be zero for a canonical code
            if (bit % 6 != 0 && (current & ((1 << (6 - bit % 6)) - 1)))
                throw ParseError("nonzero graph6 padding bits", 1, pos - 1);

            return Graph(static_cast<int>(n), edges);
        }

        auto emit_graph6(const Graph & g) -> string
        {
            string out;
            long n = g.size();
            if (n <= 62)
                out += static_cast<char>(n + 63);
            else if (n <= 258047) {
                out += '~';
                for (int s = 12; s >= 0; s -= 6)
                    out += static_cast<char>(((n >> s) & 63) + 63);
            }
            else {
                out += "~~";
                for (int s = 30; s >= 0; s -= 6)
                    out += static_cast<char>(((n >> s) & 63) + 63);
            }

            int bit = 0, current = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
                    if (++bit == 6) {
                        out += static_cast<char>(current + 63);
                        bit = current = 0;
                    }
                }
            if (bit != 0)
                out += static_cast<char>((current << (6 - bit)) + 63);
            return out;
        }

        auto is_space(char c) -> bool
        {
            return c == ' ' || c == '\t' || c == '\r';
        }

        auto parse_edge_list(string_view text) -> Graph
        {
            std::optional<int> n;
            vector<Edge> edges;
            std::set<Edge> seen;
            int max_id = -1;

            std::size_t line_start = 0, line_no = 0;
            while (line_start < text.size()) {
                ++line_no;
                auto nl = text.find('\n', line_start);
                auto line_end = nl == string_view::npos ? text.size() : nl;
                string_view line = text.substr(line_start, line_end - line_start);

                vector<std::pair<string_view, std::size_t>> tokens;
                std::size_t i = 0;
                while (i < line.size()) {
                    while (i < line.size() && is_space(line[i]))
                        ++i;
                    if (i < line.size() && line[i] == '#')
                        break;
                    auto start = i;
                    while (i < line.size() && ! is_space(line[i]))
                        ++i;
                    if (i > start)
                        tokens.emplace_back(line.substr(start, i - start), line_start + start);
                }

                auto number = [&] (const std::pair<string_view, std::size_t> & tok) {
                    int value = 0;
                    auto [ptr, ec] = std::from_chars(tok.first.data(), tok.first.data() + tok.first.size(), value);
                    if (ec != std::errc{} || ptr != tok.first.data() + tok.first.size() || value < 0)
                        throw ParseError("expected a nonnegative integer, got '" + string(tok.first) + "'", line_no, tok.second);
                    return value;
                };

                if (! tokens.empty()) {
                    if (tokens[0].first == "n") {
                        if (n || ! edges.empty())
                            throw ParseError("header must be the first line", line_no, tokens[0].second);
                        if (tokens.size() != 2)
                            throw ParseError("malformed header, expected 'n <count>'", line_no, tokens[0].second);
                        n = number(tokens[1]);
                    }
                    else {
                        if (tokens.size() != 2)
                            throw ParseError("expected 'u v'", line_no, tokens[0].second);
                        int u = number(tokens[0]), v = number(tokens[1]);
                        if (u == v)
                            throw ParseError("self-loop at vertex " + std::to_string(u), line_no, tokens[0].second);
                        if (n && (u >= *n || v >= *n))
                            throw ParseError("vertex id out of range for n = " + std::to_string(*n), line_no, tokens[u >= *n ? 0 : 1].second);
                        if (! seen.insert({std::min(u, v), std::max(u, v)}).second)
                            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no, tokens[0].second);
                        edges.emplace_back(u, v);
                        max_id = std::max({max_id, u, v});
                    }
                }

                line_start = line_end + 1;
            }

            return Graph(n ? *n : max_id + 1, edges);
        }

        auto emit_edge_list(const Graph & g) -> string
        {
            string out = "n " + std::to_string(g.size()) + "\n";
            for (auto [u, v] : g.edges())
                out += std::to_string(u) + " " + std::to_string(v) + "\n";
            return out;
        }
    }

    auto parse_graph(string_view text, GraphFormat format) -> Graph
    {
        switch (format) {
            case GraphFormat::graph6: return parse_graph6(text);
            case GraphFormat::edge_list: return parse_edge_list(text);
        }
        throw std::logic_error("unknown graph format");
    }

    auto emit_graph(const Graph & g, GraphFormat format) -> string
    {
        switch (format) {
            case GraphFormat::graph6: return emit_graph6(g);
            case GraphFormat::edge_list: return emit_edge_list(g);
        }
        throw std::logic_error("unknown graph format");
    }

    auto parse_format(string_view name) -> GraphFormat
    {
        if (name == "graph6" || name == "g6")
            return GraphFormat::graph6;
        if (name == "edge-list" || name == "edges")
            return GraphFormat::edge_list;
        throw std::invalid_argument("unknown graph format '" + string(name) + "'");
    }

    auto guess_format(string_view text) -> GraphFormat
    {
        auto body = text;
        if (body.substr(0, graph6_header.size()) == graph6_header)
            return GraphFormat::graph6;
        while (! body.empty() && (body.back() == '\n' || body.back() == '\r'))
            body.remove_suffix(1);
        return body.find_first_of(" \t\n") == string_view::npos ? GraphFormat::graph6 : GraphFormat::edge_list;
    }
}
