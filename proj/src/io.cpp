#include <ramsey/errors.hpp>
#include <ramsey/io.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace ramsey
{
    namespace
    {
        struct Line
        {
            size_t number;
            vector<string_view> fields;
        };

        auto split_lines(string_view text) -> vector<Line>
        {
            vector<Line> result;
            size_t number = 0;
            while (! text.empty()) {
                ++number;
                auto end = text.find('\n');
                auto line = text.substr(0, end);
                text = end == string_view::npos ? string_view{} : text.substr(end + 1);
                if (! line.empty() && line.back() == '\r')
                    line.remove_suffix(1);

                Line parsed{number, {}};
                size_t pos = 0;
                while (pos < line.size()) {
                    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                        ++pos;
                    auto start = pos;
                    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
                        ++pos;
                    if (pos > start)
                        parsed.fields.push_back(line.substr(start, pos - start));
                }
                if (! parsed.fields.empty())
                    result.push_back(std::move(parsed));
            }
            return result;
        }

        auto parse_count(const Line & line, size_t index, const char * what) -> size_t
        {
            auto field = line.fields[index];
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || ptr != field.data() + field.size())
                throw ParseError(line.number, string("expected a non-negative integer for ") + what + ", got '" + string(field) + "'");
            return value;
        }

        auto parse_pair(const Line & line, char tag, size_t n) -> Edge
        {
            if (line.fields.size() != 3 || line.fields[0] != string_view(&tag, 1))
                throw ParseError(line.number, string("expected '") + tag + " <u> <v>'");
            auto u = parse_count(line, 1, "vertex id");
            auto v = parse_count(line, 2, "vertex id");
            if (u < 1 || u > n)
                throw ParseError(line.number, "vertex id " + std::to_string(u) + " out of range 1.." + std::to_string(n));
            if (v < 1 || v > n)
                throw ParseError(line.number, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
            return make_edge(u - 1, v - 1);
        }

        void add_pair(Graph & g, const Line & line, const Edge & e)
        {
            if (g.has_edge(e.first, e.second))
                throw ParseError(line.number, "duplicate edge " + std::to_string(e.first + 1) + " " + std::to_string(e.second + 1));
            g.set_edge(e.first, e.second, true);
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw Error("cannot open '" + path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }
    }

    auto parse_graph(string_view text) -> Graph
    {
        auto lines = split_lines(text);
        if (lines.empty())
            throw ParseError(1, "missing header 'p <n> <m>'");
        auto & header = lines.front();
        if (header.fields.size() != 3 || header.fields[0] != "p")
            throw ParseError(header.number, "malformed header, expected 'p <n> <m>'");
        auto n = parse_count(header, 1, "vertex count");
        auto m = parse_count(header, 2, "edge count");

        Graph result(n);
        for (size_t i = 1; i < lines.size(); ++i) {
            if (i > m)
                throw ParseError(lines[i].number, "more edge lines than the " + std::to_string(m) + " declared in the header");
            add_pair(result, lines[i], parse_pair(lines[i], 'e', n));
        }
        if (lines.size() - 1 < m)
            throw ParseError(lines.back().number, "header declares " + std::to_string(m) + " edges but only " +
                std::to_string(lines.size() - 1) + " were given");
        return result;
    }

    auto serialize_graph(const Graph & g) -> string
    {
        string result = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
        for (auto & e : g.edges())
            result += "e " + std::to_string(e.first + 1) + " " + std::to_string(e.second + 1) + "\n";
        return result;
    }

    auto parse_coloring(string_view text) -> TwoColoring
    {
        auto lines = split_lines(text);
        if (lines.empty())
            throw ParseError(1, "missing header 'n <N>'");
        auto & header = lines.front();
        if (header.fields.size() != 2 || header.fields[0] != "n")
            throw ParseError(header.number, "malformed header, expected 'n <N>'");
        auto n = parse_count(header, 1, "order");
        if (n < 1)
            throw ParseError(header.number, "colouring order must be at least 1");

        Graph red(n);
        for (size_t i = 1; i < lines.size(); ++i)
            add_pair(red, lines[i], parse_pair(lines[i], 'r', n));
        return TwoColoring(red);
    }

    auto serialize_coloring(const TwoColoring & c) -> string
    {
        string result = "n " + std::to_string(c.order()) + "\n";
        for (auto & e : c.red_graph().edges())
            result += "r " + std::to_string(e.first + 1) + " " + std::to_string(e.second + 1) + "\n";
        return result;
    }

    auto read_graph_file(const string & path) -> Graph
    {
        try {
            return parse_graph(read_file(path));
        }
        catch (const ParseError & e) {
            throw ParseError(e.line(), path + ": " + string(e.what()).substr(string(e.what()).find(": ") + 2));
        }
    }

    auto read_coloring_file(const string & path) -> TwoColoring
    {
        try {
            return parse_coloring(read_file(path));
        }
        catch (const ParseError & e) {
            throw ParseError(e.line(), path + ": " + string(e.what()).substr(string(e.what()).find(": ") + 2));
        }
    }

    void write_text_file(const string & path, const string & contents)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error("cannot write '" + path + "'");
        out << contents;
    }
}
