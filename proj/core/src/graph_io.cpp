#include "syncgame/graph_io.hpp"

#include "syncgame/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace syncgame {

void write_dimacs(std::ostream &out, const LabeledGraph &G)
{
    out << "p edge " << G.order() << ' ' << G.size() << '\n';
    for (auto [u, v] : G.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

LabeledGraph read_dimacs(std::istream &in)
{
    std::string line;
    int n = -1;
    std::size_t m = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        char tag = 0;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            if (n >= 0 || !(ls >> kind >> n >> m) || n < 0 || (kind != "edge" && kind != "col"))
                throw ParseError("bad DIMACS header: " + line);
        } else if (tag == 'e') {
            int u = 0, v = 0;
            if (n < 0 || !(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
                throw ParseError("bad DIMACS edge: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else if (!std::all_of(line.begin(), line.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
            throw ParseError("unexpected DIMACS line: " + line);
        }
    }
    if (n < 0)
        throw ParseError("missing DIMACS header");
    return graph_from_edges(n, edges);
}

LabeledGraph read_dimacs_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file " + path);
    return read_dimacs(in);
}

void write_labels(std::ostream &out, const LabeledGraph &G)
{
    for (int v = 0; v < G.order(); ++v)
        out << v + 1 << '\t' << to_string(G.label(v)) << '\n';
}

std::vector<VertexLabel> read_labels(std::istream &in)
{
    std::vector<VertexLabel> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("bad label line: " + line);
        int index = 0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, index);
        if (ec != std::errc{} || ptr != line.data() + tab)
            throw ParseError("bad label line: " + line);
        if (index != static_cast<int>(out.size()) + 1)
            throw ParseError("label lines out of order at: " + line);
        out.push_back(parse_label(line.substr(tab + 1)));
    }
    return out;
}

void write_coloring(std::ostream &out, const Coloring &c)
{
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        out << v + 1 << ' ' << c.colors[v] << '\n';
}

Coloring read_coloring(std::istream &in)
{
    std::map<int, int> colors;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        int v = 0, col = 0;
        if (!(ls >> v >> col) || v < 1)
            throw ParseError("bad coloring line: " + line);
        if (!colors.emplace(v, col).second)
            throw ParseError("vertex colored twice: " + line);
    }
    Coloring c;
    for (auto [v, col] : colors) {
        if (v != static_cast<int>(c.colors.size()) + 1)
            throw ParseError("coloring skips vertex " + std::to_string(c.colors.size() + 1));
        c.colors.push_back(col);
    }
    return c;
}

void write_answer_question_pairs(std::ostream &out, std::vector<std::pair<int, int>> pairs)
{
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, x] : pairs)
        out << a << ' ' << x << '\n';
}

std::vector<std::pair<int, int>> read_answer_question_pairs(std::istream &in)
{
    std::vector<std::pair<int, int>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        int a = 0, x = 0;
        if (!(ls >> a >> x))
            throw ParseError("bad (a,x) line: " + line);
        out.emplace_back(a, x);
    }
    return out;
}

} // namespace syncgame
