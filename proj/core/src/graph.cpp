#include "syncgame/graph.hpp"

#include "syncgame/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace syncgame {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Parses "k1=v1,k2=v2,..." with the keys in exactly the given order.
std::vector<int> parse_fields(std::string_view body, std::initializer_list<std::string_view> keys,
                              std::string_view whole)
{
    std::vector<int> values;
    for (auto key : keys) {
        if (!values.empty()) {
            if (body.empty() || body.front() != ',')
                throw ParseError("bad label: " + std::string(whole));
            body.remove_prefix(1);
        }
        if (body.substr(0, key.size()) != key || body.size() <= key.size() || body[key.size()] != '=')
            throw ParseError("bad label: " + std::string(whole));
        body.remove_prefix(key.size() + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc{} || ptr == body.data())
            throw ParseError("bad label: " + std::string(whole));
        body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
        values.push_back(v);
    }
    if (!body.empty())
        throw ParseError("bad label: " + std::string(whole));
    return values;
}

} // namespace

std::string to_string(const VertexLabel &label)
{
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const BaseLabel &l) { os << "BASE:" << "ABC"[static_cast<int>(l.which)]; },
                   [&](const RookLabel &l) {
                       os << "R:i=" << l.i << ",j=" << l.j << ",alpha=" << l.alpha << ",x=" << l.x;
                   },
                   [&](const PrismLabel &l) { os << "T:t=" << l.t << ",alpha=" << l.alpha << ",x=" << l.x; },
                   [&](const OrthoRookLabel &l) {
                       os << "Q:i=" << l.i << ",j=" << l.j << ",a=" << l.a << ",b=" << l.b << ",x=" << l.x
                          << ",y=" << l.y;
                   },
                   [&](const PlainLabel &l) { os << "P:v=" << l.index; },
               },
               label);
    return os.str();
}

VertexLabel parse_label(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("bad label: " + std::string(text));
    auto tag = text.substr(0, colon);
    auto body = text.substr(colon + 1);
    if (tag == "BASE") {
        if (body == "A")
            return BaseLabel{BaseVertex::A};
        if (body == "B")
            return BaseLabel{BaseVertex::B};
        if (body == "C")
            return BaseLabel{BaseVertex::C};
        throw ParseError("bad label: " + std::string(text));
    }
    if (tag == "R") {
        auto v = parse_fields(body, {"i", "j", "alpha", "x"}, text);
        return RookLabel{v[0], v[1], v[2], v[3]};
    }
    if (tag == "T") {
        auto v = parse_fields(body, {"t", "alpha", "x"}, text);
        return PrismLabel{v[0], v[1], v[2]};
    }
    if (tag == "Q") {
        auto v = parse_fields(body, {"i", "j", "a", "b", "x", "y"}, text);
        return OrthoRookLabel{v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    if (tag == "P") {
        auto v = parse_fields(body, {"v"}, text);
        return PlainLabel{v[0]};
    }
    throw ParseError("bad label: " + std::string(text));
}

std::optional<int> LabeledGraph::find(const VertexLabel &label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool LabeledGraph::same_edges(const LabeledGraph &other) const
{
    return order() == other.order() && rows_ == other.rows_;
}

int GraphBuilder::add_vertex(VertexLabel label)
{
    labels_.push_back(std::move(label));
    return order() - 1;
}

void GraphBuilder::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw PreconditionError("edge endpoint out of range");
    if (u == v)
        throw PreconditionError("loop at vertex " + to_string(labels_[static_cast<std::size_t>(u)]));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

LabeledGraph GraphBuilder::build() &&
{
    LabeledGraph g;
    const auto n = labels_.size();
    g.labels_ = std::move(labels_);
    for (std::size_t v = 0; v < n; ++v)
        if (!g.index_.emplace(g.labels_[v], static_cast<int>(v)).second)
            throw PreconditionError("duplicate vertex label " + to_string(g.labels_[v]));

    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    g.adjacency_.assign(n, {});
    g.rows_.assign(n, boost::dynamic_bitset<>(n));
    for (auto [u, v] : edges_) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
        g.rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        g.rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    for (auto &nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = edges_.size();
    return g;
}

LabeledGraph graph_from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    GraphBuilder b;
    for (int v = 1; v <= n; ++v)
        b.add_vertex(PlainLabel{v});
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

LabeledGraph complete_graph(int n)
{
    if (n < 1)
        throw PreconditionError("complete_graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return graph_from_edges(n, e);
}

LabeledGraph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("cycle_graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        e.emplace_back(u, (u + 1) % n);
    return graph_from_edges(n, e);
}

LabeledGraph rook_3x3()
{
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) {
            const bool same_row = u / 3 == v / 3;
            const bool same_col = u % 3 == v % 3;
            if (same_row != same_col)
                e.emplace_back(u, v);
        }
    return graph_from_edges(9, e);
}

LabeledGraph triangular_prism()
{
    // p q r s t u
    const std::vector<std::pair<int, int>> e{
        {0, 1}, {1, 2}, {0, 2}, // p q r
        {3, 4}, {4, 5}, {3, 5}, // s t u
        {0, 3}, {1, 4}, {2, 5}, // matching
    };
    return graph_from_edges(6, e);
}

LabeledGraph complement(const LabeledGraph &G)
{
    GraphBuilder b;
    for (const auto &l : G.labels())
        b.add_vertex(l);
    for (int u = 0; u < G.order(); ++u)
        for (int v = u + 1; v < G.order(); ++v)
            if (!G.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

bool is_proper_coloring(const LabeledGraph &G, const Coloring &c, int num_colors)
{
    if (static_cast<int>(c.colors.size()) != G.order())
        return false;
    for (int col : c.colors)
        if (col < 1 || col > num_colors)
            return false;
    for (auto [u, v] : G.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

namespace {

bool distinct_in_range(const LabeledGraph &G, std::span<const int> vertices)
{
    std::vector<int> s(vertices.begin(), vertices.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        return false;
    return std::all_of(s.begin(), s.end(), [&](int v) { return v >= 0 && v < G.order(); });
}

} // namespace

bool is_independent_set(const LabeledGraph &G, std::span<const int> vertices)
{
    if (!distinct_in_range(G, vertices))
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (G.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_clique(const LabeledGraph &G, std::span<const int> vertices)
{
    if (!distinct_in_range(G, vertices))
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!G.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_homomorphism(const LabeledGraph &G, const LabeledGraph &H, std::span<const int> phi)
{
    if (static_cast<int>(phi.size()) != G.order())
        return false;
    for (int img : phi)
        if (img < 0 || img >= H.order())
            return false;
    for (auto [u, v] : G.edges())
        if (!H.adjacent(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

} // namespace syncgame
