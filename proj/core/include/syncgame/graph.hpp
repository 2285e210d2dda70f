#pragma once

#include "syncgame/game.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace syncgame {

// ---------------------------------------------------------------------------
// Vertex labels

enum class BaseVertex { A, B, C };

struct BaseLabel {
    BaseVertex which;
    auto operator<=>(const BaseLabel &) const = default;
};

/// v(i, j, alpha, x): entry (i, j) of the rook copy R_{alpha,x}.
struct RookLabel {
    int i, j, alpha, x;
    auto operator<=>(const RookLabel &) const = default;
};

/// t(t, alpha, x): one of the two extra prism vertices of T_{alpha,x}.
struct PrismLabel {
    int t, alpha, x;
    auto operator<=>(const PrismLabel &) const = default;
};

/// q(i, j, a, b, x, y): entry (i, j) of the orthogonality rook Q_{a,b,x,y}.
struct OrthoRookLabel {
    int i, j, a, b, x, y;
    auto operator<=>(const OrthoRookLabel &) const = default;
};

/// Ordinary graphs: vertex number `index` (1-based).
struct PlainLabel {
    int index;
    auto operator<=>(const PlainLabel &) const = default;
};

using VertexLabel = std::variant<BaseLabel, RookLabel, PrismLabel, OrthoRookLabel, PlainLabel>;

/// `BASE:A`, `R:i=3,j=2,alpha=1,x=4`, `T:t=1,alpha=2,x=3`,
/// `Q:i=1,j=3,a=2,b=2,x=1,y=2`, `P:v=7`.
std::string to_string(const VertexLabel &label);
VertexLabel parse_label(std::string_view text);

// ---------------------------------------------------------------------------
// Graphs

/// Simple undirected graph with one label per vertex. Vertices are indexed
/// 0..order()-1 in construction order; built through GraphBuilder and
/// immutable afterwards.
class LabeledGraph {
public:
    LabeledGraph() = default;

    int order() const noexcept { return static_cast<int>(labels_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    const VertexLabel &label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::span<const VertexLabel> labels() const noexcept { return labels_; }
    std::optional<int> find(const VertexLabel &label) const;

    std::span<const int> neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    const boost::dynamic_bitset<> &row(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const { return rows_.at(static_cast<std::size_t>(u)).test(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Same vertex count, same edge set (labels ignored).
    bool same_edges(const LabeledGraph &other) const;

private:
    friend class GraphBuilder;

    std::vector<VertexLabel> labels_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<boost::dynamic_bitset<>> rows_;
    std::map<VertexLabel, int> index_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    int add_vertex(VertexLabel label);
    /// Adds {u, v}; repeated edges are merged. Throws on loops.
    void add_edge(int u, int v);
    int order() const noexcept { return static_cast<int>(labels_.size()); }

    /// Throws PreconditionError if two vertices share a label.
    LabeledGraph build() &&;

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::pair<int, int>> edges_;
};

/// Graph on vertices 1..n (Plain labels) with the given 0-based edges.
LabeledGraph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);

LabeledGraph complete_graph(int n);
LabeledGraph cycle_graph(int n);
/// K3 x K3: vertex (i, j) is Plain index 3(i-1)+j; (i,j) ~ (k,l) iff exactly
/// one coordinate agrees.
LabeledGraph rook_3x3();
/// Triangles {p,q,r} and {s,t,u} plus the matching p-s, q-t, r-u
/// (Plain indices 1..6 in that order).
LabeledGraph triangular_prism();
LabeledGraph complement(const LabeledGraph &G);

// ---------------------------------------------------------------------------
// Certificates

struct Coloring {
    std::vector<int> colors; // colors[v] in 1..c

    int operator[](int v) const { return colors.at(static_cast<std::size_t>(v)); }
    bool operator==(const Coloring &) const = default;
};

bool is_proper_coloring(const LabeledGraph &G, const Coloring &c, int num_colors);
bool is_independent_set(const LabeledGraph &G, std::span<const int> vertices);
bool is_clique(const LabeledGraph &G, std::span<const int> vertices);
/// phi[v] is the image (0-based vertex of H) of vertex v of G.
bool is_homomorphism(const LabeledGraph &G, const LabeledGraph &H, std::span<const int> phi);

} // namespace syncgame
