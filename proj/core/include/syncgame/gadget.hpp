#pragma once

#include "syncgame/game.hpp"
#include "syncgame/graph.hpp"
#include "syncgame/operators.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace syncgame {

/// c + Σ coeff · f(a,x), where f(a,x) stands for "answer a to question x"
/// (a scalar indicator or a projector).
struct LinearForm {
    std::int64_t constant = 0;
    std::map<std::pair<int, int>, std::int64_t> terms; // (a, x) -> coeff, never 0

    static LinearForm scalar(std::int64_t c);
    static LinearForm indicator(int a, int x);

    LinearForm &operator+=(const LinearForm &other);
    LinearForm &operator-=(const LinearForm &other);
    friend LinearForm operator+(LinearForm l, const LinearForm &r) { return l += r; }
    friend LinearForm operator-(LinearForm l, const LinearForm &r) { return l -= r; }

    bool operator==(const LinearForm &) const = default;

    /// Rewrites f(k,x) as 1 - Σ_{a<k} f(a,x), so that two forms agree on
    /// every PVM iff their canonical forms are equal.
    LinearForm canonical(int k) const;

    std::int64_t evaluate(const DeterministicStrategy &f) const;
    Matrix evaluate(const PvmFamily &fam) const;
};

std::string to_string(const LinearForm &form);

/// New vertices contributed by each gadget family.
struct GadgetCounts {
    int base = 0;       // A, B, C
    int rook_first = 0; // R_{1,x}: 8 each
    int rook_rest = 0;  // R_{α,x}, α >= 2: 7 each
    int prism = 0;      // 2 per T_{α,x}
    int ortho = 0;      // 6 per Q_{a,b,x,y}

    int total() const noexcept { return base + rook_first + rook_rest + prism + ortho; }
};

struct GadgetGraph {
    SynchronousGame game; // the asymmetric game the graph was built from
    LabeledGraph graph;
    ZeroTupleClassification classification;
    std::vector<int> special; // v̂(a,x) at (x-1)k + (a-1)
    GadgetCounts counts;
    /// Color-indicator forms of each vertex (colors 1..3), in canonical form.
    std::vector<std::array<LinearForm, 3>> tables;
    /// Every provisional label merged into the vertex, sorted.
    std::vector<std::vector<VertexLabel>> aliases;

    static constexpr int vertex_a = 0;
    static constexpr int vertex_b = 1;
    static constexpr int vertex_c = 2;

    int special_vertex(int a, int x) const;
};

/// Needs a valid asymmetric game with all-1 diagonal, n >= 2 and k >= 3.
GadgetGraph build_g_lambda(const SynchronousGame &g_asym);

/// 3 + n + 9n(k-2) + 6(|E| + |F|).
std::size_t vertex_count_formula(const SynchronousGame &g_asym);
/// Same, with every off-diagonal zero tuple counted as a gadget.
std::size_t vertex_count_upper_bound(const SynchronousGame &g_asym);

Coloring strategy_to_coloring(const GadgetGraph &gg, const DeterministicStrategy &f);
DeterministicStrategy coloring_to_strategy(const GadgetGraph &gg, const Coloring &c);

struct OperatorPushforward {
    OperatorColoring coloring;
    OperatorColoringReport report;
};

/// Evaluates the color tables at the projectors of `fam`. Throws if the
/// family is not a valid winning strategy for gg.game or if the resulting
/// coloring misses `tol`.
OperatorPushforward operator_strategy_to_operator_coloring(const GadgetGraph &gg, const PvmFamily &fam,
                                                           double tol = 1e-8);

/// The whole route from an arbitrary valid game to its gadget graph:
/// padding, diagonal normalisation, asymmetrisation, optional relabelling.
struct ColoringReduction {
    PreparedGame prepared;
    AnswerRelabeling relabeling; // applied to prepared.prepared
    GadgetGraph gadget;

    DeterministicStrategy to_gadget_strategy(const DeterministicStrategy &original) const;
    DeterministicStrategy from_gadget_strategy(const DeterministicStrategy &f) const;
};

ColoringReduction reduce_to_coloring(const SynchronousGame &g, bool search_labels = false,
                                     const LabelingBudget &budget = {});

} // namespace syncgame
