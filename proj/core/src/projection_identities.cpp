#include "syncgame/projection_identities.hpp"

#include "syncgame/errors.hpp"

#include <algorithm>

namespace syncgame {

namespace {

int common_dim(const Triple &p)
{
    const auto d = p[0].rows();
    for (const auto &m : p)
        if (m.rows() != d || m.cols() != d)
            throw PreconditionError("projection triple has mismatched shapes");
    return static_cast<int>(d);
}

double projections(const Triple &p)
{
    double r = 0;
    for (const auto &m : p)
        r = std::max(r, projection_residual(m));
    return r;
}

double pvm(const Triple &p)
{
    const int d = common_dim(p);
    return std::max(projections(p), operator_norm(p[0] + p[1] + p[2] - Matrix::Identity(d, d)));
}

} // namespace

PredicateReport check_projections_summing_to_zero(const Triple &p)
{
    common_dim(p);
    PredicateReport r{"three projections summing to zero", 0, 0};
    r.hypothesis_residual = std::max(projections(p), operator_norm(p[0] + p[1] + p[2]));
    for (const auto &m : p)
        r.conclusion_residual = std::max(r.conclusion_residual, operator_norm(m));
    return r;
}

PredicateReport check_projections_summing_to_one(const Triple &p)
{
    PredicateReport r{"three projections summing to one", pvm(p), 0};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j)
                r.conclusion_residual = std::max(r.conclusion_residual, operator_norm(p[i] * p[j]));
    return r;
}

PredicateReport check_key_three_projection(const Triple &e, const Triple &f)
{
    if (common_dim(e) != common_dim(f))
        throw PreconditionError("PVM triples have different dimensions");
    PredicateReport r{"key three projection", std::max(pvm(e), pvm(f)), 0};
    for (std::size_t i = 0; i < 3; ++i)
        r.hypothesis_residual = std::max(r.hypothesis_residual, commutator_norm(e[i], f[i]));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r.conclusion_residual = std::max(r.conclusion_residual, commutator_norm(e[i], f[j]));
    return r;
}

PredicateReport check_key_three_projection_orthogonal(const Triple &p, const Triple &q)
{
    if (common_dim(p) != common_dim(q))
        throw PreconditionError("PVM triples have different dimensions");
    PredicateReport r{"key three projection, orthogonal version", std::max(pvm(p), pvm(q)), 0};
    for (std::size_t i = 0; i < 3; ++i)
        r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(p[i] * q[i]));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r.conclusion_residual = std::max(r.conclusion_residual, commutator_norm(p[i], q[j]));
    return r;
}

PredicateReport check_quantum_permutation_3(const QuantumPermutation3 &q)
{
    PredicateReport r{"3x3 quantum permutation commutes", 0, 0};
    const Matrix id = Matrix::Identity(q.dim, q.dim);
    for (const auto &m : q.entries)
        r.hypothesis_residual = std::max(r.hypothesis_residual, projection_residual(m));
    for (int i = 1; i <= 3; ++i) {
        r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(q(i, 1) + q(i, 2) + q(i, 3) - id));
        r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(q(1, i) + q(2, i) + q(3, i) - id));
    }
    for (const auto &a : q.entries)
        for (const auto &b : q.entries)
            r.conclusion_residual = std::max(r.conclusion_residual, commutator_norm(a, b));
    return r;
}

PredicateReport check_latin_cube(const LatinCube &c)
{
    PredicateReport r{"3x3x3 quantum permutation commutes", 0, 0};
    const Matrix id = Matrix::Identity(c.dim, c.dim);
    for (const auto &m : c.entries)
        r.hypothesis_residual = std::max(r.hypothesis_residual, projection_residual(m));
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t) {
            r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(c(1, s, t) + c(2, s, t) + c(3, s, t) - id));
            r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(c(s, 1, t) + c(s, 2, t) + c(s, 3, t) - id));
            r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(c(s, t, 1) + c(s, t, 2) + c(s, t, 3) - id));
        }
    for (std::size_t i = 0; i < c.entries.size(); ++i)
        for (std::size_t j = i + 1; j < c.entries.size(); ++j)
            r.conclusion_residual = std::max(r.conclusion_residual, commutator_norm(c.entries[i], c.entries[j]));
    return r;
}

PredicateReport check_triangle_coloring(const OperatorColoring &oc)
{
    const auto G = complete_graph(3);
    if (oc.colors != 3 || oc.projectors.size() != 3)
        throw PreconditionError("triangle coloring needs 3 vertices and 3 colors");
    PredicateReport r{"3 coloring of a triangle", check_operator_coloring(G, oc).max_residual(), 0};
    const Matrix id = Matrix::Identity(oc.dim, oc.dim);
    for (int c = 1; c <= 3; ++c)
        r.conclusion_residual = std::max(r.conclusion_residual, operator_norm(oc(0, c) + oc(1, c) + oc(2, c) - id));
    return r;
}

PredicateReport check_coloring_commutation(const LabeledGraph &G, const OperatorColoring &oc, bool only_non_adjacent)
{
    PredicateReport r{"operator coloring commutation", check_operator_coloring(G, oc).max_residual(), 0};
    for (int u = 0; u < G.order(); ++u)
        for (int v = u; v < G.order(); ++v) {
            if (only_non_adjacent && (u == v || G.adjacent(u, v)))
                continue;
            for (int c = 1; c <= oc.colors; ++c)
                for (int d = 1; d <= oc.colors; ++d)
                    r.conclusion_residual = std::max(r.conclusion_residual, commutator_norm(oc(u, c), oc(v, d)));
        }
    return r;
}

PredicateReport check_prism_coloring(const OperatorColoring &oc)
{
    auto r = check_coloring_commutation(triangular_prism(), oc, true);
    r.name = "three coloring of triangular prism";
    return r;
}

PredicateReport check_rook_coloring(const OperatorColoring &oc)
{
    auto r = check_coloring_commutation(rook_3x3(), oc, false);
    r.name = "3 coloring of 3x3 rook is abelian";
    return r;
}

} // namespace syncgame
