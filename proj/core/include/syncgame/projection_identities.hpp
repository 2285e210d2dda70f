#pragma once

#include "syncgame/graph.hpp"
#include "syncgame/operators.hpp"

#include <array>
#include <string>

namespace syncgame {

/// Outcome of checking one projection identity on a concrete instance. The
/// hypothesis residual measures how far the input is from satisfying the
/// assumptions; the conclusion residual is the largest violation of the
/// claimed consequence.
struct PredicateReport {
    std::string name;
    double hypothesis_residual = 0;
    double conclusion_residual = 0;

    bool hypothesis_ok(double tol) const noexcept { return hypothesis_residual <= tol; }
    bool conclusion_ok(double tol) const noexcept { return conclusion_residual <= tol; }
};

using Triple = std::array<Matrix, 3>;

/// p1 + p2 + p3 = 0 forces every p_i = 0.
PredicateReport check_projections_summing_to_zero(const Triple &p);
/// p1 + p2 + p3 = 1 forces p_i p_j = 0 for i != j.
PredicateReport check_projections_summing_to_one(const Triple &p);
/// Two PVMs with [e_i, f_i] = 0 commute entirely.
PredicateReport check_key_three_projection(const Triple &e, const Triple &f);
/// Two PVMs with p_i q_i = 0 commute entirely.
PredicateReport check_key_three_projection_orthogonal(const Triple &p, const Triple &q);
/// Row and column sums equal to 1 force all 81 commutators to vanish.
PredicateReport check_quantum_permutation_3(const QuantumPermutation3 &q);
/// All 27 line sums equal to 1 force all 729 commutators to vanish.
PredicateReport check_latin_cube(const LatinCube &cube);

/// Operator 3-coloring of a triangle: each color class sums to 1 over the
/// three vertices.
PredicateReport check_triangle_coloring(const OperatorColoring &oc);
/// Operator 3-coloring of the prism: non-adjacent vertices commute.
PredicateReport check_prism_coloring(const OperatorColoring &oc);
/// Operator 3-coloring of the rook's graph: everything commutes.
PredicateReport check_rook_coloring(const OperatorColoring &oc);

/// Hypothesis: oc is an operator coloring of G. Conclusion: every pair of
/// projectors at the listed vertex pairs commutes (all pairs if
/// `only_non_adjacent` is false).
PredicateReport check_coloring_commutation(const LabeledGraph &G, const OperatorColoring &oc, bool only_non_adjacent);

} // namespace syncgame
