#pragma once

#include "syncgame/correlation.hpp"
#include "syncgame/game.hpp"
#include "syncgame/graph.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace syncgame {

using Matrix = Eigen::MatrixXcd;

/// Largest singular value.
double operator_norm(const Matrix &m);
double commutator_norm(const Matrix &a, const Matrix &b);
/// max(‖P² − P‖, ‖P − P*‖).
double projection_residual(const Matrix &p);

/// One projector per (answer a, question x), stored at (x-1)k + (a-1).
struct PvmFamily {
    int dim = 0;
    int n = 0;
    int k = 0;
    double tol = 1e-9;
    std::vector<Matrix> projectors;

    PvmFamily() = default;
    PvmFamily(int dim, int n_questions, int k_answers, double tol = 1e-9);

    const Matrix &operator()(int a, int x) const { return projectors.at(slot(a, x)); }
    Matrix &at(int a, int x) { return projectors.at(slot(a, x)); }

private:
    std::size_t slot(int a, int x) const;
};

struct PvmReport {
    double idempotency = 0;
    double self_adjointness = 0;
    double completeness = 0;
    int worst_question = 0;

    double max_residual() const noexcept { return std::max({idempotency, self_adjointness, completeness}); }
};

/// Throws PreconditionError on a malformed family (wrong counts or shapes).
PvmReport validate_pvm(const PvmFamily &fam);
bool is_valid_pvm(const PvmFamily &fam);

/// p(a,b|x,y) = tr(P(a,x) P(b,y)) / dim.
NumericCorrelation correlation_from_tracial(const PvmFamily &fam);

/// Two-qubit Pauli observables on the 3x3 grid, with joint eigenprojections
/// labelled to match fixture_magic_square().
PvmFamily mermin_peres_fixture();

/// 1x1 projectors [f(x) = a].
PvmFamily embed_deterministic(const DeterministicStrategy &f, int k_answers);

/// Haar-like random unitary from a seeded complex Gaussian matrix.
Matrix random_unitary(int dim, std::uint64_t seed);

/// Block-diagonal family F(a,x) = ⊕_σ E(σ(a),x) over all permutations σ of
/// the answers, blocks in lexicographic order of σ.
PvmFamily zero_knowledge_family(const PvmFamily &fam, int max_dim = 256);
/// Tracial correlation of zero_knowledge_family(fam).
NumericCorrelation symmetrize_zero_knowledge_operator(const PvmFamily &fam, int max_dim = 256);

// ---------------------------------------------------------------------------
// Quantum permutations and Latin cubes

/// A permutation of {1,2,3}: sigma[i-1] is the image of i.
using Perm3 = std::array<int, 3>;

struct PermBlock {
    Perm3 sigma;
    int multiplicity = 1;
};

struct QuantumPermutation3 {
    int dim = 0;
    std::array<Matrix, 9> entries; // (i, j) at 3(i-1) + (j-1)

    const Matrix &operator()(int i, int j) const { return entries.at(static_cast<std::size_t>(3 * (i - 1) + (j - 1))); }
};

/// ⊕ of the 0/1 permutation matrices in `blocks` (each repeated), turned
/// into projector entries and conjugated by random_unitary(dim, seed).
QuantumPermutation3 random_quantum_permutation_3(std::span<const PermBlock> blocks, std::uint64_t seed);

/// p(i,j,k) for i,j,k in 1..3, stored at 9(i-1) + 3(j-1) + (k-1).
struct LatinCube {
    int dim = 0;
    std::array<Matrix, 27> entries;

    const Matrix &operator()(int i, int j, int k) const
    {
        return entries.at(static_cast<std::size_t>(9 * (i - 1) + 3 * (j - 1) + (k - 1)));
    }
};

/// The twelve Latin squares of order 3 as row-major symbol arrays.
std::vector<std::array<int, 9>> latin_squares_3();

/// Direct sum of `blocks` classical Latin cubes (seeded choice among the
/// twelve), conjugated by a random unitary.
LatinCube random_latin_cube(int blocks, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Operator colorings

struct OperatorColoring {
    int dim = 0;
    int colors = 0;
    std::vector<std::vector<Matrix>> projectors; // [vertex][color - 1]

    const Matrix &operator()(int v, int c) const
    {
        return projectors.at(static_cast<std::size_t>(v)).at(static_cast<std::size_t>(c - 1));
    }
};

struct OperatorColoringReport {
    double projection = 0;    // worst ‖P² − P‖ or ‖P − P*‖
    double completeness = 0;  // worst ‖Σ_c P(v,c) − I‖
    int worst_vertex = -1;
    double orthogonality = 0; // worst ‖P(u,c) P(v,c)‖ over edges
    std::pair<int, int> worst_edge{-1, -1};
    int worst_color = 0;

    double max_residual() const noexcept { return std::max({projection, completeness, orthogonality}); }
    bool ok(double tol) const noexcept { return max_residual() <= tol; }
};

OperatorColoringReport check_operator_coloring(const LabeledGraph &G, const OperatorColoring &oc);

/// Direct sum of `blocks` proper colorings of G (chosen by seed among all
/// proper colorings found by enumeration), conjugated by a random unitary.
/// Intended for small graphs (order <= 12).
OperatorColoring random_operator_coloring(const LabeledGraph &G, int colors, int blocks, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Text dump

/// Header `pvm <dim> <n> <k> <tol>`, then every matrix in (x, a) order as
/// row-major `re im` lines.
void write_pvm(std::ostream &out, const PvmFamily &fam);
PvmFamily read_pvm(std::istream &in);

} // namespace syncgame
