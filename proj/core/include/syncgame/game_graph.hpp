#pragma once

#include "syncgame/game.hpp"
#include "syncgame/graph.hpp"
#include "syncgame/operators.hpp"
#include "syncgame/search.hpp"

#include <utility>
#include <vector>

namespace syncgame {

/// X(G): one vertex per (answer, question), joined when the pair is
/// forbidden in either order.
struct GameGraph {
    int n = 0;
    int k = 0;
    LabeledGraph graph;

    int vertex(int a, int x) const { return (x - 1) * k + (a - 1); }
    /// (a, x) of a vertex.
    std::pair<int, int> pair(int v) const { return {v % k + 1, v / k + 1}; }
};

/// Needs a valid game with all-1 diagonal and n >= 2.
GameGraph build_x_graph(const SynchronousGame &g);

std::vector<int> strategy_to_independent_set(const GameGraph &X, const SynchronousGame &g, const DeterministicStrategy &f);
DeterministicStrategy independent_set_to_strategy(const GameGraph &X, const SynchronousGame &g, std::vector<int> set);

/// Vertices as (a, x) pairs, sorted.
std::vector<std::pair<int, int>> to_answer_question_pairs(const GameGraph &X, std::vector<int> set);
std::vector<int> from_answer_question_pairs(const GameGraph &X, const std::vector<std::pair<int, int>> &pairs);

struct CliqueResult {
    int value = 0;             // size of the best clique found
    std::vector<int> clique;   // sorted certificate
    bool exact = false;        // search closed within budget
    std::uint64_t nodes = 0;
};

CliqueResult max_clique(const LabeledGraph &G, const SearchBudget &budget = {});
/// Branch and bound on the complement.
CliqueResult max_independent_set(const LabeledGraph &G, const SearchBudget &budget = {});

CliqueResult clique_number(const LabeledGraph &G, const SearchBudget &budget = {});
CliqueResult independence_number(const LabeledGraph &G, const SearchBudget &budget = {});

struct PackingReport {
    bool hypotheses_ok = false;
    double hypothesis_residual = 0; // worst projection / orthogonality defect
    double bound_value = 0;         // max eigenvalue (or count) of Σ p(a,x)
    bool bound_ok = false;          // bound_value <= n (+ tol)
};

/// Projections p(a,x) with p(a,x) p(b,y) = 0 on every zero of the rule
/// table; checks λ_max(Σ p(a,x)) <= n. Throws PreconditionError when the
/// family breaks the hypotheses.
PackingReport packing_bound_check(const SynchronousGame &g, const PvmFamily &family);
/// 0/1 version: indicator[(x-1)k + (a-1)].
PackingReport packing_bound_check(const SynchronousGame &g, const std::vector<int> &indicator);

} // namespace syncgame
