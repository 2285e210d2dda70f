#pragma once

#include "syncgame/game.hpp"
#include "syncgame/gadget.hpp"
#include "syncgame/graph.hpp"
#include "syncgame/search.hpp"

#include <utility>
#include <vector>

namespace syncgame {

/// Exact c-coloring search (c <= 32): DSATUR branching, forward checking and
/// singleton propagation. Colors that no vertex uses yet are interchangeable
/// and tried only once. `precolored` lists (vertex, color) pairs fixed up
/// front.
SearchResult<Coloring> find_coloring(const LabeledGraph &G, int colors, const SearchBudget &budget = {},
                                     const std::vector<std::pair<int, int>> &precolored = {});

/// 3-coloring of a gadget graph with A, B, C fixed to colors 1, 2, 3.
SearchResult<Coloring> find_gadget_coloring(const GadgetGraph &gg, const SearchBudget &budget = {});

/// phi[v] = image (0-based vertex of H) of vertex v of G.
SearchResult<std::vector<int>> find_hom(const LabeledGraph &G, const LabeledGraph &H, const SearchBudget &budget = {});

SearchResult<DeterministicStrategy> find_deterministic_strategy(const SynchronousGame &g,
                                                                const SearchBudget &budget = {});

} // namespace syncgame
