#pragma once

#include "syncgame/graph.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace syncgame {

/// `p edge <n> <m>` followed by `e <u> <v>` lines (1-based, u < v, sorted).
void write_dimacs(std::ostream &out, const LabeledGraph &G);
/// Accepts `c` comment lines; vertices get Plain labels 1..n.
LabeledGraph read_dimacs(std::istream &in);
LabeledGraph read_dimacs_file(const std::string &path);

/// One `<index>\t<label>` line per vertex, index 1-based.
void write_labels(std::ostream &out, const LabeledGraph &G);
std::vector<VertexLabel> read_labels(std::istream &in);

/// Coloring certificates: `<vertex> <color>` lines, vertex 1-based.
void write_coloring(std::ostream &out, const Coloring &c);
Coloring read_coloring(std::istream &in);

/// Independent-set certificates over the graph of a game: sorted `<a> <x>`
/// lines, one per selected (answer, question) vertex.
void write_answer_question_pairs(std::ostream &out, std::vector<std::pair<int, int>> pairs);
std::vector<std::pair<int, int>> read_answer_question_pairs(std::istream &in);

} // namespace syncgame
