#pragma once

#include "syncgame/game.hpp"

#include <iosfwd>
#include <string>

namespace syncgame {

/// Line-oriented game format:
///
///     # comment
///     game <n_questions> <k_answers>
///     forbid <a> <b> <x> <y>
///
/// Indices are 1-based. Unlisted off-diagonal tuples are allowed and the
/// synchronicity zeros (a != b, x == y) are implicit. A `forbid a a x x` line
/// records a diagonal zero.
SynchronousGame read_game(std::istream &in);
SynchronousGame read_game_file(const std::string &path);

/// Emits the header and every non-implicit zero tuple in lexicographic order.
void write_game(std::ostream &out, const SynchronousGame &g);

/// Strategy certificates: one `<question> <answer>` line per question.
void write_strategy(std::ostream &out, const DeterministicStrategy &f);
DeterministicStrategy read_strategy(std::istream &in);

} // namespace syncgame
