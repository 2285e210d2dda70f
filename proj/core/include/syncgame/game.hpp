#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace syncgame {

class LabeledGraph;

/// A 4-tuple (a, b, x, y) addressing one entry of a rule table. Answers a, b
/// and questions x, y are 1-indexed throughout the library.
struct RuleTuple {
    int a = 1;
    int b = 1;
    int x = 1;
    int y = 1;

    auto operator<=>(const RuleTuple &) const = default;
};

std::string to_string(const RuleTuple &t);

/// A synchronous non-local game: n questions, k answers and a 0/1 rule table
/// over (a, b, x, y). Stored densely, one bit per entry.
///
/// A freshly constructed game is the trivial game: rule(a,b,x,x) = [a == b]
/// and every off-diagonal entry allowed. Entries can then be switched with
/// `set`/`forbid`; nothing stops a caller from breaking synchronicity, which
/// is what `validate_game` is for.
class SynchronousGame {
public:
    SynchronousGame(int n_questions, int k_answers);

    int questions() const noexcept { return n_; }
    int answers() const noexcept { return k_; }

    bool allowed(int a, int b, int x, int y) const { return rule_[index(a, b, x, y)]; }
    bool allowed(const RuleTuple &t) const { return allowed(t.a, t.b, t.x, t.y); }

    void set(int a, int b, int x, int y, bool value) { rule_[index(a, b, x, y)] = value; }
    void forbid(int a, int b, int x, int y) { set(a, b, x, y, false); }
    void allow(int a, int b, int x, int y) { set(a, b, x, y, true); }

    bool in_range(int a, int b, int x, int y) const noexcept;

    /// Every tuple with rule value 0, in lexicographic (a, b, x, y) order.
    std::vector<RuleTuple> zero_tuples() const;
    /// Zero tuples with x != y, lexicographic.
    std::vector<RuleTuple> off_diagonal_zero_tuples() const;

    bool operator==(const SynchronousGame &) const = default;

private:
    std::size_t index(int a, int b, int x, int y) const;

    int n_;
    int k_;
    std::vector<bool> rule_;
};

/// A classical strategy: one answer per question.
class DeterministicStrategy {
public:
    DeterministicStrategy() = default;
    explicit DeterministicStrategy(std::vector<int> answers);

    int questions() const noexcept { return static_cast<int>(answers_.size()); }
    int operator()(int x) const { return answers_.at(static_cast<std::size_t>(x - 1)); }
    std::span<const int> answers() const noexcept { return answers_; }

    bool operator==(const DeterministicStrategy &) const = default;

private:
    std::vector<int> answers_;
};

std::string to_string(const DeterministicStrategy &f);

/// True iff f answers every question in range and never hits a zero of the
/// rule table for any ordered question pair (including x == y).
bool wins(const SynchronousGame &g, const DeterministicStrategy &f);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    enum class Kind { NonSynchronous, NoQuestions, NoAnswers };
    Kind kind;
    RuleTuple where;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_game(const SynchronousGame &g);

// ---------------------------------------------------------------------------
// Preprocessing

bool has_unit_diagonal(const SynchronousGame &g);

/// Replaces every diagonal zero rule(a,a,x,x) = 0 by rule(a,b,x,y) = 0 for all
/// b, where y = (x mod n) + 1, and sets rule(a,a,x,x) back to 1.
SynchronousGame normalize_diagonal(const SynchronousGame &g);

/// Grows the game to at least `min_questions` questions and `min_answers`
/// answers. New questions accept only answer 1; new answers are forbidden
/// against every off-diagonal question pair.
SynchronousGame pad_game(const SynchronousGame &g, int min_questions, int min_answers);

/// rule'(a,b,x,x) = [a == b]; rule'(a,b,x,y) = rule(a,b,x,y) rule(b,a,y,x) for
/// x < y; rule'(a,b,x,y) = 1 for x > y.
SynchronousGame asymmetrize(const SynchronousGame &g);

/// Checks the first two asymmetric-rule clauses: delta on the diagonal and at
/// most one forbidden order per off-diagonal pair.
bool is_asymmetric(const SynchronousGame &g);

/// A game after the full preprocessing pipeline, together with enough
/// bookkeeping to move classical strategies back and forth.
struct PreparedGame {
    SynchronousGame original;
    SynchronousGame prepared;

    /// Extends a strategy of the original game (new questions answer 1).
    DeterministicStrategy lift(const DeterministicStrategy &f) const;
    /// Restricts a strategy of the prepared game to the original questions.
    DeterministicStrategy restrict(const DeterministicStrategy &f) const;
};

/// pad -> normalize_diagonal -> asymmetrize.
PreparedGame prepare_game(const SynchronousGame &g, int min_questions = 2, int min_answers = 3);

// ---------------------------------------------------------------------------
// Zero tuples

struct ZeroTupleClassification {
    std::vector<RuleTuple> e_set;     // (a,b) in {1,k}^2
    std::vector<RuleTuple> f_set;     // 2 <= a,b <= k-1
    std::vector<RuleTuple> case1_set; // everything else with x != y

    std::size_t gadget_count() const noexcept { return e_set.size() + f_set.size(); }
};

ZeroTupleClassification classify_zero_tuples(const SynchronousGame &g_asym);

// ---------------------------------------------------------------------------
// Relabelling

/// perms[x-1][old-1] = new label of answer `old` at question x.
using AnswerRelabeling = std::vector<std::vector<int>>;

AnswerRelabeling identity_relabeling(int n_questions, int k_answers);
AnswerRelabeling inverse(const AnswerRelabeling &perms);

SynchronousGame relabel_answers(const SynchronousGame &g, const AnswerRelabeling &perms);
DeterministicStrategy relabel_strategy(const DeterministicStrategy &f, const AnswerRelabeling &perms);

struct LabelingBudget {
    std::uint64_t max_evaluations = 50'000'000;
    std::uint64_t seed = 0;
    int restarts = 16;
};

struct LabelingResult {
    AnswerRelabeling perms;
    std::size_t score = 0; // |E| + |F| of the relabelled asymmetric game
    bool exhaustive = false;
    std::uint64_t evaluations = 0;
};

/// Size of E ∪ F for an asymmetric game after applying `perms`.
std::size_t labeling_score(const SynchronousGame &g_asym, const AnswerRelabeling &perms);

/// Looks for per-question answer permutations minimising |E| + |F|.
LabelingResult search_labeling(const SynchronousGame &g_asym, const LabelingBudget &budget = {});

// ---------------------------------------------------------------------------
// Constructions and fixtures

/// Hom(G, H): questions are V(G), answers V(H); (x,y) an edge of G with (a,b)
/// a non-edge of H is forbidden.
SynchronousGame hom_game(const LabeledGraph &G, const LabeledGraph &H);

/// The Mermin-Peres magic square as a synchronous BCS game (6 equations,
/// 4 solutions each). Labels are chosen so that E ∪ F has 40 tuples.
SynchronousGame fixture_magic_square();

/// The satisfying assignments of equation x of the magic square, in label
/// order, as 3-bit tuples (variable values in equation order).
std::vector<std::array<int, 3>> magic_square_solutions(int x);
/// The three grid variables (1..9) of equation x.
std::array<int, 3> magic_square_variables(int x);

/// n = 2, k = 3 with every (a, b, 1, 2) forbidden.
SynchronousGame fixture_tiny_unsat();

/// Only the synchronicity zeros.
SynchronousGame fixture_trivial(int n_questions, int k_answers);

} // namespace syncgame
