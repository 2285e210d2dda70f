#include "oracles.hpp"

#include "syncgame/errors.hpp"
#include "syncgame/game.hpp"
#include "syncgame/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace syncgame;

namespace {

bool winnable(const SynchronousGame &g) { return !oracle::winning_strategies(g).empty(); }

} // namespace

TEST(Game, FreshGameIsTrivialAndValid)
{
    const SynchronousGame g(3, 2);
    EXPECT_TRUE(validate_game(g).ok());
    EXPECT_TRUE(has_unit_diagonal(g));
    EXPECT_EQ(g.zero_tuples().size(), 3U * 2U);
    EXPECT_TRUE(g.off_diagonal_zero_tuples().empty());
    EXPECT_EQ(g, fixture_trivial(3, 2));
    EXPECT_EQ(oracle::winning_strategies(g).size(), 8U);
}

TEST(Game, RejectsBadShapesAndIndices)
{
    EXPECT_THROW(SynchronousGame(0, 2), PreconditionError);
    EXPECT_THROW(SynchronousGame(2, 0), PreconditionError);
    const SynchronousGame g(2, 2);
    EXPECT_THROW((void)g.allowed(3, 1, 1, 1), PreconditionError);
    EXPECT_FALSE(g.in_range(1, 1, 0, 1));
}

TEST(Game, ValidationFindsSynchronicityBreaks)
{
    SynchronousGame g(2, 3);
    g.allow(1, 2, 2, 2);
    const auto report = validate_game(g);
    ASSERT_EQ(report.violations.size(), 1U);
    EXPECT_EQ(report.violations.front().kind, Violation::Kind::NonSynchronous);
    EXPECT_EQ(report.violations.front().where, (RuleTuple{1, 2, 2, 2}));
}

TEST(Game, ZeroTuplesAreLexicographic)
{
    SynchronousGame g(2, 2);
    g.forbid(2, 1, 1, 2);
    g.forbid(1, 1, 2, 1);
    const auto z = g.off_diagonal_zero_tuples();
    ASSERT_EQ(z.size(), 2U);
    EXPECT_EQ(z[0], (RuleTuple{1, 1, 2, 1}));
    EXPECT_EQ(z[1], (RuleTuple{2, 1, 1, 2}));
    const auto all = g.zero_tuples();
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Game, WinsChecksEveryOrderedPair)
{
    SynchronousGame g(2, 2);
    g.forbid(1, 2, 2, 1);
    EXPECT_TRUE(wins(g, DeterministicStrategy({1, 1})));
    EXPECT_FALSE(wins(g, DeterministicStrategy({2, 1})));
    g.forbid(1, 1, 1, 1);
    EXPECT_FALSE(wins(g, DeterministicStrategy({1, 1})));
    EXPECT_FALSE(wins(g, DeterministicStrategy({1, 3})));
}

TEST(Game, NormalizeDiagonalOnHandExample)
{
    SynchronousGame g(3, 2);
    g.forbid(2, 2, 1, 1);
    const auto h = normalize_diagonal(g);
    EXPECT_TRUE(has_unit_diagonal(h));
    EXPECT_FALSE(h.allowed(2, 1, 1, 2));
    EXPECT_FALSE(h.allowed(2, 2, 1, 2));
    EXPECT_TRUE(h.allowed(1, 1, 1, 2));
    EXPECT_THROW(normalize_diagonal(SynchronousGame(1, 2)), PreconditionError);
}

// Every valid game with two questions and two answers.
TEST(GameProperty, NormalizeDiagonalPreservesWinningStrategiesExhaustively)
{
    const std::uint32_t total = std::uint32_t{1} << oracle::code_bits(2);
    for (std::uint32_t code = 0; code < total; ++code) {
        const auto g = oracle::game_from_code(2, code);
        ASSERT_TRUE(validate_game(g).ok());
        const auto h = normalize_diagonal(g);
        ASSERT_TRUE(validate_game(h).ok());
        ASSERT_TRUE(has_unit_diagonal(h));
        ASSERT_EQ(oracle::winning_strategies(g), oracle::winning_strategies(h)) << "code " << code;
    }
}

TEST(GameProperty, AsymmetrizeKeepsWinningStrategies)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const int n = 2 + i % 3, k = 2 + i % 2;
        const auto g = oracle::random_game(n, k, 0.25, rng, true);
        const auto a = asymmetrize(g);
        ASSERT_TRUE(validate_game(a).ok());
        ASSERT_TRUE(is_asymmetric(a));
        ASSERT_EQ(oracle::winning_strategies(g), oracle::winning_strategies(a));
        ASSERT_EQ(asymmetrize(a), a);
    }
}

TEST(GameProperty, PrepareGameKeepsWinnability)
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + i % 3, k = 1 + i % 3;
        const auto g = oracle::random_game(n, k, 0.3, rng);
        const auto p = prepare_game(g, 2, 3);
        ASSERT_GE(p.prepared.questions(), 2);
        ASSERT_GE(p.prepared.answers(), 3);
        ASSERT_TRUE(is_asymmetric(p.prepared));
        ASSERT_TRUE(has_unit_diagonal(p.prepared));
        const auto ws = oracle::winning_strategies(g);
        ASSERT_EQ(ws.empty(), !winnable(p.prepared));
        for (const auto &f : ws) {
            ASSERT_TRUE(wins(p.prepared, p.lift(f)));
            ASSERT_EQ(p.restrict(p.lift(f)), f);
        }
        for (const auto &f : oracle::winning_strategies(p.prepared))
            ASSERT_TRUE(wins(g, p.restrict(f)));
    }
}

TEST(Game, AsymmetrizeNeedsUnitDiagonal)
{
    SynchronousGame g(2, 2);
    g.forbid(1, 1, 1, 1);
    EXPECT_THROW(asymmetrize(g), PreconditionError);
    EXPECT_FALSE(is_asymmetric(g));
}

TEST(GameProperty, ClassificationPartitionsOffDiagonalZeros)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const int k = 3 + i % 3;
        const auto a = asymmetrize(oracle::random_game(3, k, 0.3, rng, true));
        const auto cls = classify_zero_tuples(a);
        std::vector<RuleTuple> all;
        for (const auto *part : {&cls.e_set, &cls.f_set, &cls.case1_set})
            all.insert(all.end(), part->begin(), part->end());
        std::sort(all.begin(), all.end());
        ASSERT_EQ(all, a.off_diagonal_zero_tuples());
        for (const auto &t : cls.e_set)
            ASSERT_TRUE((t.a == 1 || t.a == k) && (t.b == 1 || t.b == k));
        for (const auto &t : cls.f_set)
            ASSERT_TRUE(t.a > 1 && t.a < k && t.b > 1 && t.b < k);
    }
}

TEST(GameProperty, RelabellingIsAnIsomorphism)
{
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 2, k = 3;
        const auto g = oracle::random_game(n, k, 0.3, rng, true);
        AnswerRelabeling perms;
        for (int x = 0; x < n; ++x) {
            std::vector<int> p{1, 2, 3};
            std::shuffle(p.begin(), p.end(), rng);
            perms.push_back(p);
        }
        const auto h = relabel_answers(g, perms);
        ASSERT_TRUE(validate_game(h).ok());
        ASSERT_EQ(relabel_answers(h, inverse(perms)), g);
        const auto wg = oracle::winning_strategies(g);
        ASSERT_EQ(wg.size(), oracle::winning_strategies(h).size());
        for (const auto &f : wg)
            ASSERT_TRUE(wins(h, relabel_strategy(f, perms)));
    }
}

TEST(Game, RelabellingRejectsNonPermutations)
{
    const SynchronousGame g(2, 3);
    EXPECT_THROW(relabel_answers(g, {{1, 1, 2}, {1, 2, 3}}), PreconditionError);
    EXPECT_THROW(relabel_answers(g, {{1, 2, 3}}), PreconditionError);
}

TEST(Game, HomGameWinnersAreColorings)
{
    const auto C5 = cycle_graph(5);
    for (int k = 2; k <= 3; ++k) {
        const auto g = hom_game(C5, complete_graph(k));
        EXPECT_TRUE(validate_game(g).ok());
        EXPECT_EQ(oracle::winning_strategies(g).size(), oracle::proper_colorings(C5, k).size());
    }
    EXPECT_EQ(oracle::proper_colorings(C5, 3).size(), 30U);
}

TEST(Game, MagicSquareShape)
{
    const auto g = fixture_magic_square();
    EXPECT_EQ(g.questions(), 6);
    EXPECT_EQ(g.answers(), 4);
    EXPECT_TRUE(validate_game(g).ok());
    EXPECT_TRUE(has_unit_diagonal(g));
    EXPECT_TRUE(oracle::winning_strategies(g).empty());
    const auto a = asymmetrize(g);
    EXPECT_EQ(a.off_diagonal_zero_tuples().size(), 72U);
    EXPECT_EQ(classify_zero_tuples(a).gadget_count(), 40U);
}

TEST(Game, MagicSquareLabellingMatchesWorkedExample)
{
    using S = std::vector<std::array<int, 3>>;
    const S even{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const S odd{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int x = 1; x <= 5; ++x)
        EXPECT_EQ(magic_square_solutions(x), even) << "equation " << x;
    EXPECT_EQ(magic_square_solutions(6), odd);
}

TEST(Game, MagicSquareRuleFollowsSharedVariables)
{
    // Independent recomputation: answers clash iff they disagree on a shared
    // grid variable.
    const auto g = fixture_magic_square();
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y)
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b) {
                    bool ok = x != y || a == b;
                    if (x != y) {
                        const auto vx = magic_square_variables(x), vy = magic_square_variables(y);
                        const auto sx = magic_square_solutions(x)[static_cast<std::size_t>(a - 1)];
                        const auto sy = magic_square_solutions(y)[static_cast<std::size_t>(b - 1)];
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                if (vx[static_cast<std::size_t>(i)] == vy[static_cast<std::size_t>(j)] &&
                                    sx[static_cast<std::size_t>(i)] != sy[static_cast<std::size_t>(j)])
                                    ok = false;
                    }
                    ASSERT_EQ(g.allowed(a, b, x, y), ok) << a << b << x << y;
                }
}

TEST(Game, TinyUnsatIsUnwinnable)
{
    const auto g = fixture_tiny_unsat();
    EXPECT_EQ(g.questions(), 2);
    EXPECT_EQ(g.answers(), 3);
    EXPECT_TRUE(oracle::winning_strategies(g).empty());
}

TEST(Game, PadGameAddsInertQuestionsAndAnswers)
{
    SynchronousGame g(1, 2);
    const auto p = pad_game(g, 3, 4);
    EXPECT_EQ(p.questions(), 3);
    EXPECT_EQ(p.answers(), 4);
    EXPECT_TRUE(validate_game(p).ok());
    EXPECT_EQ(oracle::winning_strategies(p).size(), 2U);
}
