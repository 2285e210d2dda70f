#include "oracles.hpp"

#include "syncgame/errors.hpp"
#include "syncgame/game.hpp"
#include "syncgame/game_io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace syncgame;

namespace {

SynchronousGame parse(const std::string &text)
{
    std::istringstream in(text);
    return read_game(in);
}

std::string render(const SynchronousGame &g)
{
    std::ostringstream out;
    write_game(out, g);
    return out.str();
}

} // namespace

TEST(GameIo, ParsesCommentsAndBlankLines)
{
    const auto g = parse("# a comment\n\ngame 2 3   # trailing\nforbid 1 2 1 2\n  forbid 3 3 2 2\n");
    EXPECT_EQ(g.questions(), 2);
    EXPECT_EQ(g.answers(), 3);
    EXPECT_FALSE(g.allowed(1, 2, 1, 2));
    EXPECT_FALSE(g.allowed(3, 3, 2, 2));
    EXPECT_FALSE(g.allowed(1, 2, 1, 1));
    EXPECT_TRUE(g.allowed(1, 1, 1, 1));
}

TEST(GameIo, WritesCanonicalText)
{
    SynchronousGame g(2, 2);
    g.forbid(2, 1, 1, 2);
    g.forbid(1, 1, 2, 2);
    EXPECT_EQ(render(g), "game 2 2\nforbid 1 1 2 2\nforbid 2 1 1 2\n");
}

TEST(GameIoProperty, RoundTripsRandomGames)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto g = oracle::random_game(1 + i % 4, 1 + i % 5, 0.3, rng);
        const auto text = render(g);
        EXPECT_EQ(parse(text), g);
        EXPECT_EQ(render(parse(text)), text);
    }
}

TEST(GameIo, RejectsMalformedInput)
{
    for (const char *bad : {"", "# only a comment\n", "forbid 1 1 1 2\n", "game 2\n", "game 0 3\n",
                            "game 2 3\ngame 2 3\n", "game 2 3\nforbid 1 1 1\n", "game 2 3\nforbid 1 4 1 2\n",
                            "game 2 3\nforbid 1 1 1 2 9\n", "game 2 3\nallow 1 1 1 2\n", "game x y\n"})
        EXPECT_THROW(parse(bad), ParseError) << bad;
    EXPECT_THROW(read_game_file("/nonexistent/game.txt"), ParseError);
}

TEST(GameIo, RefusesToWriteInvalidGames)
{
    SynchronousGame g(2, 2);
    g.allow(1, 2, 1, 1);
    std::ostringstream out;
    EXPECT_THROW(write_game(out, g), PreconditionError);
}

TEST(GameIo, StrategyRoundTrip)
{
    const DeterministicStrategy f({3, 1, 2, 2});
    std::stringstream ss;
    write_strategy(ss, f);
    EXPECT_EQ(ss.str(), "1 3\n2 1\n3 2\n4 2\n");
    EXPECT_EQ(read_strategy(ss), f);

    std::istringstream shuffled("2 1\n1 4\n");
    EXPECT_EQ(read_strategy(shuffled), DeterministicStrategy({4, 1}));
}

TEST(GameIo, StrategyErrors)
{
    for (const char *bad : {"1 1\n1 2\n", "2 1\n", "1 x\n", "0 1\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_strategy(in), ParseError) << bad;
    }
}
