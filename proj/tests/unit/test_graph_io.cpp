#include "oracles.hpp"

#include "syncgame/errors.hpp"
#include "syncgame/gadget.hpp"
#include "syncgame/graph.hpp"
#include "syncgame/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace syncgame;

TEST(GraphIo, DimacsFormat)
{
    std::ostringstream out;
    write_dimacs(out, cycle_graph(3));
    EXPECT_EQ(out.str(), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST(GraphIoProperty, DimacsRoundTrip)
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const auto G = oracle::random_graph(1 + i % 20, 0.3, rng);
        std::stringstream ss;
        write_dimacs(ss, G);
        const auto H = read_dimacs(ss);
        EXPECT_TRUE(H.same_edges(G));
    }
}

TEST(GraphIo, DimacsAcceptsCommentsAndColHeader)
{
    std::istringstream in("c five-cycle\np col 5 5\ne 1 2\ne 2 3\nc middle\ne 3 4\ne 4 5\ne 5 1\n");
    EXPECT_TRUE(read_dimacs(in).same_edges(cycle_graph(5)));
}

TEST(GraphIo, DimacsErrors)
{
    for (const char *bad : {"", "e 1 2\n", "p edge 3\n", "p edge 3 1\ne 1 4\n", "p edge 3 1\ne 2 2\n",
                            "p edge 3 1\np edge 3 1\n", "p edge 3 1\nx 1 2\n", "p matrix 3 1\n", "p edge 3 1\ne 1\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_dimacs(in), ParseError) << bad;
    }
    EXPECT_THROW(read_dimacs_file("/nonexistent/graph.dimacs"), ParseError);
}

TEST(GraphIo, LabelsRoundTripOnGadget)
{
    const auto gg = reduce_to_coloring(fixture_tiny_unsat()).gadget;
    std::stringstream ss;
    write_labels(ss, gg.graph);
    const auto labels = read_labels(ss);
    ASSERT_EQ(labels.size(), static_cast<std::size_t>(gg.graph.order()));
    for (int v = 0; v < gg.graph.order(); ++v)
        EXPECT_EQ(labels[static_cast<std::size_t>(v)], gg.graph.label(v));
}

TEST(GraphIo, LabelErrors)
{
    for (const char *bad : {"1 P:v=1\n", "2\tP:v=1\n", "x\tP:v=1\n", "1\tnonsense\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_labels(in), ParseError) << bad;
    }
}

TEST(GraphIo, ColoringRoundTripAndErrors)
{
    const Coloring c{{3, 1, 2, 2}};
    std::stringstream ss;
    write_coloring(ss, c);
    EXPECT_EQ(ss.str(), "1 3\n2 1\n3 2\n4 2\n");
    EXPECT_EQ(read_coloring(ss), c);
    for (const char *bad : {"1 1\n3 1\n", "1 1\n1 2\n", "a b\n", "0 1\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_coloring(in), ParseError) << bad;
    }
}

TEST(GraphIo, AnswerQuestionPairsAreSorted)
{
    std::stringstream ss;
    write_answer_question_pairs(ss, {{3, 2}, {1, 1}});
    EXPECT_EQ(ss.str(), "1 1\n3 2\n");
    EXPECT_EQ(read_answer_question_pairs(ss), (std::vector<std::pair<int, int>>{{1, 1}, {3, 2}}));
    std::istringstream bad("1\n");
    EXPECT_THROW(read_answer_question_pairs(bad), ParseError);
}
