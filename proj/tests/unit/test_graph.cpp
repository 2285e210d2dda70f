#include "oracles.hpp"

#include "syncgame/errors.hpp"
#include "syncgame/graph.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace syncgame;

TEST(Graph, LabelsRoundTripThroughText)
{
    const std::vector<VertexLabel> labels{
        BaseLabel{BaseVertex::A}, BaseLabel{BaseVertex::C},        RookLabel{3, 2, 1, 4},
        PrismLabel{1, 2, 3},      OrthoRookLabel{1, 3, 2, 2, 1, 2}, PlainLabel{7},
    };
    const std::vector<std::string> text{"BASE:A", "BASE:C", "R:i=3,j=2,alpha=1,x=4", "T:t=1,alpha=2,x=3",
                                        "Q:i=1,j=3,a=2,b=2,x=1,y=2", "P:v=7"};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        EXPECT_EQ(to_string(labels[i]), text[i]);
        EXPECT_EQ(parse_label(text[i]), labels[i]);
    }
}

TEST(Graph, RejectsMalformedLabels)
{
    for (const char *bad : {"", "BASE:D", "R:i=1,j=2,alpha=3", "R:j=1,i=2,alpha=3,x=4", "T:t=1,alpha=2,x=3,",
                            "P:v=", "P:v=1x", "X:v=1", "Q:i=1,j=1,a=1,b=1,x=1"})
        EXPECT_THROW(parse_label(bad), ParseError) << bad;
}

TEST(Graph, BuilderMergesRepeatedEdgesAndRejectsLoops)
{
    GraphBuilder b;
    b.add_vertex(PlainLabel{1});
    b.add_vertex(PlainLabel{2});
    b.add_edge(0, 1);
    b.add_edge(1, 0);
    EXPECT_THROW(b.add_edge(1, 1), PreconditionError);
    EXPECT_THROW(b.add_edge(0, 5), PreconditionError);
    const auto G = std::move(b).build();
    EXPECT_EQ(G.size(), 1U);
    EXPECT_TRUE(G.adjacent(0, 1));
    EXPECT_EQ(G.find(PlainLabel{2}), 1);
    EXPECT_FALSE(G.find(PlainLabel{3}).has_value());
}

TEST(Graph, BuilderRejectsDuplicateLabels)
{
    GraphBuilder b;
    b.add_vertex(PlainLabel{1});
    b.add_vertex(PlainLabel{1});
    EXPECT_THROW(std::move(b).build(), PreconditionError);
}

TEST(Graph, NamedGraphs)
{
    EXPECT_EQ(complete_graph(5).size(), 10U);
    EXPECT_EQ(cycle_graph(5).size(), 5U);
    const auto rook = rook_3x3();
    EXPECT_EQ(rook.order(), 9);
    EXPECT_EQ(rook.size(), 18U);
    for (int v = 0; v < 9; ++v)
        EXPECT_EQ(rook.degree(v), 4);
    const auto prism = triangular_prism();
    EXPECT_EQ(prism.order(), 6);
    EXPECT_EQ(prism.size(), 9U);
    EXPECT_TRUE(prism.adjacent(0, 3) && prism.adjacent(1, 4) && prism.adjacent(2, 5));
    EXPECT_FALSE(prism.adjacent(0, 4));
    EXPECT_EQ(oracle::proper_colorings(rook, 3).size(), 12U);
    EXPECT_EQ(oracle::proper_colorings(prism, 3).size(), 12U);
}

TEST(GraphProperty, ComplementSwapsEdgesAndCliques)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto G = oracle::random_graph(2 + i % 9, 0.4, rng);
        const auto H = complement(G);
        const auto n = static_cast<std::size_t>(G.order());
        EXPECT_EQ(G.size() + H.size(), n * (n - 1) / 2);
        EXPECT_TRUE(complement(H).same_edges(G));
        EXPECT_EQ(oracle::clique_number(G), oracle::independence_number(H));
    }
}

TEST(Graph, CertificateCheckers)
{
    const auto C5 = cycle_graph(5);
    EXPECT_TRUE(is_proper_coloring(C5, Coloring{{1, 2, 1, 2, 3}}, 3));
    EXPECT_FALSE(is_proper_coloring(C5, Coloring{{1, 2, 1, 2, 1}}, 3));
    EXPECT_FALSE(is_proper_coloring(C5, Coloring{{1, 2, 1, 2, 3}}, 2));
    EXPECT_FALSE(is_proper_coloring(C5, Coloring{{1, 2, 1, 2}}, 3));

    const std::vector<int> set{0, 2};
    EXPECT_TRUE(is_independent_set(C5, set));
    const std::vector<int> dup{0, 0};
    EXPECT_FALSE(is_independent_set(C5, dup));
    const std::vector<int> edge{1, 2};
    EXPECT_TRUE(is_clique(C5, edge));
    EXPECT_FALSE(is_independent_set(C5, edge));

    const std::vector<int> phi{0, 1, 0, 1, 2};
    EXPECT_TRUE(is_homomorphism(C5, complete_graph(3), phi));
    const std::vector<int> bad{0, 1, 0, 1, 0};
    EXPECT_FALSE(is_homomorphism(C5, complete_graph(3), bad));
}
