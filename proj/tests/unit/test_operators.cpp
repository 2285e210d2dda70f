#include "oracles.hpp"

#include "syncgame/correlation.hpp"
#include "syncgame/errors.hpp"
#include "syncgame/game.hpp"
#include "syncgame/graph.hpp"
#include "syncgame/operators.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace syncgame;

TEST(Operators, MerminPeresFixtureIsAWinningPvm)
{
    const auto fam = mermin_peres_fixture();
    EXPECT_EQ(fam.dim, 4);
    EXPECT_EQ(fam.n, 6);
    EXPECT_EQ(fam.k, 4);
    EXPECT_LT(validate_pvm(fam).max_residual(), 1e-12);
    const auto p = correlation_from_tracial(fam);
    EXPECT_LT(correlation_residual(p), 1e-12);
    EXPECT_TRUE(is_winning(p, fixture_magic_square(), 1e-12));
    for (int x = 1; x <= 6; ++x)
        for (int a = 1; a <= 4; ++a)
            EXPECT_NEAR(fam(a, x).trace().real(), 1.0, 1e-12);
}

TEST(Operators, ValidationCatchesBrokenFamilies)
{
    auto fam = embed_deterministic(DeterministicStrategy({1, 2}), 2);
    EXPECT_TRUE(is_valid_pvm(fam));
    fam.at(1, 1)(0, 0) = 0.5;
    EXPECT_FALSE(is_valid_pvm(fam));
    EXPECT_THROW(correlation_from_tracial(fam), PreconditionError);
    fam.projectors.pop_back();
    EXPECT_THROW(validate_pvm(fam), PreconditionError);
}

TEST(Operators, RandomUnitaryIsUnitaryAndSeeded)
{
    for (int dim : {1, 3, 8}) {
        const auto u = random_unitary(dim, 17);
        EXPECT_LT(operator_norm(u * u.adjoint() - Matrix::Identity(dim, dim)), 1e-12);
        EXPECT_TRUE(random_unitary(dim, 17).isApprox(u));
    }
    EXPECT_FALSE(random_unitary(4, 1).isApprox(random_unitary(4, 2)));
}

TEST(Operators, NormsOfKnownMatrices)
{
    Matrix x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    EXPECT_NEAR(operator_norm(x), 1.0, 1e-12);
    EXPECT_NEAR(commutator_norm(x, z), 2.0, 1e-12);
    EXPECT_NEAR(projection_residual((Matrix::Identity(2, 2) + z) / 2.0), 0.0, 1e-12);
}

TEST(Operators, ZeroKnowledgeFamilyIsUniformOnDiagonal)
{
    const auto C5 = cycle_graph(5);
    const auto game = hom_game(C5, complete_graph(3));
    const DeterministicStrategy f({1, 2, 1, 2, 3});
    const auto zk = zero_knowledge_family(embed_deterministic(f, 3));
    EXPECT_EQ(zk.dim, 6);
    EXPECT_TRUE(is_valid_pvm(zk));
    const auto p = symmetrize_zero_knowledge_operator(embed_deterministic(f, 3));
    EXPECT_TRUE(is_winning(p, game, 1e-12));
    const auto exact = symmetrize_zero_knowledge(C5, Coloring{{1, 2, 1, 2, 3}}, 3);
    for (std::size_t i = 0; i < exact.values().size(); ++i)
        EXPECT_NEAR(p.values()[i], boost::rational_cast<double>(exact.values()[i]), 1e-12);
    EXPECT_THROW(zero_knowledge_family(mermin_peres_fixture(), 64), PreconditionError);
}

TEST(Operators, LatinSquaresOfOrderThree)
{
    // Independent count: every 3x3 array over {1,2,3} with distinct rows and
    // columns.
    std::set<std::array<int, 9>> brute;
    std::array<int, 9> s{};
    for (int code = 0; code < 19683; ++code) {
        int c = code;
        for (auto &v : s) {
            v = c % 3 + 1;
            c /= 3;
        }
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j)
                for (int l = j + 1; l < 3 && ok; ++l)
                    ok = s[static_cast<std::size_t>(3 * i + j)] != s[static_cast<std::size_t>(3 * i + l)] &&
                         s[static_cast<std::size_t>(3 * j + i)] != s[static_cast<std::size_t>(3 * l + i)];
        if (ok)
            brute.insert(s);
    }
    const auto mine = latin_squares_3();
    const std::set<std::array<int, 9>> mine_set(mine.begin(), mine.end());
    EXPECT_EQ(mine_set, brute);
    EXPECT_EQ(mine.size(), 12U);
}

TEST(Operators, QuantumPermutationEntriesFormMagicUnitary)
{
    const std::vector<PermBlock> blocks{{{2, 1, 3}, 2}, {{3, 1, 2}, 1}, {{1, 2, 3}, 3}};
    const auto q = random_quantum_permutation_3(blocks, 5);
    EXPECT_EQ(q.dim, 6);
    const Matrix id = Matrix::Identity(6, 6);
    for (int i = 1; i <= 3; ++i) {
        Matrix row = Matrix::Zero(6, 6), col = Matrix::Zero(6, 6);
        for (int j = 1; j <= 3; ++j) {
            EXPECT_LT(projection_residual(q(i, j)), 1e-12);
            row += q(i, j);
            col += q(j, i);
        }
        EXPECT_LT(operator_norm(row - id), 1e-12);
        EXPECT_LT(operator_norm(col - id), 1e-12);
    }
    const std::vector<PermBlock> bad{{{1, 1, 3}, 1}};
    EXPECT_THROW(random_quantum_permutation_3(bad, 1), PreconditionError);
}

TEST(Operators, RandomOperatorColoringIsValid)
{
    for (int blocks = 1; blocks <= 3; ++blocks) {
        const auto oc = random_operator_coloring(rook_3x3(), 3, blocks, 100 + static_cast<std::uint64_t>(blocks));
        EXPECT_EQ(oc.dim, blocks);
        EXPECT_TRUE(check_operator_coloring(rook_3x3(), oc).ok(1e-12));
    }
    EXPECT_THROW(random_operator_coloring(complete_graph(4), 3, 1, 1), PreconditionError);
}

TEST(Operators, PvmTextRoundTrip)
{
    const auto fam = mermin_peres_fixture();
    std::stringstream ss;
    write_pvm(ss, fam);
    const auto back = read_pvm(ss);
    ASSERT_EQ(back.dim, fam.dim);
    ASSERT_EQ(back.projectors.size(), fam.projectors.size());
    for (std::size_t i = 0; i < fam.projectors.size(); ++i)
        EXPECT_LT(operator_norm(back.projectors[i] - fam.projectors[i]), 1e-15);
    for (const char *bad : {"", "pvm 1 1\n", "pvm 1 1 1 1e-9\n", "pvm 1 1 1 1e-9\n1 0\n2 0\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(read_pvm(in), ParseError) << bad;
    }
}
