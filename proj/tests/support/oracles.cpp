#include "oracles.hpp"

#include <algorithm>

namespace syncgame::oracle {

namespace {

// Odometer over {1..k}^n; returns false after the last tuple.
bool advance(std::vector<int> &v, int k)
{
    for (auto &d : v) {
        if (d < k) {
            ++d;
            return true;
        }
        d = 1;
    }
    return false;
}

} // namespace

std::vector<DeterministicStrategy> winning_strategies(const SynchronousGame &g)
{
    std::vector<DeterministicStrategy> out;
    std::vector<int> f(static_cast<std::size_t>(g.questions()), 1);
    do {
        bool ok = true;
        for (int x = 1; x <= g.questions() && ok; ++x)
            for (int y = 1; y <= g.questions() && ok; ++y)
                ok = g.allowed(f[static_cast<std::size_t>(x - 1)], f[static_cast<std::size_t>(y - 1)], x, y);
        if (ok)
            out.emplace_back(f);
    } while (advance(f, g.answers()));
    return out;
}

std::vector<Coloring> proper_colorings(const LabeledGraph &G, int c)
{
    std::vector<Coloring> out;
    std::vector<int> col(static_cast<std::size_t>(G.order()), 1);
    if (G.order() == 0)
        return {Coloring{}};
    do {
        bool ok = true;
        for (int u = 0; u < G.order() && ok; ++u)
            for (int v = u + 1; v < G.order() && ok; ++v)
                ok = !(G.adjacent(u, v) && col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]);
        if (ok)
            out.push_back(Coloring{col});
    } while (advance(col, c));
    return out;
}

bool colorable(const LabeledGraph &G, int c) { return !proper_colorings(G, c).empty(); }

int independence_number(const LabeledGraph &G)
{
    const int n = G.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best)
            continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = !((mask >> u & 1U) && (mask >> v & 1U) && G.adjacent(u, v));
        if (ok)
            best = size;
    }
    return best;
}

int clique_number(const LabeledGraph &G) { return independence_number(complement(G)); }

std::size_t gadget_vertex_formula(const SynchronousGame &g)
{
    const int n = g.questions(), k = g.answers();
    std::size_t gadgets = 0;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    if (x == y || g.allowed(a, b, x, y))
                        continue;
                    const bool a_end = a == 1 || a == k, b_end = b == 1 || b == k;
                    if (a_end == b_end)
                        ++gadgets;
                }
    return static_cast<std::size_t>(3 + n + 9 * n * (k - 2)) + 6 * gadgets;
}

SynchronousGame random_game(int n, int k, double density, std::mt19937_64 &rng, bool unit_diagonal)
{
    std::bernoulli_distribution forbid(density);
    SynchronousGame g(n, k);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    if (x == y && (a != b || unit_diagonal))
                        continue;
                    if (forbid(rng))
                        g.forbid(a, b, x, y);
                }
    return g;
}

LabeledGraph random_graph(int n, double p, std::mt19937_64 &rng)
{
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng))
                e.emplace_back(u, v);
    return graph_from_edges(n, e);
}

int code_bits(int k) { return 2 * k * k + 2 * k; }

SynchronousGame game_from_code(int k, std::uint32_t code)
{
    SynchronousGame g(2, k);
    const int kk = k * k;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
            const int i = k * (a - 1) + (b - 1);
            g.set(a, b, 1, 2, (code >> i & 1U) != 0);
            g.set(a, b, 2, 1, (code >> (kk + i) & 1U) != 0);
        }
    for (int a = 1; a <= k; ++a) {
        g.set(a, a, 1, 1, (code >> (2 * kk + a - 1) & 1U) != 0);
        g.set(a, a, 2, 2, (code >> (2 * kk + k + a - 1) & 1U) != 0);
    }
    return g;
}

} // namespace syncgame::oracle
