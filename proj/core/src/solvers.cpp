#include "syncgame/solvers.hpp"

#include "syncgame/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace syncgame {

namespace {

std::vector<int> seeded_ranks(int n, std::uint64_t seed)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(perm.begin(), perm.end(), rng);
    }
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    return rank;
}

// ---------------------------------------------------------------------------
// Coloring

class ColoringSearch {
public:
    ColoringSearch(const LabeledGraph &G, int colors, const SearchBudget &budget)
        : G_(G), colors_(colors), clock_(budget), rank_(seeded_ranks(G.order(), budget.seed))
    {
    }

    SearchResult<Coloring> run(const std::vector<std::pair<int, int>> &precolored)
    {
        const int n = G_.order();
        State s;
        s.domain.assign(static_cast<std::size_t>(n), full_mask());
        s.color.assign(static_cast<std::size_t>(n), 0);
        s.open = n;

        bool consistent = true;
        for (auto [v, c] : precolored) {
            if (v < 0 || v >= n || c < 1 || c > colors_)
                throw PreconditionError("precolored vertex or color out of range");
            if (s.color[static_cast<std::size_t>(v)] != 0 && s.color[static_cast<std::size_t>(v)] != c)
                consistent = false;
            else if (consistent && s.color[static_cast<std::size_t>(v)] == 0)
                consistent = assign(s, v, c);
            // Precolors are not interchangeable with each other.
            s.pinned |= bit(c);
        }

        SearchResult<Coloring> result;
        if (consistent && search(s))
            result.status = SearchStatus::Found;
        else
            result.status = clock_.exhausted() ? SearchStatus::Inconclusive : SearchStatus::ProvenNone;
        if (result.status == SearchStatus::Found) {
            Coloring c{solution_};
            if (!is_proper_coloring(G_, c, colors_))
                throw InternalError("coloring search produced an improper coloring");
            result.certificate = std::move(c);
        }
        result.nodes = clock_.nodes();
        result.millis = clock_.elapsed_millis();
        return result;
    }

private:
    struct State {
        std::vector<std::uint32_t> domain;
        std::vector<int> color;
        std::uint32_t used = 0;   // colors on some assigned vertex
        std::uint32_t pinned = 0; // colors fixed by precoloring
        int open = 0;
    };

    static std::uint32_t bit(int c) { return std::uint32_t{1} << (c - 1); }
    std::uint32_t full_mask() const { return colors_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << colors_) - 1; }

    // Assigns and propagates; false on a wipe-out.
    bool assign(State &s, int v, int c)
    {
        std::vector<std::pair<int, int>> queue{{v, c}};
        while (!queue.empty()) {
            auto [u, cu] = queue.back();
            queue.pop_back();
            auto &slot = s.color[static_cast<std::size_t>(u)];
            if (slot != 0) {
                if (slot != cu)
                    return false;
                continue;
            }
            if ((s.domain[static_cast<std::size_t>(u)] & bit(cu)) == 0)
                return false;
            slot = cu;
            s.domain[static_cast<std::size_t>(u)] = bit(cu);
            s.used |= bit(cu);
            --s.open;
            for (int w : G_.neighbours(u)) {
                const auto sw = static_cast<std::size_t>(w);
                if (s.color[sw] == cu)
                    return false;
                if (s.color[sw] != 0 || (s.domain[sw] & bit(cu)) == 0)
                    continue;
                s.domain[sw] &= ~bit(cu);
                if (s.domain[sw] == 0)
                    return false;
                if (std::has_single_bit(s.domain[sw]))
                    queue.emplace_back(w, std::countr_zero(s.domain[sw]) + 1);
            }
        }
        return true;
    }

    int pick(const State &s) const
    {
        int best = -1, best_size = 0, best_degree = 0;
        for (int v = 0; v < G_.order(); ++v) {
            if (s.color[static_cast<std::size_t>(v)] != 0)
                continue;
            const int size = std::popcount(s.domain[static_cast<std::size_t>(v)]);
            int degree = 0;
            for (int w : G_.neighbours(v))
                degree += s.color[static_cast<std::size_t>(w)] == 0;
            if (best < 0 || size < best_size || (size == best_size && degree > best_degree) ||
                (size == best_size && degree == best_degree &&
                 rank_[static_cast<std::size_t>(v)] < rank_[static_cast<std::size_t>(best)])) {
                best = v;
                best_size = size;
                best_degree = degree;
            }
        }
        return best;
    }

    bool search(State &s)
    {
        if (!clock_.tick())
            return false;
        if (s.open == 0) {
            solution_ = s.color;
            return true;
        }
        const int v = pick(s);
        const std::uint32_t interchangeable = full_mask() & ~(s.used | s.pinned);
        std::uint32_t options = s.domain[static_cast<std::size_t>(v)];
        if (interchangeable != 0) {
            const std::uint32_t first_free = interchangeable & (~interchangeable + 1);
            options &= ~interchangeable | first_free;
        }
        for (int c = 1; c <= colors_; ++c) {
            if ((options & bit(c)) == 0)
                continue;
            State next = s;
            if (assign(next, v, c) && search(next))
                return true;
            if (clock_.exhausted())
                return false;
        }
        return false;
    }

    const LabeledGraph &G_;
    int colors_;
    BudgetClock clock_;
    std::vector<int> rank_;
    std::vector<int> solution_;
};

} // namespace

SearchResult<Coloring> find_coloring(const LabeledGraph &G, int colors, const SearchBudget &budget,
                                     const std::vector<std::pair<int, int>> &precolored)
{
    if (colors < 1 || colors > 32)
        throw PreconditionError("find_coloring supports 1..32 colors");
    return ColoringSearch(G, colors, budget).run(precolored);
}

SearchResult<Coloring> find_gadget_coloring(const GadgetGraph &gg, const SearchBudget &budget)
{
    return find_coloring(gg.graph, 3, budget,
                         {{GadgetGraph::vertex_a, 1}, {GadgetGraph::vertex_b, 2}, {GadgetGraph::vertex_c, 3}});
}

// ---------------------------------------------------------------------------
// Homomorphisms

namespace {

using Bits = boost::dynamic_bitset<>;

class HomSearch {
public:
    HomSearch(const LabeledGraph &G, const LabeledGraph &H, const SearchBudget &budget)
        : G_(G), H_(H), clock_(budget), rank_(seeded_ranks(G.order(), budget.seed))
    {
    }

    SearchResult<std::vector<int>> run()
    {
        std::vector<Bits> domain(static_cast<std::size_t>(G_.order()), Bits(static_cast<std::size_t>(H_.order())));
        for (auto &d : domain)
            d.set();
        std::vector<int> image(static_cast<std::size_t>(G_.order()), -1);

        SearchResult<std::vector<int>> result;
        const bool nonempty = H_.order() > 0 || G_.order() == 0;
        if (nonempty && search(domain, image, G_.order()))
            result.status = SearchStatus::Found;
        else
            result.status = clock_.exhausted() ? SearchStatus::Inconclusive : SearchStatus::ProvenNone;
        if (result.status == SearchStatus::Found) {
            if (!is_homomorphism(G_, H_, solution_))
                throw InternalError("homomorphism search produced a non-homomorphism");
            result.certificate = solution_;
        }
        result.nodes = clock_.nodes();
        result.millis = clock_.elapsed_millis();
        return result;
    }

private:
    bool assign(std::vector<Bits> &domain, std::vector<int> &image, int &open, int v, int h)
    {
        std::vector<std::pair<int, int>> queue{{v, h}};
        while (!queue.empty()) {
            auto [u, hu] = queue.back();
            queue.pop_back();
            const auto su = static_cast<std::size_t>(u);
            if (image[su] >= 0) {
                if (image[su] != hu)
                    return false;
                continue;
            }
            if (!domain[su].test(static_cast<std::size_t>(hu)))
                return false;
            image[su] = hu;
            domain[su].reset();
            domain[su].set(static_cast<std::size_t>(hu));
            --open;
            for (int w : G_.neighbours(u)) {
                const auto sw = static_cast<std::size_t>(w);
                if (image[sw] >= 0) {
                    if (!H_.adjacent(hu, image[sw]))
                        return false;
                    continue;
                }
                domain[sw] &= H_.row(hu);
                const auto count = domain[sw].count();
                if (count == 0)
                    return false;
                if (count == 1)
                    queue.emplace_back(w, static_cast<int>(domain[sw].find_first()));
            }
        }
        return true;
    }

    bool search(const std::vector<Bits> &domain, const std::vector<int> &image, int open)
    {
        if (!clock_.tick())
            return false;
        if (open == 0) {
            solution_ = image;
            return true;
        }
        int v = -1;
        std::size_t best = 0;
        for (int u = 0; u < G_.order(); ++u) {
            if (image[static_cast<std::size_t>(u)] >= 0)
                continue;
            const auto size = domain[static_cast<std::size_t>(u)].count();
            if (v < 0 || size < best ||
                (size == best && rank_[static_cast<std::size_t>(u)] < rank_[static_cast<std::size_t>(v)])) {
                v = u;
                best = size;
            }
        }
        const Bits &options = domain[static_cast<std::size_t>(v)];
        for (auto h = options.find_first(); h != Bits::npos; h = options.find_next(h)) {
            auto d = domain;
            auto img = image;
            int left = open;
            if (assign(d, img, left, v, static_cast<int>(h)) && search(d, img, left))
                return true;
            if (clock_.exhausted())
                return false;
        }
        return false;
    }

    const LabeledGraph &G_;
    const LabeledGraph &H_;
    BudgetClock clock_;
    std::vector<int> rank_;
    std::vector<int> solution_;
};

} // namespace

SearchResult<std::vector<int>> find_hom(const LabeledGraph &G, const LabeledGraph &H, const SearchBudget &budget)
{
    return HomSearch(G, H, budget).run();
}

// ---------------------------------------------------------------------------
// Deterministic strategies

namespace {

class StrategySearch {
public:
    StrategySearch(const SynchronousGame &g, const SearchBudget &budget)
        : g_(g), clock_(budget), rank_(seeded_ranks(g.questions(), budget.seed))
    {
    }

    SearchResult<DeterministicStrategy> run()
    {
        const int n = g_.questions(), k = g_.answers();
        std::vector<Bits> domain(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(k)));
        for (int x = 1; x <= n; ++x)
            for (int a = 1; a <= k; ++a)
                if (g_.allowed(a, a, x, x))
                    domain[static_cast<std::size_t>(x - 1)].set(static_cast<std::size_t>(a - 1));
        std::vector<int> answer(static_cast<std::size_t>(n), 0);

        SearchResult<DeterministicStrategy> result;
        if (search(domain, answer, n))
            result.status = SearchStatus::Found;
        else
            result.status = clock_.exhausted() ? SearchStatus::Inconclusive : SearchStatus::ProvenNone;
        if (result.status == SearchStatus::Found) {
            DeterministicStrategy f(solution_);
            if (!wins(g_, f))
                throw InternalError("strategy search produced a losing strategy");
            result.certificate = std::move(f);
        }
        result.nodes = clock_.nodes();
        result.millis = clock_.elapsed_millis();
        return result;
    }

private:
    bool search(const std::vector<Bits> &domain, const std::vector<int> &answer, int open)
    {
        if (!clock_.tick())
            return false;
        if (open == 0) {
            solution_ = answer;
            return true;
        }
        const int n = g_.questions(), k = g_.answers();
        int x = -1;
        std::size_t best = 0;
        for (int y = 1; y <= n; ++y) {
            if (answer[static_cast<std::size_t>(y - 1)] != 0)
                continue;
            const auto size = domain[static_cast<std::size_t>(y - 1)].count();
            if (x < 0 || size < best ||
                (size == best && rank_[static_cast<std::size_t>(y - 1)] < rank_[static_cast<std::size_t>(x - 1)])) {
                x = y;
                best = size;
            }
        }
        const Bits &options = domain[static_cast<std::size_t>(x - 1)];
        for (auto s = options.find_first(); s != Bits::npos; s = options.find_next(s)) {
            const int a = static_cast<int>(s) + 1;
            auto d = domain;
            auto ans = answer;
            ans[static_cast<std::size_t>(x - 1)] = a;
            bool alive = true;
            for (int y = 1; y <= n && alive; ++y) {
                if (ans[static_cast<std::size_t>(y - 1)] != 0)
                    continue;
                auto &dy = d[static_cast<std::size_t>(y - 1)];
                for (int b = 1; b <= k; ++b)
                    if (dy.test(static_cast<std::size_t>(b - 1)) && (!g_.allowed(a, b, x, y) || !g_.allowed(b, a, y, x)))
                        dy.reset(static_cast<std::size_t>(b - 1));
                alive = dy.any();
            }
            if (alive && search(d, ans, open - 1))
                return true;
            if (clock_.exhausted())
                return false;
        }
        return false;
    }

    const SynchronousGame &g_;
    BudgetClock clock_;
    std::vector<int> rank_;
    std::vector<int> solution_;
};

} // namespace

SearchResult<DeterministicStrategy> find_deterministic_strategy(const SynchronousGame &g, const SearchBudget &budget)
{
    if (!validate_game(g).ok())
        throw PreconditionError("find_deterministic_strategy: game is not synchronous");
    return StrategySearch(g, budget).run();
}

} // namespace syncgame
