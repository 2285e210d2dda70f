#include "syncgame/game_graph.hpp"

#include "syncgame/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

namespace syncgame {

GameGraph build_x_graph(const SynchronousGame &g)
{
    if (!validate_game(g).ok())
        throw PreconditionError("build_x_graph: game is not synchronous");
    if (!has_unit_diagonal(g))
        throw PreconditionError("build_x_graph needs rule(a,a,x,x) = 1");
    if (g.questions() < 2)
        throw PreconditionError("build_x_graph needs n >= 2");

    GameGraph X;
    X.n = g.questions();
    X.k = g.answers();
    GraphBuilder b;
    for (int v = 0; v < X.n * X.k; ++v)
        b.add_vertex(PlainLabel{v + 1});
    for (int u = 0; u < X.n * X.k; ++u)
        for (int v = u + 1; v < X.n * X.k; ++v) {
            const auto [a, x] = X.pair(u);
            const auto [bb, y] = X.pair(v);
            if (!g.allowed(a, bb, x, y) || !g.allowed(bb, a, y, x))
                b.add_edge(u, v);
        }
    X.graph = std::move(b).build();
    return X;
}

std::vector<int> strategy_to_independent_set(const GameGraph &X, const SynchronousGame &g, const DeterministicStrategy &f)
{
    if (f.questions() != g.questions() || !wins(g, f))
        throw PreconditionError("strategy_to_independent_set needs a winning strategy");
    std::vector<int> s;
    for (int x = 1; x <= g.questions(); ++x)
        s.push_back(X.vertex(f(x), x));
    if (!is_independent_set(X.graph, s))
        throw InternalError("winning strategy gave a dependent set in X");
    return s;
}

DeterministicStrategy independent_set_to_strategy(const GameGraph &X, const SynchronousGame &g, std::vector<int> set)
{
    if (static_cast<int>(set.size()) != g.questions() || !is_independent_set(X.graph, set))
        throw PreconditionError("independent_set_to_strategy needs an independent set of size n");
    std::vector<int> answers(static_cast<std::size_t>(g.questions()), 0);
    for (int v : set) {
        const auto [a, x] = X.pair(v);
        if (answers[static_cast<std::size_t>(x - 1)] != 0)
            throw InternalError("independent set meets question " + std::to_string(x) + " twice");
        answers[static_cast<std::size_t>(x - 1)] = a;
    }
    DeterministicStrategy f(std::move(answers));
    if (!wins(g, f))
        throw InternalError("independent set gave a losing strategy " + to_string(f));
    return f;
}

std::vector<std::pair<int, int>> to_answer_question_pairs(const GameGraph &X, std::vector<int> set)
{
    std::vector<std::pair<int, int>> out;
    for (int v : set)
        out.push_back(X.pair(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> from_answer_question_pairs(const GameGraph &X, const std::vector<std::pair<int, int>> &pairs)
{
    std::vector<int> out;
    for (auto [a, x] : pairs) {
        if (a < 1 || a > X.k || x < 1 || x > X.n)
            throw PreconditionError("(a, x) pair out of range");
        out.push_back(X.vertex(a, x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with greedy-coloring bounds.

namespace {

using Bits = boost::dynamic_bitset<>;

class CliqueSearch {
public:
    CliqueSearch(const LabeledGraph &G, const SearchBudget &budget) : G_(G), clock_(budget)
    {
        const int n = G.order();
        // Degree-descending order, ties by index.
        order_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return G.degree(a) > G.degree(b); });
        rows_.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < n; ++i)
            for (int w : G.neighbours(order_[static_cast<std::size_t>(i)]))
                rows_[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(pos[static_cast<std::size_t>(w)]));
    }

    CliqueResult run()
    {
        const auto n = static_cast<std::size_t>(G_.order());
        Bits all(n);
        all.set();
        std::vector<int> current;
        if (n > 0) {
            best_ = {order_.front()};
            expand(current, all);
        }
        CliqueResult r;
        r.clique = best_;
        std::sort(r.clique.begin(), r.clique.end());
        r.value = static_cast<int>(r.clique.size());
        r.exact = !clock_.exhausted();
        r.nodes = clock_.nodes();
        return r;
    }

private:
    void expand(std::vector<int> &current, Bits candidates)
    {
        if (!clock_.tick())
            return;
        // Greedy coloring of the candidates gives, for each vertex in the
        // returned order, an upper bound on the clique it can finish.
        std::vector<int> verts;
        std::vector<int> bound;
        {
            Bits uncolored = candidates;
            int color = 0;
            while (uncolored.any()) {
                ++color;
                Bits avail = uncolored;
                for (auto v = avail.find_first(); v != Bits::npos; v = avail.find_next(v)) {
                    uncolored.reset(v);
                    avail -= rows_[v];
                    verts.push_back(static_cast<int>(v));
                    bound.push_back(color);
                }
            }
        }
        for (auto i = verts.size(); i-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size())
                return;
            const auto v = static_cast<std::size_t>(verts[i]);
            current.push_back(order_[v]);
            Bits next = candidates & rows_[v];
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            candidates.reset(v);
            if (clock_.exhausted())
                return;
        }
    }

    const LabeledGraph &G_;
    BudgetClock clock_;
    std::vector<int> order_;
    std::vector<Bits> rows_;
    std::vector<int> best_;
};

} // namespace

CliqueResult max_clique(const LabeledGraph &G, const SearchBudget &budget)
{
    return CliqueSearch(G, budget).run();
}

CliqueResult max_independent_set(const LabeledGraph &G, const SearchBudget &budget)
{
    return max_clique(complement(G), budget);
}

CliqueResult clique_number(const LabeledGraph &G, const SearchBudget &budget) { return max_clique(G, budget); }

CliqueResult independence_number(const LabeledGraph &G, const SearchBudget &budget)
{
    return max_independent_set(G, budget);
}

// ---------------------------------------------------------------------------
// Packing bound

PackingReport packing_bound_check(const SynchronousGame &g, const PvmFamily &family)
{
    if (family.n != g.questions() || family.k != g.answers() ||
        family.projectors.size() != static_cast<std::size_t>(g.questions() * g.answers()))
        throw PreconditionError("packing_bound_check: family does not match the game");
    PackingReport r;
    for (const auto &p : family.projectors) {
        if (p.rows() != family.dim || p.cols() != family.dim)
            throw PreconditionError("packing_bound_check: projector has the wrong shape");
        r.hypothesis_residual = std::max(r.hypothesis_residual, projection_residual(p));
    }
    for (const auto &t : g.zero_tuples())
        r.hypothesis_residual = std::max(r.hypothesis_residual, operator_norm(family(t.a, t.x) * family(t.b, t.y)));
    r.hypotheses_ok = r.hypothesis_residual <= family.tol;
    if (!r.hypotheses_ok) {
        std::ostringstream os;
        os << "packing_bound_check: family breaks the orthogonality hypotheses (residual " << r.hypothesis_residual
           << ")";
        throw PreconditionError(os.str());
    }
    Matrix sum = Matrix::Zero(family.dim, family.dim);
    for (const auto &p : family.projectors)
        sum += p;
    const Matrix herm = 0.5 * (sum + sum.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
    r.bound_value = eig.eigenvalues().maxCoeff();
    r.bound_ok = r.bound_value <= g.questions() + family.tol;
    return r;
}

PackingReport packing_bound_check(const SynchronousGame &g, const std::vector<int> &indicator)
{
    const int n = g.questions(), k = g.answers();
    if (indicator.size() != static_cast<std::size_t>(n * k))
        throw PreconditionError("packing_bound_check: indicator family has the wrong size");
    for (int v : indicator)
        if (v != 0 && v != 1)
            throw PreconditionError("packing_bound_check: indicators must be 0 or 1");
    auto on = [&](int a, int x) { return indicator[static_cast<std::size_t>((x - 1) * k + (a - 1))] == 1; };
    PackingReport r;
    for (const auto &t : g.zero_tuples())
        if (on(t.a, t.x) && on(t.b, t.y)) {
            r.hypothesis_residual = 1;
            throw PreconditionError("packing_bound_check: indicators " + to_string(t) + " both set on a zero tuple");
        }
    r.hypotheses_ok = true;
    r.bound_value = static_cast<double>(std::count(indicator.begin(), indicator.end(), 1));
    r.bound_ok = r.bound_value <= n;
    return r;
}

} // namespace syncgame
