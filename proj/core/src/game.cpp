#include "syncgame/game.hpp"

#include "syncgame/errors.hpp"
#include "syncgame/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace syncgame {

std::string to_string(const RuleTuple &t)
{
    std::ostringstream os;
    os << '(' << t.a << ',' << t.b << ',' << t.x << ',' << t.y << ')';
    return os.str();
}

SynchronousGame::SynchronousGame(int n_questions, int k_answers) : n_(n_questions), k_(k_answers)
{
    if (n_ < 1 || k_ < 1)
        throw PreconditionError("a game needs at least one question and one answer");
    rule_.assign(static_cast<std::size_t>(n_) * n_ * k_ * k_, true);
    for (int x = 1; x <= n_; ++x)
        for (int a = 1; a <= k_; ++a)
            for (int b = 1; b <= k_; ++b)
                if (a != b)
                    forbid(a, b, x, x);
}

bool SynchronousGame::in_range(int a, int b, int x, int y) const noexcept
{
    return a >= 1 && a <= k_ && b >= 1 && b <= k_ && x >= 1 && x <= n_ && y >= 1 && y <= n_;
}

std::size_t SynchronousGame::index(int a, int b, int x, int y) const
{
    if (!in_range(a, b, x, y))
        throw PreconditionError("rule index out of range: " + to_string(RuleTuple{a, b, x, y}));
    auto n = static_cast<std::size_t>(n_);
    auto k = static_cast<std::size_t>(k_);
    return ((static_cast<std::size_t>(x - 1) * n + static_cast<std::size_t>(y - 1)) * k +
            static_cast<std::size_t>(a - 1)) * k + static_cast<std::size_t>(b - 1);
}

std::vector<RuleTuple> SynchronousGame::zero_tuples() const
{
    std::vector<RuleTuple> out;
    for (int a = 1; a <= k_; ++a)
        for (int b = 1; b <= k_; ++b)
            for (int x = 1; x <= n_; ++x)
                for (int y = 1; y <= n_; ++y)
                    if (!allowed(a, b, x, y))
                        out.push_back({a, b, x, y});
    return out;
}

std::vector<RuleTuple> SynchronousGame::off_diagonal_zero_tuples() const
{
    auto all = zero_tuples();
    std::erase_if(all, [](const RuleTuple &t) { return t.x == t.y; });
    return all;
}

DeterministicStrategy::DeterministicStrategy(std::vector<int> answers) : answers_(std::move(answers)) {}

std::string to_string(const DeterministicStrategy &f)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < f.answers().size(); ++i)
        os << (i ? "," : "") << f.answers()[i];
    os << ')';
    return os.str();
}

bool wins(const SynchronousGame &g, const DeterministicStrategy &f)
{
    const int n = g.questions();
    const int k = g.answers();
    if (f.questions() != n)
        return false;
    for (int x = 1; x <= n; ++x)
        if (f(x) < 1 || f(x) > k)
            return false;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (!g.allowed(f(x), f(y), x, y))
                return false;
    return true;
}

ValidationReport validate_game(const SynchronousGame &g)
{
    ValidationReport report;
    for (int x = 1; x <= g.questions(); ++x)
        for (int a = 1; a <= g.answers(); ++a)
            for (int b = 1; b <= g.answers(); ++b)
                if (a != b && g.allowed(a, b, x, x)) {
                    RuleTuple t{a, b, x, x};
                    report.violations.push_back(
                        {Violation::Kind::NonSynchronous, t, "rule" + to_string(t) + " = 1 breaks synchronicity"});
                }
    return report;
}

bool has_unit_diagonal(const SynchronousGame &g)
{
    for (int x = 1; x <= g.questions(); ++x)
        for (int a = 1; a <= g.answers(); ++a)
            if (!g.allowed(a, a, x, x))
                return false;
    return true;
}

namespace {

void require_valid(const SynchronousGame &g, const char *what)
{
    auto report = validate_game(g);
    if (!report.ok())
        throw PreconditionError(std::string(what) + ": " + report.violations.front().message);
}

} // namespace

SynchronousGame normalize_diagonal(const SynchronousGame &g)
{
    require_valid(g, "normalize_diagonal");
    const int n = g.questions();
    const int k = g.answers();
    if (n < 2)
        throw PreconditionError("normalize_diagonal needs at least two questions; pad the game first");
    SynchronousGame out = g;
    for (int x = 1; x <= n; ++x) {
        const int y = (x % n) + 1;
        for (int a = 1; a <= k; ++a) {
            if (g.allowed(a, a, x, x))
                continue;
            out.allow(a, a, x, x);
            for (int b = 1; b <= k; ++b)
                out.forbid(a, b, x, y);
        }
    }
    return out;
}

SynchronousGame pad_game(const SynchronousGame &g, int min_questions, int min_answers)
{
    require_valid(g, "pad_game");
    const int n = g.questions();
    const int k = g.answers();
    const int n2 = std::max(n, min_questions);
    const int k2 = std::max(k, min_answers);
    if (n2 == n && k2 == k)
        return g;

    SynchronousGame out(n2, k2);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b)
                    out.set(a, b, x, y, g.allowed(a, b, x, y));

    // New questions: only answer 1 survives against any other question.
    for (int xn = n + 1; xn <= n2; ++xn)
        for (int y = 1; y <= n2; ++y) {
            if (y == xn)
                continue;
            for (int a = 2; a <= k2; ++a)
                for (int b = 1; b <= k2; ++b) {
                    out.forbid(a, b, xn, y);
                    out.forbid(b, a, y, xn);
                }
        }

    // New answers: forbidden against every off-diagonal pair. With a single
    // question there is no partner, so fall back to a diagonal zero.
    for (int an = k + 1; an <= k2; ++an)
        for (int x = 1; x <= n2; ++x) {
            if (n2 == 1) {
                out.forbid(an, an, x, x);
                continue;
            }
            for (int y = 1; y <= n2; ++y) {
                if (y == x)
                    continue;
                for (int b = 1; b <= k2; ++b) {
                    out.forbid(an, b, x, y);
                    out.forbid(b, an, y, x);
                }
            }
        }
    return out;
}

SynchronousGame asymmetrize(const SynchronousGame &g)
{
    require_valid(g, "asymmetrize");
    const int n = g.questions();
    const int k = g.answers();
    if (n < 2)
        throw PreconditionError("asymmetrize needs at least two questions");
    if (!has_unit_diagonal(g))
        throw PreconditionError("asymmetrize needs rule(a,a,x,x) = 1 everywhere; run normalize_diagonal first");
    SynchronousGame out(n, k);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b)
                    out.set(a, b, x, y, g.allowed(a, b, x, y) && g.allowed(b, a, y, x));
    return out;
}

bool is_asymmetric(const SynchronousGame &g)
{
    const int n = g.questions();
    const int k = g.answers();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    if (x == y) {
                        if (g.allowed(a, b, x, x) != (a == b))
                            return false;
                    } else if (!g.allowed(a, b, x, y) && !g.allowed(b, a, y, x)) {
                        return false;
                    }
                }
    return true;
}

DeterministicStrategy PreparedGame::lift(const DeterministicStrategy &f) const
{
    if (f.questions() != original.questions())
        throw PreconditionError("strategy has the wrong number of questions");
    std::vector<int> answers(f.answers().begin(), f.answers().end());
    answers.resize(static_cast<std::size_t>(prepared.questions()), 1);
    return DeterministicStrategy(std::move(answers));
}

DeterministicStrategy PreparedGame::restrict(const DeterministicStrategy &f) const
{
    if (f.questions() != prepared.questions())
        throw PreconditionError("strategy has the wrong number of questions");
    std::vector<int> answers(f.answers().begin(), f.answers().begin() + original.questions());
    return DeterministicStrategy(std::move(answers));
}

PreparedGame prepare_game(const SynchronousGame &g, int min_questions, int min_answers)
{
    auto padded = pad_game(g, std::max(2, min_questions), min_answers);
    return {g, asymmetrize(normalize_diagonal(padded))};
}

ZeroTupleClassification classify_zero_tuples(const SynchronousGame &g_asym)
{
    if (!is_asymmetric(g_asym))
        throw PreconditionError("classify_zero_tuples needs an asymmetric rule table");
    const int k = g_asym.answers();
    auto is_end = [k](int a) { return a == 1 || a == k; };
    auto is_middle = [k](int a) { return a >= 2 && a <= k - 1; };

    ZeroTupleClassification out;
    for (const auto &t : g_asym.off_diagonal_zero_tuples()) {
        if (is_end(t.a) && is_end(t.b))
            out.e_set.push_back(t);
        else if (is_middle(t.a) && is_middle(t.b))
            out.f_set.push_back(t);
        else
            out.case1_set.push_back(t);
    }
    return out;
}

AnswerRelabeling identity_relabeling(int n_questions, int k_answers)
{
    std::vector<int> id(static_cast<std::size_t>(k_answers));
    std::iota(id.begin(), id.end(), 1);
    return AnswerRelabeling(static_cast<std::size_t>(n_questions), id);
}

namespace {

void require_bijections(const AnswerRelabeling &perms, int n, int k)
{
    if (static_cast<int>(perms.size()) != n)
        throw PreconditionError("relabeling must give one permutation per question");
    for (const auto &p : perms) {
        if (static_cast<int>(p.size()) != k)
            throw PreconditionError("relabeling permutation has the wrong length");
        std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
        for (int v : p) {
            if (v < 1 || v > k || seen[static_cast<std::size_t>(v)])
                throw PreconditionError("relabeling is not a bijection on 1..k");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

} // namespace

AnswerRelabeling inverse(const AnswerRelabeling &perms)
{
    AnswerRelabeling out = perms;
    for (std::size_t x = 0; x < perms.size(); ++x)
        for (std::size_t a = 0; a < perms[x].size(); ++a)
            out[x][static_cast<std::size_t>(perms[x][a] - 1)] = static_cast<int>(a) + 1;
    return out;
}

SynchronousGame relabel_answers(const SynchronousGame &g, const AnswerRelabeling &perms)
{
    const int n = g.questions();
    const int k = g.answers();
    require_bijections(perms, n, k);
    SynchronousGame out(n, k);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    const int a2 = perms[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(a - 1)];
                    const int b2 = perms[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(b - 1)];
                    out.set(a2, b2, x, y, g.allowed(a, b, x, y));
                }
    return out;
}

DeterministicStrategy relabel_strategy(const DeterministicStrategy &f, const AnswerRelabeling &perms)
{
    if (static_cast<int>(perms.size()) != f.questions())
        throw PreconditionError("relabeling and strategy disagree on the number of questions");
    std::vector<int> answers;
    answers.reserve(perms.size());
    for (int x = 1; x <= f.questions(); ++x)
        answers.push_back(perms[static_cast<std::size_t>(x - 1)].at(static_cast<std::size_t>(f(x) - 1)));
    return DeterministicStrategy(std::move(answers));
}

SynchronousGame hom_game(const LabeledGraph &G, const LabeledGraph &H)
{
    if (G.order() == 0 || H.order() == 0)
        throw PreconditionError("hom_game needs nonempty graphs");
    SynchronousGame out(G.order(), H.order());
    for (auto [u, v] : G.edges())
        for (int a = 1; a <= H.order(); ++a)
            for (int b = 1; b <= H.order(); ++b)
                if (!H.adjacent(a - 1, b - 1)) {
                    out.forbid(a, b, u + 1, v + 1);
                    out.forbid(b, a, v + 1, u + 1);
                }
    return out;
}

std::array<int, 3> magic_square_variables(int x)
{
    static constexpr std::array<std::array<int, 3>, 6> vars{{
        {1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
    }};
    if (x < 1 || x > 6)
        throw PreconditionError("magic square has equations 1..6");
    return vars[static_cast<std::size_t>(x - 1)];
}

std::vector<std::array<int, 3>> magic_square_solutions(int x)
{
    if (x < 1 || x > 6)
        throw PreconditionError("magic square has equations 1..6");
    // Parity-0 equations: 000, 011, 101, 110. The last equation has parity 1:
    // 111, 100, 010, 001.
    if (x <= 5)
        return {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    return {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
}

SynchronousGame fixture_magic_square()
{
    SynchronousGame g(6, 4);
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) {
            if (x == y)
                continue;
            const auto vx = magic_square_variables(x);
            const auto vy = magic_square_variables(y);
            const auto sx = magic_square_solutions(x);
            const auto sy = magic_square_solutions(y);
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b) {
                    bool agree = true;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j)
                            if (vx[static_cast<std::size_t>(i)] == vy[static_cast<std::size_t>(j)] &&
                                sx[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i)] !=
                                    sy[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j)])
                                agree = false;
                    g.set(a, b, x, y, agree);
                }
        }
    return g;
}

SynchronousGame fixture_tiny_unsat()
{
    SynchronousGame g(2, 3);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            g.forbid(a, b, 1, 2);
    return g;
}

SynchronousGame fixture_trivial(int n_questions, int k_answers)
{
    return SynchronousGame(n_questions, k_answers);
}

} // namespace syncgame
