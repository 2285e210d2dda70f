#include "syncgame/errors.hpp"
#include "syncgame/game.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace syncgame {

std::size_t labeling_score(const SynchronousGame &g_asym, const AnswerRelabeling &perms)
{
    return classify_zero_tuples(relabel_answers(g_asym, perms)).gadget_count();
}

namespace {

// Only the split of each question's answers into the two "end" labels {1, k}
// and the k-2 "middle" labels changes |E| + |F|; the order inside each class
// is irrelevant. A choice is the pair of old answers sent to labels 1 and k.
struct EndChoice {
    int first;
    int second;
};

std::vector<EndChoice> end_choices(int k)
{
    std::vector<EndChoice> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<int> permutation_for(const EndChoice &c, int k)
{
    std::vector<int> perm(static_cast<std::size_t>(k));
    int next = 2;
    for (int a = 1; a <= k; ++a) {
        if (a == c.first)
            perm[static_cast<std::size_t>(a - 1)] = 1;
        else if (a == c.second)
            perm[static_cast<std::size_t>(a - 1)] = k;
        else
            perm[static_cast<std::size_t>(a - 1)] = next++;
    }
    return perm;
}

class ScoreTable {
public:
    ScoreTable(const SynchronousGame &g, const std::vector<EndChoice> &choices)
        : n_(g.questions()), m_(static_cast<int>(choices.size()))
    {
        const int k = g.answers();
        table_.assign(static_cast<std::size_t>(n_ * n_ * m_ * m_), 0);
        auto is_end = [](const EndChoice &c, int a) { return a == c.first || a == c.second; };
        for (int x = 1; x <= n_; ++x)
            for (int y = 1; y <= n_; ++y) {
                if (x == y)
                    continue;
                for (int cx = 0; cx < m_; ++cx)
                    for (int cy = 0; cy < m_; ++cy) {
                        int count = 0;
                        for (int a = 1; a <= k; ++a)
                            for (int b = 1; b <= k; ++b)
                                if (!g.allowed(a, b, x, y) &&
                                    is_end(choices[static_cast<std::size_t>(cx)], a) ==
                                        is_end(choices[static_cast<std::size_t>(cy)], b))
                                    ++count;
                        at(x, y, cx, cy) = count;
                    }
            }
    }

    int pair(int x, int y, int cx, int cy) const { return table_[offset(x, y, cx, cy)]; }

    // Contribution of question x against every question in [1, upto].
    int against(const std::vector<int> &choice, int x, int cx, int upto) const
    {
        int s = 0;
        for (int y = 1; y <= upto; ++y)
            if (y != x)
                s += pair(x, y, cx, choice[static_cast<std::size_t>(y - 1)]) +
                     pair(y, x, choice[static_cast<std::size_t>(y - 1)], cx);
        return s;
    }

    int total(const std::vector<int> &choice) const
    {
        int s = 0;
        for (int x = 1; x <= n_; ++x)
            for (int y = 1; y <= n_; ++y)
                if (x != y)
                    s += pair(x, y, choice[static_cast<std::size_t>(x - 1)], choice[static_cast<std::size_t>(y - 1)]);
        return s;
    }

private:
    std::size_t offset(int x, int y, int cx, int cy) const
    {
        return static_cast<std::size_t>((((x - 1) * n_ + (y - 1)) * m_ + cx) * m_ + cy);
    }
    int &at(int x, int y, int cx, int cy) { return table_[offset(x, y, cx, cy)]; }

    int n_;
    int m_;
    std::vector<int> table_;
};

} // namespace

LabelingResult search_labeling(const SynchronousGame &g_asym, const LabelingBudget &budget)
{
    if (!is_asymmetric(g_asym))
        throw PreconditionError("search_labeling needs an asymmetric rule table");
    const int n = g_asym.questions();
    const int k = g_asym.answers();

    LabelingResult result;
    result.perms = identity_relabeling(n, k);
    if (k < 3) {
        // Every answer is an end label; nothing to optimise.
        result.score = labeling_score(g_asym, result.perms);
        result.exhaustive = true;
        result.evaluations = 1;
        return result;
    }

    const auto choices = end_choices(k);
    const int m = static_cast<int>(choices.size());
    const ScoreTable table(g_asym, choices);

    // The identity labelling corresponds to ends {1, k}.
    std::vector<int> best(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < m; ++c)
        if (choices[static_cast<std::size_t>(c)].first == 1 && choices[static_cast<std::size_t>(c)].second == k)
            std::fill(best.begin(), best.end(), c);
    int best_score = table.total(best);

    double space = 1.0;
    for (int x = 0; x < n; ++x)
        space *= m;
    const bool exhaustive = k <= 4 && space <= static_cast<double>(budget.max_evaluations);

    if (exhaustive) {
        // With k = 4 both classes have size two, so swapping ends and middles
        // everywhere preserves the score: question 1 may keep old answer 1 as
        // an end label.
        std::vector<int> first_choices;
        for (int c = 0; c < m; ++c)
            if (k != 4 || choices[static_cast<std::size_t>(c)].first == 1)
                first_choices.push_back(c);

        std::vector<int> current(static_cast<std::size_t>(n), 0);
        std::uint64_t nodes = 0;
        auto dfs = [&](auto &&self, int x, int partial) -> void {
            ++nodes;
            if (partial >= best_score)
                return;
            if (x > n) {
                best_score = partial;
                best = current;
                return;
            }
            auto try_choice = [&](int c) {
                current[static_cast<std::size_t>(x - 1)] = c;
                self(self, x + 1, partial + table.against(current, x, c, x - 1));
            };
            if (x == 1)
                for (int c : first_choices)
                    try_choice(c);
            else
                for (int c = 0; c < m; ++c)
                    try_choice(c);
        };
        if (best_score > 0)
            dfs(dfs, 1, 0);
        result.evaluations = nodes;
        result.exhaustive = true;
    } else {
        std::mt19937_64 rng(budget.seed);
        std::uniform_int_distribution<int> pick(0, m - 1);
        std::uint64_t evaluations = 0;
        for (int restart = 0; restart <= budget.restarts && evaluations < budget.max_evaluations; ++restart) {
            std::vector<int> current = best;
            if (restart > 0)
                for (auto &c : current)
                    c = pick(rng);
            int score = table.total(current);
            bool improved = true;
            while (improved && evaluations < budget.max_evaluations) {
                improved = false;
                for (int x = 1; x <= n; ++x) {
                    const int here = table.against(current, x, current[static_cast<std::size_t>(x - 1)], n);
                    for (int c = 0; c < m; ++c) {
                        ++evaluations;
                        const int delta = table.against(current, x, c, n) - here;
                        if (delta < 0) {
                            current[static_cast<std::size_t>(x - 1)] = c;
                            score += delta;
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if (score < best_score) {
                best_score = score;
                best = current;
            }
        }
        result.evaluations = evaluations;
        result.exhaustive = false;
    }

    for (int x = 1; x <= n; ++x)
        result.perms[static_cast<std::size_t>(x - 1)] =
            permutation_for(choices[static_cast<std::size_t>(best[static_cast<std::size_t>(x - 1)])], k);
    result.score = labeling_score(g_asym, result.perms);
    if (result.score != static_cast<std::size_t>(best_score))
        throw InternalError("search_labeling: incremental score disagrees with recount");
    return result;
}

} // namespace syncgame
