#include "syncgame/correlation.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>

namespace syncgame {

ExactCorrelation correlation_from_deterministic(const DeterministicStrategy &f, int k_answers)
{
    const int n = f.questions();
    for (int x = 1; x <= n; ++x)
        if (f(x) < 1 || f(x) > k_answers)
            throw PreconditionError("strategy answer out of range at question " + std::to_string(x));
    ExactCorrelation p(n, k_answers);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            p.at(f(x), f(y), x, y) = 1;
    return p;
}

ExactCorrelation symmetrize_zero_knowledge(const LabeledGraph &G, const Coloring &c, int k)
{
    if (!is_proper_coloring(G, c, k))
        throw PreconditionError("symmetrize_zero_knowledge needs a proper coloring");
    const int n = G.order();
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 1);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * n * k * k, 0);
    std::int64_t orbit = 0;
    do {
        ++orbit;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int a = sigma[static_cast<std::size_t>(c[x] - 1)];
                const int b = sigma[static_cast<std::size_t>(c[y] - 1)];
                ++counts[static_cast<std::size_t>(((x * n + y) * k + (a - 1)) * k + (b - 1))];
            }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    ExactCorrelation p(n, k);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b)
                    p.at(a, b, x, y) =
                        Rational(counts[static_cast<std::size_t>((((x - 1) * n + (y - 1)) * k + (a - 1)) * k + (b - 1))],
                                 orbit);
    return p;
}

void write_correlation(std::ostream &out, const ExactCorrelation &p)
{
    const int n = p.questions(), k = p.answers();
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) {
                    const auto &v = p(a, b, x, y);
                    out << a << '\t' << b << '\t' << x << '\t' << y << '\t' << v.numerator() << '\t'
                        << v.denominator() << '\n';
                }
}

void write_correlation(std::ostream &out, const NumericCorrelation &p)
{
    const int n = p.questions(), k = p.answers();
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y)
                    out << a << '\t' << b << '\t' << x << '\t' << y << '\t' << p(a, b, x, y) << '\n';
    out.flags(flags);
    out.precision(precision);
}

} // namespace syncgame
