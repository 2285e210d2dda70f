#pragma once

#include "syncgame/errors.hpp"
#include "syncgame/game.hpp"
#include "syncgame/graph.hpp"

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace syncgame {

using Rational = boost::rational<std::int64_t>;

/// p(a,b|x,y) as a dense tensor. T is Rational on the classical path and
/// double for correlations computed from operators.
template <class T>
class Correlation {
public:
    Correlation(int n_questions, int k_answers)
        : n_(n_questions), k_(k_answers),
          p_(static_cast<std::size_t>(n_questions) * n_questions * k_answers * k_answers, T(0))
    {
        if (n_questions < 1 || k_answers < 1)
            throw PreconditionError("correlation needs n >= 1 and k >= 1");
    }

    int questions() const noexcept { return n_; }
    int answers() const noexcept { return k_; }

    const T &operator()(int a, int b, int x, int y) const { return p_[index(a, b, x, y)]; }
    T &at(int a, int b, int x, int y) { return p_[index(a, b, x, y)]; }

    std::span<const T> values() const noexcept { return p_; }

    bool operator==(const Correlation &) const = default;

private:
    std::size_t index(int a, int b, int x, int y) const
    {
        if (a < 1 || b < 1 || x < 1 || y < 1 || a > k_ || b > k_ || x > n_ || y > n_)
            throw PreconditionError("correlation index out of range");
        return static_cast<std::size_t>((((x - 1) * n_ + (y - 1)) * k_ + (a - 1)) * k_ + (b - 1));
    }

    int n_;
    int k_;
    std::vector<T> p_;
};

using ExactCorrelation = Correlation<Rational>;
using NumericCorrelation = Correlation<double>;

namespace detail {
inline double magnitude(const Rational &r) { return std::abs(boost::rational_cast<double>(r)); }
inline double magnitude(double v) { return std::abs(v); }
} // namespace detail

/// Largest violation of nonnegativity, row normalisation and synchronicity.
/// Exact correlations satisfy the invariants iff this is 0.
template <class T>
double correlation_residual(const Correlation<T> &p)
{
    double worst = 0;
    const int n = p.questions(), k = p.answers();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            T sum(0);
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    const T &v = p(a, b, x, y);
                    sum += v;
                    if (v < T(0))
                        worst = std::max(worst, detail::magnitude(v));
                    if (x == y && a != b)
                        worst = std::max(worst, detail::magnitude(v));
                }
            worst = std::max(worst, detail::magnitude(sum - T(1)));
        }
    return worst;
}

ExactCorrelation correlation_from_deterministic(const DeterministicStrategy &f, int k_answers);

template <class T>
Correlation<T> mix(std::span<const Correlation<T>> parts, std::span<const T> weights)
{
    if (parts.empty() || parts.size() != weights.size())
        throw PreconditionError("mix needs one weight per correlation");
    T total(0);
    for (const T &w : weights) {
        if (w < T(0))
            throw PreconditionError("mix weights must be nonnegative");
        total += w;
    }
    if (detail::magnitude(total - T(1)) > 1e-12)
        throw PreconditionError("mix weights must sum to 1");
    Correlation<T> out(parts.front().questions(), parts.front().answers());
    const int n = out.questions(), k = out.answers();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].questions() != n || parts[i].answers() != k)
            throw PreconditionError("mix: dimension mismatch");
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                for (int a = 1; a <= k; ++a)
                    for (int b = 1; b <= k; ++b)
                        out.at(a, b, x, y) += weights[i] * parts[i](a, b, x, y);
    }
    return out;
}

/// p(a,b|x,y) <= tol on every zero of the rule table.
template <class T>
bool is_winning(const Correlation<T> &p, const SynchronousGame &g, double tol = 0)
{
    if (p.questions() != g.questions() || p.answers() != g.answers())
        throw PreconditionError("is_winning: dimension mismatch");
    for (const auto &t : g.zero_tuples())
        if (detail::magnitude(p(t.a, t.b, t.x, t.y)) > tol)
            return false;
    return true;
}

/// Averages the deterministic correlation of a proper k-coloring of G over
/// all k! relabellings of the colors.
ExactCorrelation symmetrize_zero_knowledge(const LabeledGraph &G, const Coloring &c, int k);

/// The part of a correlation a verifier sees when it only asks question
/// pairs on which the players could lose.
template <class T>
struct HonestView {
    std::vector<std::pair<int, int>> pairs; // (x, y), lexicographic
    std::vector<T> values;                  // k*k block per pair, (a, b) row-major

    bool operator==(const HonestView &) const = default;
};

template <class T>
HonestView<T> honest_verifier_view(const Correlation<T> &p, const SynchronousGame &g)
{
    if (p.questions() != g.questions() || p.answers() != g.answers())
        throw PreconditionError("honest_verifier_view: dimension mismatch");
    HonestView<T> view;
    const int n = g.questions(), k = g.answers();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            bool risky = false;
            for (int a = 1; a <= k && !risky; ++a)
                for (int b = 1; b <= k && !risky; ++b)
                    risky = !g.allowed(a, b, x, y);
            if (!risky)
                continue;
            view.pairs.emplace_back(x, y);
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b)
                    view.values.push_back(p(a, b, x, y));
        }
    return view;
}

/// TSV lines `a b x y numerator denominator`, lexicographic in (a, b, x, y).
void write_correlation(std::ostream &out, const ExactCorrelation &p);
/// TSV lines `a b x y value`.
void write_correlation(std::ostream &out, const NumericCorrelation &p);

} // namespace syncgame
