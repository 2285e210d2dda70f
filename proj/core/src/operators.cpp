#include "syncgame/operators.hpp"

#include "syncgame/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace syncgame {

double operator_norm(const Matrix &m)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double commutator_norm(const Matrix &a, const Matrix &b)
{
    return operator_norm(a * b - b * a);
}

double projection_residual(const Matrix &p)
{
    return std::max(operator_norm(p * p - p), operator_norm(p - p.adjoint()));
}

PvmFamily::PvmFamily(int dim_, int n_questions, int k_answers, double tol_)
    : dim(dim_), n(n_questions), k(k_answers), tol(tol_),
      projectors(static_cast<std::size_t>(n_questions) * static_cast<std::size_t>(k_answers), Matrix::Zero(dim_, dim_))
{
    if (dim_ < 1 || n_questions < 1 || k_answers < 1)
        throw PreconditionError("PvmFamily needs positive dim, n and k");
}

std::size_t PvmFamily::slot(int a, int x) const
{
    if (a < 1 || a > k || x < 1 || x > n)
        throw PreconditionError("PVM index out of range");
    return static_cast<std::size_t>((x - 1) * k + (a - 1));
}

PvmReport validate_pvm(const PvmFamily &fam)
{
    if (fam.dim < 1 || fam.projectors.size() != static_cast<std::size_t>(fam.n) * static_cast<std::size_t>(fam.k))
        throw PreconditionError("PVM family has the wrong number of projectors");
    for (const auto &p : fam.projectors)
        if (p.rows() != fam.dim || p.cols() != fam.dim)
            throw PreconditionError("PVM projector has the wrong shape");

    PvmReport r;
    const Matrix id = Matrix::Identity(fam.dim, fam.dim);
    double worst_question_residual = -1;
    for (int x = 1; x <= fam.n; ++x) {
        Matrix sum = Matrix::Zero(fam.dim, fam.dim);
        double here = 0;
        for (int a = 1; a <= fam.k; ++a) {
            const Matrix &p = fam(a, x);
            const double idem = operator_norm(p * p - p);
            const double adj = operator_norm(p - p.adjoint());
            r.idempotency = std::max(r.idempotency, idem);
            r.self_adjointness = std::max(r.self_adjointness, adj);
            here = std::max({here, idem, adj});
            sum += p;
        }
        const double comp = operator_norm(sum - id);
        r.completeness = std::max(r.completeness, comp);
        here = std::max(here, comp);
        if (here > worst_question_residual) {
            worst_question_residual = here;
            r.worst_question = x;
        }
    }
    return r;
}

bool is_valid_pvm(const PvmFamily &fam)
{
    return validate_pvm(fam).max_residual() <= fam.tol;
}

namespace {

void require_valid(const PvmFamily &fam, const char *what)
{
    const auto r = validate_pvm(fam);
    if (r.max_residual() > fam.tol) {
        std::ostringstream os;
        os << what << ": PVM family invalid (residual " << r.max_residual() << " at question " << r.worst_question
           << ", tol " << fam.tol << ")";
        throw PreconditionError(os.str());
    }
}

Matrix kron(const Matrix &a, const Matrix &b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix direct_sum(const std::vector<Matrix> &blocks)
{
    Eigen::Index d = 0;
    for (const auto &b : blocks)
        d += b.rows();
    Matrix out = Matrix::Zero(d, d);
    Eigen::Index at = 0;
    for (const auto &b : blocks) {
        out.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return out;
}

} // namespace

NumericCorrelation correlation_from_tracial(const PvmFamily &fam)
{
    require_valid(fam, "correlation_from_tracial");
    NumericCorrelation p(fam.n, fam.k);
    for (int x = 1; x <= fam.n; ++x)
        for (int y = 1; y <= fam.n; ++y)
            for (int a = 1; a <= fam.k; ++a)
                for (int b = 1; b <= fam.k; ++b)
                    p.at(a, b, x, y) = (fam(a, x) * fam(b, y)).trace().real() / fam.dim;
    return p;
}

PvmFamily mermin_peres_fixture()
{
    using C = std::complex<double>;
    Matrix I2 = Matrix::Identity(2, 2);
    Matrix X(2, 2), Y(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Y << 0, C(0, -1), C(0, 1), 0;
    Z << 1, 0, 0, -1;

    // Grid variables 1..9, row-major. Every row and the first two columns
    // multiply to +I; the third column multiplies to -I.
    const std::array<Matrix, 9> obs{
        kron(X, I2), kron(I2, X), kron(X, X),
        kron(I2, Z), kron(Z, I2), kron(Z, Z),
        kron(X, Z),  kron(Z, X),  kron(Y, Y),
    };
    const Matrix id = Matrix::Identity(4, 4);

    PvmFamily fam(4, 6, 4, 1e-9);
    for (int x = 1; x <= 6; ++x) {
        const auto vars = magic_square_variables(x);
        const auto sols = magic_square_solutions(x);
        for (int a = 1; a <= 4; ++a) {
            Matrix p = id;
            for (std::size_t i = 0; i < 3; ++i) {
                const double sign = sols[static_cast<std::size_t>(a - 1)][i] == 0 ? 1.0 : -1.0;
                p = p * (0.5 * (id + sign * obs[static_cast<std::size_t>(vars[i] - 1)]));
            }
            fam.at(a, x) = p;
        }
    }
    return fam;
}

PvmFamily embed_deterministic(const DeterministicStrategy &f, int k_answers)
{
    PvmFamily fam(1, f.questions(), k_answers, 0);
    for (int x = 1; x <= f.questions(); ++x) {
        if (f(x) < 1 || f(x) > k_answers)
            throw PreconditionError("strategy answer out of range at question " + std::to_string(x));
        fam.at(f(x), x)(0, 0) = 1;
    }
    return fam;
}

Matrix random_unitary(int dim, std::uint64_t seed)
{
    if (dim < 1)
        throw PreconditionError("random_unitary needs dim >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = {re, im};
        }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix &r = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        const auto d = r(j, j);
        if (std::abs(d) > 0)
            q.col(j) *= d / std::abs(d);
    }
    return q;
}

PvmFamily zero_knowledge_family(const PvmFamily &fam, int max_dim)
{
    require_valid(fam, "zero_knowledge_family");
    std::vector<int> sigma(static_cast<std::size_t>(fam.k));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(sigma);
        if (static_cast<long long>(perms.size()) * fam.dim > max_dim)
            throw PreconditionError("zero-knowledge family exceeds the dimension cap of " + std::to_string(max_dim));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    const int big = static_cast<int>(perms.size()) * fam.dim;
    PvmFamily out(big, fam.n, fam.k, fam.tol);
    for (int x = 1; x <= fam.n; ++x)
        for (int a = 1; a <= fam.k; ++a) {
            std::vector<Matrix> blocks;
            blocks.reserve(perms.size());
            for (const auto &s : perms)
                blocks.push_back(fam(s[static_cast<std::size_t>(a - 1)], x));
            out.at(a, x) = direct_sum(blocks);
        }
    return out;
}

NumericCorrelation symmetrize_zero_knowledge_operator(const PvmFamily &fam, int max_dim)
{
    return correlation_from_tracial(zero_knowledge_family(fam, max_dim));
}

QuantumPermutation3 random_quantum_permutation_3(std::span<const PermBlock> blocks, std::uint64_t seed)
{
    std::vector<Perm3> diagonal;
    for (const auto &b : blocks) {
        auto sorted = b.sigma;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != Perm3{1, 2, 3})
            throw PreconditionError("quantum permutation block is not a permutation of {1,2,3}");
        if (b.multiplicity < 0)
            throw PreconditionError("negative block multiplicity");
        for (int m = 0; m < b.multiplicity; ++m)
            diagonal.push_back(b.sigma);
    }
    if (diagonal.empty())
        throw PreconditionError("quantum permutation needs at least one block");

    const int dim = static_cast<int>(diagonal.size());
    const Matrix u = random_unitary(dim, seed);
    QuantumPermutation3 q;
    q.dim = dim;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Matrix d = Matrix::Zero(dim, dim);
            for (int l = 0; l < dim; ++l)
                if (diagonal[static_cast<std::size_t>(l)][static_cast<std::size_t>(i - 1)] == j)
                    d(l, l) = 1;
            q.entries[static_cast<std::size_t>(3 * (i - 1) + (j - 1))] = u * d * u.adjoint();
        }
    return q;
}

std::vector<std::array<int, 9>> latin_squares_3()
{
    std::vector<std::array<int, 9>> out;
    std::array<int, 9> s{};
    std::function<void(int)> fill = [&](int cell) {
        if (cell == 9) {
            out.push_back(s);
            return;
        }
        const int r = cell / 3, c = cell % 3;
        for (int v = 1; v <= 3; ++v) {
            bool ok = true;
            for (int t = 0; t < 3; ++t) {
                if (t < c && s[static_cast<std::size_t>(3 * r + t)] == v)
                    ok = false;
                if (t < r && s[static_cast<std::size_t>(3 * t + c)] == v)
                    ok = false;
            }
            if (ok) {
                s[static_cast<std::size_t>(cell)] = v;
                fill(cell + 1);
            }
        }
    };
    fill(0);
    return out;
}

LatinCube random_latin_cube(int blocks, std::uint64_t seed)
{
    if (blocks < 1)
        throw PreconditionError("random_latin_cube needs at least one block");
    const auto squares = latin_squares_3();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, squares.size() - 1);
    std::vector<std::size_t> chosen(static_cast<std::size_t>(blocks));
    for (auto &c : chosen)
        c = pick(rng);

    const Matrix u = random_unitary(blocks, seed ^ 0x9e3779b97f4a7c15ULL);
    LatinCube cube;
    cube.dim = blocks;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                Matrix d = Matrix::Zero(blocks, blocks);
                for (int l = 0; l < blocks; ++l)
                    if (squares[chosen[static_cast<std::size_t>(l)]][static_cast<std::size_t>(3 * (i - 1) + (j - 1))] == k)
                        d(l, l) = 1;
                cube.entries[static_cast<std::size_t>(9 * (i - 1) + 3 * (j - 1) + (k - 1))] = u * d * u.adjoint();
            }
    return cube;
}

OperatorColoringReport check_operator_coloring(const LabeledGraph &G, const OperatorColoring &oc)
{
    if (static_cast<int>(oc.projectors.size()) != G.order())
        throw PreconditionError("operator coloring does not cover every vertex");
    OperatorColoringReport r;
    const Matrix id = Matrix::Identity(oc.dim, oc.dim);
    double worst_vertex_residual = -1;
    for (int v = 0; v < G.order(); ++v) {
        if (static_cast<int>(oc.projectors[static_cast<std::size_t>(v)].size()) != oc.colors)
            throw PreconditionError("operator coloring has the wrong number of colors at a vertex");
        Matrix sum = Matrix::Zero(oc.dim, oc.dim);
        double here = 0;
        for (int c = 1; c <= oc.colors; ++c) {
            const double pr = projection_residual(oc(v, c));
            r.projection = std::max(r.projection, pr);
            here = std::max(here, pr);
            sum += oc(v, c);
        }
        const double comp = operator_norm(sum - id);
        r.completeness = std::max(r.completeness, comp);
        here = std::max(here, comp);
        if (here > worst_vertex_residual) {
            worst_vertex_residual = here;
            r.worst_vertex = v;
        }
    }
    double worst_edge_residual = -1;
    for (auto [u, v] : G.edges())
        for (int c = 1; c <= oc.colors; ++c) {
            const double o = operator_norm(oc(u, c) * oc(v, c));
            r.orthogonality = std::max(r.orthogonality, o);
            if (o > worst_edge_residual) {
                worst_edge_residual = o;
                r.worst_edge = {u, v};
                r.worst_color = c;
            }
        }
    return r;
}

OperatorColoring random_operator_coloring(const LabeledGraph &G, int colors, int blocks, std::uint64_t seed)
{
    if (G.order() > 12)
        throw PreconditionError("random_operator_coloring enumerates colorings; graph too large");
    if (colors < 1 || blocks < 1)
        throw PreconditionError("random_operator_coloring needs colors >= 1 and blocks >= 1");

    std::vector<std::vector<int>> proper;
    std::vector<int> current(static_cast<std::size_t>(G.order()), 0);
    std::function<void(int)> extend = [&](int v) {
        if (v == G.order()) {
            proper.push_back(current);
            return;
        }
        for (int c = 1; c <= colors; ++c) {
            bool ok = true;
            for (int w : G.neighbours(v))
                if (w < v && current[static_cast<std::size_t>(w)] == c)
                    ok = false;
            if (ok) {
                current[static_cast<std::size_t>(v)] = c;
                extend(v + 1);
            }
        }
    };
    extend(0);
    if (proper.empty())
        throw PreconditionError("graph has no proper coloring with the requested number of colors");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, proper.size() - 1);
    std::vector<std::size_t> chosen(static_cast<std::size_t>(blocks));
    for (auto &c : chosen)
        c = pick(rng);

    const Matrix u = random_unitary(blocks, seed ^ 0x5bd1e995ULL);
    OperatorColoring oc;
    oc.dim = blocks;
    oc.colors = colors;
    oc.projectors.assign(static_cast<std::size_t>(G.order()), std::vector<Matrix>(static_cast<std::size_t>(colors)));
    for (int v = 0; v < G.order(); ++v)
        for (int c = 1; c <= colors; ++c) {
            Matrix d = Matrix::Zero(blocks, blocks);
            for (int l = 0; l < blocks; ++l)
                if (proper[chosen[static_cast<std::size_t>(l)]][static_cast<std::size_t>(v)] == c)
                    d(l, l) = 1;
            oc.projectors[static_cast<std::size_t>(v)][static_cast<std::size_t>(c - 1)] = u * d * u.adjoint();
        }
    return oc;
}

void write_pvm(std::ostream &out, const PvmFamily &fam)
{
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    out << "pvm " << fam.dim << ' ' << fam.n << ' ' << fam.k << ' ' << fam.tol << '\n';
    for (int x = 1; x <= fam.n; ++x)
        for (int a = 1; a <= fam.k; ++a) {
            const Matrix &p = fam(a, x);
            for (int i = 0; i < fam.dim; ++i)
                for (int j = 0; j < fam.dim; ++j)
                    out << p(i, j).real() << ' ' << p(i, j).imag() << '\n';
        }
    out.flags(flags);
    out.precision(precision);
}

PvmFamily read_pvm(std::istream &in)
{
    std::string tag;
    int dim = 0, n = 0, k = 0;
    double tol = 0;
    if (!(in >> tag >> dim >> n >> k >> tol) || tag != "pvm" || dim < 1 || n < 1 || k < 1 || tol < 0)
        throw ParseError("bad PVM header");
    PvmFamily fam(dim, n, k, tol);
    for (int x = 1; x <= n; ++x)
        for (int a = 1; a <= k; ++a) {
            Matrix &p = fam.at(a, x);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    double re = 0, im = 0;
                    if (!(in >> re >> im))
                        throw ParseError("PVM dump ends early");
                    p(i, j) = {re, im};
                }
        }
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing input after PVM dump: " + rest);
    return fam;
}

} // namespace syncgame
