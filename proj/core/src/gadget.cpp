#include "syncgame/gadget.hpp"

#include "syncgame/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace syncgame {

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::scalar(std::int64_t c)
{
    LinearForm l;
    l.constant = c;
    return l;
}

LinearForm LinearForm::indicator(int a, int x)
{
    LinearForm l;
    l.terms[{a, x}] = 1;
    return l;
}

LinearForm &LinearForm::operator+=(const LinearForm &other)
{
    constant += other.constant;
    for (const auto &[key, coeff] : other.terms) {
        auto &slot = terms[key];
        slot += coeff;
        if (slot == 0)
            terms.erase(key);
    }
    return *this;
}

LinearForm &LinearForm::operator-=(const LinearForm &other)
{
    constant -= other.constant;
    for (const auto &[key, coeff] : other.terms) {
        auto &slot = terms[key];
        slot -= coeff;
        if (slot == 0)
            terms.erase(key);
    }
    return *this;
}

LinearForm LinearForm::canonical(int k) const
{
    LinearForm out = scalar(constant);
    for (const auto &[key, coeff] : terms) {
        const auto [a, x] = key;
        if (a != k) {
            out += [&] {
                LinearForm t;
                t.terms[key] = coeff;
                return t;
            }();
            continue;
        }
        LinearForm sub = scalar(coeff);
        for (int b = 1; b < k; ++b)
            sub.terms[{b, x}] = -coeff;
        out += sub;
    }
    return out;
}

std::int64_t LinearForm::evaluate(const DeterministicStrategy &f) const
{
    std::int64_t v = constant;
    for (const auto &[key, coeff] : terms)
        if (f(key.second) == key.first)
            v += coeff;
    return v;
}

Matrix LinearForm::evaluate(const PvmFamily &fam) const
{
    Matrix m = static_cast<double>(constant) * Matrix::Identity(fam.dim, fam.dim);
    for (const auto &[key, coeff] : terms)
        m += static_cast<double>(coeff) * fam(key.first, key.second);
    return m;
}

std::string to_string(const LinearForm &form)
{
    std::ostringstream os;
    os << form.constant;
    for (const auto &[key, coeff] : form.terms)
        os << (coeff < 0 ? " - " : " + ") << std::abs(coeff) << "*f(" << key.first << ',' << key.second << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Construction

namespace {

using Forms = std::array<LinearForm, 3>;

class UnionFind {
public:
    int add()
    {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    int find(int v)
    {
        while (parent_[static_cast<std::size_t>(v)] != v) {
            auto &p = parent_[static_cast<std::size_t>(v)];
            p = parent_[static_cast<std::size_t>(p)];
            v = p;
        }
        return v;
    }
    void unite(int u, int v)
    {
        u = find(u);
        v = find(v);
        if (u != v)
            parent_[static_cast<std::size_t>(std::max(u, v))] = std::min(u, v);
    }

private:
    std::vector<int> parent_;
};

struct Provisional {
    std::vector<VertexLabel> labels;
    std::vector<Forms> forms;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> merges;
    UnionFind uf;

    int add(VertexLabel label, Forms f)
    {
        labels.push_back(std::move(label));
        forms.push_back(std::move(f));
        return uf.add();
    }
};

// f_{[lo,hi],x}; empty ranges give 0.
LinearForm range(int lo, int hi, int x)
{
    LinearForm l;
    for (int c = lo; c <= hi; ++c)
        l += LinearForm::indicator(c, x);
    return l;
}

LinearForm one() { return LinearForm::scalar(1); }
LinearForm zero() { return {}; }

// Tables of the rook copy R_{α,x}; entry [c][i][j] for color c+1, vertex (i+1, j+1).
std::array<std::array<std::array<LinearForm, 3>, 3>, 3> rook_tables(int alpha, int x, int k)
{
    const LinearForm lo = range(1, alpha, x);          // f_{[1,α]}
    const LinearForm lo1 = range(1, alpha + 1, x);     // f_{[1,α+1]}
    const LinearForm hi = range(alpha + 1, k, x);      // f_{[α+1,k]}
    const LinearForm hi2 = range(alpha + 2, k, x);     // f_{[α+2,k]}
    const LinearForm mid = LinearForm::indicator(alpha + 1, x);
    return {{
        {{{lo, zero(), hi}, {mid, hi2, lo}, {hi2, lo1, zero()}}},
        {{{zero(), one(), zero()}, {one() - mid, zero(), mid}, {mid, zero(), one() - mid}}},
        {{{hi, zero(), lo}, {zero(), lo1, hi2}, {lo, hi2, mid}}},
    }};
}

// Tables of Q_{a,b,x,y} for a tuple in E; F swaps colors 2 and 3.
std::array<std::array<std::array<LinearForm, 3>, 3>, 3> ortho_tables(const RuleTuple &t, bool in_f)
{
    const LinearForm fa = LinearForm::indicator(t.a, t.x);
    const LinearForm fb = LinearForm::indicator(t.b, t.y);
    const LinearForm both = fa + fb;
    std::array<std::array<std::array<LinearForm, 3>, 3>, 3> j{{
        {{{fa, zero(), one() - fa}, {one() - both, fb, fa}, {fb, one() - fb, zero()}}},
        {{{zero(), one(), zero()}, {both, zero(), one() - both}, {one() - both, zero(), both}}},
        {{{one() - fa, zero(), fa}, {zero(), one() - fb, fb}, {fa, fb, one() - both}}},
    }};
    if (in_f)
        std::swap(j[1], j[2]);
    return j;
}

void add_rook_edges(Provisional &p, const std::array<std::array<int, 3>, 3> &v)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int i2 = 0; i2 < 3; ++i2)
                for (int j2 = 0; j2 < 3; ++j2) {
                    const int u = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    const int w = v[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
                    if (u < w && ((i == i2) != (j == j2)))
                        p.edges.emplace_back(u, w);
                }
}

void require_gadget_input(const SynchronousGame &g)
{
    if (!validate_game(g).ok())
        throw PreconditionError("build_g_lambda: game is not synchronous");
    if (g.questions() < 2 || g.answers() < 3)
        throw PreconditionError("build_g_lambda needs n >= 2 and k >= 3 (pad the game first)");
    if (!has_unit_diagonal(g))
        throw PreconditionError("build_g_lambda needs rule(a,a,x,x) = 1 (normalise the game first)");
    if (!is_asymmetric(g))
        throw PreconditionError("build_g_lambda needs an asymmetric rule table");
}

bool is_base(const VertexLabel &l) { return std::holds_alternative<BaseLabel>(l); }

} // namespace

int GadgetGraph::special_vertex(int a, int x) const
{
    const int k = game.answers();
    if (a < 1 || a > k || x < 1 || x > game.questions())
        throw PreconditionError("special vertex index out of range");
    return special.at(static_cast<std::size_t>((x - 1) * k + (a - 1)));
}

std::size_t vertex_count_formula(const SynchronousGame &g_asym)
{
    const auto n = static_cast<std::size_t>(g_asym.questions());
    const auto k = static_cast<std::size_t>(g_asym.answers());
    return 3 + n + 9 * n * (k - 2) + 6 * classify_zero_tuples(g_asym).gadget_count();
}

std::size_t vertex_count_upper_bound(const SynchronousGame &g_asym)
{
    const auto n = static_cast<std::size_t>(g_asym.questions());
    const auto k = static_cast<std::size_t>(g_asym.answers());
    return 3 + n + 9 * n * (k - 2) + 6 * g_asym.off_diagonal_zero_tuples().size();
}

GadgetGraph build_g_lambda(const SynchronousGame &g)
{
    require_gadget_input(g);
    const int n = g.questions();
    const int k = g.answers();
    const auto classification = classify_zero_tuples(g);

    Provisional p;
    const int A = p.add(BaseLabel{BaseVertex::A}, {one(), zero(), zero()});
    const int B = p.add(BaseLabel{BaseVertex::B}, {zero(), one(), zero()});
    const int C = p.add(BaseLabel{BaseVertex::C}, {zero(), zero(), one()});
    p.edges = {{A, B}, {B, C}, {A, C}};

    // rook[x-1][α-1][i-1][j-1]
    std::vector<std::vector<std::array<std::array<int, 3>, 3>>> rook(
        static_cast<std::size_t>(n), std::vector<std::array<std::array<int, 3>, 3>>(static_cast<std::size_t>(k - 2)));
    for (int x = 1; x <= n; ++x)
        for (int alpha = 1; alpha <= k - 2; ++alpha) {
            const auto h = rook_tables(alpha, x, k);
            auto &v = rook[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(alpha - 1)];
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const auto si = static_cast<std::size_t>(i - 1), sj = static_cast<std::size_t>(j - 1);
                    v[si][sj] = p.add(RookLabel{i, j, alpha, x}, {h[0][si][sj], h[1][si][sj], h[2][si][sj]});
                }
            add_rook_edges(p, v);
            p.merges.emplace_back(v[0][1], B);
            p.edges.emplace_back(A, v[2][2]);
            p.edges.emplace_back(C, v[1][0]);

            const LinearForm lo = range(1, alpha, x);
            const LinearForm hi = range(alpha + 1, k, x);
            const int t1 = p.add(PrismLabel{1, alpha, x}, {zero(), hi, lo});
            const int t2 = p.add(PrismLabel{2, alpha, x}, {zero(), lo, hi});
            // Triangle {v11, B, v13} is already present through the rook rows.
            p.edges.emplace_back(t1, A);
            p.edges.emplace_back(A, t2);
            p.edges.emplace_back(t1, t2);
            p.edges.emplace_back(v[0][0], t1);
            p.edges.emplace_back(B, A);
            p.edges.emplace_back(v[0][2], t2);
        }
    for (int x = 1; x <= n; ++x)
        for (int alpha = 1; alpha <= k - 3; ++alpha)
            p.merges.emplace_back(rook[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(alpha - 1)][2][1],
                                  rook[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(alpha)][0][0]);

    auto special_provisional = [&](int a, int x) {
        const auto &rx = rook[static_cast<std::size_t>(x - 1)];
        if (a == 1)
            return rx[0][0][0];
        if (a == k)
            return rx[static_cast<std::size_t>(k - 3)][1][1];
        return rx[static_cast<std::size_t>(a - 2)][1][0];
    };

    std::vector<std::pair<RuleTuple, bool>> gadgets; // (tuple, in F)
    for (const auto &t : classification.e_set)
        gadgets.emplace_back(t, false);
    for (const auto &t : classification.f_set)
        gadgets.emplace_back(t, true);
    std::sort(gadgets.begin(), gadgets.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
    {
        std::set<RuleTuple> seen;
        for (const auto &[t, in_f] : gadgets)
            seen.insert(t);
        for (const auto &[t, in_f] : gadgets)
            if (seen.count(RuleTuple{t.b, t.a, t.y, t.x}))
                throw InternalError("both " + to_string(t) + " and its reverse need a gadget");
    }
    for (const auto &[t, in_f] : gadgets) {
        const auto j = ortho_tables(t, in_f);
        std::array<std::array<int, 3>, 3> q{};
        for (int i = 1; i <= 3; ++i)
            for (int jj = 1; jj <= 3; ++jj) {
                const auto si = static_cast<std::size_t>(i - 1), sj = static_cast<std::size_t>(jj - 1);
                q[si][sj] = p.add(OrthoRookLabel{i, jj, t.a, t.b, t.x, t.y}, {j[0][si][sj], j[1][si][sj], j[2][si][sj]});
            }
        add_rook_edges(p, q);
        p.edges.emplace_back(A, q[2][2]);
        p.merges.emplace_back(q[0][0], special_provisional(t.a, t.x));
        p.merges.emplace_back(q[1][1], special_provisional(t.b, t.y));
        p.merges.emplace_back(q[0][1], in_f ? C : B);
    }
    for (const auto &t : classification.case1_set)
        p.edges.emplace_back(special_provisional(t.a, t.x), special_provisional(t.b, t.y));

    // Merge, refusing to identify two distinct base vertices.
    const auto count = p.labels.size();
    for (auto [u, v] : p.merges) {
        const int ru = p.uf.find(u), rv = p.uf.find(v);
        if (ru != rv && is_base(p.labels[static_cast<std::size_t>(ru)]) &&
            is_base(p.labels[static_cast<std::size_t>(rv)]))
            throw InternalError("merge would identify " + to_string(p.labels[static_cast<std::size_t>(ru)]) + " and " +
                                to_string(p.labels[static_cast<std::size_t>(rv)]));
        // Union keeps the smaller provisional index as root; base vertices
        // come first, so a base vertex always stays its class root.
        p.uf.unite(u, v);
    }

    // Classes in order of first appearance (the root is the smallest member).
    std::vector<int> class_of(count, -1);
    std::vector<std::vector<int>> members;
    for (std::size_t v = 0; v < count; ++v) {
        const auto root = static_cast<std::size_t>(p.uf.find(static_cast<int>(v)));
        if (class_of[root] < 0) {
            class_of[root] = static_cast<int>(members.size());
            members.emplace_back();
        }
        class_of[v] = class_of[root];
        members[static_cast<std::size_t>(class_of[v])].push_back(static_cast<int>(v));
    }

    GadgetGraph gg{g, {}, classification, {}, {}, {}, {}};
    GraphBuilder builder;
    gg.tables.reserve(members.size());
    gg.aliases.reserve(members.size());
    for (const auto &cls : members) {
        std::vector<VertexLabel> labels;
        labels.reserve(cls.size());
        for (int v : cls)
            labels.push_back(p.labels[static_cast<std::size_t>(v)]);
        std::sort(labels.begin(), labels.end());

        Forms canonical;
        for (std::size_t c = 0; c < 3; ++c)
            canonical[c] = p.forms[static_cast<std::size_t>(cls.front())][c].canonical(k);
        for (int v : cls)
            for (std::size_t c = 0; c < 3; ++c)
                if (p.forms[static_cast<std::size_t>(v)][c].canonical(k) != canonical[c])
                    throw InternalError("color table disagrees between merged labels " +
                                        to_string(p.labels[static_cast<std::size_t>(cls.front())]) + " and " +
                                        to_string(p.labels[static_cast<std::size_t>(v)]));

        // Tallies follow first appearance, so a chain merge counts towards
        // the earlier rook copy.
        std::visit(
            [&](const auto &l) {
                using L = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<L, BaseLabel>)
                    ++gg.counts.base;
                else if constexpr (std::is_same_v<L, RookLabel>)
                    ++(l.alpha == 1 ? gg.counts.rook_first : gg.counts.rook_rest);
                else if constexpr (std::is_same_v<L, PrismLabel>)
                    ++gg.counts.prism;
                else if constexpr (std::is_same_v<L, OrthoRookLabel>)
                    ++gg.counts.ortho;
            },
            p.labels[static_cast<std::size_t>(cls.front())]);
        builder.add_vertex(labels.front());
        gg.tables.push_back(std::move(canonical));
        gg.aliases.push_back(std::move(labels));
    }
    for (auto [u, v] : p.edges) {
        const int cu = class_of[static_cast<std::size_t>(u)], cv = class_of[static_cast<std::size_t>(v)];
        if (cu == cv)
            throw InternalError("edge " + to_string(p.labels[static_cast<std::size_t>(u)]) + " ~ " +
                                to_string(p.labels[static_cast<std::size_t>(v)]) + " collapsed to a loop");
        builder.add_edge(cu, cv);
    }
    gg.graph = std::move(builder).build();

    gg.special.resize(static_cast<std::size_t>(n * k));
    for (int x = 1; x <= n; ++x)
        for (int a = 1; a <= k; ++a)
            gg.special[static_cast<std::size_t>((x - 1) * k + (a - 1))] =
                class_of[static_cast<std::size_t>(special_provisional(a, x))];

    if (static_cast<std::size_t>(gg.graph.order()) != vertex_count_formula(g))
        throw InternalError("gadget graph has " + std::to_string(gg.graph.order()) + " vertices, formula gives " +
                            std::to_string(vertex_count_formula(g)));
    return gg;
}

// ---------------------------------------------------------------------------
// Classical translations

Coloring strategy_to_coloring(const GadgetGraph &gg, const DeterministicStrategy &f)
{
    if (f.questions() != gg.game.questions() || !wins(gg.game, f))
        throw PreconditionError("strategy_to_coloring needs a winning strategy of the gadget's game");
    Coloring c;
    c.colors.resize(static_cast<std::size_t>(gg.graph.order()));
    for (int v = 0; v < gg.graph.order(); ++v) {
        int chosen = 0;
        for (int col = 1; col <= 3; ++col) {
            const auto value = gg.tables[static_cast<std::size_t>(v)][static_cast<std::size_t>(col - 1)].evaluate(f);
            if (value != 0 && value != 1)
                throw InternalError("color table of " + to_string(gg.graph.label(v)) + " evaluates to " +
                                    std::to_string(value));
            if (value == 1) {
                if (chosen != 0)
                    throw InternalError("vertex " + to_string(gg.graph.label(v)) + " receives two colors");
                chosen = col;
            }
        }
        if (chosen == 0)
            throw InternalError("vertex " + to_string(gg.graph.label(v)) + " receives no color");
        c.colors[static_cast<std::size_t>(v)] = chosen;
    }
    if (!is_proper_coloring(gg.graph, c, 3))
        throw InternalError("strategy_to_coloring produced an improper coloring");
    return c;
}

DeterministicStrategy coloring_to_strategy(const GadgetGraph &gg, const Coloring &c)
{
    if (!is_proper_coloring(gg.graph, c, 3))
        throw PreconditionError("coloring_to_strategy needs a proper 3-coloring of the gadget graph");
    std::array<int, 4> relabel{};
    relabel[static_cast<std::size_t>(c[GadgetGraph::vertex_a])] = 1;
    relabel[static_cast<std::size_t>(c[GadgetGraph::vertex_b])] = 2;
    relabel[static_cast<std::size_t>(c[GadgetGraph::vertex_c])] = 3;

    const int n = gg.game.questions(), k = gg.game.answers();
    std::vector<int> answers(static_cast<std::size_t>(n), 0);
    for (int x = 1; x <= n; ++x) {
        int hits = 0;
        for (int a = 1; a <= k; ++a)
            if (relabel[static_cast<std::size_t>(c[gg.special_vertex(a, x)])] == 1) {
                ++hits;
                answers[static_cast<std::size_t>(x - 1)] = a;
            }
        if (hits != 1)
            throw InternalError("question " + std::to_string(x) + " has " + std::to_string(hits) +
                                " special vertices of color 1");
    }
    DeterministicStrategy f(std::move(answers));
    if (!wins(gg.game, f))
        throw InternalError("coloring_to_strategy produced a losing strategy " + to_string(f));
    return f;
}

OperatorPushforward operator_strategy_to_operator_coloring(const GadgetGraph &gg, const PvmFamily &fam, double tol)
{
    if (fam.n != gg.game.questions() || fam.k != gg.game.answers())
        throw PreconditionError("PVM family does not match the gadget's game");
    const auto pvm = validate_pvm(fam);
    if (pvm.max_residual() > fam.tol) {
        std::ostringstream os;
        os << "PVM family invalid: residual " << pvm.max_residual() << " at question " << pvm.worst_question;
        throw PreconditionError(os.str());
    }
    for (const auto &t : gg.game.off_diagonal_zero_tuples()) {
        const double r = operator_norm(fam(t.a, t.x) * fam(t.b, t.y));
        if (r > tol) {
            std::ostringstream os;
            os << "PVM family loses at " << to_string(t) << " (‖E E‖ = " << r << ")";
            throw PreconditionError(os.str());
        }
    }

    OperatorPushforward out;
    out.coloring.dim = fam.dim;
    out.coloring.colors = 3;
    out.coloring.projectors.resize(static_cast<std::size_t>(gg.graph.order()));
    for (int v = 0; v < gg.graph.order(); ++v) {
        auto &slot = out.coloring.projectors[static_cast<std::size_t>(v)];
        slot.reserve(3);
        for (const auto &form : gg.tables[static_cast<std::size_t>(v)])
            slot.push_back(form.evaluate(fam));
    }
    out.report = check_operator_coloring(gg.graph, out.coloring);
    if (!out.report.ok(tol)) {
        std::ostringstream os;
        os << "operator coloring misses tolerance " << tol << ": projection " << out.report.projection
           << ", completeness " << out.report.completeness;
        if (out.report.worst_vertex >= 0)
            os << " (worst vertex " << to_string(gg.graph.label(out.report.worst_vertex)) << ")";
        os << ", orthogonality " << out.report.orthogonality;
        if (out.report.worst_edge.first >= 0)
            os << " (worst edge " << to_string(gg.graph.label(out.report.worst_edge.first)) << " ~ "
               << to_string(gg.graph.label(out.report.worst_edge.second)) << ", color " << out.report.worst_color
               << ")";
        throw Error(os.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pipeline

DeterministicStrategy ColoringReduction::to_gadget_strategy(const DeterministicStrategy &original) const
{
    return relabel_strategy(prepared.lift(original), relabeling);
}

DeterministicStrategy ColoringReduction::from_gadget_strategy(const DeterministicStrategy &f) const
{
    return prepared.restrict(relabel_strategy(f, inverse(relabeling)));
}

ColoringReduction reduce_to_coloring(const SynchronousGame &g, bool search_labels, const LabelingBudget &budget)
{
    PreparedGame prepared = prepare_game(g);
    const auto &asym = prepared.prepared;
    AnswerRelabeling relabeling = search_labels ? search_labeling(asym, budget).perms
                                                : identity_relabeling(asym.questions(), asym.answers());
    GadgetGraph gadget = build_g_lambda(relabel_answers(asym, relabeling));
    return ColoringReduction{std::move(prepared), std::move(relabeling), std::move(gadget)};
}

} // namespace syncgame
