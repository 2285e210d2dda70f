#include "manifest.hpp"

#include "syncgame/correlation.hpp"
#include "syncgame/errors.hpp"
#include "syncgame/gadget.hpp"
#include "syncgame/game.hpp"
#include "syncgame/game_graph.hpp"
#include "syncgame/game_io.hpp"
#include "syncgame/graph_io.hpp"
#include "syncgame/operators.hpp"
#include "syncgame/solvers.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace syncgame;
using syncgame::cli::RunManifest;

namespace {

constexpr int exit_bad_input = 64;
constexpr int exit_internal = 70;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget_ms;
    std::optional<std::uint64_t> budget_nodes;
    double tol = 1e-8;
    int colors = 3;
    std::string manifest;
};

struct Context {
    GlobalOptions opts;
    std::vector<std::string> arguments;

    SearchBudget budget() const
    {
        SearchBudget b;
        if (opts.budget_ms)
            b.max_millis = *opts.budget_ms;
        if (opts.budget_nodes)
            b.max_nodes = *opts.budget_nodes;
        b.seed = opts.seed;
        return b;
    }

    RunManifest manifest(const std::string &command) const
    {
        RunManifest m(command, arguments);
        m.set_seed(opts.seed);
        m.set_budget(opts.budget_ms, opts.budget_nodes);
        return m;
    }

    // Saves to --manifest, or to the default path when one applies.
    void save(const RunManifest &m, const std::string &default_path = {}) const
    {
        const std::string &path = opts.manifest.empty() ? default_path : opts.manifest;
        if (!path.empty())
            m.save(path);
    }
};

SynchronousGame load_game(const std::string &path)
{
    auto g = read_game_file(path);
    const auto report = validate_game(g);
    if (!report.ok())
        throw ParseError(path + ": " + report.violations.front().message);
    return g;
}

template <class T>
std::string render(const T &write)
{
    std::ostringstream os;
    write(os);
    return os.str();
}

// ---------------------------------------------------------------------------

int cmd_reduce_coloring(const Context &ctx, const std::string &game_path, const std::string &prefix, bool search)
{
    auto m = ctx.manifest("reduce-coloring");
    m.add_input(game_path);
    const auto g = load_game(game_path);

    LabelingBudget lb;
    lb.seed = ctx.opts.seed;
    const auto r = reduce_to_coloring(g, search, lb);
    const auto &gg = r.gadget;
    const auto formula = vertex_count_formula(gg.game);
    const auto bound = vertex_count_upper_bound(gg.game);

    std::cout << "questions " << g.questions() << " (prepared " << gg.game.questions() << ")\n"
              << "answers " << g.answers() << " (prepared " << gg.game.answers() << ")\n"
              << "zero tuples " << gg.game.off_diagonal_zero_tuples().size() << "\n"
              << "E " << gg.classification.e_set.size() << "\n"
              << "F " << gg.classification.f_set.size() << "\n"
              << "case1 " << gg.classification.case1_set.size() << "\n"
              << "vertices " << gg.graph.order() << " (formula " << formula << ", upper bound " << bound << ")\n"
              << "edges " << gg.graph.size() << "\n"
              << "contributions base " << gg.counts.base << ", first rooks " << gg.counts.rook_first
              << ", chained rooks " << gg.counts.rook_rest << ", prisms " << gg.counts.prism << ", orthogonality rooks "
              << gg.counts.ortho << "\n";
    if (static_cast<std::size_t>(gg.graph.order()) != formula) {
        std::cerr << "vertex count disagrees with the formula\n";
        return exit_internal;
    }

    m.write_output(prefix + ".dimacs", render([&](std::ostream &os) { write_dimacs(os, gg.graph); }));
    m.write_output(prefix + ".labels", render([&](std::ostream &os) { write_labels(os, gg.graph); }));
    m.write_output(prefix + ".special", render([&](std::ostream &os) {
                       for (int x = 1; x <= gg.game.questions(); ++x)
                           for (int a = 1; a <= gg.game.answers(); ++a)
                               os << a << ' ' << x << ' ' << gg.special_vertex(a, x) + 1 << '\n';
                   }));
    ctx.save(m, prefix + ".manifest.json");
    return 0;
}

int cmd_reduce_independence(const Context &ctx, const std::string &game_path, const std::string &prefix)
{
    auto m = ctx.manifest("reduce-independence");
    m.add_input(game_path);
    const auto g = load_game(game_path);
    const auto prepared = prepare_game(g, 2, g.answers());
    const auto X = build_x_graph(prepared.prepared);
    std::cout << "questions " << X.n << "\n"
              << "answers " << X.k << "\n"
              << "vertices " << X.graph.order() << "\n"
              << "edges " << X.graph.size() << "\n";
    m.write_output(prefix + ".dimacs", render([&](std::ostream &os) { write_dimacs(os, X.graph); }));
    m.write_output(prefix + ".labels", render([&](std::ostream &os) {
                       for (int v = 0; v < X.graph.order(); ++v) {
                           const auto [a, x] = X.pair(v);
                           os << v + 1 << "\t(" << a << ',' << x << ")\n";
                       }
                   }));
    ctx.save(m, prefix + ".manifest.json");
    return 0;
}

int cmd_roundtrip(const Context &ctx, const std::string &game_path)
{
    auto m = ctx.manifest("roundtrip");
    m.add_input(game_path);
    const auto g = load_game(game_path);
    const auto budget = ctx.budget();
    bool inconclusive = false;
    std::vector<std::string> problems;

    // Oracle: direct strategy search.
    const auto direct = find_deterministic_strategy(g, budget);
    inconclusive |= direct.status == SearchStatus::Inconclusive;
    std::cout << "strategy search: " << to_string(direct.status);
    if (direct.certificate)
        std::cout << " " << to_string(*direct.certificate);
    std::cout << "\n";

    // Three-coloring route.
    const auto r = reduce_to_coloring(g);
    const auto coloring = find_gadget_coloring(r.gadget, budget);
    inconclusive |= coloring.status == SearchStatus::Inconclusive;
    std::cout << "gadget 3-coloring (" << r.gadget.graph.order() << " vertices): " << to_string(coloring.status)
              << "\n";
    if (coloring.certificate) {
        const auto f = r.from_gadget_strategy(coloring_to_strategy(r.gadget, *coloring.certificate));
        if (!wins(g, f))
            problems.push_back("coloring certificate maps to a losing strategy");
        std::cout << "  strategy from coloring: " << to_string(f) << "\n";
    }
    if (direct.certificate) {
        const auto lifted = r.to_gadget_strategy(*direct.certificate);
        const auto c = strategy_to_coloring(r.gadget, lifted);
        if (coloring_to_strategy(r.gadget, c) != lifted)
            problems.push_back("strategy -> coloring -> strategy is not the identity");
        else
            std::cout << "  strategy -> coloring -> strategy: identity\n";
    }

    // Independence route.
    const auto prepared = prepare_game(g, 2, g.answers());
    const auto X = build_x_graph(prepared.prepared);
    const auto alpha = independence_number(X.graph, budget);
    inconclusive |= !alpha.exact;
    std::cout << "independence number of X (" << X.graph.order() << " vertices): " << alpha.value
              << (alpha.exact ? "" : " (lower bound, inconclusive)") << ", questions " << X.n << "\n";
    if (alpha.value == X.n) {
        const auto f = prepared.restrict(independent_set_to_strategy(X, prepared.prepared, alpha.clique));
        if (!wins(g, f))
            problems.push_back("independent set maps to a losing strategy");
        std::cout << "  strategy from independent set: " << to_string(f) << "\n";
    }
    if (alpha.value > X.n)
        problems.push_back("independence number exceeds the number of questions");
    if (direct.certificate) {
        const auto lifted = prepared.lift(*direct.certificate);
        const auto s = strategy_to_independent_set(X, prepared.prepared, lifted);
        if (independent_set_to_strategy(X, prepared.prepared, s) != lifted)
            problems.push_back("strategy -> independent set -> strategy is not the identity");
        else
            std::cout << "  strategy -> independent set -> strategy: identity\n";
    }

    if (!inconclusive) {
        const bool w = direct.status == SearchStatus::Found;
        const bool c = coloring.status == SearchStatus::Found;
        const bool i = alpha.value == X.n;
        std::cout << "winnable " << (w ? "yes" : "no") << ", gadget 3-colorable " << (c ? "yes" : "no")
                  << ", independence number = questions " << (i ? "yes" : "no") << "\n";
        if (w != c || w != i)
            problems.push_back("oracles disagree");
    }
    ctx.save(m);
    for (const auto &p : problems)
        std::cerr << "error: " << p << "\n";
    if (!problems.empty())
        return exit_internal;
    if (inconclusive) {
        std::cout << "result: inconclusive\n";
        return exit_code(SearchStatus::Inconclusive);
    }
    std::cout << "result: all checks agree\n";
    return 0;
}

int cmd_lovasz(const Context &ctx, const std::string &graph_path, int k, const std::string &prefix, bool solve)
{
    if (k <= 3)
        throw PreconditionError("lovasz needs k > 3");
    auto m = ctx.manifest("lovasz");
    m.add_input(graph_path);
    const auto G = read_dimacs_file(graph_path);
    const auto game = hom_game(G, complete_graph(k));
    const auto r = reduce_to_coloring(game);
    const auto n = static_cast<std::size_t>(G.order());
    const auto edges = G.size();
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t closed = 3 + n + 9 * n * (kk - 2) + 6 * edges * kk;
    std::cout << "graph " << n << " vertices, " << edges << " edges, k " << k << "\n"
              << "gadget vertices " << r.gadget.graph.order() << " (closed form " << closed << ")\n"
              << "gadget edges " << r.gadget.graph.size() << "\n";
    if (n >= 2 && static_cast<std::size_t>(r.gadget.graph.order()) != closed) {
        std::cerr << "gadget size disagrees with the closed form\n";
        return exit_internal;
    }
    if (!prefix.empty()) {
        m.write_output(prefix + ".dimacs", render([&](std::ostream &os) { write_dimacs(os, r.gadget.graph); }));
        m.write_output(prefix + ".labels", render([&](std::ostream &os) { write_labels(os, r.gadget.graph); }));
    }
    int rc = 0;
    if (solve) {
        const auto direct = find_coloring(G, k, ctx.budget());
        const auto gadget = find_gadget_coloring(r.gadget, ctx.budget());
        std::cout << k << "-coloring of the graph: " << to_string(direct.status) << "\n"
                  << "3-coloring of the gadget: " << to_string(gadget.status) << "\n";
        if (direct.status == SearchStatus::Inconclusive || gadget.status == SearchStatus::Inconclusive)
            rc = exit_code(SearchStatus::Inconclusive);
        else if (direct.status != gadget.status) {
            std::cerr << "solvers disagree\n";
            rc = exit_internal;
        } else
            rc = exit_code(direct.status);
    }
    ctx.save(m, prefix.empty() ? std::string{} : prefix + ".manifest.json");
    return rc;
}

int cmd_zk(const Context &ctx, const std::string &graph_path, int k, const std::string &out_path)
{
    auto m = ctx.manifest("zk");
    m.add_input(graph_path);
    const auto G = read_dimacs_file(graph_path);
    const auto found = find_coloring(G, k, ctx.budget());
    if (!found.certificate) {
        std::cerr << "no proper " << k << "-coloring: " << to_string(found.status) << "\n";
        ctx.save(m);
        return exit_code(found.status);
    }
    const auto p = symmetrize_zero_knowledge(G, *found.certificate, k);
    if (!is_winning(p, hom_game(G, complete_graph(k))) || correlation_residual(p) != 0) {
        std::cerr << "symmetrized correlation is not a winning synchronous correlation\n";
        return exit_internal;
    }
    const auto tsv = render([&](std::ostream &os) { write_correlation(os, p); });
    if (out_path.empty())
        std::cout << tsv;
    else
        m.write_output(out_path, tsv);
    ctx.save(m);
    return 0;
}

int cmd_verify_operator(const Context &ctx, const std::string &name, const std::string &dump)
{
    if (name != "mermin")
        throw PreconditionError("unknown operator fixture '" + name + "' (available: mermin)");
    auto m = ctx.manifest("verify-operator");
    m.set_tol(ctx.opts.tol);
    const auto fam = mermin_peres_fixture();
    const auto game = fixture_magic_square();
    const auto pvm = validate_pvm(fam);
    const auto p = correlation_from_tracial(fam);
    double losing = 0;
    for (const auto &t : game.zero_tuples())
        losing = std::max(losing, std::abs(p(t.a, t.b, t.x, t.y)));
    const auto packing = packing_bound_check(game, fam);

    std::cout << "PVM residual " << pvm.max_residual() << "\n"
              << "max probability on a losing tuple " << losing << "\n"
              << "packing bound: max eigenvalue " << packing.bound_value << " (questions " << game.questions() << ")\n";

    const auto r = reduce_to_coloring(game);
    const auto push = operator_strategy_to_operator_coloring(r.gadget, fam, ctx.opts.tol);
    std::cout << "gadget vertices " << r.gadget.graph.order() << "\n"
              << "operator coloring: projection " << push.report.projection << ", completeness "
              << push.report.completeness << ", orthogonality " << push.report.orthogonality << "\n";
    if (!dump.empty())
        m.write_output(dump, render([&](std::ostream &os) { write_pvm(os, fam); }));
    ctx.save(m);
    const bool ok = pvm.max_residual() <= ctx.opts.tol && losing <= ctx.opts.tol && packing.bound_ok &&
                    push.report.ok(ctx.opts.tol);
    std::cout << "result: " << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : exit_internal;
}

int cmd_fixture(const Context &ctx, const std::string &name, int n, int k, const std::string &out_path)
{
    std::optional<SynchronousGame> g;
    if (name == "magic-square")
        g = fixture_magic_square();
    else if (name == "tiny-unsat")
        g = fixture_tiny_unsat();
    else if (name == "trivial")
        g = fixture_trivial(n, k);
    else if (name == "hom-c5-k3")
        g = hom_game(cycle_graph(5), complete_graph(3));
    else if (name == "hom-k4-k3")
        g = hom_game(complete_graph(4), complete_graph(3));
    else if (name == "hom-k5-k4")
        g = hom_game(complete_graph(5), complete_graph(4));
    else
        throw PreconditionError("unknown fixture '" + name +
                                "' (available: magic-square, tiny-unsat, trivial, hom-c5-k3, hom-k4-k3, hom-k5-k4)");
    const auto text = render([&](std::ostream &os) { write_game(os, *g); });
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    auto m = ctx.manifest("fixture");
    m.write_output(out_path, text);
    ctx.save(m);
    return 0;
}

int cmd_solve(const Context &ctx, const std::string &game_path, const std::string &out_path)
{
    auto m = ctx.manifest("solve");
    m.add_input(game_path);
    const auto g = load_game(game_path);
    const auto r = find_deterministic_strategy(g, ctx.budget());
    std::cout << "status " << to_string(r.status) << "\nnodes " << r.nodes << "\n";
    if (r.certificate) {
        const auto text = render([&](std::ostream &os) { write_strategy(os, *r.certificate); });
        if (out_path.empty())
            std::cout << text;
        else
            m.write_output(out_path, text);
    }
    ctx.save(m);
    return exit_code(r.status);
}

int cmd_color(const Context &ctx, const std::string &graph_path, const std::string &out_path)
{
    auto m = ctx.manifest("color");
    m.add_input(graph_path);
    const auto G = read_dimacs_file(graph_path);
    const auto r = find_coloring(G, ctx.opts.colors, ctx.budget());
    std::cout << "status " << to_string(r.status) << "\nnodes " << r.nodes << "\n";
    if (r.certificate) {
        const auto text = render([&](std::ostream &os) { write_coloring(os, *r.certificate); });
        if (out_path.empty())
            std::cout << text;
        else
            m.write_output(out_path, text);
    }
    ctx.save(m);
    return exit_code(r.status);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Synchronous games: gadget graphs, graphs of games, exact solvers and operator checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", SYNCGAME_VERSION);

    Context ctx;
    for (int i = 1; i < argc; ++i)
        ctx.arguments.emplace_back(argv[i]);
    auto &o = ctx.opts;
    app.add_option("--seed", o.seed, "Seed for tie-breaking and random choices");
    app.add_option("--budget-ms", o.budget_ms, "Wall-clock limit per search");
    app.add_option("--budget-nodes", o.budget_nodes, "Node limit per search");
    app.add_option("--tol", o.tol, "Operator-norm tolerance")->capture_default_str();
    app.add_option("--colors", o.colors, "Number of colors for `color`")->capture_default_str();
    app.add_option("--manifest", o.manifest, "Where to write the run manifest");

    std::string game_path, graph_path, prefix, out_path, name, dump;
    int k = 4, n = 2;
    bool search = false, solve = false;

    auto *reduce_coloring = app.add_subcommand("reduce-coloring", "Build the 3-coloring gadget graph of a game");
    reduce_coloring->add_option("game", game_path, "Game file")->required();
    reduce_coloring->add_option("--out", prefix, "Output prefix")->required();
    reduce_coloring->add_flag("--search-labels", search, "Relabel answers to shrink the gadget");

    auto *reduce_independence = app.add_subcommand("reduce-independence", "Build the graph of a game");
    reduce_independence->add_option("game", game_path, "Game file")->required();
    reduce_independence->add_option("--out", prefix, "Output prefix")->required();

    auto *roundtrip = app.add_subcommand("roundtrip", "Cross-check strategy search against both reductions");
    roundtrip->add_option("game", game_path, "Game file")->required();

    auto *lovasz = app.add_subcommand("lovasz", "Reduce k-coloring of a graph to 3-coloring");
    lovasz->add_option("graph", graph_path, "DIMACS graph")->required();
    lovasz->add_option("-k", k, "Number of colors (> 3)")->required();
    lovasz->add_option("--out", prefix, "Output prefix");
    lovasz->add_flag("--solve", solve, "Also run both coloring solvers");

    auto *zk = app.add_subcommand("zk", "Zero-knowledge symmetrized coloring correlation");
    zk->add_option("graph", graph_path, "DIMACS graph")->required();
    zk->add_option("-k", k, "Number of colors")->required();
    zk->add_option("--out", out_path, "TSV output (default: stdout)");

    auto *verify_operator = app.add_subcommand("verify-operator", "Check a shipped operator strategy end to end");
    verify_operator->add_option("fixture", name, "Fixture name (mermin)")->required();
    verify_operator->add_option("--dump", dump, "Write the PVM family here");

    auto *fixture = app.add_subcommand("fixture", "Write a built-in game");
    fixture->add_option("name", name, "magic-square, tiny-unsat, trivial, hom-c5-k3, hom-k4-k3, hom-k5-k4")->required();
    fixture->add_option("-n", n, "Questions (trivial only)")->capture_default_str();
    fixture->add_option("-k", k, "Answers (trivial only)")->capture_default_str();
    fixture->add_option("--out", out_path, "Output file (default: stdout)");

    auto *solve_cmd = app.add_subcommand("solve", "Search for a deterministic winning strategy");
    solve_cmd->add_option("game", game_path, "Game file")->required();
    solve_cmd->add_option("--out", out_path, "Strategy certificate (default: stdout)");

    auto *color = app.add_subcommand("color", "Exact coloring search on a DIMACS graph");
    color->add_option("graph", graph_path, "DIMACS graph")->required();
    color->add_option("--out", out_path, "Coloring certificate (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_bad_input;
    }

    try {
        if (*reduce_coloring)
            return cmd_reduce_coloring(ctx, game_path, prefix, search);
        if (*reduce_independence)
            return cmd_reduce_independence(ctx, game_path, prefix);
        if (*roundtrip)
            return cmd_roundtrip(ctx, game_path);
        if (*lovasz)
            return cmd_lovasz(ctx, graph_path, k, prefix, solve);
        if (*zk)
            return cmd_zk(ctx, graph_path, k, out_path);
        if (*verify_operator)
            return cmd_verify_operator(ctx, name, dump);
        if (*fixture)
            return cmd_fixture(ctx, name, n, k, out_path);
        if (*solve_cmd)
            return cmd_solve(ctx, game_path, out_path);
        if (*color)
            return cmd_color(ctx, graph_path, out_path);
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const PreconditionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
