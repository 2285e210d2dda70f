#include "syncgame/game_io.hpp"

#include "syncgame/errors.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace syncgame {

namespace {

// Strips a trailing `#` comment and surrounding whitespace.
std::string strip(const std::string &line)
{
    auto s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

SynchronousGame read_game(std::istream &in)
{
    std::optional<SynchronousGame> g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = strip(line);
        if (body.empty())
            continue;
        std::istringstream ls(body);
        std::string keyword;
        ls >> keyword;
        auto fail = [&](const std::string &why) {
            throw ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (keyword == "game") {
            if (g)
                fail("duplicate game header");
            int n = 0, k = 0;
            if (!(ls >> n >> k) || n < 1 || k < 1)
                fail("expected `game <n> <k>` with positive sizes");
            g.emplace(n, k);
        } else if (keyword == "forbid") {
            if (!g)
                fail("forbid before game header");
            int a = 0, b = 0, x = 0, y = 0;
            if (!(ls >> a >> b >> x >> y))
                fail("expected `forbid <a> <b> <x> <y>`");
            if (!g->in_range(a, b, x, y))
                fail("tuple " + to_string(RuleTuple{a, b, x, y}) + " out of range");
            g->forbid(a, b, x, y);
        } else {
            fail("unknown keyword `" + keyword + "`");
        }
        std::string extra;
        if (ls >> extra)
            fail("trailing input `" + extra + "`");
    }
    if (!g)
        throw ParseError("missing `game <n> <k>` header");
    return *g;
}

SynchronousGame read_game_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open game file " + path);
    return read_game(in);
}

void write_game(std::ostream &out, const SynchronousGame &g)
{
    auto report = validate_game(g);
    if (!report.ok())
        throw PreconditionError("cannot serialise a non-synchronous game: " + report.violations.front().message);
    out << "game " << g.questions() << ' ' << g.answers() << '\n';
    for (const auto &t : g.zero_tuples())
        if (t.x != t.y || t.a == t.b)
            out << "forbid " << t.a << ' ' << t.b << ' ' << t.x << ' ' << t.y << '\n';
}

void write_strategy(std::ostream &out, const DeterministicStrategy &f)
{
    for (int x = 1; x <= f.questions(); ++x)
        out << x << ' ' << f(x) << '\n';
}

DeterministicStrategy read_strategy(std::istream &in)
{
    std::map<int, int> answers;
    std::string line;
    while (std::getline(in, line)) {
        const auto body = strip(line);
        if (body.empty())
            continue;
        std::istringstream ls(body);
        int x = 0, a = 0;
        if (!(ls >> x >> a) || x < 1 || a < 1)
            throw ParseError("bad strategy line: " + body);
        if (!answers.emplace(x, a).second)
            throw ParseError("question " + std::to_string(x) + " answered twice");
    }
    std::vector<int> out;
    for (auto [x, a] : answers) {
        if (x != static_cast<int>(out.size()) + 1)
            throw ParseError("strategy skips question " + std::to_string(out.size() + 1));
        out.push_back(a);
    }
    return DeterministicStrategy(std::move(out));
}

} // namespace syncgame
