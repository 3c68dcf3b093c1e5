#include "pdtest/inflation.hpp"

#include <string>

#include "pdtest/checked.hpp"
#include "pdtest/errors.hpp"

namespace pdtest {

Strategy strategy_from_int(int s) {
    switch (s) {
        case 0: return Strategy::First;
        case 1: return Strategy::Last;
        case 2: return Strategy::FirstOrLast;
        case 3: return Strategy::UniformRandom;
        default: throw Error("strategy must be 0..3, got " + std::to_string(s));
    }
}

int strategy_to_int(Strategy s) {
    return static_cast<int>(s);
}

std::int64_t ExecutionLog::vertex_count() const {
    std::int64_t c = 0;
    for (const auto& st : steps)
        if (st.kind == InflationStep::Kind::Vertex) ++c;
    return c;
}

std::int64_t ExecutionLog::pair_count() const {
    return std::int64_t(steps.size()) - vertex_count();
}

std::string ExecutionLog::to_text() const {
    std::string out;
    for (const auto& st : steps) {
        if (st.kind == InflationStep::Kind::Vertex) {
            out += "V " + std::to_string(st.a) + "\n";
        } else {
            out += "P " + std::to_string(st.a) + " " + std::to_string(st.b) + "\n";
        }
    }
    return out;
}

namespace {

void check_vertex(const GramBigraph& g, int a) {
    if (a < 1 || a > g.n())
        throw VertexOutOfRangeError("vertex " + std::to_string(a) + " outside 1.." +
                                    std::to_string(g.n()));
}

}  // namespace

GramBigraph inflate_at_vertex(GramBigraph g, int a) {
    check_vertex(g, a);
    for (int c = 1; c <= g.n(); ++c) {
        if (c == a) continue;
        g.set_coeff(a, c, checked_neg(g.coeff(a, c)));
    }
    return g;
}

GramBigraph inflate_at_pair(GramBigraph g, int first, int second) {
    check_vertex(g, first);
    check_vertex(g, second);
    if (first == second)
        throw VertexOutOfRangeError("pair inflation needs two distinct vertices, got " +
                                    std::to_string(first) + " twice");
    const std::int64_t dab = g.coeff(first, second);
    if (dab <= 0)
        throw NotDefinedError("pair inflation at (" + std::to_string(first) + "," +
                              std::to_string(second) + ") undefined: coefficient is " +
                              std::to_string(dab) + ", needs a dotted edge");
    for (int c = 1; c <= g.n(); ++c) {
        if (c == first || c == second) continue;
        g.set_coeff(second, c, checked_sub(g.coeff(second, c), checked_mul(g.coeff(first, c), dab)));
    }
    g.set_coeff(first, second, -dab);
    return g;
}

std::optional<std::pair<int, int>> select_dotted_edge(const GramBigraph& g, Strategy s, Rng& rng) {
    const int n = g.n();
    switch (s) {
        case Strategy::First:
            for (int a = 1; a < n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (g.coeff(a, b) > 0) return std::pair{a, b};
            return std::nullopt;
        case Strategy::Last:
            for (int a = n - 1; a >= 1; --a)
                for (int b = n; b > a; --b)
                    if (g.coeff(a, b) > 0) return std::pair{a, b};
            return std::nullopt;
        case Strategy::FirstOrLast: {
            const Strategy pick = rng.next_bool() ? Strategy::Last : Strategy::First;
            return select_dotted_edge(g, pick, rng);
        }
        case Strategy::UniformRandom: {
            std::vector<std::pair<int, int>> dotted;
            for (int a = 1; a < n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (g.coeff(a, b) > 0) dotted.emplace_back(a, b);
            if (dotted.empty()) return std::nullopt;
            return dotted[std::size_t(rng.next_below(dotted.size()))];
        }
    }
    throw Error("unreachable strategy value");
}

ExecutionResult inflations_at_pair_bounded(GramBigraph g, Strategy s, std::int64_t bound, Rng& rng) {
    ExecutionResult res{std::move(g), {}};
    for (std::int64_t done = 0; done < bound; ++done) {
        const auto sel = select_dotted_edge(res.graph, s, rng);
        if (!sel) break;
        res.graph = inflate_at_pair(std::move(res.graph), sel->first, sel->second);
        res.log.steps.push_back(InflationStep::at_pair(sel->first, sel->second));
    }
    return res;
}

namespace {

std::int64_t dotted_incident(const GramBigraph& g, int v) {
    std::int64_t c = 0;
    for (int w = 1; w <= g.n(); ++w)
        if (w != v && g.coeff(v, w) > 0) ++c;
    return c;
}

std::int64_t dotted_total(const GramBigraph& g) {
    std::int64_t c = 0;
    for (const std::int64_t d : g.upper())
        if (d > 0) ++c;
    return c;
}

}  // namespace

ExecutionResult inflations_to_pos_sincere_root(GramBigraph g, bool early_exit) {
    const int n = g.n();
    ExecutionLog log;
    std::vector<char> in_s(std::size_t(n) + 1, 0);
    in_s[1] = 1;
    std::int64_t dotted = dotted_total(g);

    for (int s_size = 1; s_size < n; ++s_size) {
        if (early_exit && dotted == 0) break;

        int a = 0;
        int b = 0;
        for (int i = 1; i <= n && a == 0; ++i) {
            if (!in_s[std::size_t(i)]) continue;
            for (int j = 1; j <= n; ++j) {
                if (in_s[std::size_t(j)] || g.coeff(i, j) == 0) continue;
                a = i;
                b = j;
                break;
            }
        }
        if (a == 0)
            throw DisconnectedError("bigraph is disconnected: no edge leaves the " +
                                    std::to_string(s_size) + " vertices reached from vertex 1");

        if (g.coeff(a, b) < 0) {
            dotted -= dotted_incident(g, b);
            g = inflate_at_vertex(std::move(g), b);
            dotted += dotted_incident(g, b);
            log.steps.push_back(InflationStep::at_vertex(b));
        }
        // infl_{b,a}: rewrites the coefficients at a, all incident with a.
        dotted -= dotted_incident(g, a);
        g = inflate_at_pair(std::move(g), b, a);
        dotted += dotted_incident(g, a);
        log.steps.push_back(InflationStep::at_pair(b, a));

        in_s[std::size_t(b)] = 1;
    }
    return ExecutionResult{std::move(g), std::move(log)};
}

}  // namespace pdtest
