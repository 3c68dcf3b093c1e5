#include "pdtest/pdtests.hpp"

#include <chrono>

#include "pdtest/errors.hpp"
#include "pdtest/oracle.hpp"

namespace pdtest {

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Inflations: return "inflations";
        case Algorithm::RootInflations: return "root-inflations";
        case Algorithm::Gauss: return "gauss";
    }
    throw Error("unreachable algorithm value");
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "inflations") return Algorithm::Inflations;
    if (name == "root-inflations") return Algorithm::RootInflations;
    if (name == "gauss") return Algorithm::Gauss;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rng make_rng(Strategy s, const std::optional<std::uint64_t>& seed) {
    if ((s == Strategy::FirstOrLast || s == Strategy::UniformRandom) && !seed)
        throw Error("strategy " + std::to_string(strategy_to_int(s)) +
                    " is randomized and requires a seed");
    return Rng(seed.value_or(0));
}

void append_remapped(ExecutionLog& log, const ExecutionLog& sub, const std::vector<int>& vertices) {
    for (const auto& st : sub.steps) {
        InflationStep m = st;
        m.a = vertices[std::size_t(st.a) - 1];
        if (st.kind == InflationStep::Kind::Pair) m.b = vertices[std::size_t(st.b) - 1];
        log.steps.push_back(m);
    }
}

TestOutcome run_inflation_test(const InputMatrix& a, Algorithm algo, const TestOptions& opt) {
    TestOutcome out;
    out.algorithm = algo;
    out.strategy = opt.strategy;
    out.seed = opt.seed;
    Rng rng = make_rng(opt.strategy, opt.seed);

    const auto t0 = Clock::now();
    const GramBigraph whole = triangularise(a);

    bool positive = true;
    if (opt.precheck && !coefficient_precheck(whole)) {
        out.precheck_shortcircuit = true;
        positive = false;
    } else {
        const auto comps = connected_components(whole);
        const bool single = comps.size() == 1;
        for (const auto& comp : comps) {
            const int nc = comp.graph.n();
            std::optional<DynkinType> type;
            try {
                GramBigraph g = comp.graph;
                ExecutionLog sub;
                if (algo == Algorithm::RootInflations) {
                    auto phase2 = inflations_to_pos_sincere_root(std::move(g), opt.early_exit);
                    sub = std::move(phase2.log);
                    auto phase3 =
                        inflations_at_pair_bounded(std::move(phase2.graph), opt.strategy,
                                                   igfposs(nc), rng);
                    sub.steps.insert(sub.steps.end(), phase3.log.steps.begin(),
                                     phase3.log.steps.end());
                    g = std::move(phase3.graph);
                } else {
                    auto res = inflations_at_pair_bounded(std::move(g), opt.strategy, igfpos(nc), rng);
                    sub = std::move(res.log);
                    g = std::move(res.graph);
                }
                append_remapped(out.log, sub, comp.vertices);
                if (has_dotted_edge(g)) out.bound_exhausted = true;
                type = recognize_dynkin(g);
            } catch (const OverflowError&) {
                // Positive bigraphs keep every coefficient in {-1,0,1} and
                // inflations preserve positivity, so a coefficient escaping
                // the 64-bit range already certifies non-positivity.
                type = std::nullopt;
            }
            if (single) out.dynkin = type;
            if (!type) {
                positive = false;
                break;
            }
        }
    }

    out.positive = positive;
    out.elapsed_ms = ms_since(t0);
    return out;
}

}  // namespace

TestOutcome pos_def_test_by_inflations(const InputMatrix& a, const TestOptions& opt) {
    return run_inflation_test(a, Algorithm::Inflations, opt);
}

TestOutcome pos_def_test_by_root_inflations(const InputMatrix& a, const TestOptions& opt) {
    return run_inflation_test(a, Algorithm::RootInflations, opt);
}

TestOutcome pos_def_test_by_gauss(const InputMatrix& a) {
    TestOutcome out;
    out.algorithm = Algorithm::Gauss;
    const auto t0 = Clock::now();
    out.positive = gauss_pos_def_test(a);
    out.elapsed_ms = ms_since(t0);
    return out;
}

nlohmann::json to_json(const TestOutcome& o) {
    nlohmann::json j;
    j["positive"] = o.positive;
    j["dynkin"] = o.dynkin ? nlohmann::json(o.dynkin->to_string()) : nlohmann::json(nullptr);
    j["pair_inflations"] = o.log.pair_count();
    j["vertex_inflations"] = o.log.vertex_count();
    j["algorithm"] = std::string(algorithm_name(o.algorithm));
    j["strategy"] = o.strategy ? nlohmann::json(strategy_to_int(*o.strategy)) : nlohmann::json(nullptr);
    j["seed"] = o.seed ? nlohmann::json(*o.seed) : nlohmann::json(nullptr);
    j["elapsed_ms"] = o.elapsed_ms;
    j["precheck_shortcircuit"] = o.precheck_shortcircuit;
    j["bound_exhausted"] = o.bound_exhausted;
    return j;
}

}  // namespace pdtest
