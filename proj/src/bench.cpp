#include "pdtest/bench.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <tuple>

#include "pdtest/errors.hpp"
#include "pdtest/generators.hpp"

namespace pdtest {

namespace {

constexpr std::string_view kCsvHeader =
    "n,matrix_id,algo,strategy,seed,rep,positive,dynkin,pair_inflations,vertex_inflations,"
    "elapsed_ms";

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw Error("double formatting failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad double in CSV: '" + std::string(s) + "'");
    return v;
}

template <typename T>
T parse_unsigned(std::string_view s, std::string_view what) {
    T v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad " + std::string(what) + " in CSV: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// Sort key shared by medians() and the row order produced by run_bench.
auto median_key(const MedianRow& m) {
    return std::tuple(m.n, m.matrix_id, int(m.algo),
                      m.strategy ? strategy_to_int(*m.strategy) : -1,
                      m.seed ? *m.seed : 0);
}

}  // namespace

std::vector<MedianRow> BenchReport::medians() const {
    // Group rows by configuration; reps differ only in `rep` and timing.
    std::map<std::tuple<int, std::string, int, int, std::uint64_t, bool>, std::vector<double>>
        groups;
    std::map<std::tuple<int, std::string, int, int, std::uint64_t, bool>, MedianRow> heads;
    for (const auto& r : rows) {
        const auto key = std::tuple(r.n, r.matrix_id, int(r.algo),
                                    r.strategy ? strategy_to_int(*r.strategy) : -1,
                                    r.seed ? *r.seed : 0, r.seed.has_value());
        groups[key].push_back(r.elapsed_ms);
        if (!heads.count(key)) {
            MedianRow m;
            m.n = r.n;
            m.matrix_id = r.matrix_id;
            m.algo = r.algo;
            m.strategy = r.strategy;
            m.seed = r.seed;
            heads.emplace(key, std::move(m));
        }
    }
    std::vector<MedianRow> out;
    out.reserve(groups.size());
    for (auto& [key, times] : groups) {
        MedianRow m = heads.at(key);
        m.reps = int(times.size());
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        m.median_ms = times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(),
              [](const MedianRow& x, const MedianRow& y) { return median_key(x) < median_key(y); });
    return out;
}

std::string BenchReport::to_csv() const {
    std::string out{kCsvHeader};
    out += "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ",";
        out += r.matrix_id;
        out += ",";
        out += algorithm_name(r.algo);
        out += ",";
        if (r.strategy) out += std::to_string(strategy_to_int(*r.strategy));
        out += ",";
        if (r.seed) out += std::to_string(*r.seed);
        out += ",";
        out += std::to_string(r.rep);
        out += ",";
        out += r.positive ? "true" : "false";
        out += ",";
        if (r.dynkin) out += r.dynkin->to_string();
        out += ",";
        out += std::to_string(r.pair_inflations);
        out += ",";
        out += std::to_string(r.vertex_inflations);
        out += ",";
        out += format_double(r.elapsed_ms);
        out += "\n";
    }
    return out;
}

BenchReport BenchReport::from_csv(std::string_view text) {
    BenchReport report;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = nl + 1;
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != kCsvHeader)
                throw ParseError("unexpected CSV header: '" + std::string(line) + "'");
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 11)
            throw ParseError("CSV line " + std::to_string(lineno) + " has " +
                             std::to_string(f.size()) + " fields, expected 11");
        BenchRow r;
        r.n = parse_unsigned<int>(f[0], "n");
        r.matrix_id = std::string(f[1]);
        const auto algo = algorithm_from_name(f[2]);
        if (!algo) throw ParseError("unknown algorithm in CSV: '" + std::string(f[2]) + "'");
        r.algo = *algo;
        if (!f[3].empty()) r.strategy = strategy_from_int(parse_unsigned<int>(f[3], "strategy"));
        if (!f[4].empty()) r.seed = parse_unsigned<std::uint64_t>(f[4], "seed");
        r.rep = parse_unsigned<int>(f[5], "rep");
        if (f[6] == "true") {
            r.positive = true;
        } else if (f[6] == "false") {
            r.positive = false;
        } else {
            throw ParseError("bad boolean in CSV: '" + std::string(f[6]) + "'");
        }
        if (!f[7].empty()) {
            r.dynkin = DynkinType::from_string(f[7]);
            if (!r.dynkin) throw ParseError("bad Dynkin type in CSV: '" + std::string(f[7]) + "'");
        }
        r.pair_inflations = parse_unsigned<std::int64_t>(f[8], "pair_inflations");
        r.vertex_inflations = parse_unsigned<std::int64_t>(f[9], "vertex_inflations");
        r.elapsed_ms = parse_double(f[10]);
        report.rows.push_back(std::move(r));
    }
    return report;
}

nlohmann::json BenchReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["n"] = r.n;
        j["matrix_id"] = r.matrix_id;
        j["algo"] = std::string(algorithm_name(r.algo));
        j["strategy"] = r.strategy ? nlohmann::json(strategy_to_int(*r.strategy)) : nlohmann::json(nullptr);
        j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
        j["rep"] = r.rep;
        j["positive"] = r.positive;
        j["dynkin"] = r.dynkin ? nlohmann::json(r.dynkin->to_string()) : nlohmann::json(nullptr);
        j["pair_inflations"] = r.pair_inflations;
        j["vertex_inflations"] = r.vertex_inflations;
        j["elapsed_ms"] = r.elapsed_ms;
        rows_json.push_back(std::move(j));
    }
    nlohmann::json medians_json = nlohmann::json::array();
    for (const auto& m : medians()) {
        nlohmann::json j;
        j["n"] = m.n;
        j["matrix_id"] = m.matrix_id;
        j["algo"] = std::string(algorithm_name(m.algo));
        j["strategy"] = m.strategy ? nlohmann::json(strategy_to_int(*m.strategy)) : nlohmann::json(nullptr);
        j["seed"] = m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr);
        j["reps"] = m.reps;
        j["median_ms"] = m.median_ms;
        medians_json.push_back(std::move(j));
    }
    return nlohmann::json{{"rows", std::move(rows_json)}, {"medians", std::move(medians_json)}};
}

BenchReport BenchReport::from_json(const nlohmann::json& j) {
    BenchReport report;
    for (const auto& row : j.at("rows")) {
        BenchRow r;
        r.n = row.at("n").get<int>();
        r.matrix_id = row.at("matrix_id").get<std::string>();
        const auto algo = algorithm_from_name(row.at("algo").get<std::string>());
        if (!algo) throw ParseError("unknown algorithm in JSON report");
        r.algo = *algo;
        if (!row.at("strategy").is_null()) r.strategy = strategy_from_int(row.at("strategy").get<int>());
        if (!row.at("seed").is_null()) r.seed = row.at("seed").get<std::uint64_t>();
        r.rep = row.at("rep").get<int>();
        r.positive = row.at("positive").get<bool>();
        if (!row.at("dynkin").is_null()) {
            r.dynkin = DynkinType::from_string(row.at("dynkin").get<std::string>());
            if (!r.dynkin) throw ParseError("bad Dynkin type in JSON report");
        }
        r.pair_inflations = row.at("pair_inflations").get<std::int64_t>();
        r.vertex_inflations = row.at("vertex_inflations").get<std::int64_t>();
        r.elapsed_ms = row.at("elapsed_ms").get<double>();
        report.rows.push_back(std::move(r));
    }
    return report;
}

namespace {

struct BenchConfig {
    std::optional<Strategy> strategy;
    std::optional<std::uint64_t> seed;
};

std::vector<BenchConfig> configs_for(Algorithm algo, const BenchSpec& spec) {
    if (algo == Algorithm::Gauss) return {BenchConfig{}};
    std::vector<BenchConfig> out;
    for (const Strategy s : spec.strategies) {
        if (s == Strategy::First || s == Strategy::Last) {
            out.push_back(BenchConfig{s, std::nullopt});
        } else {
            for (const std::uint64_t seed : spec.seeds) out.push_back(BenchConfig{s, seed});
        }
    }
    return out;
}

}  // namespace

BenchReport run_bench(const BenchSpec& spec, std::ostream* progress) {
    if (spec.reps < 1) throw Error("reps must be positive, got " + std::to_string(spec.reps));
    BenchReport report;
    for (const int n : spec.sizes) {
        const InputMatrix matrix = gen_nakayama(n);
        const std::string id = "nak" + std::to_string(n);
        for (const Algorithm algo : spec.algos) {
            for (const BenchConfig& cfg : configs_for(algo, spec)) {
                for (int rep = 1; rep <= spec.reps; ++rep) {
                    TestOutcome o;
                    if (algo == Algorithm::Gauss) {
                        o = pos_def_test_by_gauss(matrix);
                    } else {
                        TestOptions opt;
                        opt.strategy = *cfg.strategy;
                        opt.seed = cfg.seed;
                        o = algo == Algorithm::Inflations
                                ? pos_def_test_by_inflations(matrix, opt)
                                : pos_def_test_by_root_inflations(matrix, opt);
                    }
                    BenchRow r;
                    r.n = n;
                    r.matrix_id = id;
                    r.algo = algo;
                    r.strategy = cfg.strategy;
                    r.seed = cfg.seed;
                    r.rep = rep;
                    r.positive = o.positive;
                    r.dynkin = o.dynkin;
                    r.pair_inflations = o.log.pair_count();
                    r.vertex_inflations = o.log.vertex_count();
                    r.elapsed_ms = o.elapsed_ms;
                    report.rows.push_back(std::move(r));
                }
                if (progress) {
                    *progress << id << " " << algorithm_name(algo);
                    if (cfg.strategy) *progress << " strategy " << strategy_to_int(*cfg.strategy);
                    if (cfg.seed) *progress << " seed " << *cfg.seed;
                    *progress << ": done\n";
                }
            }
        }
    }
    return report;
}

}  // namespace pdtest
