#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdtest/pdtests.hpp"

namespace pdtest {

struct BenchRow {
    int n = 0;
    std::string matrix_id;
    Algorithm algo = Algorithm::Inflations;
    std::optional<Strategy> strategy;  // empty for gauss
    std::optional<std::uint64_t> seed; // empty for deterministic strategies and gauss
    int rep = 0;
    bool positive = false;
    std::optional<DynkinType> dynkin;
    std::int64_t pair_inflations = 0;
    std::int64_t vertex_inflations = 0;
    double elapsed_ms = 0.0;

    friend bool operator==(const BenchRow& x, const BenchRow& y) = default;
};

// Median timing per configuration, derived from the rows.
struct MedianRow {
    int n = 0;
    std::string matrix_id;
    Algorithm algo = Algorithm::Inflations;
    std::optional<Strategy> strategy;
    std::optional<std::uint64_t> seed;
    int reps = 0;
    double median_ms = 0.0;

    friend bool operator==(const MedianRow& x, const MedianRow& y) = default;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    std::vector<MedianRow> medians() const;

    // Header: n,matrix_id,algo,strategy,seed,rep,positive,dynkin,
    // pair_inflations,vertex_inflations,elapsed_ms. Doubles are written with
    // shortest round-trip formatting, so from_csv(to_csv(r)) == r.
    std::string to_csv() const;
    static BenchReport from_csv(std::string_view text);

    nlohmann::json to_json() const;  // {"rows": [...], "medians": [...]}
    static BenchReport from_json(const nlohmann::json& j);
};

struct BenchSpec {
    std::vector<int> sizes;                 // Nakayama sizes, one matrix each
    std::vector<Algorithm> algos;
    std::vector<Strategy> strategies;       // ignored for gauss
    std::vector<std::uint64_t> seeds;       // used by randomized strategies only
    int reps = 3;
};

// Runs every configuration against Nak(n) for each size. Deterministic
// strategies contribute one configuration regardless of the seed list;
// randomized strategies one per seed. `progress`, when given, receives one
// line per finished configuration.
BenchReport run_bench(const BenchSpec& spec, std::ostream* progress = nullptr);

}  // namespace pdtest
