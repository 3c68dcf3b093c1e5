#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "pdtest/dynkin.hpp"
#include "pdtest/inflation.hpp"
#include "pdtest/matrix.hpp"

namespace pdtest {

enum class Algorithm { Inflations, RootInflations, Gauss };

std::string_view algorithm_name(Algorithm a);  // "inflations" / "root-inflations" / "gauss"
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct TestOptions {
    Strategy strategy = Strategy::First;
    std::optional<std::uint64_t> seed;  // required for FirstOrLast / UniformRandom
    bool precheck = true;
    bool early_exit = true;  // root-inflations phase 2 only
};

struct TestOutcome {
    bool positive = false;
    std::optional<DynkinType> dynkin;  // set iff positive and the input is connected
    ExecutionLog log;
    Algorithm algorithm = Algorithm::Inflations;
    std::optional<Strategy> strategy;
    std::optional<std::uint64_t> seed;
    double elapsed_ms = 0.0;
    bool precheck_shortcircuit = false;
    bool bound_exhausted = false;
};

// Decides positive definiteness by iterated pair inflations, at most
// igfpos(n) per connected component.
TestOutcome pos_def_test_by_inflations(const InputMatrix& a, const TestOptions& opt = {});

// Same verdict via the sincere-root preprocessing phase: per component, first
// inflate to a positive sincere root (<= 2(n-1) inflations), then at most
// igfposs(n) further pair inflations.
TestOutcome pos_def_test_by_root_inflations(const InputMatrix& a, const TestOptions& opt = {});

// Exact elimination baseline wrapped in the same outcome type.
TestOutcome pos_def_test_by_gauss(const InputMatrix& a);

nlohmann::json to_json(const TestOutcome& o);

}  // namespace pdtest
