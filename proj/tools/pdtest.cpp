#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdtest/bench.hpp"
#include "pdtest/errors.hpp"
#include "pdtest/generators.hpp"
#include "pdtest/pdtests.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNotPositive = 1;
constexpr int kExitError = 2;

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (std::uint64_t(rd()) << 32) | rd();
}

struct CheckArgs {
    std::string file;
    std::string algo = "root-inflations";
    int strategy = 0;
    std::optional<std::uint64_t> seed;
    bool no_precheck = false;
    bool no_early_exit = false;
    bool json = false;
    bool trace = false;
    bool strategy_given = false;
    bool seed_given = false;
};

int run_check(const CheckArgs& args) {
    const pdtest::InputMatrix matrix = pdtest::load_matrix_file(args.file);
    const pdtest::Algorithm algo = *pdtest::algorithm_from_name(args.algo);

    pdtest::TestOutcome outcome;
    if (algo == pdtest::Algorithm::Gauss) {
        if (args.strategy_given || args.seed_given)
            std::cerr << "warning: --strategy and --seed are ignored with --algo gauss\n";
        outcome = pdtest::pos_def_test_by_gauss(matrix);
    } else {
        pdtest::TestOptions opt;
        opt.strategy = pdtest::strategy_from_int(args.strategy);
        opt.precheck = !args.no_precheck;
        opt.early_exit = !args.no_early_exit;
        opt.seed = args.seed;
        const bool randomized = opt.strategy == pdtest::Strategy::FirstOrLast ||
                                opt.strategy == pdtest::Strategy::UniformRandom;
        if (randomized && !opt.seed) opt.seed = fresh_seed();
        outcome = algo == pdtest::Algorithm::Inflations
                      ? pdtest::pos_def_test_by_inflations(matrix, opt)
                      : pdtest::pos_def_test_by_root_inflations(matrix, opt);
    }

    if (args.json) {
        std::cout << pdtest::to_json(outcome).dump(2) << "\n";
        // keep stdout parseable as a single JSON object
        if (args.trace) std::cerr << outcome.log.to_text();
    } else {
        if (args.trace) std::cout << outcome.log.to_text();
        std::cout << (outcome.positive ? "positive definite" : "not positive definite");
        if (outcome.dynkin) std::cout << " (Dynkin type " << outcome.dynkin->to_string() << ")";
        std::cout << "\n";
        std::cout << "algorithm: " << pdtest::algorithm_name(outcome.algorithm);
        if (outcome.strategy) std::cout << ", strategy " << pdtest::strategy_to_int(*outcome.strategy);
        if (outcome.seed) std::cout << ", seed " << *outcome.seed;
        std::cout << "\n";
        std::cout << "inflations: " << outcome.log.pair_count() << " pair, "
                  << outcome.log.vertex_count() << " vertex\n";
        if (outcome.precheck_shortcircuit)
            std::cout << "precheck: some |d_ij| >= 2, no inflations needed\n";
        if (outcome.bound_exhausted) std::cout << "note: inflation bound exhausted\n";
        std::cout << "elapsed: " << outcome.elapsed_ms << " ms\n";
    }
    return outcome.positive ? kExitPositive : kExitNotPositive;
}

void write_generated(const pdtest::InputMatrix& m, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        pdtest::write_matrix(std::cout, m);
    } else {
        pdtest::save_matrix_file(out_path, m);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive definiteness tests for unidiagonal triangle-integral matrices"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "test a matrix file for positive definiteness");
    check->add_option("file", check_args.file, "matrix file (text format, '#' comments)")
        ->required();
    check->add_option("--algo", check_args.algo, "inflations | root-inflations | gauss")
        ->check(CLI::IsMember({"inflations", "root-inflations", "gauss"}))
        ->capture_default_str();
    auto* strategy_opt =
        check->add_option("--strategy", check_args.strategy, "dotted pair selection: 0..3")
            ->check(CLI::Range(0, 3));
    auto* seed_opt = check->add_option("--seed", check_args.seed, "seed for strategies 2 and 3");
    check->add_flag("--no-precheck", check_args.no_precheck, "skip the |d_ij| <= 1 precheck");
    check->add_flag("--no-early-exit", check_args.no_early_exit,
                    "keep inflating to a sincere root even when no dotted edge remains");
    check->add_flag("--json", check_args.json, "print the outcome as JSON");
    check->add_flag("--trace", check_args.trace,
                    "print the inflation log (stderr in JSON mode)");

    auto* gen = app.add_subcommand("gen", "generate test matrices");
    gen->require_subcommand(1);

    int nak_n = 0;
    std::string nak_out;
    auto* gen_nak = gen->add_subcommand("nakayama", "upper triangular +1/-1 checkerboard family");
    gen_nak->add_option("n", nak_n, "matrix size")->required()->check(CLI::PositiveNumber);
    gen_nak->add_option("-o,--output", nak_out, "output file (default stdout)");

    int pos_n = 0;
    std::uint64_t pos_seed = 0;
    int pos_steps = 50;
    std::string pos_out;
    auto* gen_pos = gen->add_subcommand("random-positive",
                                        "random positive definite unidiagonal integer matrix");
    gen_pos->add_option("n", pos_n, "matrix size")->required()->check(CLI::PositiveNumber);
    gen_pos->add_option("--seed", pos_seed, "generator seed")->capture_default_str();
    gen_pos->add_option("--steps", pos_steps, "random inflations applied to a Dynkin Gram matrix")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    gen_pos->add_option("-o,--output", pos_out, "output file (default stdout)");

    int rnd_n = 0;
    std::uint64_t rnd_seed = 0;
    int rnd_range = 2;
    std::string rnd_density = "1/2";
    std::string rnd_out;
    auto* gen_rnd = gen->add_subcommand("random", "random unidiagonal integer matrix");
    gen_rnd->add_option("n", rnd_n, "matrix size")->required()->check(CLI::PositiveNumber);
    gen_rnd->add_option("--seed", rnd_seed, "generator seed")->capture_default_str();
    gen_rnd->add_option("--range", rnd_range, "entries drawn from [-range, range]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen_rnd->add_option("--density", rnd_density, "probability of a nonzero entry, e.g. 1/2")
        ->capture_default_str();
    gen_rnd->add_option("-o,--output", rnd_out, "output file (default stdout)");

    std::vector<int> bench_sizes{100, 200, 400};
    std::vector<std::string> bench_algos{"root-inflations"};
    std::vector<int> bench_strategies{1};
    std::vector<std::uint64_t> bench_seeds{0};
    int bench_reps = 3;
    std::string bench_out = "bench_out";
    auto* bench = app.add_subcommand("bench", "time the tests on the checkerboard family");
    bench->add_option("--sizes", bench_sizes, "comma separated sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--algos", bench_algos, "comma separated algorithm names")
        ->delimiter(',')
        ->check(CLI::IsMember({"inflations", "root-inflations", "gauss"}))
        ->capture_default_str();
    bench->add_option("--strategies", bench_strategies, "comma separated strategies 0..3")
        ->delimiter(',')
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    bench->add_option("--seeds", bench_seeds, "comma separated seeds for strategies 2 and 3")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--reps", bench_reps, "repetitions per configuration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("-o,--output", bench_out, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed()) {
            check_args.strategy_given = strategy_opt->count() > 0;
            check_args.seed_given = seed_opt->count() > 0;
            return run_check(check_args);
        }
        if (gen_nak->parsed()) {
            write_generated(pdtest::gen_nakayama(nak_n), nak_out);
            return 0;
        }
        if (gen_pos->parsed()) {
            write_generated(pdtest::gen_random_positive(pos_n, pos_seed, pos_steps), pos_out);
            return 0;
        }
        if (gen_rnd->parsed()) {
            const pdtest::Rational density = pdtest::Rational::parse(rnd_density);
            write_generated(pdtest::gen_random_uti(rnd_n, rnd_seed, rnd_range, density), rnd_out);
            return 0;
        }
        if (bench->parsed()) {
            pdtest::BenchSpec spec;
            spec.sizes = bench_sizes;
            for (const auto& name : bench_algos)
                spec.algos.push_back(*pdtest::algorithm_from_name(name));
            for (const int s : bench_strategies)
                spec.strategies.push_back(pdtest::strategy_from_int(s));
            spec.seeds = bench_seeds;
            spec.reps = bench_reps;

            const pdtest::BenchReport report = pdtest::run_bench(spec, &std::cerr);

            namespace fs = std::filesystem;
            fs::create_directories(bench_out);
            {
                std::ofstream csv(fs::path(bench_out) / "bench.csv");
                if (!csv) throw pdtest::Error("cannot write to '" + bench_out + "'");
                csv << report.to_csv();
            }
            {
                std::ofstream js(fs::path(bench_out) / "bench.json");
                if (!js) throw pdtest::Error("cannot write to '" + bench_out + "'");
                js << report.to_json().dump(2) << "\n";
            }
            std::cout << "medians (ms):\n";
            for (const auto& m : report.medians()) {
                std::cout << "  " << m.matrix_id << " " << pdtest::algorithm_name(m.algo);
                if (m.strategy) std::cout << " strategy " << pdtest::strategy_to_int(*m.strategy);
                if (m.seed) std::cout << " seed " << *m.seed;
                std::cout << ": " << m.median_ms << "\n";
            }
            std::cout << "wrote " << (fs::path(bench_out) / "bench.csv").string() << " and "
                      << (fs::path(bench_out) / "bench.json").string() << "\n";
            return 0;
        }
    } catch (const pdtest::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
