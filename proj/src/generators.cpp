#include "pdtest/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include "pdtest/bigraph.hpp"
#include "pdtest/dynkin.hpp"
#include "pdtest/errors.hpp"
#include "pdtest/inflation.hpp"
#include "pdtest/rng.hpp"

namespace pdtest {

InputMatrix gen_nakayama(int n) {
    InputMatrix m = InputMatrix::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) m.at(i, j) = Rational((j - i) % 2 == 0 ? 1 : -1);
    return m;
}

InputMatrix gen_random_positive(int n, std::uint64_t seed, int steps) {
    if (n < 1) throw Error("matrix size must be positive, got " + std::to_string(n));
    if (steps < 0) throw Error("step count must be nonnegative, got " + std::to_string(steps));
    Rng rng(seed);

    std::vector<DynkinType> candidates{DynkinType(DynkinType::Family::A, n)};
    if (n >= 4) candidates.emplace_back(DynkinType::Family::D, n);
    if (n >= 6 && n <= 8) candidates.emplace_back(DynkinType::Family::E, n);
    GramBigraph g = dynkin_gram(candidates[std::size_t(rng.next_below(candidates.size()))]);

    for (int step = 0; step < steps; ++step) {
        bool do_pair = rng.next_bool();
        std::vector<std::pair<int, int>> dotted;
        if (do_pair) {
            for (int a = 1; a < n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (g.coeff(a, b) > 0) dotted.emplace_back(a, b);
            if (dotted.empty()) do_pair = false;
        }
        if (do_pair) {
            const auto [a, b] = dotted[std::size_t(rng.next_below(dotted.size()))];
            const bool swap = rng.next_bool();
            g = inflate_at_pair(std::move(g), swap ? b : a, swap ? a : b);
        } else {
            g = inflate_at_vertex(std::move(g), 1 + int(rng.next_below(std::uint64_t(n))));
        }
    }
    return gram_matrix(g);
}

InputMatrix gen_random_uti(int n, std::uint64_t seed, int coeff_range, const Rational& density) {
    if (n < 1) throw Error("matrix size must be positive, got " + std::to_string(n));
    if (coeff_range < 1)
        throw Error("coefficient range must be positive, got " + std::to_string(coeff_range));
    if (density <= Rational(0) || density > Rational(1))
        throw Error("density must be in (0,1], got " + density.to_string());
    Rng rng(seed);

    const std::uint64_t num = std::uint64_t(density.num());
    const std::uint64_t den = std::uint64_t(density.den());
    InputMatrix m = InputMatrix::identity(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (rng.next_below(den) >= num) continue;
            // uniform over [-range, range] \ {0}
            const std::int64_t k = std::int64_t(rng.next_below(2 * std::uint64_t(coeff_range)));
            const std::int64_t value = k < coeff_range ? k - coeff_range : k - coeff_range + 1;
            m.at(i, j) = Rational(value);
        }
    return m;
}

}  // namespace pdtest
