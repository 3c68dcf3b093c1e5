#include "pdtest/oracle.hpp"

#include <string>

#include "pdtest/checked.hpp"
#include "pdtest/errors.hpp"

namespace pdtest {

bool gauss_pos_def_test(const InputMatrix& a) {
    InputMatrix m = symmetrize(a);
    const int n = m.n();
    const Rational zero(0);
    for (int k = 1; k <= n; ++k) {
        const Rational pivot = m.at(k, k);
        if (!(pivot > zero)) return false;
        for (int i = k + 1; i <= n; ++i) {
            const Rational factor = m.at(i, k) / pivot;
            if (factor == zero) continue;
            // row_i -= factor * row_k; columns < k are already zero
            for (int j = k; j <= n; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(k, j);
        }
    }
    return true;
}

namespace {

// base^exp, saturating at limit+1 so callers can compare against a budget.
std::int64_t pow_capped(std::int64_t base, int exp, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

struct RootSearch {
    const GramBigraph& g;
    int n;
    std::int64_t lo;
    std::int64_t hi;
    bool stop_at_first;
    std::vector<IntVector> found;
    IntVector v;
    IntVector s;  // s[i] = sum_{j<i} d(j+1,i+1) * v[j]
    std::int64_t acc = 0;

    RootSearch(const GramBigraph& graph, std::int64_t lo_, std::int64_t hi_, bool first_only)
        : g(graph), n(graph.n()), lo(lo_), hi(hi_), stop_at_first(first_only),
          v(std::size_t(graph.n()), 0), s(std::size_t(graph.n()), 0) {}

    bool run(int i) {
        if (i == n) {
            if (acc == 1) {
                if (stop_at_first) return true;
                found.push_back(v);
            }
            return false;
        }
        for (std::int64_t x = lo; x <= hi; ++x) {
            v[std::size_t(i)] = x;
            const std::int64_t saved = acc;
            acc = checked_add(acc, checked_add(checked_mul(x, x), checked_mul(x, s[std::size_t(i)])));
            for (int m = i + 1; m < n; ++m)
                s[std::size_t(m)] = checked_add(s[std::size_t(m)], checked_mul(g.coeff(i + 1, m + 1), x));
            const bool done = run(i + 1);
            for (int m = i + 1; m < n; ++m)
                s[std::size_t(m)] = checked_sub(s[std::size_t(m)], checked_mul(g.coeff(i + 1, m + 1), x));
            acc = saved;
            if (done) return true;
        }
        v[std::size_t(i)] = 0;
        return false;
    }
};

}  // namespace

std::vector<IntVector> brute_force_roots(const GramBigraph& g, int box, std::int64_t budget) {
    if (box < 1) throw Error("root search box must be positive, got " + std::to_string(box));
    const std::int64_t evals = pow_capped(2 * std::int64_t(box) + 1, g.n(), budget);
    if (evals > budget)
        throw BudgetExceededError("(2*" + std::to_string(box) + "+1)^" + std::to_string(g.n()) +
                                  " evaluations exceed the budget of " + std::to_string(budget));
    RootSearch search(g, -box, box, false);
    search.run(0);
    return std::move(search.found);
}

bool has_positive_sincere_root(const GramBigraph& g, int box, std::int64_t budget) {
    if (box < 1) throw Error("root search box must be positive, got " + std::to_string(box));
    const std::int64_t evals = pow_capped(box, g.n(), budget);
    if (evals > budget)
        throw BudgetExceededError(std::to_string(box) + "^" + std::to_string(g.n()) +
                                  " evaluations exceed the budget of " + std::to_string(budget));
    RootSearch search(g, 1, box, true);
    return search.run(0);
}

}  // namespace pdtest
