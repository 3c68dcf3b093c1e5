#pragma once

#include <cstdint>
#include <vector>

#include "pdtest/bigraph.hpp"
#include "pdtest/matrix.hpp"

namespace pdtest {

// Positive definiteness of sym(A) by exact rational Gaussian elimination:
// type-III row operations only, no pivoting, abort at the first pivot <= 0.
bool gauss_pos_def_test(const InputMatrix& a);

using IntVector = std::vector<std::int64_t>;

inline constexpr int kDefaultRootBox = 6;
inline constexpr std::int64_t kDefaultRootBudget = 100'000'000;

// All v in [-box, box]^n with q(v) = 1, in lexicographic order. Throws
// BudgetExceededError if (2*box+1)^n exceeds the evaluation budget.
std::vector<IntVector> brute_force_roots(const GramBigraph& g, int box = kDefaultRootBox,
                                         std::int64_t budget = kDefaultRootBudget);

// Whether some v in [1, box]^n has q(v) = 1. Budget check on box^n.
bool has_positive_sincere_root(const GramBigraph& g, int box = kDefaultRootBox,
                               std::int64_t budget = kDefaultRootBudget);

}  // namespace pdtest
