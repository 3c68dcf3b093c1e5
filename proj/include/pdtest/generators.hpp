#pragma once

#include <cstdint>

#include "pdtest/matrix.hpp"
#include "pdtest/rational.hpp"

namespace pdtest {

// Nakayama matrix: upper triangular, a_{i,i+s} = +1 for even s, -1 for odd s.
// Positive definite of Dynkin type A(n) for every n.
InputMatrix gen_nakayama(int n);

// A positive definite unidiagonal integer matrix: starts from the Gram matrix
// of a random Dynkin diagram on n vertices and applies `steps` random
// inflations (which preserve Z-equivalence, hence positivity).
InputMatrix gen_random_positive(int n, std::uint64_t seed, int steps);

// Arbitrary unidiagonal integer matrix: each upper-triangular entry is
// nonzero with probability `density`, drawn uniformly from
// [-coeff_range, coeff_range] \ {0}. Usually not positive definite.
InputMatrix gen_random_uti(int n, std::uint64_t seed, int coeff_range, const Rational& density);

}  // namespace pdtest
