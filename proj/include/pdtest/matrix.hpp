#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdtest/rational.hpp"

namespace pdtest {

// Square matrix of exact rationals with 1-based indexing, the input type for
// everything in this library.
class InputMatrix {
  public:
    explicit InputMatrix(int n);

    static InputMatrix identity(int n);

    int n() const { return n_; }

    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

    bool is_upper_triangular() const;

    friend bool operator==(const InputMatrix& x, const InputMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

  private:
    std::size_t index(int i, int j) const;

    int n_;
    std::vector<Rational> a_;
};

// sym(A) = (A^T + A) / 2.
InputMatrix symmetrize(const InputMatrix& a);

// v^T * A * v, exact.
Rational eval_quadratic(const InputMatrix& a, std::span<const std::int64_t> v);

// Text format: '#' lines are comments; remaining whitespace-separated tokens
// are n followed by the n*n entries in row-major order, each an integer or
// p/q with q > 0. Locale-independent.
InputMatrix parse_matrix(std::istream& in);
InputMatrix parse_matrix(std::string_view text);
InputMatrix load_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const InputMatrix& a);
std::string matrix_to_text(const InputMatrix& a);
void save_matrix_file(const std::string& path, const InputMatrix& a);

}  // namespace pdtest
