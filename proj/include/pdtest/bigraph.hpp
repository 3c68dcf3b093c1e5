#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pdtest/matrix.hpp"

namespace pdtest {

// Loop-free edge-bipartite graph on vertices 1..n, stored as the strictly
// upper-triangular coefficient array of its (unidiagonal) Gram matrix.
// coeff(i,j) < 0 encodes |coeff| solid edges between i and j, coeff(i,j) > 0
// that many dotted edges. Accessors are symmetric: coeff(j,i) == coeff(i,j).
class GramBigraph {
  public:
    explicit GramBigraph(int n);

    int n() const { return n_; }

    std::int64_t coeff(int a, int b) const { return d_[index(a, b)]; }
    void set_coeff(int a, int b, std::int64_t v) { d_[index(a, b)] = v; }

    // The raw strictly-upper-triangular array, pairs (i,j) with i < j in
    // lexicographic order.
    std::span<const std::int64_t> upper() const { return d_; }

    friend bool operator==(const GramBigraph& x, const GramBigraph& y) {
        return x.n_ == y.n_ && x.d_ == y.d_;
    }

  private:
    std::size_t index(int a, int b) const;

    int n_;
    std::vector<std::int64_t> d_;
};

// Builds the bigraph of A: requires unit diagonal, and every a_ij + a_ji
// (i < j) integral. Throws NotUnidiagonalError / NotTriangleIntegralError.
GramBigraph triangularise(const InputMatrix& a);

// q(v) = sum v_i^2 + sum_{i<j} d_ij v_i v_j, overflow-checked.
std::int64_t eval_form(const GramBigraph& g, std::span<const std::int64_t> v);

bool is_connected(const GramBigraph& g);

struct Component {
    std::vector<int> vertices;  // original labels, ascending
    GramBigraph graph;          // relabeled to 1..vertices.size()
};

// Components ordered by smallest original vertex; relabeling preserves order.
std::vector<Component> connected_components(const GramBigraph& g);

// True iff every |coeff| <= 1 (necessary for positive definiteness).
bool coefficient_precheck(const GramBigraph& g);

bool has_dotted_edge(const GramBigraph& g);

// The upper-triangular unidiagonal rational matrix whose bigraph is g.
InputMatrix gram_matrix(const GramBigraph& g);

}  // namespace pdtest
