#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pdtest/bigraph.hpp"

namespace pdtest {

// A simply-laced Dynkin diagram: A(n) n>=1, D(n) n>=4, E(6), E(7), E(8).
class DynkinType {
  public:
    enum class Family { A, D, E };

    DynkinType(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }

    std::string to_string() const;  // "A7", "D12", "E8"
    static std::optional<DynkinType> from_string(std::string_view s);

    friend bool operator==(const DynkinType& x, const DynkinType& y) {
        return x.family_ == y.family_ && x.rank_ == y.rank_;
    }
    friend bool operator!=(const DynkinType& x, const DynkinType& y) { return !(x == y); }

  private:
    Family family_;
    int rank_;
};

// Decides whether g is (the bigraph of) a Dynkin diagram: simple solid graph,
// n-1 edges, connected, and at most one ramification vertex of degree 3 whose
// sorted arm lengths are (1,1,n-3), (1,2,2), (1,2,3) or (1,2,4).
std::optional<DynkinType> recognize_dynkin(const GramBigraph& g);

// Canonical layout of a Dynkin diagram as a solid bigraph. A(n): path
// 1-2-...-n. D(n): leaves 1,2 joined to 3, then path 3-4-...-n. E(n): path
// 1-...-(n-1) with vertex n joined to 3.
GramBigraph dynkin_gram(const DynkinType& t);

// Upper bound on the pair inflations needed to turn a positive bigraph on n
// vertices into a (multi)graph.
std::int64_t igfpos(int n);

// Same bound when starting from a bigraph that already admits a positive
// sincere root.
std::int64_t igfposs(int n);

}  // namespace pdtest
