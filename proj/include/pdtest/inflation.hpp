#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdtest/bigraph.hpp"
#include "pdtest/rng.hpp"

namespace pdtest {

// How a dotted pair is chosen when several are available.
enum class Strategy {
    First = 0,        // lexicographically smallest (a,b), a < b
    Last = 1,         // lexicographically greatest
    FirstOrLast = 2,  // first or last, one coin flip per step
    UniformRandom = 3 // uniform over all dotted pairs
};

Strategy strategy_from_int(int s);
int strategy_to_int(Strategy s);

struct InflationStep {
    enum class Kind { Vertex, Pair };

    Kind kind;
    int a;  // inflated vertex, or first vertex of the pair
    int b;  // second vertex of the pair; 0 for vertex steps

    static InflationStep at_vertex(int a) { return {Kind::Vertex, a, 0}; }
    static InflationStep at_pair(int a, int b) { return {Kind::Pair, a, b}; }

    friend bool operator==(const InflationStep& x, const InflationStep& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b;
    }
};

// Ordered record of the inflations an algorithm performed, 1-based vertices.
struct ExecutionLog {
    std::vector<InflationStep> steps;

    std::int64_t vertex_count() const;
    std::int64_t pair_count() const;

    // One line per step: "V a" / "P a b", trailing newline.
    std::string to_text() const;

    friend bool operator==(const ExecutionLog& x, const ExecutionLog& y) {
        return x.steps == y.steps;
    }
};

// Negates every coefficient incident with a. An involution.
GramBigraph inflate_at_vertex(GramBigraph g, int a);

// Defined iff coeff(first, second) > 0. Rewrites the coefficients at the
// second vertex: d_{second,c} -= d_{first,c} * d_{first,second} for all other
// c, then flips the sign of d_{first,second}. Throws NotDefinedError when the
// pair carries no dotted edge. Note infl_{a,b} != infl_{b,a}.
GramBigraph inflate_at_pair(GramBigraph g, int first, int second);

// Chooses a dotted pair per the strategy, or nullopt when none exists. Only
// FirstOrLast and UniformRandom consume randomness.
std::optional<std::pair<int, int>> select_dotted_edge(const GramBigraph& g, Strategy s, Rng& rng);

struct ExecutionResult {
    GramBigraph graph;
    ExecutionLog log;
};

// Repeats pair inflations at strategy-chosen dotted pairs until none remain
// or `bound` inflations were performed.
ExecutionResult inflations_at_pair_bounded(GramBigraph g, Strategy s, std::int64_t bound, Rng& rng);

// Grows S = {1} to all of V: each round picks the lexicographically smallest
// (a,b) in S x (V \ S) with d_ab != 0, makes the connection dotted by a
// vertex inflation at b if needed, then applies infl_{b,a}. Afterwards the
// standard basis vector sum is a positive sincere root. With early_exit the
// loop stops at a round boundary once no dotted edge remains. Throws
// DisconnectedError if no crossing pair exists before S is full.
ExecutionResult inflations_to_pos_sincere_root(GramBigraph g, bool early_exit);

}  // namespace pdtest
