#include <doctest.h>

#include <array>
#include <vector>

#include "pdtest/bigraph.hpp"
#include "pdtest/generators.hpp"
#include "pdtest/rng.hpp"

using pdtest::GramBigraph;
using pdtest::InputMatrix;
using pdtest::Rational;

namespace {

constexpr const char* kExample = R"(4
1 -1/2 2 1
-3/2 1 0 0
-1 1 1 7
-2 0 -5 1
)";

}  // namespace

TEST_CASE("triangularise folds opposite entries into the upper triangle") {
    const GramBigraph g = pdtest::triangularise(pdtest::parse_matrix(kExample));
    CHECK(g.n() == 4);
    const std::vector<std::int64_t> expected{-2, 1, -1, 1, 0, 2};
    CHECK(std::vector<std::int64_t>(g.upper().begin(), g.upper().end()) == expected);
}

TEST_CASE("triangularise validates the diagonal and triangle-integrality") {
    InputMatrix bad_diag = InputMatrix::identity(2);
    bad_diag.at(2, 2) = Rational(2);
    CHECK_THROWS_AS(pdtest::triangularise(bad_diag), pdtest::NotUnidiagonalError);

    InputMatrix bad_sum = InputMatrix::identity(2);
    bad_sum.at(1, 2) = Rational(1, 3);
    CHECK_THROWS_AS(pdtest::triangularise(bad_sum), pdtest::NotTriangleIntegralError);

    // halves are fine as long as they pair up
    InputMatrix halves = InputMatrix::identity(2);
    halves.at(1, 2) = Rational(-1, 2);
    halves.at(2, 1) = Rational(-1, 2);
    CHECK(pdtest::triangularise(halves).coeff(1, 2) == -1);
}

TEST_CASE("coefficient accessors are symmetric") {
    GramBigraph g(3);
    g.set_coeff(3, 1, -2);
    CHECK(g.coeff(1, 3) == -2);
    CHECK(g.coeff(3, 1) == -2);
    CHECK_THROWS_AS(g.coeff(1, 1), pdtest::VertexOutOfRangeError);
    CHECK_THROWS_AS(g.coeff(0, 2), pdtest::VertexOutOfRangeError);
    CHECK_THROWS_AS(g.coeff(1, 4), pdtest::VertexOutOfRangeError);
}

TEST_CASE("eval_form matches the rational quadratic form") {
    const GramBigraph g = pdtest::triangularise(pdtest::parse_matrix(kExample));
    const std::array<std::int64_t, 4> v{1, -2, 0, 3};
    const Rational via_matrix = pdtest::eval_quadratic(pdtest::gram_matrix(g), v);
    CHECK(Rational(pdtest::eval_form(g, v)) == via_matrix);

    // same comparison across a random corpus
    pdtest::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + int(rng.next_below(5));
        const GramBigraph h = pdtest::triangularise(
            pdtest::gen_random_uti(n, rng.next(), 3, Rational(2, 3)));
        std::vector<std::int64_t> w(static_cast<std::size_t>(n));
        for (auto& x : w) x = std::int64_t(rng.next_below(9)) - 4;
        CHECK(Rational(pdtest::eval_form(h, w)) == pdtest::eval_quadratic(pdtest::gram_matrix(h), w));
    }
}

TEST_CASE("eval_form raises on overflow") {
    GramBigraph g(2);
    g.set_coeff(1, 2, INT64_MAX);
    const std::array<std::int64_t, 2> v{2, 2};
    CHECK_THROWS_AS(pdtest::eval_form(g, v), pdtest::OverflowError);
}

TEST_CASE("connectivity") {
    GramBigraph path(3);
    path.set_coeff(1, 2, -1);
    path.set_coeff(2, 3, 1);
    CHECK(pdtest::is_connected(path));

    GramBigraph split(3);
    split.set_coeff(1, 2, -1);
    CHECK_FALSE(pdtest::is_connected(split));

    CHECK(pdtest::is_connected(GramBigraph(1)));
}

TEST_CASE("connected_components relabels but preserves coefficients") {
    // vertices {1,4} and {2,3,5} form two components
    GramBigraph g(5);
    g.set_coeff(1, 4, -3);
    g.set_coeff(2, 5, 2);
    g.set_coeff(3, 5, -1);

    const auto comps = pdtest::connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{1, 4});
    CHECK(comps[0].graph.coeff(1, 2) == -3);
    CHECK(comps[1].vertices == std::vector<int>{2, 3, 5});
    // relabeled: 2->1, 3->2, 5->3
    CHECK(comps[1].graph.coeff(1, 3) == 2);
    CHECK(comps[1].graph.coeff(2, 3) == -1);
    CHECK(comps[1].graph.coeff(1, 2) == 0);

    const auto one = pdtest::connected_components(pdtest::triangularise(pdtest::parse_matrix(kExample)));
    REQUIRE(one.size() == 1);
    CHECK(one[0].vertices.size() == 4);
}

TEST_CASE("coefficient_precheck and has_dotted_edge") {
    GramBigraph g(3);
    CHECK(pdtest::coefficient_precheck(g));
    CHECK_FALSE(pdtest::has_dotted_edge(g));
    g.set_coeff(1, 2, 1);
    CHECK(pdtest::coefficient_precheck(g));
    CHECK(pdtest::has_dotted_edge(g));
    g.set_coeff(2, 3, -2);
    CHECK_FALSE(pdtest::coefficient_precheck(g));
}

TEST_CASE("gram_matrix embeds the bigraph as an upper triangular matrix") {
    const GramBigraph g = pdtest::triangularise(pdtest::parse_matrix(kExample));
    const InputMatrix m = pdtest::gram_matrix(g);
    CHECK(m.is_upper_triangular());
    CHECK(m.at(1, 2) == Rational(-2));
    CHECK(pdtest::triangularise(m) == g);
}
