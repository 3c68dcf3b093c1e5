#include "pdtest/bigraph.hpp"

#include <string>

#include "pdtest/checked.hpp"
#include "pdtest/errors.hpp"

namespace pdtest {

GramBigraph::GramBigraph(int n) : n_(n) {
    if (n < 1) throw Error("bigraph needs at least one vertex, got " + std::to_string(n));
    d_.assign(std::size_t(n) * std::size_t(n - 1) / 2, 0);
}

std::size_t GramBigraph::index(int a, int b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_)
        throw VertexOutOfRangeError("vertex pair (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") outside 1.." + std::to_string(n_));
    if (a == b)
        throw VertexOutOfRangeError("no loop coefficient at vertex " + std::to_string(a));
    const int i = a < b ? a : b;
    const int j = a < b ? b : a;
    // Row-major strictly upper triangle: row i holds n-i entries.
    return std::size_t(i - 1) * std::size_t(n_) - std::size_t(i) * std::size_t(i - 1) / 2 +
           std::size_t(j - i - 1);
}

GramBigraph triangularise(const InputMatrix& a) {
    const int n = a.n();
    const Rational one(1);
    for (int i = 1; i <= n; ++i)
        if (a.at(i, i) != one)
            throw NotUnidiagonalError("diagonal entry (" + std::to_string(i) + "," +
                                      std::to_string(i) + ") is " + a.at(i, i).to_string() +
                                      ", expected 1");
    GramBigraph g(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Rational s = a.at(i, j) + a.at(j, i);
            if (!s.is_integer())
                throw NotTriangleIntegralError("a_ij + a_ji at (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") is " + s.to_string() +
                                               ", not an integer");
            g.set_coeff(i, j, s.to_int64());
        }
    return g;
}

std::int64_t eval_form(const GramBigraph& g, std::span<const std::int64_t> v) {
    const int n = g.n();
    if (int(v.size()) != n)
        throw DimensionMismatchError("vector length " + std::to_string(v.size()) +
                                     " does not match bigraph size " + std::to_string(n));
    std::int64_t acc = 0;
    for (int i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(v[i], v[i]));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::int64_t d = g.coeff(i, j);
            if (d == 0) continue;
            acc = checked_add(acc, checked_mul(d, checked_mul(v[i - 1], v[j - 1])));
        }
    return acc;
}

namespace {

// Iterative DFS from vertex 1 (or `root`), marking reachable vertices.
void mark_reachable(const GramBigraph& g, int root, std::vector<char>& seen) {
    std::vector<int> stack{root};
    seen[std::size_t(root)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 1; w <= g.n(); ++w) {
            if (w == u || seen[std::size_t(w)] || g.coeff(u, w) == 0) continue;
            seen[std::size_t(w)] = 1;
            stack.push_back(w);
        }
    }
}

}  // namespace

bool is_connected(const GramBigraph& g) {
    std::vector<char> seen(std::size_t(g.n()) + 1, 0);
    mark_reachable(g, 1, seen);
    for (int v = 1; v <= g.n(); ++v)
        if (!seen[std::size_t(v)]) return false;
    return true;
}

std::vector<Component> connected_components(const GramBigraph& g) {
    const int n = g.n();
    std::vector<Component> out;
    std::vector<char> seen(std::size_t(n) + 1, 0);
    for (int root = 1; root <= n; ++root) {
        if (seen[std::size_t(root)]) continue;
        std::vector<char> mine(std::size_t(n) + 1, 0);
        mark_reachable(g, root, mine);
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mine[std::size_t(v)]) {
                verts.push_back(v);
                seen[std::size_t(v)] = 1;
            }
        GramBigraph sub(int(verts.size()));
        for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                sub.set_coeff(int(i) + 1, int(j) + 1, g.coeff(verts[i], verts[j]));
        out.push_back(Component{std::move(verts), std::move(sub)});
    }
    return out;
}

bool coefficient_precheck(const GramBigraph& g) {
    for (const std::int64_t d : g.upper())
        if (d < -1 || d > 1) return false;
    return true;
}

bool has_dotted_edge(const GramBigraph& g) {
    for (const std::int64_t d : g.upper())
        if (d > 0) return true;
    return false;
}

InputMatrix gram_matrix(const GramBigraph& g) {
    const int n = g.n();
    InputMatrix m = InputMatrix::identity(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) m.at(i, j) = Rational(g.coeff(i, j));
    return m;
}

}  // namespace pdtest
