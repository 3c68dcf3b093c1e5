#include "pdtest/dynkin.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "pdtest/errors.hpp"

namespace pdtest {

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
    switch (family) {
        case Family::A:
            if (rank < 1) throw Error("A(n) needs n >= 1, got " + std::to_string(rank));
            break;
        case Family::D:
            if (rank < 4) throw Error("D(n) needs n >= 4, got " + std::to_string(rank));
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw Error("E(n) needs n in 6..8, got " + std::to_string(rank));
            break;
    }
}

std::string DynkinType::to_string() const {
    const char letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
    return letter + std::to_string(rank_);
}

std::optional<DynkinType> DynkinType::from_string(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    Family f;
    switch (s.front()) {
        case 'A': f = Family::A; break;
        case 'D': f = Family::D; break;
        case 'E': f = Family::E; break;
        default: return std::nullopt;
    }
    int rank = 0;
    const auto* begin = s.data() + 1;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, rank);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    try {
        return DynkinType(f, rank);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<DynkinType> recognize_dynkin(const GramBigraph& g) {
    const int n = g.n();

    // (1) simple solid graph: every coefficient 0 or -1
    for (const std::int64_t d : g.upper())
        if (d != 0 && d != -1) return std::nullopt;

    // (2) a tree has exactly n-1 edges
    std::int64_t edges = 0;
    for (const std::int64_t d : g.upper()) edges -= d;
    if (edges != std::int64_t(n) - 1) return std::nullopt;

    // (3) connected
    if (!is_connected(g)) return std::nullopt;

    // (4) ramification vertices
    std::vector<int> deg(std::size_t(n) + 1, 0);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g.coeff(i, j) != 0) {
                ++deg[std::size_t(i)];
                ++deg[std::size_t(j)];
            }
    int ram = 0;
    int ram_count = 0;
    for (int v = 1; v <= n; ++v)
        if (deg[std::size_t(v)] >= 3) {
            ram = v;
            ++ram_count;
        }

    // (5) no ramification: a path
    if (ram_count == 0) return DynkinType(DynkinType::Family::A, n);
    if (ram_count > 1 || deg[std::size_t(ram)] > 3) return std::nullopt;

    // (6) walk the three arms; all internal vertices have degree 2
    std::array<int, 3> arms{};
    int k = 0;
    for (int w = 1; w <= n; ++w) {
        if (w == ram || g.coeff(ram, w) == 0) continue;
        int prev = ram;
        int cur = w;
        int len = 1;
        while (deg[std::size_t(cur)] == 2) {
            for (int x = 1; x <= n; ++x)
                if (x != prev && x != cur && g.coeff(cur, x) != 0) {
                    prev = cur;
                    cur = x;
                    break;
                }
            ++len;
        }
        arms[std::size_t(k++)] = len;
    }
    std::sort(arms.begin(), arms.end());

    if (arms[0] == 1 && arms[1] == 1) return DynkinType(DynkinType::Family::D, n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return DynkinType(DynkinType::Family::E, n);
    return std::nullopt;
}

GramBigraph dynkin_gram(const DynkinType& t) {
    const int n = t.rank();
    GramBigraph g(n);
    switch (t.family()) {
        case DynkinType::Family::A:
            for (int i = 1; i < n; ++i) g.set_coeff(i, i + 1, -1);
            break;
        case DynkinType::Family::D:
            g.set_coeff(1, 3, -1);
            g.set_coeff(2, 3, -1);
            for (int i = 3; i < n; ++i) g.set_coeff(i, i + 1, -1);
            break;
        case DynkinType::Family::E:
            for (int i = 1; i + 1 < n; ++i) g.set_coeff(i, i + 1, -1);
            g.set_coeff(3, n, -1);
            break;
    }
    return g;
}

std::int64_t igfpos(int n) {
    if (n < 1) throw Error("igfpos needs n >= 1, got " + std::to_string(n));
    switch (n) {
        case 1:
        case 2:
        case 3: return std::int64_t(n) * (n - 1) / 2;
        case 6: return 30;
        case 7: return 56;
        case 8: return 112;
        default: return std::int64_t(n) * n - 2 * std::int64_t(n);
    }
}

std::int64_t igfposs(int n) {
    if (n < 1) throw Error("igfposs needs n >= 1, got " + std::to_string(n));
    switch (n) {
        case 1:
        case 2:
        case 3: return 0;
        case 6: return 5;
        case 7: return 10;
        case 8: return 21;
        default: return std::int64_t(n) - 3;
    }
}

}  // namespace pdtest
