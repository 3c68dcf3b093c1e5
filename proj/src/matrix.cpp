#include "pdtest/matrix.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pdtest/errors.hpp"

namespace pdtest {

InputMatrix::InputMatrix(int n) : n_(n) {
    if (n < 1) throw Error("matrix size must be positive, got " + std::to_string(n));
    a_.assign(std::size_t(n) * std::size_t(n), Rational(0));
}

InputMatrix InputMatrix::identity(int n) {
    InputMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
    return m;
}

std::size_t InputMatrix::index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw VertexOutOfRangeError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside 1.." + std::to_string(n_));
    return std::size_t(i - 1) * std::size_t(n_) + std::size_t(j - 1);
}

bool InputMatrix::is_upper_triangular() const {
    for (int i = 2; i <= n_; ++i)
        for (int j = 1; j < i; ++j)
            if (at(i, j) != Rational(0)) return false;
    return true;
}

InputMatrix symmetrize(const InputMatrix& a) {
    const int n = a.n();
    InputMatrix s(n);
    const Rational half(1, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const Rational v = (a.at(i, j) + a.at(j, i)) * half;
            s.at(i, j) = v;
            s.at(j, i) = v;
        }
    return s;
}

Rational eval_quadratic(const InputMatrix& a, std::span<const std::int64_t> v) {
    const int n = a.n();
    if (int(v.size()) != n)
        throw DimensionMismatchError("vector length " + std::to_string(v.size()) +
                                     " does not match matrix size " + std::to_string(n));
    Rational acc(0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rational& c = a.at(i, j);
            if (c == Rational(0)) continue;
            acc = acc + c * Rational(v[std::size_t(i - 1)]) * Rational(v[std::size_t(j - 1)]);
        }
    return acc;
}

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

InputMatrix parse_matrix(std::istream& in) {
    const std::vector<std::string> tokens = tokenize(in);
    if (tokens.empty()) throw ParseError("empty matrix input");

    int n = 0;
    {
        const std::string& t = tokens.front();
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
        if (ec != std::errc() || ptr != t.data() + t.size() || n < 1)
            throw ParseError("matrix size must be a positive integer, got '" + t + "'");
    }

    const std::size_t expected = 1 + std::size_t(n) * std::size_t(n);
    if (tokens.size() != expected)
        throw ParseError("expected " + std::to_string(expected - 1) + " entries for a " +
                         std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                         std::to_string(tokens.size() - 1));

    InputMatrix m(n);
    std::size_t k = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j, ++k) {
            try {
                m.at(i, j) = Rational::parse(tokens[k]);
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 "): " + e.what());
            }
        }
    return m;
}

InputMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matrix(in);
}

InputMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file '" + path + "'");
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const InputMatrix& a) {
    const int n = a.n();
    out << n << "\n";
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out << ' ';
            out << a.at(i, j).to_string();
        }
        out << "\n";
    }
}

std::string matrix_to_text(const InputMatrix& a) {
    std::ostringstream out;
    write_matrix(out, a);
    return out.str();
}

void save_matrix_file(const std::string& path, const InputMatrix& a) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_matrix(out, a);
    if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace pdtest
