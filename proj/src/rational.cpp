#include "pdtest/rational.hpp"

#include <charconv>

namespace pdtest {

namespace {

std::int64_t parse_int64(std::string_view s, std::string_view what) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty())
        throw ParseError("not an integer: '" + std::string(what) + "'");
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int64(text, text));
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("not a rational: '" + std::string(text) + "'");
    const std::string_view p = text.substr(0, slash);
    const std::string_view q = text.substr(slash + 1);
    if (q.empty() || q.front() == '+' || q.front() == '-')
        throw ParseError("denominator must be a positive integer: '" + std::string(text) + "'");
    const std::int64_t num = parse_int64(p, text);
    const std::int64_t den = parse_int64(q, text);
    if (den <= 0) throw ParseError("denominator must be positive: '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace pdtest
