#include "stoptime/rational.hpp"

#include <charconv>

#include "stoptime/errors.hpp"

namespace stoptime {
namespace {

std::int64_t parse_integer(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (digits.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    // from_chars accepts a leading '-' but not '+'; reject "1/-2" style too.
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const auto numerator = parse_integer(text.substr(0, slash), text);
    const auto denominator_text = text.substr(slash + 1);
    if (!denominator_text.empty() && denominator_text.front() == '-') {
        throw ParseError("denominator must be positive: \"" + std::string(text) + "\"");
    }
    const auto denominator = parse_integer(denominator_text, text);
    if (denominator == 0) {
        throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    }
    return Rational(numerator, denominator);
}

std::string format_rational(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace stoptime
