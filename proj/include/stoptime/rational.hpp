#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace stoptime {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: reduced, "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

}  // namespace stoptime
