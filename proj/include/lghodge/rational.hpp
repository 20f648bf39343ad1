#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lgh {

// Plain value types (no expression templates): every intermediate is a
// materialized, canonically reduced fraction with positive denominator.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

using Vector = std::vector<Rational>;

/// Parses "p/q" or an integer string. Rejects malformed input and zero or
/// negative denominators (throws ParseError).
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace lgh
