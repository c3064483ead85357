#ifndef ARBBLOCK_RATIONAL_HPP
#define ARBBLOCK_RATIONAL_HPP

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace arbblock {

// Exact rational arithmetic everywhere an optimality comparison happens.
// Desk-scale instances keep numerators/denominators tiny, so 64-bit
// components are plenty.
using Rational = boost::rational<long long>;

// Accepts "3", "-2", "1.5" and "3/2" forms. Throws input_error on anything
// else (including division by zero).
Rational parse_rational(std::string_view text);

// Canonical form: plain integer when the denominator is 1, "p/q" otherwise.
// parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) {
    return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

} // namespace arbblock

#endif
