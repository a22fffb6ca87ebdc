#ifndef TRACEGEN_NUMERIC_HPP
#define TRACEGEN_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tracegen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "1/5", "0.2" or "1" as an exact rational. Throws input_error
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

} // namespace tracegen

#endif
