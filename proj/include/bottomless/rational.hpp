#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace bottomless {

// Exact rational scalar used for every coordinate and time in the library.
// No floating point is involved anywhere in the algorithms; doubles appear
// only in the SVG renderer, which is presentation output.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "5", "-12", "3.25", "7/2", "-3/9" (canonicalized to -1/3).
// Returns nullopt on malformed input; no locale dependence.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical emission: integer if the denominator is 1, else "p/q" reduced.
// parse_rational(format_rational(r)) == r for every r.
std::string format_rational(const Rat& r);

// Floor division on plain machine integers; C++ '/' truncates toward zero,
// which is wrong for the negative numerators in suggested_params.
long long floor_div(long long num, long long den);

}  // namespace bottomless
