#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace taftyd {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string int_to_string(const Int& v) { return v.str(); }

std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q" with optional sign; throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace taftyd
