#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace commdom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace commdom
