// Arbitrary-precision integer and rational aliases used throughout the engine.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ringdec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ringdec
