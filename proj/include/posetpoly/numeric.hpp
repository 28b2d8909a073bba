#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace posetpoly {

// All counting is exact. Coefficients and face counts use arbitrary
// precision integers, geometric computations use rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace posetpoly
