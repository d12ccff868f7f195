#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace layerslab {

// Exact arithmetic for every closed-form probability. All order-statistics
// events in this model have rational probabilities, so tests can demand
// equality with zero tolerance.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace layerslab
