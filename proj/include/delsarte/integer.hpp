#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace delsarte {

// Exact arbitrary-precision signed integer. No rounding happens anywhere
// in this library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline long to_long_checked(const Integer& x) {
    if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min())
        throw std::overflow_error("integer out of machine range");
    return static_cast<long>(x);
}

// nonnegative representative of x mod m, m >= 1
inline long mod_reduce(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace delsarte
