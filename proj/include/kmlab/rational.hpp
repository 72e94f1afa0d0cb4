#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kmlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace kmlab
