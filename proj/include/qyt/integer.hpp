#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qyt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation that must be exact (a division, a formula that
/// is supposed to be integral) is not. Always indicates a bug or a broken
/// identity, never bad user input.
class inexact_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a brute-force loop would exceed its configured size cap.
class limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Binomial coefficient C(a, b) for integer a (possibly negative top is not
/// needed here): zero outside 0 <= b <= a.
inline Integer binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Integer r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline Integer exact_div(const Integer& num, const Integer& den) {
    if (den == 0) throw inexact_error("division by zero");
    Integer quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) {
        throw inexact_error("non-exact integer division: " + num.str() + " / " + den.str());
    }
    return quot;
}

inline Integer ipow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline std::int64_t to_int64(const Integer& v) {
    return v.convert_to<std::int64_t>();
}

}  // namespace qyt
