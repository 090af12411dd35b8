#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace qtoric {

// Exact arbitrary-precision integer used for all INT-ring arithmetic.
using ZInt = boost::multiprecision::cpp_int;

// C(a,b) as an exact big integer.
inline ZInt binomial(unsigned a, unsigned b) {
    if (b > a) return 0;
    ZInt r = 1;
    for (unsigned i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

// Parity of C(a,b) by Lucas' theorem: odd iff the base-2 digits of b are
// dominated by those of a, i.e. (b & a) == b.
inline bool binomial_is_odd(std::uint64_t a, std::uint64_t b) {
    if (b > a) return false;
    return (b & a) == b;
}

}  // namespace qtoric
