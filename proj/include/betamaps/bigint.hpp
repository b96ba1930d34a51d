#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace betamaps {

// Exact arbitrary-precision integer used for all counts and series coefficients.
using BigInt = boost::multiprecision::cpp_int;

// C(n, k), computed by incremental exact division.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i; // exact at every step
    }
    return c;
}

inline BigInt catalan(int n) {
    BigInt c = binomial(2 * n, n);
    c /= n + 1;
    return c;
}

} // namespace betamaps
