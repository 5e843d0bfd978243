#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "dicekeep/errors.hpp"

namespace dicekeep {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp with a non-negative integer exponent, exact.
inline BigInt ipow(const BigInt& base, std::int64_t exp) {
    if (exp < 0)
        throw domain_error("ipow: exponent must be >= 0, got " + std::to_string(exp));
    if (exp > std::numeric_limits<unsigned>::max())
        throw resource_error("ipow: exponent " + std::to_string(exp) + " is infeasibly large");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// Binomial coefficient C(n, k), exact; 0 outside the triangle.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    // result stays integral at every step: after multiplying by (n-k+j) the
    // numerator is a product of j consecutive integers, divisible by j!.
    for (std::int64_t j = 1; j <= k; ++j) {
        result *= (n - k + j);
        result /= j;
    }
    return result;
}

}  // namespace dicekeep
