#pragma once

#include <cstdint>
#include <string>

#include "dicekeep/bernoulli.hpp"
#include "dicekeep/bigint.hpp"
#include "dicekeep/errors.hpp"
#include "dicekeep/rational.hpp"

namespace dicekeep {

/// Above this many summands the O(r^2) Faulhaber evaluation takes over from
/// the O(n) loop. Both routes are public and exact; see sum_powers().
inline constexpr std::int64_t faulhaber_threshold = 1'000'000;

/// sum_{i=1}^{n} i^r by direct summation. O(n) big-integer powers.
inline BigInt sum_powers_naive(std::int64_t n, std::int64_t r) {
    if (n < 0)
        throw domain_error("sum_powers_naive: n must be >= 0, got " + std::to_string(n));
    if (r < 0)
        throw domain_error("sum_powers_naive: r must be >= 0, got " + std::to_string(r));
    BigInt total = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        total += ipow(BigInt(i), r);
    return total;
}

/// sum_{i=1}^{n} i^r via Faulhaber's formula,
///   (1/(r+1)) sum_{j=0}^{r} (-1)^j C(r+1, j) B_j n^{r+1-j},
/// O(r^2) and independent of n. The rational intermediate must collapse to an
/// integer; that is checked, not assumed.
inline BigInt faulhaber_sum(std::int64_t n, std::int64_t r, const BernoulliTable& bernoulli) {
    if (n < 0)
        throw domain_error("faulhaber_sum: n must be >= 0, got " + std::to_string(n));
    if (r < 0)
        throw domain_error("faulhaber_sum: r must be >= 0, got " + std::to_string(r));
    if (bernoulli.max_index() < static_cast<std::size_t>(r))
        throw domain_error("faulhaber_sum: Bernoulli table too short (have B_0..B_" +
                           std::to_string(bernoulli.max_index()) + ", need B_" +
                           std::to_string(r) + ")");
    if (n == 0)
        return 0;
    BigInt big_n(n);
    BigInt n_power = ipow(big_n, r + 1);  // n^{r+1-j}, divided down as j grows
    Rational acc;
    for (std::int64_t j = 0; j <= r; ++j) {
        const Rational& b = bernoulli.at(static_cast<std::size_t>(j));
        if (!b.is_zero()) {
            Rational term = Rational(binomial(r + 1, j) * n_power) * b;
            acc += (j % 2 == 0) ? term : -term;
        }
        n_power /= big_n;
    }
    acc /= Rational(r + 1);
    if (!acc.is_integer())
        throw std::logic_error("faulhaber_sum: evaluation did not reduce to an integer: " +
                               acc.fraction_str());
    return acc.numerator();
}

inline BigInt faulhaber_sum(std::int64_t n, std::int64_t r) {
    return faulhaber_sum(n, r, bernoulli_table(static_cast<std::size_t>(r < 0 ? 0 : r)));
}

/// sum_{i=1}^{n} i^r, picking the route by n: the loop is cache-friendly and
/// exact at small n, the closed form is the only feasible route at n ~ 10^18.
inline BigInt sum_powers(std::int64_t n, std::int64_t r) {
    return n >= faulhaber_threshold ? faulhaber_sum(n, r) : sum_powers_naive(n, r);
}

}  // namespace dicekeep
