#pragma once

#include <cstddef>
#include <vector>

#include "dicekeep/bigint.hpp"
#include "dicekeep/rational.hpp"

namespace dicekeep {

/// Bernoulli numbers B_0..B_max under the B^- convention (B_1 = -1/2).
///
/// The sign convention matters: Faulhaber's formula in the (-1)^j B_j form
/// used here is only correct with B_1 = -1/2.
struct BernoulliTable {
    std::vector<Rational> values;

    std::size_t max_index() const { return values.size() - 1; }
    const Rational& at(std::size_t j) const { return values.at(j); }
};

/// Generated by the defining recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0, m >= 1.
inline BernoulliTable bernoulli_table(std::size_t max_index) {
    BernoulliTable table;
    table.values.reserve(max_index + 1);
    table.values.emplace_back(1);
    for (std::size_t m = 1; m <= max_index; ++m) {
        Rational acc;
        for (std::size_t j = 0; j < m; ++j)
            acc += Rational(binomial(static_cast<std::int64_t>(m) + 1,
                                     static_cast<std::int64_t>(j))) *
                   table.values[j];
        table.values.push_back(-acc / Rational(static_cast<std::int64_t>(m) + 1));
    }
    return table;
}

}  // namespace dicekeep
