#pragma once

#include <cstdint>

#include "dicekeep/bigint.hpp"
#include "dicekeep/errors.hpp"
#include "dicekeep/experiment.hpp"
#include "dicekeep/pmf.hpp"
#include "dicekeep/power_sum.hpp"
#include "dicekeep/rational.hpp"

namespace dicekeep {

/// E[X] = (s+1)/2 for one roll of a fair s-sided die.
inline Rational base_expected_value(std::int64_t sides) {
    if (sides < 2)
        throw domain_error("sides must be >= 2, got " + std::to_string(sides));
    return Rational(sides + 1, 2);
}

/// Exact expected value of the experiment outcome.
///
/// Advantage:     s - T/s^r,  T = sum_{i=1}^{s-1} i^r
/// Disadvantage:  1 + T/s^r
///
/// T goes through sum_powers(), so sides beyond `faulhaber_threshold` use the
/// O(r^2) closed form (sides ~ 10^18 is fine).
inline Rational expected_value(const ExperimentSpec& spec) {
    spec.validate();
    if (spec.mode == Mode::single)
        return base_expected_value(spec.sides);
    Rational tail(sum_powers(spec.sides - 1, spec.rolls), spec.sample_space_size());
    return spec.mode == Mode::advantage ? Rational(spec.sides) - tail : Rational(1) + tail;
}

/// Default work bound for the definition-based oracle below: it exists for
/// cross-checking, not as a production path.
inline const BigInt default_pmf_work_bound = BigInt(10'000'000);

/// E = sum_i i * frequency_i / s^r straight from the PMF. Refuses sample
/// spaces larger than `max_sample_points`.
inline Rational expected_value_via_pmf(const ExperimentSpec& spec,
                                       const BigInt& max_sample_points = default_pmf_work_bound) {
    spec.validate();
    BigInt total = spec.sample_space_size();
    if (total > max_sample_points)
        throw resource_error("expected_value_via_pmf: sample space " + total.str() +
                             " exceeds work bound " + max_sample_points.str());
    OutcomePmf dist = pmf(spec);
    BigInt weighted = 0;
    for (std::int64_t i = 1; i <= spec.sides; ++i)
        weighted += i * dist.frequency(i);
    return Rational(weighted, total);
}

}  // namespace dicekeep
