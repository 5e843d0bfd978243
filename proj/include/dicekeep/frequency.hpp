#pragma once

#include <cstdint>
#include <string>

#include "dicekeep/bigint.hpp"
#include "dicekeep/errors.hpp"
#include "dicekeep/experiment.hpp"

namespace dicekeep {

namespace detail {

inline void check_outcome_range(std::int64_t outcome, const ExperimentSpec& spec) {
    spec.validate();
    if (outcome < 1 || outcome > spec.sides)
        throw domain_error("outcome " + std::to_string(outcome) + " out of range [1, " +
                           std::to_string(spec.sides) + "]");
}

inline void check_mode(const ExperimentSpec& spec, Mode expected) {
    if (spec.mode != expected)
        throw domain_error(std::string("expected ") + std::string(to_string(expected)) +
                           " mode, got " + std::string(to_string(spec.mode)));
}

/// Count of r-tuples whose extreme equals the given outcome, telescoped form:
/// tuples bounded by `inside` minus tuples bounded by `inside - 1`.
inline BigInt extreme_count(std::int64_t inside, std::int64_t rolls) {
    return ipow(BigInt(inside), rolls) - ipow(BigInt(inside - 1), rolls);
}

/// Same count as a binomial sum: j rolls hit the outcome exactly, the other
/// r - j rolls each pick one of `others` values.
inline BigInt extreme_count_binomial(std::int64_t others, std::int64_t rolls) {
    BigInt total = 0;
    for (std::int64_t j = 1; j <= rolls; ++j)
        total += binomial(rolls, j) * ipow(BigInt(others), rolls - j);
    return total;
}

}  // namespace detail

/// Number of ordered roll tuples with maximum equal to `outcome`: i^r - (i-1)^r.
inline BigInt frequency_advantage_closed(std::int64_t outcome, const ExperimentSpec& spec) {
    detail::check_outcome_range(outcome, spec);
    detail::check_mode(spec, Mode::advantage);
    return detail::extreme_count(outcome, spec.rolls);
}

/// Same count as sum_{j=1}^{r} C(r,j) (i-1)^{r-j}; equals the closed form.
inline BigInt frequency_advantage_binomial(std::int64_t outcome, const ExperimentSpec& spec) {
    detail::check_outcome_range(outcome, spec);
    detail::check_mode(spec, Mode::advantage);
    return detail::extreme_count_binomial(outcome - 1, spec.rolls);
}

/// Number of ordered roll tuples with minimum equal to `outcome`:
/// (s-i+1)^r - (s-i)^r.
inline BigInt frequency_disadvantage_closed(std::int64_t outcome, const ExperimentSpec& spec) {
    detail::check_outcome_range(outcome, spec);
    detail::check_mode(spec, Mode::disadvantage);
    return detail::extreme_count(spec.sides - outcome + 1, spec.rolls);
}

/// Same count as sum_{j=1}^{r} C(r,j) (s-i)^{r-j}; equals the closed form.
inline BigInt frequency_disadvantage_binomial(std::int64_t outcome, const ExperimentSpec& spec) {
    detail::check_outcome_range(outcome, spec);
    detail::check_mode(spec, Mode::disadvantage);
    return detail::extreme_count_binomial(spec.sides - outcome, spec.rolls);
}

}  // namespace dicekeep
