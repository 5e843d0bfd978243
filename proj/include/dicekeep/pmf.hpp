#pragma once

#include <cstdint>
#include <vector>

#include "dicekeep/bigint.hpp"
#include "dicekeep/experiment.hpp"
#include "dicekeep/frequency.hpp"
#include "dicekeep/rational.hpp"

namespace dicekeep {

/// Exact outcome distribution over 1..s. Outcome i lives at index i-1;
/// frequencies sum to s^r and probabilities to 1, exactly.
struct OutcomePmf {
    ExperimentSpec spec;
    std::vector<BigInt> frequencies;
    std::vector<Rational> probabilities;

    const BigInt& frequency(std::int64_t outcome) const {
        return frequencies.at(static_cast<std::size_t>(outcome - 1));
    }
    const Rational& probability(std::int64_t outcome) const {
        return probabilities.at(static_cast<std::size_t>(outcome - 1));
    }
};

inline OutcomePmf pmf(const ExperimentSpec& spec) {
    spec.validate();
    OutcomePmf result;
    result.spec = spec;
    result.frequencies.reserve(static_cast<std::size_t>(spec.sides));
    result.probabilities.reserve(static_cast<std::size_t>(spec.sides));
    BigInt total = spec.sample_space_size();
    for (std::int64_t i = 1; i <= spec.sides; ++i) {
        BigInt f;
        switch (spec.mode) {
            case Mode::single: f = 1; break;
            case Mode::advantage: f = detail::extreme_count(i, spec.rolls); break;
            case Mode::disadvantage:
                f = detail::extreme_count(spec.sides - i + 1, spec.rolls);
                break;
        }
        result.probabilities.emplace_back(f, total);
        result.frequencies.push_back(std::move(f));
    }
    return result;
}

}  // namespace dicekeep
