#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dicekeep/bigint.hpp"
#include "dicekeep/errors.hpp"

namespace dicekeep {

/// How the r rolls collapse to one outcome.
enum class Mode {
    single,        // one roll, taken as-is
    advantage,     // keep the highest of r rolls
    disadvantage,  // keep the lowest of r rolls
};

inline std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::single: return "single";
        case Mode::advantage: return "advantage";
        case Mode::disadvantage: return "disadvantage";
    }
    return "?";
}

inline std::optional<Mode> mode_from_string(std::string_view text) {
    if (text == "single") return Mode::single;
    if (text == "advantage") return Mode::advantage;
    if (text == "disadvantage") return Mode::disadvantage;
    return std::nullopt;
}

/// Identity of one experiment: a fair `sides`-sided die rolled `rolls` times.
struct ExperimentSpec {
    std::int64_t sides = 0;
    std::int64_t rolls = 1;
    Mode mode = Mode::single;

    void validate() const {
        if (sides < 2)
            throw domain_error("sides must be >= 2, got " + std::to_string(sides));
        if (rolls < 1)
            throw domain_error("rolls must be >= 1, got " + std::to_string(rolls));
        if (mode == Mode::single && rolls != 1)
            throw domain_error("single mode requires rolls = 1, got " + std::to_string(rolls));
    }

    /// Advantage/disadvantage with one roll collapses to the base experiment.
    /// Permitted (the formulas specialize correctly) but worth a diagnostic.
    bool is_degenerate_multi_roll() const { return mode != Mode::single && rolls == 1; }

    /// s^r, the number of ordered roll tuples.
    BigInt sample_space_size() const { return ipow(BigInt(sides), rolls); }

    friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

}  // namespace dicekeep
