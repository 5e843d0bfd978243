#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dicekeep/errors.hpp"
#include "dicekeep/expected_value.hpp"
#include "dicekeep/experiment.hpp"
#include "dicekeep/rational.hpp"

namespace dicekeep {

namespace detail {
inline void check_rolls(std::int64_t rolls) {
    if (rolls < 1)
        throw domain_error("rolls must be >= 1, got " + std::to_string(rolls));
}
}  // namespace detail

/// lim_{s->inf} E/s: r/(r+1) for advantage, 1/(r+1) for disadvantage.
/// Single mode has no such statement and is rejected; its trivial 1/2 ratio
/// is exposed only through convergence_table().
inline Rational limit_ratio(Mode mode, std::int64_t rolls) {
    detail::check_rolls(rolls);
    switch (mode) {
        case Mode::advantage: return Rational(rolls, rolls + 1);
        case Mode::disadvantage: return Rational(1, rolls + 1);
        case Mode::single: break;
    }
    throw domain_error("limit_ratio: no asymptotic ratio for single mode");
}

/// Relative gain delta = (E[H] - E[X]) / E[X], exact.
inline Rational relative_gain(std::int64_t rolls, std::int64_t sides) {
    detail::check_rolls(rolls);
    Rational base = base_expected_value(sides);
    Rational high = expected_value({sides, rolls, Mode::advantage});
    return (high - base) / base;
}

/// Relative loss lambda = (E[X] - E[L]) / E[X], exact. Equals the gain for
/// every (r, s) since E[H] + E[L] = s + 1 = 2 E[X].
inline Rational relative_loss(std::int64_t rolls, std::int64_t sides) {
    detail::check_rolls(rolls);
    Rational base = base_expected_value(sides);
    Rational low = expected_value({sides, rolls, Mode::disadvantage});
    return (base - low) / base;
}

/// Shared limit of gain and loss as s -> inf: (r-1)/(r+1).
inline Rational gain_loss_limit(std::int64_t rolls) {
    detail::check_rolls(rolls);
    return Rational(rolls - 1, rolls + 1);
}

/// One schedule point of an E/s convergence table. The gap keeps its sign:
/// advantage rows approach from above (gap > 0), disadvantage rows also from
/// above or exactly on the limit, and the two gaps sum to 1/s.
struct ConvergenceRow {
    std::int64_t sides = 0;
    Rational ratio;  // E/s, exact
    Rational limit;
    Rational gap;  // ratio - limit, signed
};

/// Exact ratio/limit/gap per schedule entry. Single mode is admitted as an
/// extension with limit 1/2.
inline std::vector<ConvergenceRow> convergence_table(Mode mode, std::int64_t rolls,
                                                     std::span<const std::int64_t> sides_schedule) {
    detail::check_rolls(rolls);
    if (sides_schedule.empty())
        throw domain_error("convergence_table: empty sides schedule");
    std::int64_t prev = 1;
    for (std::int64_t s : sides_schedule) {
        if (s < 2)
            throw domain_error("convergence_table: sides must be >= 2, got " + std::to_string(s));
        if (s <= prev)
            throw domain_error("convergence_table: sides schedule must be strictly increasing");
        prev = s;
    }
    Rational limit = mode == Mode::single ? Rational(1, 2) : limit_ratio(mode, rolls);
    std::vector<ConvergenceRow> rows;
    rows.reserve(sides_schedule.size());
    for (std::int64_t s : sides_schedule) {
        Rational ratio = expected_value({s, rolls, mode}) / Rational(s);
        rows.push_back({s, ratio, limit, ratio - limit});
    }
    return rows;
}

inline std::vector<ConvergenceRow> convergence_table(Mode mode, std::int64_t rolls,
                                                     const std::vector<std::int64_t>& schedule) {
    return convergence_table(mode, rolls, std::span<const std::int64_t>(schedule));
}

}  // namespace dicekeep
