#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "dicekeep/errors.hpp"
#include "dicekeep/experiment.hpp"
#include "dicekeep/philox.hpp"
#include "dicekeep/pmf.hpp"

namespace dicekeep {

/// Outcome of a seeded simulation run. counts[i-1] tallies outcome i.
/// Identical (spec, trials, seed) reproduce identical counts bit for bit,
/// regardless of chunking or thread count.
struct SimulationResult {
    ExperimentSpec spec;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;
    double empirical_mean = 0.0;
    double standard_error = 0.0;
};

struct SimulateOptions {
    unsigned threads = 1;             // worker threads; 0 means hardware_concurrency
    std::uint64_t chunk_trials = 65536;  // execution granularity only
};

namespace detail {

/// Uniform draw in 1..sides by rejection on the minimal covering power-of-two
/// range; no modulo bias. Accepts with probability > 1/2 per attempt.
inline std::int64_t uniform_roll(TrialStream& stream, std::int64_t sides) {
    const int bits = std::bit_width(static_cast<std::uint64_t>(sides - 1));
    const std::uint64_t mask =
        bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (;;) {
        std::uint64_t v = stream.next() & mask;
        if (v < static_cast<std::uint64_t>(sides))
            return static_cast<std::int64_t>(v) + 1;
    }
}

/// One trial's outcome; a pure function of (seed, trial, spec).
inline std::int64_t run_trial(std::uint64_t seed, std::uint64_t trial,
                              const ExperimentSpec& spec) {
    TrialStream stream(seed, trial);
    std::int64_t kept = uniform_roll(stream, spec.sides);
    for (std::int64_t roll = 1; roll < spec.rolls; ++roll) {
        std::int64_t v = uniform_roll(stream, spec.sides);
        if (spec.mode == Mode::advantage ? v > kept : v < kept)
            kept = v;
    }
    return kept;
}

}  // namespace detail

inline SimulationResult simulate(const ExperimentSpec& spec, std::uint64_t trials,
                                 std::uint64_t seed, const SimulateOptions& options = {}) {
    spec.validate();
    if (trials == 0)
        throw domain_error("simulate: trials must be >= 1");
    if (spec.sides > 100'000'000)
        throw resource_error("simulate: counts for " + std::to_string(spec.sides) +
                             " sides are infeasible");

    const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_trials);
    const std::uint64_t n_chunks = (trials + chunk - 1) / chunk;
    unsigned threads = options.threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));

    const auto n_sides = static_cast<std::size_t>(spec.sides);
    auto worker = [&](std::uint64_t first_chunk, std::uint64_t step,
                      std::vector<std::uint64_t>& counts) {
        for (std::uint64_t c = first_chunk; c < n_chunks; c += step) {
            const std::uint64_t lo = c * chunk;
            const std::uint64_t hi = std::min(trials, lo + chunk);
            for (std::uint64_t t = lo; t < hi; ++t)
                ++counts[static_cast<std::size_t>(detail::run_trial(seed, t, spec)) - 1];
        }
    };

    std::vector<std::vector<std::uint64_t>> partials(threads,
                                                     std::vector<std::uint64_t>(n_sides, 0));
    if (threads <= 1) {
        worker(0, 1, partials[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(worker, w, threads, std::ref(partials[w]));
        for (auto& th : pool)
            th.join();
    }

    SimulationResult result;
    result.spec = spec;
    result.trials = trials;
    result.seed = seed;
    result.counts.assign(n_sides, 0);
    for (const auto& part : partials)
        for (std::size_t i = 0; i < n_sides; ++i)
            result.counts[i] += part[i];

    double mean = 0.0;
    for (std::size_t i = 0; i < n_sides; ++i)
        mean += static_cast<double>(i + 1) * static_cast<double>(result.counts[i]);
    mean /= static_cast<double>(trials);
    double ss = 0.0;
    for (std::size_t i = 0; i < n_sides; ++i) {
        double d = static_cast<double>(i + 1) - mean;
        ss += d * d * static_cast<double>(result.counts[i]);
    }
    result.empirical_mean = mean;
    result.standard_error =
        trials > 1 ? std::sqrt(ss / (static_cast<double>(trials) - 1.0) /
                               static_cast<double>(trials))
                   : 0.0;
    return result;
}

/// Total-variation distance (1/2) sum_i |counts_i/trials - p_i| between the
/// empirical distribution and the exact PMF.
inline double empirical_pmf_distance(const SimulationResult& result, const OutcomePmf& exact) {
    if (!(result.spec == exact.spec))
        throw domain_error("empirical_pmf_distance: simulation and PMF specs differ");
    double distance = 0.0;
    for (std::size_t i = 0; i < result.counts.size(); ++i) {
        double empirical = static_cast<double>(result.counts[i]) /
                           static_cast<double>(result.trials);
        distance += std::abs(empirical - exact.probabilities[i].to_double());
    }
    return distance / 2.0;
}

}  // namespace dicekeep
