#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicekeep/asymptotics.hpp"
#include "dicekeep/bernoulli.hpp"
#include "dicekeep/errors.hpp"
#include "dicekeep/expected_value.hpp"
#include "dicekeep/experiment.hpp"
#include "dicekeep/montecarlo.hpp"
#include "dicekeep/pmf.hpp"

namespace dicekeep::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";

/// Every leaf value in the document is a JSON string: rationals as exact
/// "num/den", integers verbatim, decimals as fixed-point approximations
/// marked by an `_approx` key suffix. Numbers up to 10^18 and 64-bit seeds
/// survive double-based JSON parsers that way.
inline Json make_document(const std::string& command, Json params) {
    Json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["rows"] = Json::array();
    return doc;
}

inline void write_json(const Json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

/// Header row, then one record per row; values are plain (no commas or
/// quotes ever occur in them).
inline void write_csv(const Json& doc, std::ostream& out) {
    const Json& rows = doc.at("rows");
    if (rows.empty())
        return;
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << "\n";
    for (const Json& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            out << (first ? "" : ",") << value.get<std::string>();
            first = false;
        }
        out << "\n";
    }
}

namespace detail {

struct Args {
    std::int64_t sides = 0;
    std::vector<std::int64_t> sides_list;
    std::int64_t rolls = 1;
    std::string mode;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 42;
    std::int64_t max_index = 10;
    std::string format = "json";
    unsigned precision = 6;
};

inline Mode parse_mode(const std::string& text) {
    auto mode = mode_from_string(text);
    if (!mode)
        throw domain_error("unknown mode '" + text + "'");
    return *mode;
}

inline std::string format_double(double value, unsigned precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(static_cast<int>(precision)) << value;
    return os.str();
}

inline void warn_if_degenerate(const ExperimentSpec& spec, std::ostream& err) {
    if (spec.is_degenerate_multi_roll())
        err << "dicekeep: warning: " << to_string(spec.mode)
            << " with rolls=1 is the base experiment\n";
}

inline void add_format_options(CLI::App* sub, Args& args) {
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--precision", args.precision, "Decimal digits in approximations")
        ->check(CLI::Range(0u, 1000u))
        ->capture_default_str();
}

inline void add_mode_option(CLI::App* sub, Args& args) {
    sub->add_option("--mode", args.mode, "Experiment mode")
        ->check(CLI::IsMember({"single", "advantage", "disadvantage"}))
        ->required();
}

inline Json rational_cell(const Rational& value) { return value.fraction_str(); }

inline Json cmd_pmf(const Args& args, std::ostream& err) {
    ExperimentSpec spec{args.sides, args.rolls, parse_mode(args.mode)};
    spec.validate();
    warn_if_degenerate(spec, err);
    Json doc = make_document("pmf", {{"mode", args.mode},
                                     {"sides", std::to_string(args.sides)},
                                     {"rolls", std::to_string(args.rolls)},
                                     {"precision", std::to_string(args.precision)}});
    OutcomePmf dist = pmf(spec);
    for (std::int64_t i = 1; i <= spec.sides; ++i) {
        doc["rows"].push_back({{"outcome", std::to_string(i)},
                               {"frequency", dist.frequency(i).str()},
                               {"probability", rational_cell(dist.probability(i))},
                               {"probability_approx", dist.probability(i).decimal_str(args.precision)}});
    }
    return doc;
}

inline Json cmd_ev(const Args& args, std::ostream& err) {
    ExperimentSpec spec{args.sides, args.rolls, parse_mode(args.mode)};
    spec.validate();
    warn_if_degenerate(spec, err);
    Json doc = make_document("ev", {{"mode", args.mode},
                                    {"sides", std::to_string(args.sides)},
                                    {"rolls", std::to_string(args.rolls)},
                                    {"precision", std::to_string(args.precision)}});
    Rational ev = expected_value(spec);
    doc["rows"].push_back({{"expected_value", rational_cell(ev)},
                           {"expected_value_approx", ev.decimal_str(args.precision)}});
    return doc;
}

inline Json cmd_limit(const Args& args) {
    Json doc = make_document("limit", {{"mode", args.mode},
                                       {"rolls", std::to_string(args.rolls)},
                                       {"precision", std::to_string(args.precision)}});
    Rational limit = limit_ratio(parse_mode(args.mode), args.rolls);
    doc["rows"].push_back({{"limit", rational_cell(limit)},
                           {"limit_approx", limit.decimal_str(args.precision)}});
    return doc;
}

inline Json cmd_gain_or_loss(const Args& args, bool gain, std::ostream& err) {
    warn_if_degenerate({args.sides, args.rolls,
                        gain ? Mode::advantage : Mode::disadvantage}, err);
    Json doc = make_document(gain ? "gain" : "loss",
                             {{"sides", std::to_string(args.sides)},
                              {"rolls", std::to_string(args.rolls)},
                              {"precision", std::to_string(args.precision)}});
    Rational value = gain ? relative_gain(args.rolls, args.sides)
                          : relative_loss(args.rolls, args.sides);
    Rational limit = gain_loss_limit(args.rolls);
    const char* key = gain ? "relative_gain" : "relative_loss";
    doc["rows"].push_back({{key, rational_cell(value)},
                           {std::string(key) + "_approx", value.decimal_str(args.precision)},
                           {"limit", rational_cell(limit)},
                           {"limit_approx", limit.decimal_str(args.precision)}});
    return doc;
}

inline Json cmd_converge(const Args& args, std::ostream& err) {
    Mode mode = parse_mode(args.mode);
    std::string schedule_text;
    for (std::size_t i = 0; i < args.sides_list.size(); ++i)
        schedule_text += (i ? "," : "") + std::to_string(args.sides_list[i]);
    warn_if_degenerate({2, args.rolls, mode}, err);
    Json doc = make_document("converge", {{"mode", args.mode},
                                          {"rolls", std::to_string(args.rolls)},
                                          {"sides", schedule_text},
                                          {"precision", std::to_string(args.precision)}});
    for (const ConvergenceRow& row : convergence_table(mode, args.rolls, args.sides_list)) {
        doc["rows"].push_back({{"sides", std::to_string(row.sides)},
                               {"ratio", rational_cell(row.ratio)},
                               {"ratio_approx", row.ratio.decimal_str(args.precision)},
                               {"limit", rational_cell(row.limit)},
                               {"limit_approx", row.limit.decimal_str(args.precision)},
                               {"gap", rational_cell(row.gap)},
                               {"gap_approx", row.gap.decimal_str(args.precision)}});
    }
    return doc;
}

inline Json cmd_simulate(const Args& args, std::ostream& err) {
    ExperimentSpec spec{args.sides, args.rolls, parse_mode(args.mode)};
    spec.validate();
    warn_if_degenerate(spec, err);
    Json doc = make_document("simulate", {{"mode", args.mode},
                                          {"sides", std::to_string(args.sides)},
                                          {"rolls", std::to_string(args.rolls)},
                                          {"trials", std::to_string(args.trials)},
                                          {"seed", std::to_string(args.seed)},
                                          {"precision", std::to_string(args.precision)}});
    SimulationResult sim = simulate(spec, args.trials, args.seed);
    OutcomePmf exact = pmf(spec);
    for (std::int64_t i = 1; i <= spec.sides; ++i) {
        double empirical = static_cast<double>(sim.counts[static_cast<std::size_t>(i - 1)]) /
                           static_cast<double>(sim.trials);
        doc["rows"].push_back(
            {{"outcome", std::to_string(i)},
             {"count", std::to_string(sim.counts[static_cast<std::size_t>(i - 1)])},
             {"empirical_probability_approx", format_double(empirical, args.precision)},
             {"probability", rational_cell(exact.probability(i))},
             {"probability_approx", exact.probability(i).decimal_str(args.precision)}});
    }
    doc["summary"] = {{"empirical_mean", format_double(sim.empirical_mean, args.precision)},
                      {"standard_error", format_double(sim.standard_error, args.precision)},
                      {"tv_distance",
                       format_double(empirical_pmf_distance(sim, exact), args.precision)}};
    return doc;
}

inline Json cmd_bernoulli(const Args& args) {
    if (args.max_index < 0)
        throw domain_error("max index must be >= 0, got " + std::to_string(args.max_index));
    Json doc = make_document("bernoulli", {{"max_index", std::to_string(args.max_index)},
                                           {"precision", std::to_string(args.precision)}});
    BernoulliTable table = bernoulli_table(static_cast<std::size_t>(args.max_index));
    for (std::size_t j = 0; j < table.values.size(); ++j) {
        doc["rows"].push_back({{"index", std::to_string(j)},
                               {"value", rational_cell(table.values[j])},
                               {"value_approx", table.values[j].decimal_str(args.precision)}});
    }
    return doc;
}

}  // namespace detail

/// Parse argv (program name excluded), execute, write one document to `out`.
/// Exit status: 0 success, 1 domain/resource error, 2 usage error.
/// Diagnostics and warnings go to `err` only.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact statistics for roll-r-keep-highest/lowest dice experiments"};
    app.name("dicekeep");
    app.require_subcommand(1);

    detail::Args parsed;

    CLI::App* pmf_cmd = app.add_subcommand("pmf", "Exact outcome distribution");
    detail::add_mode_option(pmf_cmd, parsed);
    pmf_cmd->add_option("--sides,-s", parsed.sides, "Number of die sides")->required();
    pmf_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->capture_default_str();
    detail::add_format_options(pmf_cmd, parsed);

    CLI::App* ev_cmd = app.add_subcommand("ev", "Exact expected value");
    detail::add_mode_option(ev_cmd, parsed);
    ev_cmd->add_option("--sides,-s", parsed.sides, "Number of die sides")->required();
    ev_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->capture_default_str();
    detail::add_format_options(ev_cmd, parsed);

    CLI::App* limit_cmd = app.add_subcommand("limit", "Asymptotic E/s ratio as sides grow");
    detail::add_mode_option(limit_cmd, parsed);
    limit_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->required();
    detail::add_format_options(limit_cmd, parsed);

    CLI::App* gain_cmd = app.add_subcommand("gain", "Relative gain of advantage over one roll");
    gain_cmd->add_option("--sides,-s", parsed.sides, "Number of die sides")->required();
    gain_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->required();
    detail::add_format_options(gain_cmd, parsed);

    CLI::App* loss_cmd = app.add_subcommand("loss", "Relative loss of disadvantage under one roll");
    loss_cmd->add_option("--sides,-s", parsed.sides, "Number of die sides")->required();
    loss_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->required();
    detail::add_format_options(loss_cmd, parsed);

    CLI::App* converge_cmd = app.add_subcommand("converge", "E/s convergence table");
    detail::add_mode_option(converge_cmd, parsed);
    converge_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->required();
    converge_cmd->add_option("--sides,-s", parsed.sides_list, "Comma list of sides")
        ->required()
        ->delimiter(',');
    detail::add_format_options(converge_cmd, parsed);

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo cross-check");
    detail::add_mode_option(simulate_cmd, parsed);
    simulate_cmd->add_option("--sides,-s", parsed.sides, "Number of die sides")->required();
    simulate_cmd->add_option("--rolls,-r", parsed.rolls, "Number of rolls")->capture_default_str();
    simulate_cmd->add_option("--trials", parsed.trials, "Trial count")->capture_default_str();
    simulate_cmd->add_option("--seed", parsed.seed, "PRNG seed")->capture_default_str();
    detail::add_format_options(simulate_cmd, parsed);

    CLI::App* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli number table (B1 = -1/2)");
    bernoulli_cmd->add_option("--max-index,-n", parsed.max_index, "Largest index to generate")
        ->capture_default_str();
    detail::add_format_options(bernoulli_cmd, parsed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dicekeep: error[usage]: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        Json doc;
        if (pmf_cmd->parsed())
            doc = detail::cmd_pmf(parsed, err);
        else if (ev_cmd->parsed())
            doc = detail::cmd_ev(parsed, err);
        else if (limit_cmd->parsed())
            doc = detail::cmd_limit(parsed);
        else if (gain_cmd->parsed())
            doc = detail::cmd_gain_or_loss(parsed, true, err);
        else if (loss_cmd->parsed())
            doc = detail::cmd_gain_or_loss(parsed, false, err);
        else if (converge_cmd->parsed())
            doc = detail::cmd_converge(parsed, err);
        else if (simulate_cmd->parsed())
            doc = detail::cmd_simulate(parsed, err);
        else
            doc = detail::cmd_bernoulli(parsed);

        doc["params"]["format"] = parsed.format;
        if (parsed.format == "csv")
            write_csv(doc, out);
        else
            write_json(doc, out);
        return 0;
    } catch (const domain_error& e) {
        err << "dicekeep: error[domain]: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        err << "dicekeep: error[resource]: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dicekeep::cli
