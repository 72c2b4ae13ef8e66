// Batch runner: generate seeded instances of one parity regime and run the
// matching verifier on each.
//
// Config file (JSON), every key optional except "parity":
//   { "parity": "even" | "odd", "instances": 10, "seed": 1,
//     "voter_counts": [4, 6, 8] (default [4] even, [3] odd), "dimensions": [2, 3], "ideals_at_z": [0, 1],
//     "radius_min": 0.3, "radius_max": 0.9, "random_metrics": false,
//     "lines": 64, "challenges": 10000, "grid": 0 (0 = per-dimension default),
//     "timing": false }
//
// Instance i combines voter_counts[i % a], dimensions[(i / a) % b] and
// ideals_at_z[(i / (a b)) % c], and uses seed + i for generation and checking.

#ifndef SPATIAL_VOTE_EXPERIMENT_HPP
#define SPATIAL_VOTE_EXPERIMENT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spatial_vote/condorcet.hpp"
#include "spatial_vote/generators.hpp"
#include "spatial_vote/io.hpp"
#include "spatial_vote/report.hpp"

namespace spatial_vote {

struct ExperimentConfig {
    Parity parity = Parity::Even;
    int instances = 10;
    std::uint64_t seed = 1;
    std::vector<int> voter_counts{4};
    std::vector<int> dimensions{2};
    std::vector<int> ideals_at_z{0};
    double radius_min = 0.3;
    double radius_max = 0.9;
    bool random_metrics = false;
    int lines = 64;
    int challenges = 10000;
    int grid = 0;
    /// Records wall-clock time; off by default so reports are reproducible.
    bool timing = false;
};

struct InstanceRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int voters = 0;
    int dimension = 0;
    int pair_count = 0;
    int ideals_at_z = 0;
    int grid_per_axis = 0;
    bool passed = false;
    std::string outcome;
    std::optional<Prop1Report> prop1;
    std::optional<Prop1PrimeReport> prop1prime;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<InstanceRecord> records;
    int passed = 0;
    std::optional<double> wall_clock_seconds;

    double pass_rate() const {
        return records.empty() ? 0.0 : static_cast<double>(passed) / records.size();
    }
};

// ---- JSON --------------------------------------------------------------------

inline Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw ValidationError("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

inline void to_json(json& j, const ExperimentConfig& c) {
    j = json{{"parity", to_string(c.parity)},
             {"instances", c.instances},
             {"seed", c.seed},
             {"voter_counts", c.voter_counts},
             {"dimensions", c.dimensions},
             {"ideals_at_z", c.ideals_at_z},
             {"radius_min", c.radius_min},
             {"radius_max", c.radius_max},
             {"random_metrics", c.random_metrics},
             {"lines", c.lines},
             {"challenges", c.challenges},
             {"grid", c.grid},
             {"timing", c.timing}};
}

inline void from_json(const json& j, ExperimentConfig& c) {
    if (!j.is_object()) throw ValidationError("experiment config: expected a JSON object");
    if (!j.contains("parity")) throw ValidationError("experiment config: missing \"parity\"");
    c = ExperimentConfig{};
    c.parity = parity_from_string(j.at("parity").get<std::string>());
    c.instances = j.value("instances", c.instances);
    c.seed = j.value("seed", c.seed);
    c.voter_counts = j.value("voter_counts", std::vector<int>{c.parity == Parity::Odd ? 3 : 4});
    c.dimensions = j.value("dimensions", c.dimensions);
    c.ideals_at_z = j.value("ideals_at_z", c.ideals_at_z);
    c.radius_min = j.value("radius_min", c.radius_min);
    c.radius_max = j.value("radius_max", c.radius_max);
    c.random_metrics = j.value("random_metrics", c.random_metrics);
    c.lines = j.value("lines", c.lines);
    c.challenges = j.value("challenges", c.challenges);
    c.grid = j.value("grid", c.grid);
    c.timing = j.value("timing", c.timing);
    if (c.instances < 0) throw ValidationError("experiment config: instances must be >= 0");
    if (c.voter_counts.empty() || c.dimensions.empty() || c.ideals_at_z.empty()) {
        throw ValidationError("experiment config: parameter lists must be nonempty");
    }
}

inline void to_json(json& j, const InstanceRecord& r) {
    j = json{{"index", r.index},
             {"seed", r.seed},
             {"voters", r.voters},
             {"dimension", r.dimension},
             {"pair_count", r.pair_count},
             {"ideals_at_z", r.ideals_at_z},
             {"grid_per_axis", r.grid_per_axis},
             {"passed", r.passed},
             {"outcome", r.outcome}};
    detail::put_opt(j, "prop1", r.prop1);
    detail::put_opt(j, "prop1prime", r.prop1prime);
}

inline void from_json(const json& j, InstanceRecord& r) {
    r.index = j.at("index").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.voters = j.at("voters").get<int>();
    r.dimension = j.at("dimension").get<int>();
    r.pair_count = j.at("pair_count").get<int>();
    r.ideals_at_z = j.at("ideals_at_z").get<int>();
    r.grid_per_axis = j.at("grid_per_axis").get<int>();
    r.passed = j.at("passed").get<bool>();
    r.outcome = j.at("outcome").get<std::string>();
    detail::get_opt(j, "prop1", r.prop1);
    detail::get_opt(j, "prop1prime", r.prop1prime);
}

inline void to_json(json& j, const ExperimentReport& r) {
    j = json{{"config", r.config},
             {"instances", r.records},
             {"summary",
              {{"instances", r.records.size()}, {"passed", r.passed}, {"pass_rate", r.pass_rate()}}}};
    detail::put_opt(j, "wall_clock_seconds", r.wall_clock_seconds);
}

inline void from_json(const json& j, ExperimentReport& r) {
    r.config = j.at("config").get<ExperimentConfig>();
    r.records = j.at("instances").get<std::vector<InstanceRecord>>();
    r.passed = j.at("summary").at("passed").get<int>();
    detail::get_opt(j, "wall_clock_seconds", r.wall_clock_seconds);
}

// ---- runner --------------------------------------------------------------------

/// Pair count that yields `voters` voters in the given regime.
inline int pair_count_for(Parity parity, int voters, int ideals_at_z) {
    if (parity == Parity::Odd) {
        if (voters < 1 || voters % 2 == 0) throw DomainError("odd regime needs an odd voter count");
        return (voters - 1) / 2;
    }
    if (voters < 2 || voters % 2 != 0) throw DomainError("even regime needs an even voter count");
    return ideals_at_z == 0 ? voters / 2 : (voters - 2) / 2;
}

inline GeneratorConfig instance_config(const ExperimentConfig& config, int index) {
    const auto a = config.voter_counts.size();
    const auto b = config.dimensions.size();
    const auto c = config.ideals_at_z.size();
    const auto i = static_cast<std::size_t>(index);
    GeneratorConfig g;
    g.parity = config.parity;
    g.dimension = config.dimensions[(i / a) % b];
    g.ideals_at_z = config.parity == Parity::Even ? config.ideals_at_z[(i / (a * b)) % c] : 1;
    g.pair_count = pair_count_for(config.parity, config.voter_counts[i % a], g.ideals_at_z);
    g.seed = config.seed + static_cast<std::uint64_t>(index);
    g.radius_min = config.radius_min;
    g.radius_max = config.radius_max;
    g.random_metrics = config.random_metrics;
    return g;
}

inline ExperimentReport run_experiment(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.config = config;
    const Budget budget{config.lines, config.challenges};
    for (int index = 0; index < config.instances; ++index) {
        const GeneratorConfig g = instance_config(config, index);
        const VotingSituation situation = generate(g);
        const Point z = generator_core_point(g);

        InstanceRecord rec;
        rec.index = index;
        rec.seed = g.seed;
        rec.voters = static_cast<int>(situation.size());
        rec.dimension = g.dimension;
        rec.pair_count = g.pair_count;
        rec.ideals_at_z = static_cast<int>(count_ideals_at(situation, z));
        rec.grid_per_axis = config.grid > 0 ? config.grid : default_grid_per_axis(g.dimension);
        if (config.parity == Parity::Even) {
            rec.prop1 = verify_proposition1(situation, z, budget, g.seed, rec.grid_per_axis);
            rec.outcome = to_string(rec.prop1->outcome);
            rec.passed = rec.prop1->outcome == Prop1Outcome::Verified;
        } else {
            rec.prop1prime = verify_proposition1prime(situation, z, config.challenges, g.seed);
            rec.passed = rec.prop1prime->passed;
            rec.outcome = rec.passed ? "passed" : rec.prop1prime->failed_check.value_or("failed");
        }
        report.passed += rec.passed ? 1 : 0;
        report.records.push_back(std::move(rec));
    }
    if (config.timing) {
        report.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

inline std::string serialize_report(const ExperimentReport& report) {
    return json(report).dump(2) + "\n";
}

inline ExperimentReport parse_report(const std::string& text) {
    return json::parse(text).get<ExperimentReport>();
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_EXPERIMENT_HPP
