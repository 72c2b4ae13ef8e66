// spatial-vote: command-line front end.
//
// Every analysis subcommand prints a JSON document on stdout and, with
// --json-out, writes the same document to a file. Exit status is 0 when a
// verdict was reached (including "assumption not met"), 2 on input or
// validation errors.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spatial_vote/spatial_vote.hpp"

namespace sv = spatial_vote;
using sv::json;

namespace {

struct CommonOptions {
    int lines = 64;
    int challenges = 10000;
    double eps = sv::kDefaultEps;
    std::uint64_t seed = 0;
    std::string json_out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--lines", o.lines, "Lines swept through z")->capture_default_str();
    cmd->add_option("--challenges", o.challenges, "Random challengers")->capture_default_str();
    cmd->add_option("--eps", o.eps, "Relative point tolerance")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Seed for directions and challengers")->capture_default_str();
    cmd->add_option("--json-out", o.json_out, "Also write the JSON result to this file");
}

sv::Point resolve_z(const sv::VotingSituation& situation, const std::vector<double>& z) {
    if (z.empty()) return situation.space().center();
    if (static_cast<int>(z.size()) != situation.dimension()) {
        throw sv::ValidationError("--z: expected " + std::to_string(situation.dimension()) +
                                  " coordinates, got " + std::to_string(z.size()));
    }
    return Eigen::Map<const Eigen::VectorXd>(z.data(), static_cast<Eigen::Index>(z.size()));
}

void emit(const json& doc, const CommonOptions& o) {
    const std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!o.json_out.empty()) sv::write_text_file(o.json_out, text);
}

json describe(const sv::VotingSituation& s) {
    return json{{"voters", s.size()},
                {"dimension", s.dimension()},
                {"parity", sv::to_string(s.parity())},
                {"majority_threshold", s.majority_threshold()}};
}

void run_analyze(const std::string& path, const std::vector<double>& zs, const CommonOptions& o) {
    const auto situation = sv::load_instance(path, o.eps);
    const sv::Point z = resolve_z(situation, zs);
    json doc{{"instance", describe(situation)}, {"z", sv::point_to_json(z)}};
    const bool interior = situation.space().is_interior(z, situation.eps_point());
    doc["z_interior"] = interior;
    doc["ideals_at_z"] = sv::count_ideals_at(situation, z);
    if (interior) doc["core"] = sv::is_in_core(situation, z, sv::CoreOptions{.seed = o.seed});
    doc["condorcet"] = sv::is_condorcet_winner(situation, z, {o.lines, o.challenges}, o.seed);
    emit(doc, o);
}

void run_prop1(const std::string& path, const std::vector<double>& zs, int grid,
               const CommonOptions& o) {
    const auto situation = sv::load_instance(path, o.eps);
    const sv::Point z = resolve_z(situation, zs);
    json doc{{"instance", describe(situation)}, {"z", sv::point_to_json(z)}};
    doc["report"] = sv::verify_proposition1(situation, z, {o.lines, o.challenges}, o.seed, grid);
    emit(doc, o);
}

void run_prop1prime(const std::string& path, const std::vector<double>& zs,
                    const CommonOptions& o) {
    const auto situation = sv::load_instance(path, o.eps);
    const sv::Point z = resolve_z(situation, zs);
    json doc{{"instance", describe(situation)}, {"z", sv::point_to_json(z)}};
    doc["report"] = sv::verify_proposition1prime(situation, z, o.challenges, o.seed);
    emit(doc, o);
}

void run_tournament(const std::string& path, const std::vector<double>& zs, int grid,
                    const CommonOptions& o) {
    const auto situation = sv::load_instance(path, o.eps);
    const sv::Point z = resolve_z(situation, zs);
    const auto [alternatives, z_index] = sv::grid_with_point(situation, grid, z);
    const auto t = sv::build_tournament(situation, alternatives);
    const auto condorcet = sv::finite_condorcet(t);

    json doc{{"instance", describe(situation)},
             {"grid_per_axis", grid},
             {"z", sv::point_to_json(z)},
             {"z_index", z_index},
             {"alternative_count", t.size()},
             {"finite_core", sv::finite_core(t)},
             {"gillies_uncovered", sv::gillies_uncovered(t)}};
    doc["finite_condorcet"] = condorcet ? json(*condorcet) : json(nullptr);
    std::cout << doc.dump(2) << "\n";
    if (!o.json_out.empty()) {
        json full = doc;
        json alts = json::array();
        for (const auto& a : t.alternatives()) alts.push_back(sv::point_to_json(a));
        full["alternatives"] = std::move(alts);
        full["voter_count"] = t.voter_count();
        full["pref"] = t.pref();
        sv::write_text_file(o.json_out, full.dump(2) + "\n");
    }
}

struct GenerateOptions {
    std::string parity = "even";
    int pairs = 2;
    int dim = 2;
    int ideals_at_z = 0;
    double radius_min = 0.3;
    double radius_max = 0.9;
    bool random_metrics = false;
    std::string out;
};

void run_generate(const GenerateOptions& g, const CommonOptions& o) {
    sv::GeneratorConfig config;
    config.parity = sv::parity_from_string(g.parity);
    config.pair_count = g.pairs;
    config.dimension = g.dim;
    config.seed = o.seed;
    config.ideals_at_z = g.ideals_at_z;
    config.radius_min = g.radius_min;
    config.radius_max = g.radius_max;
    config.random_metrics = g.random_metrics;
    const auto situation = sv::generate(config);
    const std::string text = sv::situation_to_json(situation).dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
    } else {
        sv::write_text_file(g.out, text);
    }
}

void run_render(const std::string& path, const std::vector<double>& zs, const std::string& out,
                const CommonOptions& o) {
    const auto situation = sv::load_instance(path, o.eps);
    const sv::Point z = resolve_z(situation, zs);
    sv::SvgAnnotations notes;
    notes.core = z;
    const auto verdict = sv::is_condorcet_winner(situation, z, {o.lines, 0}, o.seed);
    if (verdict.witness) {
        notes.witness = verdict.witness;
        notes.line = verdict.line;
    }
    sv::write_text_file(out, sv::render_svg(situation, notes));
}

void run_experiment(const std::string& path, const CommonOptions& o) {
    const auto config = sv::parse_json_file(path).get<sv::ExperimentConfig>();
    const auto report = sv::run_experiment(config);
    const std::string text = sv::serialize_report(report);
    if (o.json_out.empty()) {
        std::cout << text;
    } else {
        sv::write_text_file(o.json_out, text);
        std::cout << "passed " << report.passed << "/" << report.records.size() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majority rule in spatial voting: core, Condorcet winners, parity experiments"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string instance;
    std::vector<double> z;
    int grid = 0;
    std::string out;
    GenerateOptions gen;

    auto* analyze = app.add_subcommand("analyze", "Core and Condorcet status of a point");
    analyze->add_option("instance", instance, "Instance JSON file")->required();
    analyze->add_option("--z", z, "Candidate point (default: center of the space)")->delimiter(',');
    add_common(analyze, common);

    auto* prop1 = app.add_subcommand("verify-prop1", "Even |N|: refute Condorcet status of a singleton core");
    prop1->add_option("instance", instance, "Instance JSON file")->required();
    prop1->add_option("--z", z, "Core point (default: center of the space)")->delimiter(',');
    prop1->add_option("--grid", grid, "Singleton-core oracle grid points per axis (0 = default)");
    add_common(prop1, common);

    auto* prop1p = app.add_subcommand("verify-prop1prime", "Odd |N|: confirm the core point beats all challengers");
    prop1p->add_option("instance", instance, "Instance JSON file")->required();
    prop1p->add_option("--z", z, "Core point (default: center of the space)")->delimiter(',');
    add_common(prop1p, common);

    int tgrid = 21;
    auto* tour = app.add_subcommand("tournament", "Finite tournament over a grid with z injected");
    tour->add_option("instance", instance, "Instance JSON file")->required();
    tour->add_option("--grid", tgrid, "Grid points per axis")->capture_default_str();
    tour->add_option("--z", z, "Point to inject (default: center of the space)")->delimiter(',');
    add_common(tour, common);

    auto* generate = app.add_subcommand("generate", "Write a seeded instance");
    generate->add_option("--parity", gen.parity, "even | odd")->capture_default_str();
    generate->add_option("--pairs", gen.pairs, "Antipodal pairs")->capture_default_str();
    generate->add_option("--dim", gen.dim, "Dimension k")->capture_default_str();
    generate->add_option("--ideals-at-z", gen.ideals_at_z, "Even regime: 0, 1 or 2")->capture_default_str();
    generate->add_option("--radius-min", gen.radius_min)->capture_default_str();
    generate->add_option("--radius-max", gen.radius_max)->capture_default_str();
    generate->add_flag("--random-metrics", gen.random_metrics, "Per-pair random SPD metrics");
    generate->add_option("--out", gen.out, "Output file (default: stdout)");
    add_common(generate, common);

    auto* render = app.add_subcommand("render", "SVG picture of a planar instance");
    render->add_option("instance", instance, "Instance JSON file")->required();
    render->add_option("--out", out, "Output SVG file")->required();
    render->add_option("--z", z, "Point to mark (default: center of the space)")->delimiter(',');
    add_common(render, common);

    std::string config_path;
    auto* experiment = app.add_subcommand("experiment", "Run a seeded batch from a JSON config");
    experiment->add_option("config", config_path, "Experiment config JSON file")->required();
    add_common(experiment, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) run_analyze(instance, z, common);
        if (*prop1) run_prop1(instance, z, grid, common);
        if (*prop1p) run_prop1prime(instance, z, common);
        if (*tour) run_tournament(instance, z, tgrid, common);
        if (*generate) run_generate(gen, common);
        if (*render) run_render(instance, z, out, common);
        if (*experiment) run_experiment(config_path, common);
    } catch (const sv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
