// JSON serialization of verdicts and reports. Optional fields are omitted when
// absent; enums are written as strings. Parsing accepts exactly what is
// written, so serialize -> parse -> serialize is byte-identical.

#ifndef SPATIAL_VOTE_REPORT_HPP
#define SPATIAL_VOTE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spatial_vote/condorcet.hpp"
#include "spatial_vote/dominance.hpp"
#include "spatial_vote/io.hpp"
#include "spatial_vote/line_analysis.hpp"

namespace spatial_vote {

namespace detail {

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

inline void put_opt(json& j, const char* key, const std::optional<Vector>& v) {
    if (v) j[key] = point_to_json(*v);
}

template <class T>
void get_opt(const json& j, const char* key, std::optional<T>& out) {
    out.reset();
    if (j.contains(key)) out = j.at(key).get<T>();
}

inline void get_opt(const json& j, const char* key, std::optional<Vector>& out) {
    out.reset();
    if (j.contains(key)) out = point_from_json(j.at(key), key);
}

inline json points_to_json(const std::vector<Point>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(point_to_json(p));
    return out;
}

inline std::vector<Point> points_from_json(const json& j) {
    std::vector<Point> out;
    for (const auto& p : j) out.push_back(point_from_json(p, "point"));
    return out;
}

}  // namespace detail

// ---- enums -----------------------------------------------------------------

inline CondorcetStatus condorcet_status_from_string(const std::string& s) {
    if (s == "CertifiedWinner") return CondorcetStatus::CertifiedWinner;
    if (s == "CertifiedNotWinner") return CondorcetStatus::CertifiedNotWinner;
    if (s == "NotFalsified") return CondorcetStatus::NotFalsified;
    throw ValidationError("unknown Condorcet status \"" + s + "\"");
}

inline const char* to_string(WitnessSource s) {
    return s == WitnessSource::LineSweep ? "line-sweep" : "challenge";
}

inline WitnessSource witness_source_from_string(const std::string& s) {
    if (s == "line-sweep") return WitnessSource::LineSweep;
    if (s == "challenge") return WitnessSource::Challenge;
    throw ValidationError("unknown witness source \"" + s + "\"");
}

inline Prop1Outcome prop1_outcome_from_string(const std::string& s) {
    if (s == "verified") return Prop1Outcome::Verified;
    if (s == "assumption-not-met") return Prop1Outcome::AssumptionNotMet;
    if (s == "not-falsified") return Prop1Outcome::NotFalsified;
    throw ValidationError("unknown outcome \"" + s + "\"");
}

// ---- Coalition / DominanceVerdict -----------------------------------------

inline void to_json(json& j, const Coalition& c) { j = c.members(); }
inline void from_json(const json& j, Coalition& c) {
    c = Coalition(j.get<std::vector<std::size_t>>());
}

inline void to_json(json& j, const DominanceVerdict& v) {
    j = json{{"dominates", v.dominates},
             {"prefer_x", v.prefer_x_count},
             {"prefer_y", v.prefer_y_count},
             {"indifferent", v.indifferent_count}};
    detail::put_opt(j, "coalition", v.coalition);
}

inline void from_json(const json& j, DominanceVerdict& v) {
    v.dominates = j.at("dominates").get<bool>();
    v.prefer_x_count = j.at("prefer_x").get<std::size_t>();
    v.prefer_y_count = j.at("prefer_y").get<std::size_t>();
    v.indifferent_count = j.at("indifferent").get<std::size_t>();
    detail::get_opt(j, "coalition", v.coalition);
}

// ---- CoreVerdict -------------------------------------------------------------

inline void to_json(json& j, const CoreVerdict& v) {
    j = json{{"in_core", v.in_core}, {"exact", v.exact}, {"directions_checked", v.directions_checked}};
    detail::put_opt(j, "violating_direction", v.violating_direction);
    detail::put_opt(j, "positive_count", v.positive_count);
}

inline void from_json(const json& j, CoreVerdict& v) {
    v.in_core = j.at("in_core").get<bool>();
    v.exact = j.at("exact").get<bool>();
    v.directions_checked = j.at("directions_checked").get<std::size_t>();
    detail::get_opt(j, "violating_direction", v.violating_direction);
    detail::get_opt(j, "positive_count", v.positive_count);
}

// ---- ClippedLine / Lemma1Report --------------------------------------------

inline void to_json(json& j, const ClippedLine& l) {
    j = json{{"anchor", point_to_json(l.anchor)},
             {"direction", point_to_json(l.direction)},
             {"t_min", l.t_min},
             {"t_max", l.t_max}};
}

inline void from_json(const json& j, ClippedLine& l) {
    l.anchor = point_from_json(j.at("anchor"), "anchor");
    l.direction = point_from_json(j.at("direction"), "direction");
    l.t_min = j.at("t_min").get<double>();
    l.t_max = j.at("t_max").get<double>();
}

inline void to_json(json& j, const InducedIdeal& v) {
    j = json{{"voter", v.voter}, {"t", v.t}, {"point", point_to_json(v.point)}, {"at_anchor", v.at_anchor}};
}

inline void to_json(json& j, const Lemma1Report& r) {
    j = json{{"line", r.line},
             {"ideals", r.ideals},
             {"count_at_anchor", r.count_at_anchor},
             {"plus_count", r.plus_count},
             {"minus_count", r.minus_count}};
    detail::put_opt(j, "witness", r.witness);
    detail::put_opt(j, "witness_t", r.witness_t);
}

// ---- CondorcetVerdict -------------------------------------------------------

inline void to_json(json& j, const CondorcetVerdict& v) {
    j = json{{"status", to_string(v.status)},
             {"lines_used", v.lines_used},
             {"challenges_used", v.challenges_used}};
    detail::put_opt(j, "witness", v.witness);
    if (v.witness_source) j["witness_source"] = to_string(*v.witness_source);
    detail::put_opt(j, "line", v.line);
    detail::put_opt(j, "counts", v.counts);
    detail::put_opt(j, "certificate", v.certificate);
}

inline void from_json(const json& j, CondorcetVerdict& v) {
    v.status = condorcet_status_from_string(j.at("status").get<std::string>());
    v.lines_used = j.at("lines_used").get<int>();
    v.challenges_used = j.at("challenges_used").get<int>();
    detail::get_opt(j, "witness", v.witness);
    v.witness_source.reset();
    if (j.contains("witness_source")) {
        v.witness_source = witness_source_from_string(j.at("witness_source").get<std::string>());
    }
    detail::get_opt(j, "line", v.line);
    detail::get_opt(j, "counts", v.counts);
    detail::get_opt(j, "certificate", v.certificate);
}

// ---- SingletonCoreReport ----------------------------------------------------

inline void to_json(json& j, const SingletonCoreReport& r) {
    j = json{{"singleton", r.singleton},
             {"z_in_core", r.z_in_core},
             {"grid_per_axis", r.grid_per_axis},
             {"grid_size", r.grid_size},
             {"dominated_by_z", r.dominated_by_z},
             {"dominated_locally", r.dominated_locally},
             {"undominated_count", r.undominated_count},
             {"undominated", detail::points_to_json(r.undominated)}};
}

inline void from_json(const json& j, SingletonCoreReport& r) {
    r.singleton = j.at("singleton").get<bool>();
    r.z_in_core = j.at("z_in_core").get<bool>();
    r.grid_per_axis = j.at("grid_per_axis").get<int>();
    r.grid_size = j.at("grid_size").get<std::size_t>();
    r.dominated_by_z = j.at("dominated_by_z").get<std::size_t>();
    r.dominated_locally = j.at("dominated_locally").get<std::size_t>();
    r.undominated_count = j.at("undominated_count").get<std::size_t>();
    r.undominated = detail::points_from_json(j.at("undominated"));
}

// ---- Proposition reports ----------------------------------------------------

inline void to_json(json& j, const Prop1Report& r) {
    j = json{{"outcome", to_string(r.outcome)}, {"ideals_at_z", r.ideals_at_z}};
    detail::put_opt(j, "failed_assumption", r.failed_assumption);
    detail::put_opt(j, "core", r.core);
    detail::put_opt(j, "singleton", r.singleton);
    detail::put_opt(j, "condorcet", r.condorcet);
}

inline void from_json(const json& j, Prop1Report& r) {
    r.outcome = prop1_outcome_from_string(j.at("outcome").get<std::string>());
    r.ideals_at_z = j.at("ideals_at_z").get<std::size_t>();
    detail::get_opt(j, "failed_assumption", r.failed_assumption);
    detail::get_opt(j, "core", r.core);
    detail::get_opt(j, "singleton", r.singleton);
    detail::get_opt(j, "condorcet", r.condorcet);
}

inline void to_json(json& j, const Prop1PrimeReport& r) {
    j = json{{"passed", r.passed},
             {"ideals_at_z", r.ideals_at_z},
             {"challenges", r.challenges},
             {"failures", r.failures}};
    detail::put_opt(j, "failed_check", r.failed_check);
    detail::put_opt(j, "core", r.core);
    detail::put_opt(j, "failing_challenger", r.failing_challenger);
    detail::put_opt(j, "failing_counts", r.failing_counts);
    detail::put_opt(j, "certificate", r.certificate);
}

inline void from_json(const json& j, Prop1PrimeReport& r) {
    r.passed = j.at("passed").get<bool>();
    r.ideals_at_z = j.at("ideals_at_z").get<std::size_t>();
    r.challenges = j.at("challenges").get<int>();
    r.failures = j.at("failures").get<std::size_t>();
    detail::get_opt(j, "failed_check", r.failed_check);
    detail::get_opt(j, "core", r.core);
    detail::get_opt(j, "failing_challenger", r.failing_challenger);
    detail::get_opt(j, "failing_counts", r.failing_counts);
    detail::get_opt(j, "certificate", r.certificate);
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_REPORT_HPP
