// JSON instance files.
//
//   { "dimension": k,
//     "space": {"type": "box", "lower": [...], "upper": [...]}
//            | {"type": "ball", "center": [...], "radius": r},
//     "voters": [ {"ideal": [...], "metric": [k*k row-major, optional]} ] }

#ifndef SPATIAL_VOTE_IO_HPP
#define SPATIAL_VOTE_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "spatial_vote/model.hpp"

namespace spatial_vote {

using json = nlohmann::json;

inline json point_to_json(const Vector& p) {
    json out = json::array();
    for (Eigen::Index a = 0; a < p.size(); ++a) out.push_back(p[a]);
    return out;
}

inline Vector point_from_json(const json& j, std::string_view what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of numbers");
    Vector p(static_cast<Eigen::Index>(j.size()));
    for (std::size_t a = 0; a < j.size(); ++a) {
        if (!j[a].is_number()) {
            throw ValidationError(std::string(what) + ": entry " + std::to_string(a) +
                                  " is not a number");
        }
        p[static_cast<Eigen::Index>(a)] = j[a].get<double>();
    }
    return p;
}

namespace detail {

inline Vector point_of_dim(const json& parent, const char* key, int k, const std::string& what) {
    if (!parent.contains(key)) throw ValidationError(what + ": missing \"" + key + "\"");
    Vector p = point_from_json(parent.at(key), what + "." + key);
    if (p.size() != k) {
        throw ValidationError(what + "." + key + ": expected " + std::to_string(k) +
                              " coordinates, got " + std::to_string(p.size()));
    }
    return p;
}

/// Voter validation messages start with "voter: "; rewrite with the index.
inline std::string indexed_voter_message(std::size_t i, std::string_view msg) {
    constexpr std::string_view prefix = "voter: ";
    if (msg.substr(0, prefix.size()) == prefix) msg.remove_prefix(prefix.size());
    return "voter " + std::to_string(i) + ": " + std::string(msg);
}

}  // namespace detail

inline json space_to_json(const PolicySpace& space) {
    if (space.kind() == SpaceKind::Box) {
        return json{{"type", "box"},
                    {"lower", point_to_json(space.lower())},
                    {"upper", point_to_json(space.upper())}};
    }
    return json{{"type", "ball"}, {"center", point_to_json(space.center())}, {"radius", space.radius()}};
}

inline PolicySpace space_from_json(const json& j, int k) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw ValidationError("space: expected an object with a \"type\" string");
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "box") {
        return PolicySpace::box(detail::point_of_dim(j, "lower", k, "space"),
                                detail::point_of_dim(j, "upper", k, "space"));
    }
    if (type == "ball") {
        if (!j.contains("radius") || !j.at("radius").is_number()) {
            throw ValidationError("space: ball needs a numeric \"radius\"");
        }
        return PolicySpace::ball(detail::point_of_dim(j, "center", k, "space"),
                                 j.at("radius").get<double>());
    }
    throw ValidationError("space: unknown type \"" + type + "\"");
}

inline json situation_to_json(const VotingSituation& situation) {
    json voters = json::array();
    for (const auto& v : situation.voters()) {
        json jv{{"ideal", point_to_json(v.ideal())}};
        if (!v.has_identity_metric()) {
            json m = json::array();
            for (Eigen::Index r = 0; r < v.metric().rows(); ++r) {
                for (Eigen::Index c = 0; c < v.metric().cols(); ++c) m.push_back(v.metric()(r, c));
            }
            jv["metric"] = std::move(m);
        }
        voters.push_back(std::move(jv));
    }
    return json{{"dimension", situation.dimension()},
                {"space", space_to_json(situation.space())},
                {"voters", std::move(voters)}};
}

/// Validates every field and reports the first violation (with the voter
/// index for voter problems) as a ValidationError.
inline VotingSituation situation_from_json(const json& j, double eps = kDefaultEps) {
    if (!j.is_object()) throw ValidationError("instance: expected a JSON object");
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer()) {
        throw ValidationError("instance: missing integer \"dimension\"");
    }
    const int k = j.at("dimension").get<int>();
    if (k < 1) throw ValidationError("instance: dimension must be >= 1");
    if (!j.contains("space")) throw ValidationError("instance: missing \"space\"");
    PolicySpace space = space_from_json(j.at("space"), k);
    if (!j.contains("voters") || !j.at("voters").is_array()) {
        throw ValidationError("instance: missing \"voters\" array");
    }

    std::vector<Voter> voters;
    const auto& jv = j.at("voters");
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string what = "voter " + std::to_string(i);
        if (!jv[i].is_object()) throw ValidationError(what + ": expected an object");
        Vector ideal = detail::point_of_dim(jv[i], "ideal", k, what);
        Matrix metric = Matrix::Identity(k, k);
        if (jv[i].contains("metric")) {
            const Vector flat = point_from_json(jv[i].at("metric"), what + ".metric");
            if (flat.size() != static_cast<Eigen::Index>(k) * k) {
                throw ValidationError(what + ".metric: expected " + std::to_string(k * k) +
                                      " entries (row-major), got " + std::to_string(flat.size()));
            }
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < k; ++c) metric(r, c) = flat[r * k + c];
            }
        }
        try {
            voters.emplace_back(std::move(ideal), std::move(metric));
        } catch (const ValidationError& e) {
            throw ValidationError(detail::indexed_voter_message(i, e.what()));
        }
        if (!space.contains(voters.back().ideal(), eps * space.diameter())) {
            throw ValidationError(what + ": ideal point lies outside the policy space");
        }
    }
    return VotingSituation(std::move(space), std::move(voters), eps);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error("error reading '" + path + "'");
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw Error("error writing '" + path + "'");
}

inline json parse_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("'" + path + "': invalid JSON: " + e.what());
    }
}

inline VotingSituation load_instance(const std::string& path, double eps = kDefaultEps) {
    const json j = parse_json_file(path);
    try {
        return situation_from_json(j, eps);
    } catch (const ValidationError& e) {
        throw ValidationError("'" + path + "': " + e.what());
    }
}

inline void save_instance(const std::string& path, const VotingSituation& situation) {
    write_text_file(path, situation_to_json(situation).dump(2) + "\n");
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_IO_HPP
