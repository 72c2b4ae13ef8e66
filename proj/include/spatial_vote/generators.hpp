// Seeded instance generators for the two parity regimes.
//
// Both build ideals in antipodal pairs z + r d, z - r d around a core point z.
// In any direction at most one member of a pair has a positive derivative at
// z, so z is in the core whenever no more than |N|/2 voters can move together.

#ifndef SPATIAL_VOTE_GENERATORS_HPP
#define SPATIAL_VOTE_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spatial_vote/geometry.hpp"
#include "spatial_vote/model.hpp"

namespace spatial_vote {

struct GeneratorConfig {
    Parity parity = Parity::Even;
    int pair_count = 2;
    int dimension = 2;
    std::uint64_t seed = 0;
    /// Defaults to [-1, 1]^k.
    std::optional<PolicySpace> space;
    /// Defaults to the center of the space.
    std::optional<Point> z;
    double radius_min = 0.3;
    double radius_max = 0.9;
    /// Even regime: 0 or 1 (singleton core, not Condorcet) or 2 (Condorcet).
    /// With 1, an extra unpaired voter keeps |N| even. Ignored for odd.
    int ideals_at_z = 0;
    /// Explicit pair directions (normalized on use); one extra entry supplies
    /// the unpaired voter's direction when ideals_at_z = 1.
    std::vector<Vector> directions;
    double min_separation_deg = 5.0;
    /// Per-pair random SPD metrics (shared by both members) instead of identity.
    bool random_metrics = false;
};

namespace detail {

inline Matrix random_spd(int k, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(k, k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) a(r, c) = gauss(rng);
    }
    Matrix m = a.transpose() * a / k + 0.25 * Matrix::Identity(k, k);
    return (m + m.transpose()) / 2.0;
}

/// `count` unit directions whose lines are pairwise at least `min_deg` apart.
inline std::vector<Vector> separated_directions(int k, int count, double min_deg,
                                                std::mt19937_64& rng) {
    const double max_cos = std::cos(min_deg * std::numbers::pi / 180.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vector> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 100000) {
            throw DomainError("generator: cannot place " + std::to_string(count) +
                              " directions with the required separation");
        }
        Vector v(k);
        for (int a = 0; a < k; ++a) v[a] = gauss(rng);
        const double n = v.norm();
        if (!(n > 1e-12)) continue;
        v /= n;
        bool ok = true;
        for (const auto& u : out) ok = ok && std::abs(u.dot(v)) <= max_cos;
        if (ok) out.push_back(std::move(v));
    }
    return out;
}

class InstanceBuilder {
public:
    InstanceBuilder(const GeneratorConfig& config, PolicySpace space, Point z)
        : config_(config), space_(std::move(space)), z_(std::move(z)) {}

    void add_at_z(std::mt19937_64& rng) {
        voters_.emplace_back(z_, metric(rng));
    }

    void add_pair(const Vector& d, double r, std::mt19937_64& rng) {
        const Matrix m = metric(rng);
        voters_.emplace_back(z_ + r * d, m);
        voters_.emplace_back(z_ - r * d, m);
    }

    void add_single(const Vector& d, double r, std::mt19937_64& rng) {
        voters_.emplace_back(z_ + r * d, metric(rng));
    }

    VotingSituation finish() && {
        const double tol = kDefaultEps * space_.diameter();
        for (std::size_t i = 0; i < voters_.size(); ++i) {
            if (!space_.contains(voters_[i].ideal(), tol)) {
                throw DomainError("generator: radii place voter " + std::to_string(i) +
                                  " outside the space");
            }
        }
        return VotingSituation(std::move(space_), std::move(voters_));
    }

private:
    Matrix metric(std::mt19937_64& rng) const {
        const int k = space_.dimension();
        return config_.random_metrics ? random_spd(k, rng) : Matrix::Identity(k, k);
    }

    const GeneratorConfig& config_;
    PolicySpace space_;
    Point z_;
    std::vector<Voter> voters_;
};

struct Prepared {
    PolicySpace space;
    Point z;
    std::vector<Vector> directions;
    std::vector<double> radii;
};

inline Prepared prepare(const GeneratorConfig& config, int direction_count, std::mt19937_64& rng) {
    const int k = config.dimension;
    if (k < 1) throw DomainError("generator: dimension must be >= 1");
    if (config.pair_count < 0) throw DomainError("generator: pair_count must be >= 0");
    if (!(config.radius_min > 0.0) || config.radius_max < config.radius_min) {
        throw DomainError("generator: need 0 < radius_min <= radius_max");
    }
    PolicySpace space = config.space ? *config.space : PolicySpace::unit_box(k);
    if (space.dimension() != k) throw DomainError("generator: space dimension mismatch");
    Point z = config.z ? *config.z : space.center();
    require_dimension(k, z);
    if (!space.is_interior(z, kDefaultEps * space.diameter())) {
        throw DomainError("generator: z must be interior to the space");
    }

    std::vector<Vector> dirs;
    if (!config.directions.empty()) {
        if (static_cast<int>(config.directions.size()) != direction_count) {
            throw DomainError("generator: expected " + std::to_string(direction_count) +
                              " explicit directions, got " +
                              std::to_string(config.directions.size()));
        }
        for (const auto& d : config.directions) {
            require_dimension(k, d);
            if (!(d.norm() > 0.0)) throw DomainError("generator: zero direction");
            dirs.push_back(d / d.norm());
        }
    } else if (direction_count > 0) {
        if (k == 1 && direction_count > 1) {
            throw DomainError("generator: need >= 2 directions, impossible in one dimension");
        }
        dirs = separated_directions(k, direction_count, config.min_separation_deg, rng);
    }

    std::uniform_real_distribution<double> radius(config.radius_min, config.radius_max);
    std::vector<double> radii;
    for (int j = 0; j < direction_count; ++j) radii.push_back(radius(rng));
    return {std::move(space), std::move(z), std::move(dirs), std::move(radii)};
}

}  // namespace detail

/// Even |N|: antipodal pairs around z plus `ideals_at_z` voters at z.
///
///  * ideals_at_z = 0: |N| = 2 * pair_count; needs pair_count >= 2 so that the
///    core is the single point z.
///  * ideals_at_z = 1: one voter at z, one unpaired voter at z + r d, pairs;
///    |N| = 2 * pair_count + 2.
///  * ideals_at_z = 2: two voters at z plus pairs; z is a Condorcet winner.
inline VotingSituation gen_even_pairs(const GeneratorConfig& config) {
    if (config.ideals_at_z < 0 || config.ideals_at_z > 2) {
        throw DomainError("gen_even_pairs: ideals_at_z must be 0, 1 or 2");
    }
    if (config.ideals_at_z == 0 && config.pair_count < 2) {
        throw DomainError("gen_even_pairs: need >= 2 directions for a singleton core");
    }
    if (config.ideals_at_z == 1 && config.pair_count < 1) {
        throw DomainError("gen_even_pairs: need >= 2 directions for a singleton core");
    }
    std::mt19937_64 rng(config.seed);
    const int direction_count = config.pair_count + (config.ideals_at_z == 1 ? 1 : 0);
    auto prepared = detail::prepare(config, direction_count, rng);

    detail::InstanceBuilder builder(config, prepared.space, prepared.z);
    for (int j = 0; j < config.ideals_at_z; ++j) builder.add_at_z(rng);
    for (int j = 0; j < config.pair_count; ++j) {
        builder.add_pair(prepared.directions[j], prepared.radii[j], rng);
    }
    if (config.ideals_at_z == 1) {
        builder.add_single(prepared.directions.back(), prepared.radii.back(), rng);
    }
    return std::move(builder).finish();
}

/// Odd |N| (Plott symmetry): one voter at z plus antipodal pairs, so
/// |N| = 2 * pair_count + 1 and z is a Condorcet winner.
inline VotingSituation gen_odd_plott(const GeneratorConfig& config) {
    std::mt19937_64 rng(config.seed);
    auto prepared = detail::prepare(config, config.pair_count, rng);
    detail::InstanceBuilder builder(config, prepared.space, prepared.z);
    builder.add_at_z(rng);
    for (int j = 0; j < config.pair_count; ++j) {
        builder.add_pair(prepared.directions[j], prepared.radii[j], rng);
    }
    return std::move(builder).finish();
}

inline VotingSituation generate(const GeneratorConfig& config) {
    return config.parity == Parity::Even ? gen_even_pairs(config) : gen_odd_plott(config);
}

/// The center the generators use when no z is configured.
inline Point generator_core_point(const GeneratorConfig& config) {
    if (config.z) return *config.z;
    return config.space ? config.space->center() : Point(Point::Zero(config.dimension));
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_GENERATORS_HPP
