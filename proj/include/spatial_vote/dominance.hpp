// Majority dominance, the directional core criterion, and explicit dominator
// search.
//
// For an interior point z and strictly concave utilities, some y beats z iff
// some unit direction v gives a strict majority a strictly positive
// directional derivative at z. Moving a little along such a v produces a
// dominating point; conversely every member of a coalition that prefers y has
// a positive derivative along (y - z), since each utility's difference quotient
// along the segment is nonincreasing.

#ifndef SPATIAL_VOTE_DOMINANCE_HPP
#define SPATIAL_VOTE_DOMINANCE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "spatial_vote/geometry.hpp"
#include "spatial_vote/model.hpp"

namespace spatial_vote {

// ----------------------------------------------------------------------------
// Pairwise majority comparison
// ----------------------------------------------------------------------------

struct DominanceVerdict {
    bool dominates = false;
    std::size_t prefer_x_count = 0;
    std::size_t prefer_y_count = 0;
    std::size_t indifferent_count = 0;
    /// Every voter strictly preferring x; present iff `dominates`.
    std::optional<Coalition> coalition;
};

/// Counts strict preferences between x and y by exact comparison of computed
/// utilities. No containment check; callers validate.
inline DominanceVerdict compare_unchecked(const VotingSituation& situation, const Point& x,
                                          const Point& y) {
    DominanceVerdict verdict;
    std::vector<std::size_t> preferrers;
    for (std::size_t i = 0; i < situation.size(); ++i) {
        const double ux = evaluate_utility(situation.voter(i), x);
        const double uy = evaluate_utility(situation.voter(i), y);
        if (ux > uy) {
            ++verdict.prefer_x_count;
            preferrers.push_back(i);
        } else if (uy > ux) {
            ++verdict.prefer_y_count;
        } else {
            ++verdict.indifferent_count;
        }
    }
    verdict.dominates = verdict.prefer_x_count >= situation.majority_threshold();
    if (verdict.dominates) verdict.coalition = Coalition(std::move(preferrers));
    return verdict;
}

/// Does x beat y by strict majority?
inline DominanceVerdict dominates(const VotingSituation& situation, const Point& x,
                                  const Point& y) {
    require_dimension(situation.dimension(), x);
    require_dimension(situation.dimension(), y);
    const double tol = situation.eps_point();
    if (!situation.space().contains(x, tol) || !situation.space().contains(y, tol)) {
        throw DomainError("dominates: points must lie in the policy space");
    }
    return compare_unchecked(situation, x, y);
}

// ----------------------------------------------------------------------------
// Directional counting
// ----------------------------------------------------------------------------

/// Number of gradients with a strictly positive inner product with `v`.
inline std::size_t count_positive(const std::vector<Vector>& gradients, const Vector& v) {
    return static_cast<std::size_t>(std::count_if(
        gradients.begin(), gradients.end(), [&](const Vector& g) { return g.dot(v) > 0.0; }));
}

inline std::vector<Vector> gradients_at(const VotingSituation& situation, const Point& z) {
    std::vector<Vector> out;
    out.reserve(situation.size());
    for (const auto& voter : situation.voters()) out.push_back(gradient(voter, z));
    return out;
}

/// Boundaries closer than this (radians) are merged in the planar sweep, so
/// exactly antipodal gradients perturbed by rounding do not create slivers.
inline constexpr double kAngleMergeTol = 1e-12;

/// One direction inside every open sector cut out of the circle by the lines
/// perpendicular to the nonzero gradients. The positive count is constant on
/// each sector and its maximum over the circle is attained on one of them.
inline std::vector<Vector> planar_sector_directions(const std::vector<Vector>& gradients) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> cuts;
    for (const auto& g : gradients) {
        if (g.norm() == 0.0) continue;
        const double phi = std::atan2(g[1], g[0]);
        for (double c : {phi + std::numbers::pi / 2.0, phi - std::numbers::pi / 2.0}) {
            c = std::fmod(c, two_pi);
            if (c < 0.0) c += two_pi;
            cuts.push_back(c);
        }
    }
    std::vector<Vector> out;
    auto push_angle = [&](double a) {
        Vector v(2);
        v << std::cos(a), std::sin(a);
        out.push_back(std::move(v));
    };
    if (cuts.empty()) {
        push_angle(0.0);
        return out;
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged;
    for (double c : cuts) {
        if (merged.empty() || c - merged.back() > kAngleMergeTol) merged.push_back(c);
    }
    if (merged.size() > 1 && merged.front() + two_pi - merged.back() <= kAngleMergeTol) {
        merged.pop_back();
    }
    if (merged.size() == 1) {
        push_angle(merged.front() + std::numbers::pi / 2.0);
        push_angle(merged.front() - std::numbers::pi / 2.0);
        return out;
    }
    for (std::size_t j = 0; j + 1 < merged.size(); ++j) push_angle((merged[j] + merged[j + 1]) / 2.0);
    push_angle((merged.back() + merged.front() + two_pi) / 2.0);
    return out;
}

/// Candidate directions for k >= 3: both signs of a seeded sample, each unit
/// gradient, and each normalized sum of two unit gradients (the bisector is
/// positive for both members of a nearly opposed pair).
inline std::vector<Vector> sampled_candidate_directions(const std::vector<Vector>& gradients,
                                                        int k, const std::vector<Vector>& sample) {
    std::vector<Vector> out;
    out.reserve(2 * sample.size() + gradients.size() * (gradients.size() + 1) / 2);
    for (const auto& v : sample) {
        out.push_back(-v);
        out.push_back(v);
    }
    std::vector<Vector> units;
    for (const auto& g : gradients) {
        const double n = g.norm();
        if (n > 0.0) units.push_back(g / n);
    }
    for (std::size_t a = 0; a < units.size(); ++a) {
        out.push_back(units[a]);
        for (std::size_t b = a + 1; b < units.size(); ++b) {
            const Vector s = units[a] + units[b];
            const double n = s.norm();
            if (n > 1e-300) out.push_back(s / n);
        }
    }
    if (out.empty()) out.push_back(Vector::Unit(k, 0));
    return out;
}

/// Seeded half-sphere sample used by the k >= 3 searches; empty for k <= 2.
inline std::vector<Vector> direction_sample(int k, int sample, std::uint64_t seed) {
    if (k <= 2 || sample <= 0) return {};
    return generate_directions(k, sample, seed);
}

/// Candidate directions covering the sphere: exact for k <= 2, otherwise
/// `sample` (both signs) plus the gradient-derived directions.
inline std::vector<Vector> candidate_directions(const std::vector<Vector>& gradients, int k,
                                                const std::vector<Vector>& sample) {
    if (k == 1) return {Vector::Ones(1), -Vector::Ones(1)};
    if (k == 2) return planar_sector_directions(gradients);
    return sampled_candidate_directions(gradients, k, sample);
}

// ----------------------------------------------------------------------------
// Core membership
// ----------------------------------------------------------------------------

struct CoreOptions {
    /// Directions sampled for k >= 3 (each used with both signs).
    int sample = 4096;
    std::uint64_t seed = 0;
};

struct CoreVerdict {
    bool in_core = true;
    std::optional<Vector> violating_direction;
    /// Voters with a strictly positive derivative along the violating direction.
    std::optional<std::size_t> positive_count;
    /// True when the directions examined cover every case (k <= 2). A sampled
    /// `in_core = true` means only that no violating direction was found.
    bool exact = true;
    std::size_t directions_checked = 0;
};

/// Interior core test by the directional criterion. A false verdict is always
/// certified by the returned direction; a true verdict is exact for k <= 2.
inline CoreVerdict is_in_core(const VotingSituation& situation, const Point& z,
                              const CoreOptions& options = {}) {
    require_dimension(situation.dimension(), z);
    if (!situation.space().is_interior(z, situation.eps_point())) {
        throw DomainError("is_in_core: z must be interior to the policy space");
    }
    const auto grads = gradients_at(situation, z);
    const int k = situation.dimension();
    const auto dirs =
        candidate_directions(grads, k, direction_sample(k, options.sample, options.seed));

    CoreVerdict verdict;
    verdict.exact = k <= 2;
    verdict.directions_checked = dirs.size();
    std::size_t best = 0;
    const Vector* best_dir = nullptr;
    for (const auto& v : dirs) {
        const std::size_t c = count_positive(grads, v);
        if (c > best) {
            best = c;
            best_dir = &v;
        }
    }
    if (best_dir != nullptr && best >= situation.majority_threshold()) {
        verdict.in_core = false;
        verdict.violating_direction = *best_dir;
        verdict.positive_count = best;
    }
    return verdict;
}

// ----------------------------------------------------------------------------
// Dominator search
// ----------------------------------------------------------------------------

/// Default sample size for dominator searches in k >= 3.
inline constexpr int kDominatorSample = 256;

namespace detail {

/// Steps along `v` from y while at least a strict majority still gains; the
/// candidate is accepted only after an exact count.
inline std::optional<Point> step_along(const VotingSituation& situation, const Point& y,
                                       const std::vector<Vector>& grads, const Vector& v,
                                       int max_halvings, std::vector<double>& reach) {
    const std::size_t need = situation.majority_threshold();
    const double tol = situation.eps_point();
    // Voter i still strictly gains at step s iff s < g_i.v / v^T M_i v.
    reach.clear();
    for (std::size_t i = 0; i < situation.size(); ++i) {
        const double slope = grads[i].dot(v);
        if (slope > 0.0) reach.push_back(slope / situation.voter(i).quadratic_form(v));
    }
    if (reach.size() < need) return std::nullopt;
    const ClippedLine line = clip_line(situation.space(), y, v, tol);
    if (!(line.t_max > 0.0)) return std::nullopt;
    std::nth_element(reach.begin(), reach.begin() + static_cast<std::ptrdiff_t>(need - 1),
                     reach.end(), std::greater<>());
    double step = std::min(reach[need - 1] / 2.0, line.t_max);
    for (int h = 0; h <= max_halvings && step > 0.0; ++h, step /= 2.0) {
        Point x = line.point(step);
        if (!situation.space().contains(x, tol)) continue;
        if (compare_unchecked(situation, x, y).dominates) return x;
    }
    return std::nullopt;
}

}  // namespace detail

/// Looks for a point that beats y by moving along a direction in which a
/// strict majority improves. Every returned point is verified by an exact
/// voter count. Works for boundary points too; directions leaving the space
/// are skipped. `sample` is the k >= 3 direction sample (see direction_sample);
/// it is only consulted after the gradient-derived directions fail.
inline std::optional<Point> find_local_dominator(const VotingSituation& situation, const Point& y,
                                                 const std::vector<Vector>& sample,
                                                 int max_halvings = 40) {
    const auto grads = gradients_at(situation, y);
    const int k = situation.dimension();
    std::vector<double> reach;

    const std::vector<Vector> structural = candidate_directions(grads, k, {});
    for (const auto& v : structural) {
        if (auto x = detail::step_along(situation, y, grads, v, max_halvings, reach)) return x;
    }
    if (k <= 2) return std::nullopt;
    for (const auto& s : sample) {
        for (const Vector& v : {Vector(s), Vector(-s)}) {
            if (auto x = detail::step_along(situation, y, grads, v, max_halvings, reach)) return x;
        }
    }
    return std::nullopt;
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_DOMINANCE_HPP
