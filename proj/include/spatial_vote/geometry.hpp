// Lines through a point clipped to the policy space, their half-line
// decomposition, and deterministic families of line directions.

#ifndef SPATIAL_VOTE_GEOMETRY_HPP
#define SPATIAL_VOTE_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "spatial_vote/model.hpp"

namespace spatial_vote {

/// Closed parameter interval [lo, hi].
struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double t) const { return lo <= t && t <= hi; }
    double length() const { return hi - lo; }
};

/// The segment {anchor + t * direction : t in [t_min, t_max]} obtained by
/// intersecting a line through `anchor` with the policy space. The anchor sits
/// at t = 0, so t_min <= 0 <= t_max.
struct ClippedLine {
    Point anchor;
    Vector direction;
    double t_min = 0.0;
    double t_max = 0.0;

    Point point(double t) const { return anchor + t * direction; }
    ParamRange range() const { return {t_min, t_max}; }
};

/// The two closed half-lines of a clipped line, split at its anchor.
struct HalfLinePair {
    ParamRange plus;
    ParamRange minus;
};

inline double distance(const Point& a, const Point& b) {
    require_dimension(a.size(), b);
    return (a - b).norm();
}

/// Intersects the line through `z` along `direction` with the space. `tol`
/// admits anchors that sit within that distance outside the space.
inline ClippedLine clip_line(const PolicySpace& space, const Point& z, const Vector& direction,
                             double tol = 0.0) {
    require_dimension(space.dimension(), z);
    require_dimension(space.dimension(), direction);
    if (!space.contains(z, tol)) throw DomainError("clip_line: anchor lies outside the space");
    const double norm = direction.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("clip_line: direction must be nonzero");
    }

    ClippedLine line;
    line.anchor = z;
    line.direction = direction / norm;
    const Vector& d = line.direction;

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (space.kind() == SpaceKind::Box) {
        // slab intersection
        for (Eigen::Index a = 0; a < d.size(); ++a) {
            if (d[a] == 0.0) continue;
            double t1 = (space.lower()[a] - z[a]) / d[a];
            double t2 = (space.upper()[a] - z[a]) / d[a];
            if (t1 > t2) std::swap(t1, t2);
            lo = std::max(lo, t1);
            hi = std::min(hi, t2);
        }
    } else {
        const Vector w = z - space.center();
        const double b = w.dot(d);
        const double c = w.squaredNorm() - space.radius() * space.radius();
        const double root = std::sqrt(std::max(0.0, b * b - c));
        lo = -b - root;
        hi = -b + root;
    }
    // An anchor on (or within tol of) the boundary can produce a range that
    // misses zero by rounding.
    line.t_min = std::min(lo, 0.0);
    line.t_max = std::max(hi, 0.0);
    return line;
}

inline HalfLinePair split_half_lines(const ClippedLine& line) {
    return {ParamRange{0.0, line.t_max}, ParamRange{line.t_min, 0.0}};
}

/// Flips `v` so that its first nonzero coordinate is positive.
inline Vector canonical_direction(Vector v) {
    for (Eigen::Index a = 0; a < v.size(); ++a) {
        if (v[a] > 0.0) return v;
        if (v[a] < 0.0) return -v;
    }
    return v;
}

/// `count` pairwise non-parallel unit directions, one per line through a point.
///
/// k = 1 yields the single axis direction. k = 2 yields evenly spaced angles in
/// [0, pi), rotated by a common offset drawn from `seed` and scaled by `jitter`
/// (0 gives angles exactly j * pi / count). k >= 3 yields normalized Gaussian
/// draws, canonicalized to the half-sphere whose first nonzero coordinate is
/// positive, redrawn whenever a candidate is within 1e-10 of parallel to an
/// earlier one.
inline std::vector<Vector> generate_directions(int k, int count, std::uint64_t seed,
                                               double jitter = 1.0) {
    if (k < 1) throw DomainError("generate_directions: dimension must be >= 1");
    if (count < 1) throw DomainError("generate_directions: count must be >= 1");
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    std::mt19937_64 rng(seed);

    if (k == 1) {
        if (count > 1) throw DomainError("generate_directions: a line has a single direction");
        out.push_back(Vector::Ones(1));
        return out;
    }

    if (k == 2) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double step = std::numbers::pi / count;
        const double offset = jitter * unit(rng) * step;
        for (int j = 0; j < count; ++j) {
            const double angle = offset + j * step;
            Vector v(2);
            v << std::cos(angle), std::sin(angle);
            out.push_back(std::move(v));
        }
        return out;
    }

    std::normal_distribution<double> gauss(0.0, 1.0);
    auto near_parallel = [](const Vector& a, const Vector& b) {
        return std::abs(std::abs(a.dot(b)) - 1.0) <= 1e-10;
    };
    for (;;) {
        while (static_cast<int>(out.size()) < count) {
            Vector v(k);
            for (int a = 0; a < k; ++a) v[a] = gauss(rng);
            const double n = v.norm();
            if (n > 1e-12) out.push_back(canonical_direction(v / n));
        }
        // Near-parallel canonical directions agree in their first coordinate to
        // within 1e-4, or both have a first coordinate near zero.
        std::vector<std::size_t> order(out.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return out[a][0] < out[b][0]; });
        std::optional<std::size_t> drop;
        auto consider = [&](std::size_t a, std::size_t b) {
            if (near_parallel(out[a], out[b])) {
                const std::size_t later = std::max(a, b);
                if (!drop || later < *drop) drop = later;
            }
        };
        std::vector<std::size_t> flat;
        for (std::size_t p = 0; p < order.size(); ++p) {
            const Vector& u = out[order[p]];
            for (std::size_t q = p + 1; q < order.size() && out[order[q]][0] - u[0] <= 1e-4; ++q) {
                consider(order[p], order[q]);
            }
            if (std::abs(u[0]) <= 1e-4) flat.push_back(order[p]);
        }
        for (std::size_t p = 0; p < flat.size(); ++p) {
            for (std::size_t q = p + 1; q < flat.size(); ++q) consider(flat[p], flat[q]);
        }
        if (!drop) break;
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(*drop));
    }
    return out;
}

/// Axis-uniform grid over the bounding box of the space, `per_axis` points per
/// axis including both bounds, keeping only points contained in the space.
inline std::vector<Point> grid_points(const PolicySpace& space, int per_axis) {
    if (per_axis < 2) throw DomainError("grid_points: need at least 2 points per axis");
    const int k = space.dimension();
    std::vector<Point> out;
    std::vector<int> index(static_cast<std::size_t>(k), 0);
    for (;;) {
        Point p(k);
        for (int a = 0; a < k; ++a) {
            const double f = static_cast<double>(index[a]) / (per_axis - 1);
            p[a] = index[a] == per_axis - 1 ? space.upper()[a]
                                            : space.lower()[a] + f * (space.upper()[a] - space.lower()[a]);
        }
        if (space.contains(p)) out.push_back(std::move(p));
        int a = 0;
        while (a < k && ++index[a] == per_axis) index[a++] = 0;
        if (a == k) break;
    }
    return out;
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_GEOMETRY_HPP
