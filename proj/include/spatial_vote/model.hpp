// Spatial voting situations: a compact convex policy space, voters with
// strictly concave quadratic utilities, and simple majority rule.

#ifndef SPATIAL_VOTE_MODEL_HPP
#define SPATIAL_VOTE_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spatial_vote/types.hpp"

namespace spatial_vote {

// ----------------------------------------------------------------------------
// Policy space
// ----------------------------------------------------------------------------

enum class SpaceKind { Box, Ball };

/// Compact, convex, full-dimensional subset of R^k: an axis-aligned box or a
/// Euclidean ball.
class PolicySpace {
public:
    static PolicySpace box(Vector lower, Vector upper) {
        if (lower.size() < 1) throw ValidationError("space: dimension must be >= 1");
        if (lower.size() != upper.size()) {
            throw ValidationError("space: lower and upper bounds differ in dimension");
        }
        for (Eigen::Index a = 0; a < lower.size(); ++a) {
            if (!std::isfinite(lower[a]) || !std::isfinite(upper[a]) || !(lower[a] < upper[a])) {
                throw ValidationError("space: axis " + std::to_string(a) +
                                      " needs finite lower < upper");
            }
        }
        PolicySpace s;
        s.kind_ = SpaceKind::Box;
        s.lower_ = std::move(lower);
        s.upper_ = std::move(upper);
        s.center_ = (s.lower_ + s.upper_) / 2.0;
        return s;
    }

    /// The default space [-1, 1]^k.
    static PolicySpace unit_box(int k) {
        if (k < 1) throw ValidationError("space: dimension must be >= 1");
        return box(Vector::Constant(k, -1.0), Vector::Constant(k, 1.0));
    }

    static PolicySpace ball(Vector center, double radius) {
        if (center.size() < 1) throw ValidationError("space: dimension must be >= 1");
        if (!center.allFinite()) throw ValidationError("space: center must be finite");
        if (!std::isfinite(radius) || !(radius > 0.0)) {
            throw ValidationError("space: radius must be > 0");
        }
        PolicySpace s;
        s.kind_ = SpaceKind::Ball;
        s.center_ = std::move(center);
        s.radius_ = radius;
        s.lower_ = s.center_.array() - radius;
        s.upper_ = s.center_.array() + radius;
        return s;
    }

    SpaceKind kind() const { return kind_; }
    int dimension() const { return static_cast<int>(center_.size()); }
    const Vector& center() const { return center_; }
    double radius() const { return radius_; }

    /// Bounding box; equals the space itself for boxes.
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }

    double diameter() const {
        return kind_ == SpaceKind::Box ? (upper_ - lower_).norm() : 2.0 * radius_;
    }

    /// Signed distance to the boundary: positive inside, negative outside.
    /// For boxes this is the smallest slack over all axis constraints.
    double boundary_slack(const Point& p) const {
        require_dimension(center_.size(), p);
        if (kind_ == SpaceKind::Ball) return radius_ - (p - center_).norm();
        const double below = (p - lower_).minCoeff();
        const double above = (upper_ - p).minCoeff();
        return std::min(below, above);
    }

    bool contains(const Point& p, double tol = 0.0) const { return boundary_slack(p) >= -tol; }
    bool is_interior(const Point& p, double tol = 0.0) const { return boundary_slack(p) > tol; }

    /// Uniform sample over the space (rejection from the bounding box for balls).
    template <class Rng>
    Point sample_uniform(Rng& rng) const {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Point p(center_.size());
        for (;;) {
            for (Eigen::Index a = 0; a < p.size(); ++a) {
                p[a] = lower_[a] + unit(rng) * (upper_[a] - lower_[a]);
            }
            if (kind_ == SpaceKind::Box || contains(p)) return p;
        }
    }

private:
    PolicySpace() = default;

    SpaceKind kind_ = SpaceKind::Box;
    Vector lower_;
    Vector upper_;
    Vector center_;
    double radius_ = 0.0;
};

// ----------------------------------------------------------------------------
// Voters
// ----------------------------------------------------------------------------

/// A voter with utility u(x) = -(x - ideal)^T M (x - ideal), M symmetric
/// positive definite.
class Voter {
public:
    explicit Voter(Point ideal) : Voter(ideal, Matrix::Identity(ideal.size(), ideal.size())) {}

    Voter(Point ideal, Matrix metric) : ideal_(std::move(ideal)), metric_(std::move(metric)) {
        const auto k = ideal_.size();
        if (k < 1) throw ValidationError("voter: ideal must have dimension >= 1");
        if (!ideal_.allFinite()) throw ValidationError("voter: ideal must be finite");
        if (metric_.rows() != k || metric_.cols() != k) {
            throw ValidationError("voter: metric must be " + std::to_string(k) + "x" +
                                  std::to_string(k));
        }
        if (!metric_.allFinite()) throw ValidationError("voter: metric must be finite");
        if ((metric_ - metric_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
            throw ValidationError("voter: metric is not symmetric");
        }
        Eigen::LLT<Matrix> llt(metric_);
        if (llt.info() != Eigen::Success) {
            throw ValidationError("voter: metric is not positive definite");
        }
        identity_metric_ = metric_.isIdentity(0.0);
    }

    const Point& ideal() const { return ideal_; }
    const Matrix& metric() const { return metric_; }
    int dimension() const { return static_cast<int>(ideal_.size()); }
    bool has_identity_metric() const { return identity_metric_; }

    /// v^T M v.
    template <class Derived>
    double quadratic_form(const Eigen::MatrixBase<Derived>& v) const {
        if (identity_metric_) return v.squaredNorm();
        return v.dot(metric_ * v);
    }

private:
    Point ideal_;
    Matrix metric_;
    bool identity_metric_ = true;
};

inline double evaluate_utility(const Voter& voter, const Point& x) {
    require_dimension(voter.ideal().size(), x);
    return -voter.quadratic_form(x - voter.ideal());
}

/// Gradient of the utility: -2 M (x - ideal).
inline Vector gradient(const Voter& voter, const Point& x) {
    require_dimension(voter.ideal().size(), x);
    if (voter.has_identity_metric()) return -2.0 * (x - voter.ideal());
    return -2.0 * (voter.metric() * (x - voter.ideal()));
}

/// Membership of `candidate` in the weak upper contour set of `base`.
inline bool in_upper_contour(const Voter& voter, const Point& base, const Point& candidate) {
    return evaluate_utility(voter, candidate) >= evaluate_utility(voter, base);
}

// ----------------------------------------------------------------------------
// Voting situation
// ----------------------------------------------------------------------------

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

class VotingSituation {
public:
    VotingSituation(PolicySpace space, std::vector<Voter> voters, double eps = kDefaultEps)
        : space_(std::move(space)), voters_(std::move(voters)), eps_(eps) {
        if (voters_.empty()) throw ValidationError("situation: at least one voter is required");
        if (!(eps_ >= 0.0) || !std::isfinite(eps_)) {
            throw ValidationError("situation: eps must be finite and >= 0");
        }
        for (std::size_t i = 0; i < voters_.size(); ++i) {
            if (voters_[i].dimension() != space_.dimension()) {
                throw ValidationError("voter " + std::to_string(i) + ": dimension " +
                                      std::to_string(voters_[i].dimension()) +
                                      " does not match space dimension " +
                                      std::to_string(space_.dimension()));
            }
            if (!space_.contains(voters_[i].ideal(), eps_point())) {
                throw ValidationError("voter " + std::to_string(i) +
                                      ": ideal point lies outside the policy space");
            }
        }
    }

    const PolicySpace& space() const { return space_; }
    const std::vector<Voter>& voters() const { return voters_; }
    const Voter& voter(std::size_t i) const { return voters_.at(i); }
    int dimension() const { return space_.dimension(); }

    std::size_t size() const { return voters_.size(); }
    Parity parity() const { return size() % 2 == 0 ? Parity::Even : Parity::Odd; }
    /// n = floor(|N| / 2).
    std::size_t half() const { return size() / 2; }
    /// Least integer strictly greater than |N| / 2.
    std::size_t majority_threshold() const { return size() / 2 + 1; }

    double eps() const { return eps_; }
    /// Absolute point-equality tolerance: eps scaled by the space diameter.
    double eps_point() const { return eps_ * space_.diameter(); }

    bool same_point(const Point& a, const Point& b) const { return (a - b).norm() <= eps_point(); }

private:
    PolicySpace space_;
    std::vector<Voter> voters_;
    double eps_;
};

/// A set of voters, kept as sorted distinct indices.
class Coalition {
public:
    Coalition() = default;

    explicit Coalition(std::vector<std::size_t> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
            throw ValidationError("coalition: duplicate voter index");
        }
    }

    Coalition(std::vector<std::size_t> members, const VotingSituation& situation)
        : Coalition(std::move(members)) {
        if (!members_.empty() && members_.back() >= situation.size()) {
            throw ValidationError("coalition: voter index " + std::to_string(members_.back()) +
                                  " out of range");
        }
    }

    const std::vector<std::size_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::size_t i) const {
        return std::binary_search(members_.begin(), members_.end(), i);
    }

    friend bool operator==(const Coalition&, const Coalition&) = default;

private:
    std::vector<std::size_t> members_;
};

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_MODEL_HPP
