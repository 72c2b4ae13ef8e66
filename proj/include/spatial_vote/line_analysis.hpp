// Voter preferences restricted to a line through a candidate point.
//
// Along any line, a quadratic utility is single-peaked with its peak at the
// voter's induced ideal point (the maximizer over the clipped segment). If the
// candidate z is the anchor of the line, the induced ideals fall on the plus
// half-line, the minus half-line, or at z itself. When |N| is even and at most
// one induced ideal sits at z, one side holds at least n = |N|/2 ideals and
// every voter on that side strictly prefers the point halfway between z and the
// innermost ideal on that side. So z fails to beat that point.

#ifndef SPATIAL_VOTE_LINE_ANALYSIS_HPP
#define SPATIAL_VOTE_LINE_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "spatial_vote/geometry.hpp"
#include "spatial_vote/model.hpp"

namespace spatial_vote {

struct InducedIdeal {
    std::size_t voter = 0;
    double t = 0.0;
    Point point;
    bool at_anchor = false;
};

/// Classification of every voter's induced ideal on one line through z.
struct Lemma1Report {
    ClippedLine line;
    std::vector<InducedIdeal> ideals;
    std::size_t count_at_anchor = 0;
    std::size_t plus_count = 0;
    std::size_t minus_count = 0;
    std::optional<Point> witness;
    /// Parameter of the witness on the line; set together with `witness`.
    std::optional<double> witness_t;
};

/// Maximizer of the voter's utility over the clipped line. For a quadratic
/// utility the unconstrained peak is d^T M (ideal - z) / d^T M d, clamped to
/// the segment.
inline InducedIdeal induced_ideal(const Voter& voter, const ClippedLine& line,
                                  double eps_param = 0.0, std::size_t voter_index = 0) {
    require_dimension(voter.ideal().size(), line.anchor);
    const Vector& d = line.direction;
    const Vector offset = voter.ideal() - line.anchor;
    double t = 0.0;
    if (voter.has_identity_metric()) {
        t = d.dot(offset) / d.squaredNorm();
    } else {
        const Vector md = voter.metric() * d;
        t = md.dot(offset) / md.dot(d);
    }
    t = std::clamp(t, line.t_min, line.t_max);
    return InducedIdeal{voter_index, t, line.point(t), std::abs(t) <= eps_param};
}

/// Counts induced ideals at the anchor and strictly on each half-line, using
/// the situation's point tolerance as the parameter cutoff. No witness is built.
inline Lemma1Report count_ideals_at_anchor(const VotingSituation& situation,
                                           const ClippedLine& line) {
    const double eps = situation.eps_point();
    if (!situation.space().is_interior(line.anchor, eps)) {
        throw DomainError("count_ideals_at_anchor: anchor must be interior to the space");
    }
    Lemma1Report report;
    report.line = line;
    report.ideals.reserve(situation.size());
    for (std::size_t i = 0; i < situation.size(); ++i) {
        InducedIdeal ideal = induced_ideal(situation.voter(i), line, eps, i);
        if (ideal.at_anchor) {
            ++report.count_at_anchor;
        } else if (ideal.t > 0.0) {
            ++report.plus_count;
        } else {
            ++report.minus_count;
        }
        report.ideals.push_back(std::move(ideal));
    }
    return report;
}

/// Full line analysis: the counts plus, for even |N| with at most one induced
/// ideal at the anchor, a point of the line that the anchor does not beat.
inline Lemma1Report analyze_line(const VotingSituation& situation, const ClippedLine& line) {
    Lemma1Report report = count_ideals_at_anchor(situation, line);
    if (situation.parity() != Parity::Even || report.count_at_anchor >= 2) return report;

    double innermost_plus = std::numeric_limits<double>::infinity();
    double innermost_minus = -std::numeric_limits<double>::infinity();
    for (const auto& ideal : report.ideals) {
        if (ideal.at_anchor) continue;
        if (ideal.t > 0.0) {
            innermost_plus = std::min(innermost_plus, ideal.t);
        } else {
            innermost_minus = std::max(innermost_minus, ideal.t);
        }
    }
    // With |N| = 2n and at most one ideal at the anchor, at least one side
    // holds n ideals. Ties go to the plus side.
    const std::size_t n = situation.half();
    const double t = report.plus_count >= n ? innermost_plus / 2.0 : innermost_minus / 2.0;
    report.witness_t = t;
    report.witness = line.point(t);
    return report;
}

/// A point on `line` that `z` does not beat, or nothing when two or more
/// voters' induced ideals coincide with z.
inline std::optional<Point> lemma1_witness(const VotingSituation& situation, const Point& z,
                                           const ClippedLine& line) {
    if (situation.parity() != Parity::Even) {
        throw DomainError("lemma1_witness: parity: |N| must be even");
    }
    require_dimension(situation.dimension(), z);
    if (!situation.same_point(z, line.anchor)) {
        throw DomainError("lemma1_witness: z must be the anchor of the line");
    }
    return analyze_line(situation, line).witness;
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_LINE_ANALYSIS_HPP
