// Condorcet-winner testing and the even/odd verification harnesses.
//
// A Condorcet winner beats every other policy. Falsification is constructive:
// for even |N|, any line through z on which at most one voter's induced ideal
// sits at z yields a point z does not beat (see line_analysis.hpp); random
// challengers cover both parities. Certification is analytic and limited to
// two recognized configurations.

#ifndef SPATIAL_VOTE_CONDORCET_HPP
#define SPATIAL_VOTE_CONDORCET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spatial_vote/dominance.hpp"
#include "spatial_vote/geometry.hpp"
#include "spatial_vote/line_analysis.hpp"
#include "spatial_vote/model.hpp"

namespace spatial_vote {

struct Budget {
    int lines = 64;
    int challenges = 10000;
};

/// Points per axis of the singleton-core oracle grid.
inline int default_grid_per_axis(int k) { return k <= 3 ? 41 : 11; }

// ----------------------------------------------------------------------------
// Analytic certificates
// ----------------------------------------------------------------------------

inline constexpr const char* kCertUnanimity = "unanimity";
inline constexpr const char* kCertAntipodalPairs = "antipodal-pairs";

/// Recognizes the two configurations in which z provably beats every y != z:
///
///  * unanimity: every ideal is z.
///  * antipodal-pairs: c >= 1 ideals at z and the rest matched into pairs
///    z + p, z - p with a common metric M. For any y = z + w, w != 0, the pair
///    utilities at y sum to -(2 p^T M p + 2 w^T M w) < -2 p^T M p, their sum at
///    z, so one member of each pair strictly prefers z. With the c voters at z
///    that is c + P of c + 2P voters, a strict majority.
inline std::optional<std::string> analytic_certificate(const VotingSituation& situation,
                                                       const Point& z) {
    require_dimension(situation.dimension(), z);
    const double tol = situation.eps_point();
    std::vector<std::size_t> others;
    std::size_t at_z = 0;
    for (std::size_t i = 0; i < situation.size(); ++i) {
        if (situation.same_point(situation.voter(i).ideal(), z)) {
            ++at_z;
        } else {
            others.push_back(i);
        }
    }
    if (at_z == situation.size()) return std::string(kCertUnanimity);
    if (at_z == 0 || others.size() % 2 != 0) return std::nullopt;

    std::vector<bool> matched(others.size(), false);
    for (std::size_t a = 0; a < others.size(); ++a) {
        if (matched[a]) continue;
        const Voter& va = situation.voter(others[a]);
        bool found = false;
        for (std::size_t b = a + 1; b < others.size() && !found; ++b) {
            if (matched[b]) continue;
            const Voter& vb = situation.voter(others[b]);
            const bool mirrored = (va.ideal() + vb.ideal() - 2.0 * z).norm() <= 2.0 * tol;
            const bool same_metric = (va.metric() - vb.metric()).cwiseAbs().maxCoeff() <= 1e-12;
            if (mirrored && same_metric) {
                matched[a] = matched[b] = true;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return std::string(kCertAntipodalPairs);
}

// ----------------------------------------------------------------------------
// Condorcet testing
// ----------------------------------------------------------------------------

enum class CondorcetStatus { CertifiedWinner, CertifiedNotWinner, NotFalsified };

inline const char* to_string(CondorcetStatus s) {
    switch (s) {
        case CondorcetStatus::CertifiedWinner: return "CertifiedWinner";
        case CondorcetStatus::CertifiedNotWinner: return "CertifiedNotWinner";
        case CondorcetStatus::NotFalsified: return "NotFalsified";
    }
    return "?";
}

enum class WitnessSource { LineSweep, Challenge };

struct CondorcetVerdict {
    CondorcetStatus status = CondorcetStatus::NotFalsified;
    std::optional<Point> witness;
    std::optional<WitnessSource> witness_source;
    /// The swept line that produced the witness, when it came from the sweep.
    std::optional<ClippedLine> line;
    /// z against the witness.
    std::optional<DominanceVerdict> counts;
    std::optional<std::string> certificate;
    int lines_used = 0;
    int challenges_used = 0;
};

namespace detail {
inline std::uint64_t challenge_seed(std::uint64_t seed) { return seed ^ 0x9E3779B97F4A7C15ULL; }
}  // namespace detail

inline CondorcetVerdict is_condorcet_winner(const VotingSituation& situation, const Point& z,
                                            const Budget& budget = {}, std::uint64_t seed = 0) {
    require_dimension(situation.dimension(), z);
    const double tol = situation.eps_point();
    if (!situation.space().contains(z, tol)) {
        throw DomainError("is_condorcet_winner: z must lie in the policy space");
    }

    CondorcetVerdict verdict;
    if (auto cert = analytic_certificate(situation, z)) {
        verdict.status = CondorcetStatus::CertifiedWinner;
        verdict.certificate = std::move(cert);
        return verdict;
    }

    const bool interior = situation.space().is_interior(z, tol);
    if (situation.parity() == Parity::Even && interior && budget.lines > 0) {
        const int k = situation.dimension();
        const int count = k == 1 ? 1 : budget.lines;
        for (const auto& dir : generate_directions(k, count, seed)) {
            ++verdict.lines_used;
            const ClippedLine line = clip_line(situation.space(), z, dir, tol);
            Lemma1Report report = analyze_line(situation, line);
            if (!report.witness) continue;
            DominanceVerdict counts = compare_unchecked(situation, z, *report.witness);
            if (counts.dominates) continue;
            verdict.status = CondorcetStatus::CertifiedNotWinner;
            verdict.witness = std::move(report.witness);
            verdict.witness_source = WitnessSource::LineSweep;
            verdict.line = line;
            verdict.counts = std::move(counts);
            return verdict;
        }
    }

    std::mt19937_64 rng(detail::challenge_seed(seed));
    for (int c = 0; c < budget.challenges; ++c) {
        ++verdict.challenges_used;
        Point y = situation.space().sample_uniform(rng);
        if (situation.same_point(y, z)) continue;
        DominanceVerdict counts = compare_unchecked(situation, z, y);
        if (counts.dominates) continue;
        verdict.status = CondorcetStatus::CertifiedNotWinner;
        verdict.witness = std::move(y);
        verdict.witness_source = WitnessSource::Challenge;
        verdict.counts = std::move(counts);
        return verdict;
    }
    return verdict;
}

// ----------------------------------------------------------------------------
// Singleton-core oracle
// ----------------------------------------------------------------------------

struct SingletonCoreReport {
    bool singleton = false;
    bool z_in_core = false;
    int grid_per_axis = 0;
    std::size_t grid_size = 0;
    std::size_t dominated_by_z = 0;
    std::size_t dominated_locally = 0;
    std::size_t undominated_count = 0;
    /// First few grid points for which no dominator was found.
    std::vector<Point> undominated;
};

/// Desk-scale evidence that the core is exactly {z}: z passes the directional
/// core test, and every other grid point is beaten either by z or by a nearby
/// point found along a majority-improving direction (each verified by count).
inline SingletonCoreReport certify_singleton_core(const VotingSituation& situation,
                                                  const Point& z, int grid_per_axis = 0,
                                                  const CoreOptions& core_options = {},
                                                  std::size_t keep_undominated = 16) {
    SingletonCoreReport report;
    report.grid_per_axis =
        grid_per_axis > 0 ? grid_per_axis : default_grid_per_axis(situation.dimension());
    report.z_in_core = is_in_core(situation, z, core_options).in_core;

    const auto sample =
        direction_sample(situation.dimension(), kDominatorSample, core_options.seed);
    for (const auto& y : grid_points(situation.space(), report.grid_per_axis)) {
        ++report.grid_size;
        if (situation.same_point(y, z)) continue;
        if (compare_unchecked(situation, z, y).dominates) {
            ++report.dominated_by_z;
        } else if (find_local_dominator(situation, y, sample)) {
            ++report.dominated_locally;
        } else {
            ++report.undominated_count;
            if (report.undominated.size() < keep_undominated) report.undominated.push_back(y);
        }
    }
    report.singleton = report.z_in_core && report.undominated_count == 0;
    return report;
}

// ----------------------------------------------------------------------------
// Even |N|: a singleton interior core is never a Condorcet winner
// ----------------------------------------------------------------------------

enum class Prop1Outcome { Verified, AssumptionNotMet, NotFalsified };

inline const char* to_string(Prop1Outcome o) {
    switch (o) {
        case Prop1Outcome::Verified: return "verified";
        case Prop1Outcome::AssumptionNotMet: return "assumption-not-met";
        case Prop1Outcome::NotFalsified: return "not-falsified";
    }
    return "?";
}

inline constexpr const char* kClauseParity = "|N| odd";
inline constexpr const char* kClauseInterior = "z not interior";
inline constexpr const char* kClauseCore = "z not in core";
inline constexpr const char* kClauseIdeals = "more than one ideal at z";
inline constexpr const char* kClauseSingleton = "core not singleton";

struct Prop1Report {
    Prop1Outcome outcome = Prop1Outcome::AssumptionNotMet;
    std::optional<std::string> failed_assumption;
    std::optional<CoreVerdict> core;
    std::size_t ideals_at_z = 0;
    std::optional<SingletonCoreReport> singleton;
    std::optional<CondorcetVerdict> condorcet;
};

inline std::size_t count_ideals_at(const VotingSituation& situation, const Point& z) {
    std::size_t c = 0;
    for (const auto& v : situation.voters()) c += situation.same_point(v.ideal(), z) ? 1 : 0;
    return c;
}

/// Checks the even-|N| hypotheses in order, then requires the line sweep to
/// refute Condorcet status with a validated witness.
inline Prop1Report verify_proposition1(const VotingSituation& situation, const Point& z,
                                       const Budget& budget = {}, std::uint64_t seed = 0,
                                       int grid_per_axis = 0) {
    require_dimension(situation.dimension(), z);
    Prop1Report report;
    auto fail = [&](const char* clause) {
        report.outcome = Prop1Outcome::AssumptionNotMet;
        report.failed_assumption = clause;
        return report;
    };
    if (situation.parity() != Parity::Even) return fail(kClauseParity);
    if (!situation.space().is_interior(z, situation.eps_point())) return fail(kClauseInterior);
    report.core = is_in_core(situation, z, CoreOptions{.seed = seed});
    if (!report.core->in_core) return fail(kClauseCore);
    report.ideals_at_z = count_ideals_at(situation, z);
    if (report.ideals_at_z > 1) return fail(kClauseIdeals);
    report.singleton =
        certify_singleton_core(situation, z, grid_per_axis, CoreOptions{.seed = seed});
    if (!report.singleton->singleton) return fail(kClauseSingleton);

    report.condorcet = is_condorcet_winner(situation, z, budget, seed);
    const auto& c = *report.condorcet;
    const bool refuted = c.status == CondorcetStatus::CertifiedNotWinner && c.witness &&
                         !compare_unchecked(situation, z, *c.witness).dominates;
    report.outcome = refuted ? Prop1Outcome::Verified : Prop1Outcome::NotFalsified;
    return report;
}

// ----------------------------------------------------------------------------
// Odd |N|: a nonempty core is a Condorcet winner
// ----------------------------------------------------------------------------

inline constexpr const char* kClauseNoIdealAtZ = "no ideal at z";
inline constexpr const char* kClauseChallenger = "challenger not beaten";

struct Prop1PrimeReport {
    bool passed = false;
    std::optional<std::string> failed_check;
    std::optional<CoreVerdict> core;
    std::size_t ideals_at_z = 0;
    int challenges = 0;
    std::size_t failures = 0;
    std::optional<Point> failing_challenger;
    std::optional<DominanceVerdict> failing_counts;
    std::optional<std::string> certificate;
};

inline Prop1PrimeReport verify_proposition1prime(const VotingSituation& situation,
                                                 const Point& z, int challenges = 10000,
                                                 std::uint64_t seed = 0) {
    require_dimension(situation.dimension(), z);
    if (situation.parity() != Parity::Odd) {
        throw DomainError("verify_proposition1prime: parity: |N| must be odd");
    }
    Prop1PrimeReport report;
    report.challenges = challenges;
    auto fail = [&](const char* check) {
        report.passed = false;
        report.failed_check = check;
        return report;
    };
    if (!situation.space().is_interior(z, situation.eps_point())) return fail(kClauseInterior);
    report.core = is_in_core(situation, z, CoreOptions{.seed = seed});
    if (!report.core->in_core) return fail(kClauseCore);
    report.ideals_at_z = count_ideals_at(situation, z);
    if (report.ideals_at_z == 0) return fail(kClauseNoIdealAtZ);

    std::mt19937_64 rng(detail::challenge_seed(seed));
    for (int c = 0; c < challenges; ++c) {
        const Point y = situation.space().sample_uniform(rng);
        if (situation.same_point(y, z)) continue;
        DominanceVerdict counts = compare_unchecked(situation, z, y);
        if (counts.dominates) continue;
        if (report.failures++ == 0) {
            report.failing_challenger = y;
            report.failing_counts = std::move(counts);
        }
    }
    report.certificate = analytic_certificate(situation, z);
    if (report.failures > 0) return fail(kClauseChallenger);
    report.passed = true;
    return report;
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_CONDORCET_HPP
