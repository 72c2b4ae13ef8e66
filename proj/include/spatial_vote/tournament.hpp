// Majority tournaments over a finite set of alternatives, with the finite core,
// the finite Condorcet winner, and the Gillies uncovered set.
//
// Covering: x covers y iff x beats y and every alternative that beats x also
// beats y. The uncovered set is the set of alternatives covered by nothing.

#ifndef SPATIAL_VOTE_TOURNAMENT_HPP
#define SPATIAL_VOTE_TOURNAMENT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spatial_vote/geometry.hpp"
#include "spatial_vote/model.hpp"

namespace spatial_vote {

class TournamentMatrix {
public:
    /// `pref` is row-major m x m: pref[a * m + b] voters strictly prefer a to b.
    /// `alternatives` may be empty for abstract tournaments.
    TournamentMatrix(std::vector<Point> alternatives, std::size_t voter_count,
                     std::vector<int> pref)
        : alternatives_(std::move(alternatives)), voters_(voter_count), pref_(std::move(pref)) {
        m_ = 0;
        while (m_ * m_ < pref_.size()) ++m_;
        if (m_ * m_ != pref_.size()) throw ValidationError("tournament: pref must be square");
        if (!alternatives_.empty() && alternatives_.size() != m_) {
            throw ValidationError("tournament: alternatives and pref sizes differ");
        }
        for (std::size_t a = 0; a < m_; ++a) {
            if (at(a, a) != 0) throw ValidationError("tournament: pref[a][a] must be 0");
            for (std::size_t b = 0; b < m_; ++b) {
                if (at(a, b) < 0) throw ValidationError("tournament: negative count");
                if (static_cast<std::size_t>(at(a, b) + at(b, a)) > voters_) {
                    throw ValidationError("tournament: pref[a][b] + pref[b][a] exceeds |N|");
                }
            }
        }
    }

    std::size_t size() const { return m_; }
    std::size_t voter_count() const { return voters_; }
    const std::vector<Point>& alternatives() const { return alternatives_; }
    const std::vector<int>& pref() const { return pref_; }
    int at(std::size_t a, std::size_t b) const { return pref_[a * m_ + b]; }

    /// Strict majority dominance a > b.
    bool beats(std::size_t a, std::size_t b) const {
        return 2 * static_cast<std::size_t>(at(a, b)) > voters_;
    }

private:
    std::vector<Point> alternatives_;
    std::size_t voters_ = 0;
    std::vector<int> pref_;
    std::size_t m_ = 0;
};

inline TournamentMatrix build_tournament(const VotingSituation& situation,
                                         const std::vector<Point>& alternatives) {
    const double tol = situation.eps_point();
    const std::size_t m = alternatives.size();
    for (std::size_t a = 0; a < m; ++a) {
        require_dimension(situation.dimension(), alternatives[a]);
        if (!situation.space().contains(alternatives[a], tol)) {
            throw DomainError("build_tournament: alternative " + std::to_string(a) +
                              " lies outside the space");
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (situation.same_point(alternatives[a], alternatives[b])) {
                throw DomainError("build_tournament: duplicate alternatives " + std::to_string(a) +
                                  " and " + std::to_string(b));
            }
        }
    }

    const std::size_t n = situation.size();
    std::vector<double> utility(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < m; ++a) {
            utility[i * m + a] = evaluate_utility(situation.voter(i), alternatives[a]);
        }
    }
    std::vector<int> pref(m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            int ab = 0;
            int ba = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double ua = utility[i * m + a];
                const double ub = utility[i * m + b];
                ab += ua > ub ? 1 : 0;
                ba += ub > ua ? 1 : 0;
            }
            pref[a * m + b] = ab;
            pref[b * m + a] = ba;
        }
    }
    return TournamentMatrix(alternatives, n, std::move(pref));
}

/// Axis-uniform grid with `z` injected exactly. Grid points within the point
/// tolerance of z are replaced by z. Returns the alternatives and z's index.
inline std::pair<std::vector<Point>, std::size_t> grid_with_point(const VotingSituation& situation,
                                                                  int per_axis, const Point& z) {
    require_dimension(situation.dimension(), z);
    std::vector<Point> out;
    std::optional<std::size_t> z_index;
    for (auto& p : grid_points(situation.space(), per_axis)) {
        if (situation.same_point(p, z)) {
            if (!z_index) {
                z_index = out.size();
                out.push_back(z);
            }
            continue;
        }
        out.push_back(std::move(p));
    }
    if (!z_index) {
        z_index = out.size();
        out.push_back(z);
    }
    return {std::move(out), *z_index};
}

/// Alternatives beaten by no other alternative.
inline std::vector<std::size_t> finite_core(const TournamentMatrix& t) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < t.size(); ++y) {
        bool beaten = false;
        for (std::size_t x = 0; x < t.size() && !beaten; ++x) beaten = t.beats(x, y);
        if (!beaten) out.push_back(y);
    }
    return out;
}

inline std::optional<std::size_t> finite_condorcet(const TournamentMatrix& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
        bool all = true;
        for (std::size_t y = 0; y < t.size() && all; ++y) all = (x == y) || t.beats(x, y);
        if (all) return x;
    }
    return std::nullopt;
}

namespace detail {

/// Row bitsets: bit w of row x is set iff w beats x.
struct DominatorSets {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit DominatorSets(const TournamentMatrix& t) : words((t.size() + 63) / 64) {
        bits.assign(t.size() * words, 0);
        for (std::size_t x = 0; x < t.size(); ++x) {
            for (std::size_t w = 0; w < t.size(); ++w) {
                if (t.beats(w, x)) bits[x * words + w / 64] |= std::uint64_t{1} << (w % 64);
            }
        }
    }

    bool subset(std::size_t x, std::size_t y) const {
        for (std::size_t j = 0; j < words; ++j) {
            if (bits[x * words + j] & ~bits[y * words + j]) return false;
        }
        return true;
    }
};

}  // namespace detail

inline bool covers(const TournamentMatrix& t, std::size_t x, std::size_t y) {
    if (!t.beats(x, y)) return false;
    for (std::size_t w = 0; w < t.size(); ++w) {
        if (t.beats(w, x) && !t.beats(w, y)) return false;
    }
    return true;
}

inline std::vector<std::size_t> gillies_uncovered(const TournamentMatrix& t) {
    const detail::DominatorSets dominators(t);
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < t.size(); ++y) {
        bool covered = false;
        for (std::size_t x = 0; x < t.size() && !covered; ++x) {
            covered = t.beats(x, y) && dominators.subset(x, y);
        }
        if (!covered) out.push_back(y);
    }
    return out;
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_TOURNAMENT_HPP
