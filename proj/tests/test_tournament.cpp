#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spatial_vote/spatial_vote.hpp"

namespace sv = spatial_vote;
using fixtures::pt;

namespace {

/// Random tournament-like count matrix with `voters` voters; ties allowed.
sv::TournamentMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t voters) {
    std::vector<int> pref(m * m, 0);
    std::uniform_int_distribution<int> total(0, static_cast<int>(voters));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const int t = total(rng);
            const int ab = std::uniform_int_distribution<int>(0, t)(rng);
            pref[a * m + b] = ab;
            pref[b * m + a] = t - ab;
        }
    }
    return sv::TournamentMatrix({}, voters, std::move(pref));
}

std::vector<std::vector<bool>> beats_table(const sv::TournamentMatrix& t) {
    std::vector<std::vector<bool>> out(t.size(), std::vector<bool>(t.size(), false));
    for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) out[a][b] = 2 * t.at(a, b) > static_cast<int>(t.voter_count());
    }
    return out;
}

sv::TournamentMatrix three_cycle() {
    // a > b, b > c, c > a with 3 voters.
    return sv::TournamentMatrix({}, 3, {0, 2, 1, 1, 0, 2, 2, 1, 0});
}

std::size_t index_of(const std::vector<sv::Point>& alts, const sv::Point& p) {
    for (std::size_t i = 0; i < alts.size(); ++i) {
        if ((alts[i] - p).norm() < 1e-12) return i;
    }
    return alts.size();
}

}  // namespace

TEST(TournamentMatrix, Validation) {
    EXPECT_THROW(sv::TournamentMatrix({}, 3, {0, 1, 2}), sv::ValidationError);
    EXPECT_THROW(sv::TournamentMatrix({}, 3, {1, 0, 0, 0}), sv::ValidationError);
    EXPECT_THROW(sv::TournamentMatrix({}, 3, {0, 2, 2, 0}), sv::ValidationError);
    EXPECT_THROW(sv::TournamentMatrix({pt({0, 0})}, 3, {0, 1, 1, 0}), sv::ValidationError);
    EXPECT_NO_THROW(sv::TournamentMatrix({}, 3, {0, 2, 1, 0}));
}

TEST(BuildTournament, Examples) {
    const auto s = fixtures::square();
    auto t = sv::build_tournament(s, {pt({0.2, 0.2})});
    EXPECT_EQ(t.size(), 1u);
    EXPECT_EQ(t.at(0, 0), 0);

    t = sv::build_tournament(s, {pt({0, 0}), pt({0.5, 0})});
    EXPECT_EQ(t.at(0, 1), 3);
    EXPECT_EQ(t.at(1, 0), 1);
    EXPECT_TRUE(t.beats(0, 1));

    t = sv::build_tournament(s, {pt({0, 0}), pt({0.25, 0.25})});
    EXPECT_EQ(t.at(0, 1), 2);
    EXPECT_EQ(t.at(1, 0), 2);
    EXPECT_FALSE(t.beats(0, 1));
    EXPECT_FALSE(t.beats(1, 0));
}

TEST(BuildTournament, Errors) {
    const auto s = fixtures::square();
    EXPECT_THROW(sv::build_tournament(s, {pt({0, 0}), pt({0, 1e-12})}), sv::DomainError);
    EXPECT_THROW(sv::build_tournament(s, {pt({0, 0}), pt({3, 0})}), sv::DomainError);
}

TEST(BuildTournament, CountsMatchRecomputation) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        sv::GeneratorConfig g;
        g.parity = i % 2 == 0 ? sv::Parity::Even : sv::Parity::Odd;
        g.pair_count = 2 + i % 3;
        g.random_metrics = true;
        g.seed = static_cast<std::uint64_t>(i);
        const auto s = sv::generate(g);
        std::vector<sv::Point> alts;
        for (int j = 0; j < 25; ++j) alts.push_back(pt({u(rng), u(rng)}));
        const auto t = sv::build_tournament(s, alts);
        const auto raw = fixtures::raw(s);
        for (std::size_t a = 0; a < alts.size(); ++a) {
            for (std::size_t b = 0; b < alts.size(); ++b) {
                const int expected = a == b ? 0 : static_cast<int>(oracle::prefer_count(raw, alts[a], alts[b]));
                EXPECT_EQ(t.at(a, b), expected);
            }
        }
    }
}

TEST(GridWithPoint, InjectsZExactlyOnce) {
    const auto s = fixtures::square();
    auto [alts, zi] = sv::grid_with_point(s, 5, pt({0, 0}));
    EXPECT_EQ(alts.size(), 25u);
    EXPECT_EQ(alts[zi], pt({0, 0}));
    std::tie(alts, zi) = sv::grid_with_point(s, 5, pt({0.1, 0.1}));
    EXPECT_EQ(alts.size(), 26u);
    EXPECT_EQ(zi, 25u);
    EXPECT_EQ(alts[zi], pt({0.1, 0.1}));
}

TEST(FiniteSolutions, SingleAlternativeAndCycle) {
    const sv::TournamentMatrix one({}, 5, {0});
    EXPECT_EQ(sv::finite_core(one), (std::vector<std::size_t>{0}));
    EXPECT_EQ(sv::finite_condorcet(one), 0u);
    EXPECT_EQ(sv::gillies_uncovered(one), (std::vector<std::size_t>{0}));

    const auto cyc = three_cycle();
    EXPECT_TRUE(sv::finite_core(cyc).empty());
    EXPECT_FALSE(sv::finite_condorcet(cyc).has_value());
    EXPECT_EQ(sv::gillies_uncovered(cyc), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(oracle::uncovered(beats_table(cyc)), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(FiniteSolutions, SquareFiveByFive) {
    const auto s = fixtures::square();
    const auto [alts, zi] = sv::grid_with_point(s, 5, pt({0, 0}));
    const auto t = sv::build_tournament(s, alts);
    EXPECT_EQ(sv::finite_core(t), (std::vector<std::size_t>{zi}));
    EXPECT_FALSE(sv::finite_condorcet(t).has_value());
    // (0.5, 0.5) ties with the center 2:2 and is beaten by (0.5, 0) 3:1.
    const std::size_t diag = index_of(alts, pt({0.5, 0.5}));
    ASSERT_LT(diag, alts.size());
    EXPECT_FALSE(t.beats(zi, diag));
    EXPECT_TRUE(t.beats(index_of(alts, pt({0.5, 0})), diag));
}

TEST(FiniteSolutions, SquareUncoveredIsNotJustCenter) {
    const auto s = fixtures::square();
    auto [alts, zi] = sv::grid_with_point(s, 5, pt({0, 0}));
    alts.push_back(pt({0.25, 0.25}));
    const auto t = sv::build_tournament(s, alts);
    const auto unc = sv::gillies_uncovered(t);
    EXPECT_NE(unc, (std::vector<std::size_t>{zi}));
    EXPECT_EQ(unc, oracle::uncovered(beats_table(t)));
}

TEST(FiniteSolutions, CondorcetWinnerIsCoreAndUncoveredSet) {
    const auto s = fixtures::plott3();
    const auto [alts, zi] = sv::grid_with_point(s, 9, pt({0, 0}));
    const auto t = sv::build_tournament(s, alts);
    EXPECT_EQ(sv::finite_condorcet(t), zi);
    EXPECT_EQ(sv::finite_core(t), (std::vector<std::size_t>{zi}));
    EXPECT_EQ(sv::gillies_uncovered(t), (std::vector<std::size_t>{zi}));
}

TEST(Covering, MatchesOracleAndIsTransitiveIrreflexive) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        const std::size_t m = 1 + static_cast<std::size_t>(i % 60);
        const auto t = random_matrix(rng, m, 1 + static_cast<std::size_t>(i % 7));
        const auto table = beats_table(t);
        const auto unc = sv::gillies_uncovered(t);
        EXPECT_EQ(unc, oracle::uncovered(table));
        EXPECT_FALSE(unc.empty());
        for (std::size_t x = 0; x < m; ++x) {
            EXPECT_FALSE(sv::covers(t, x, x));
            for (std::size_t y = 0; y < m; ++y) {
                if (!sv::covers(t, x, y)) continue;
                for (std::size_t z = 0; z < m; ++z) {
                    if (sv::covers(t, y, z)) {
                        EXPECT_TRUE(sv::covers(t, x, z));
                    }
                }
            }
        }
        if (const auto c = sv::finite_condorcet(t)) {
            EXPECT_EQ(unc, (std::vector<std::size_t>{*c}));
            EXPECT_EQ(sv::finite_core(t), (std::vector<std::size_t>{*c}));
        }
    }
}

TEST(Covering, CondorcetMatricesExercised) {
    // A transitive order always has a Condorcet winner.
    const std::size_t m = 6;
    std::vector<int> pref(m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            pref[a * m + b] = 2;
            pref[b * m + a] = 1;
        }
    }
    const sv::TournamentMatrix t({}, 3, pref);
    EXPECT_EQ(sv::finite_condorcet(t), 0u);
    EXPECT_EQ(sv::gillies_uncovered(t), (std::vector<std::size_t>{0}));
}
