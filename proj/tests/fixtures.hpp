// Shared instances for the unit tests.

#ifndef SPATIAL_VOTE_TESTS_FIXTURES_HPP
#define SPATIAL_VOTE_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "oracles.hpp"
#include "spatial_vote/spatial_vote.hpp"

namespace fixtures {

namespace sv = spatial_vote;

inline sv::Point pt(std::initializer_list<double> xs) {
    sv::Point p(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index a = 0;
    for (double x : xs) p[a++] = x;
    return p;
}

inline sv::VotingSituation from_ideals(const std::vector<sv::Point>& ideals,
                                       const sv::PolicySpace& space) {
    std::vector<sv::Voter> voters;
    for (const auto& p : ideals) voters.emplace_back(p);
    return sv::VotingSituation(space, std::move(voters));
}

/// Voters at (+-1, 0) and (0, +-1) in [-1, 1]^2.
inline sv::VotingSituation square() {
    return from_ideals({pt({1, 0}), pt({-1, 0}), pt({0, 1}), pt({0, -1})}, sv::PolicySpace::unit_box(2));
}

/// One voter at the origin and the pair (+-1, 0) in [-1, 1]^2.
inline sv::VotingSituation plott3() {
    return from_ideals({pt({0, 0}), pt({1, 0}), pt({-1, 0})}, sv::PolicySpace::unit_box(2));
}

inline std::vector<oracle::RawVoter> raw(const sv::VotingSituation& s) {
    std::vector<oracle::RawVoter> out;
    for (const auto& v : s.voters()) out.push_back({v.ideal(), v.metric()});
    return out;
}

}  // namespace fixtures

#endif  // SPATIAL_VOTE_TESTS_FIXTURES_HPP
