// Umbrella header.

#ifndef SPATIAL_VOTE_SPATIAL_VOTE_HPP
#define SPATIAL_VOTE_SPATIAL_VOTE_HPP

#include "spatial_vote/types.hpp"
#include "spatial_vote/model.hpp"
#include "spatial_vote/geometry.hpp"
#include "spatial_vote/line_analysis.hpp"
#include "spatial_vote/dominance.hpp"
#include "spatial_vote/condorcet.hpp"
#include "spatial_vote/tournament.hpp"
#include "spatial_vote/generators.hpp"
#include "spatial_vote/io.hpp"
#include "spatial_vote/report.hpp"
#include "spatial_vote/experiment.hpp"
#include "spatial_vote/svg.hpp"

#endif  // SPATIAL_VOTE_SPATIAL_VOTE_HPP
