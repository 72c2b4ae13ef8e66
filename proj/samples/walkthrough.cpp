// Walks through the square instance: dominance counts, the core test at the
// center, the line witness that beats the center, and the finite tournament.
// Pass a path to another instance file to run the same steps on it.

#include <iostream>
#include <string>

#include "spatial_vote/spatial_vote.hpp"

namespace sv = spatial_vote;

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : SPATIAL_VOTE_SAMPLES_DIR "/square.json";
    try {
        const auto situation = sv::load_instance(path);
        const sv::Point z = situation.space().center();
        std::cout << "voters: " << situation.size() << " (" << sv::to_string(situation.parity())
                  << "), dimension " << situation.dimension() << "\n";

        const auto core = sv::is_in_core(situation, z);
        std::cout << "center in core: " << (core.in_core ? "yes" : "no") << "\n";

        const auto verdict = sv::is_condorcet_winner(situation, z, {64, 2000}, 7);
        std::cout << "Condorcet status of center: " << sv::to_string(verdict.status) << "\n";
        if (verdict.witness) {
            const auto d = sv::dominates(situation, z, *verdict.witness);
            std::cout << "  witness " << sv::point_to_json(*verdict.witness).dump() << ": center "
                      << d.prefer_x_count << " vs witness " << d.prefer_y_count << "\n";
        }

        if (situation.dimension() <= 2) {
            const auto [alts, z_index] = sv::grid_with_point(situation, 9, z);
            const auto t = sv::build_tournament(situation, alts);
            std::cout << "9x9 tournament: finite core size " << sv::finite_core(t).size()
                      << ", uncovered set size " << sv::gillies_uncovered(t).size()
                      << ", center is alternative " << z_index << "\n";
        }
    } catch (const sv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
