#ifndef IRVZONES_ELECTION_HPP
#define IRVZONES_ELECTION_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "irvzones/tree.hpp"

namespace irvz {

// The two deterministic tie rules. voter_rank orders candidates for a voter
// when distances tie (smaller rank preferred); elim_rank orders last-place
// candidates for elimination (smaller rank eliminated first). Both are
// indexed by tie-break ID. The standard policy prefers smaller IDs on voter
// ties and eliminates the largest ID among last-place ties.
struct TiePolicy {
    std::string name;
    std::vector<int> voter_rank;  // [id] -> rank
    std::vector<int> elim_rank;   // [id] -> rank

    static TiePolicy standard(int n);

    // Priority built from social cost: voters break distance ties toward the
    // candidate with the larger distance sum (the less central one), and
    // elimination ties remove the candidate with the smaller distance sum
    // first. This realizes the tie conventions used by the path and bistar
    // lower-bound instances ("prop2" / "prop3" presets).
    static TiePolicy anticentral(const Tree& tree);

    bool is_standard() const;
};

// Named presets: "default", "prop2", "prop3".
TiePolicy policy_from_preset(const std::string& preset, const Tree& tree);
const std::vector<std::string>& policy_preset_names();

struct PreferenceKey {
    int distance;
    int rank;
    auto operator<=>(const PreferenceKey&) const = default;
};

PreferenceKey preference_key(const Tree& tree, int voter, int candidate,
                             const TiePolicy& policy);

struct ElectionRound {
    std::vector<std::pair<int, int>> tally;  // (candidate, votes), ascending
    int eliminated;
};

struct ElectionTrace {
    std::vector<int> candidates;  // ascending
    std::vector<ElectionRound> rounds;
    int winner;
};

ElectionTrace run_irv(const Tree& tree, std::vector<int> candidates,
                      const TiePolicy& policy);

int pairwise_winner(const Tree& tree, int x, int y, const TiePolicy& policy);

} // namespace irvz

#endif
