#ifndef IRVZONES_ZONES_HPP
#define IRVZONES_ZONES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "irvzones/kill.hpp"
#include "irvzones/tree.hpp"

namespace irvz {

// Directed graph with edge x -> y when x loses the two-candidate election
// {x, y}. Deterministic tie-breaking makes it a tournament: exactly one
// direction per pair.
struct Tournament {
    int n = 0;
    std::vector<std::vector<bool>> loses;  // loses[x][y]: edge x -> y

    bool edge(int x, int y) const { return loses[x][y]; }
};

// All zone computations run under the standard tie policy; the round-1
// summaries inside the kill DP encode its tie rules.
Tournament build_loss_graph(const Tree& tree);

// Vertices reachable from the seed along loss edges. Contains the seed.
std::vector<int> closure(const Tournament& t, const std::vector<int>& seed);

struct ZoneRefutation {
    int designated = 0;           // zone member that can be forced to lose
    std::vector<int> candidates;  // candidate set that defeats it
    int winner = 0;               // resulting winner, outside the zone
};

struct ZoneReport {
    std::vector<int> zone;
    bool is_zone = false;
    std::vector<std::pair<int, KillVerdict>> per_vertex;
    std::optional<ZoneRefutation> refutation;
};

// Zone test: S is a zone iff no member can be forced to lose using only
// opponents outside S. Refutations are replayed through the election engine
// before being reported.
ZoneReport verify_zone(const Tree& tree, std::vector<int> zone, int jobs = 1);

// Smallest verified zone; ties broken by lexicographically smallest vertex
// set. The full vertex set always qualifies, so this never fails.
std::vector<int> min_zone(const Tree& tree, int jobs = 1);

struct ZoneEnumeration {
    std::vector<std::vector<int>> zones;  // ascending size
    // Pairs of zones where neither contains the other. Expected empty;
    // reported rather than asserted.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> nesting_violations;
};

// Every nonempty zone is the closure of a single vertex, so checking the n
// singleton closures enumerates them all.
ZoneEnumeration enumerate_zones(const Tree& tree, int jobs = 1);

} // namespace irvz

#endif
