#include "irvzones/election.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace irvz {

TiePolicy TiePolicy::standard(int n) {
    TiePolicy p;
    p.name = "default";
    p.voter_rank.resize(n + 1);
    std::iota(p.voter_rank.begin(), p.voter_rank.end(), 0);
    p.elim_rank.resize(n + 1);
    for (int id = 1; id <= n; ++id) p.elim_rank[id] = n - id;
    return p;
}

TiePolicy TiePolicy::anticentral(const Tree& tree) {
    int n = tree.order();
    std::vector<long long> cost(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const int* row = tree.distance_row(v);
        for (int w = 1; w <= n; ++w) cost[v] += row[w];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);

    TiePolicy p;
    p.name = "anticentral";
    p.voter_rank.assign(n + 1, 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cost[a] != cost[b]) return cost[a] > cost[b];
        return tree.tie_id(a) < tree.tie_id(b);
    });
    for (int r = 0; r < n; ++r) p.voter_rank[tree.tie_id(order[r])] = r;

    p.elim_rank.assign(n + 1, 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cost[a] != cost[b]) return cost[a] < cost[b];
        return tree.tie_id(a) > tree.tie_id(b);
    });
    for (int r = 0; r < n; ++r) p.elim_rank[tree.tie_id(order[r])] = r;
    return p;
}

bool TiePolicy::is_standard() const {
    int n = static_cast<int>(voter_rank.size()) - 1;
    for (int id = 1; id <= n; ++id)
        if (voter_rank[id] != id || elim_rank[id] != n - id) return false;
    return true;
}

TiePolicy policy_from_preset(const std::string& preset, const Tree& tree) {
    if (preset == "default" || preset.empty())
        return TiePolicy::standard(tree.order());
    if (preset == "prop2" || preset == "prop3") {
        TiePolicy p = TiePolicy::anticentral(tree);
        p.name = preset;
        return p;
    }
    throw std::invalid_argument("unknown policy preset '" + preset + "'");
}

const std::vector<std::string>& policy_preset_names() {
    static const std::vector<std::string> names = {"default", "prop2", "prop3"};
    return names;
}

PreferenceKey preference_key(const Tree& tree, int voter, int candidate,
                             const TiePolicy& policy) {
    int n = tree.order();
    if (voter < 1 || voter > n || candidate < 1 || candidate > n)
        throw std::invalid_argument("vertex out of range");
    return {tree.distance(voter, candidate),
            policy.voter_rank[tree.tie_id(candidate)]};
}

namespace {

std::vector<int> checked_candidates(const Tree& tree, std::vector<int> cands) {
    if (cands.empty()) throw std::invalid_argument("empty candidate set");
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (int c : cands)
        if (c < 1 || c > tree.order())
            throw std::invalid_argument("candidate " + std::to_string(c) +
                                        " out of range");
    return cands;
}

} // namespace

ElectionTrace run_irv(const Tree& tree, std::vector<int> candidates,
                      const TiePolicy& policy) {
    ElectionTrace trace;
    trace.candidates = checked_candidates(tree, std::move(candidates));
    int n = tree.order();
    if (static_cast<int>(policy.voter_rank.size()) != n + 1 ||
        static_cast<int>(policy.elim_rank.size()) != n + 1)
        throw std::invalid_argument("tie policy was built for a different tree size");

    std::vector<int> remaining = trace.candidates;
    std::vector<int> votes(n + 1, 0);
    while (remaining.size() > 1) {
        for (int c : remaining) votes[c] = 0;
        for (int v = 1; v <= n; ++v) {
            const int* row = tree.distance_row(v);
            int best = remaining[0];
            int best_d = row[best];
            int best_r = policy.voter_rank[tree.tie_id(best)];
            for (size_t i = 1; i < remaining.size(); ++i) {
                int c = remaining[i];
                int d = row[c];
                int r = policy.voter_rank[tree.tie_id(c)];
                if (d < best_d || (d == best_d && r < best_r)) {
                    best = c;
                    best_d = d;
                    best_r = r;
                }
            }
            ++votes[best];
        }

        ElectionRound round;
        round.tally.reserve(remaining.size());
        int loser = remaining[0];
        for (int c : remaining) {
            round.tally.emplace_back(c, votes[c]);
            if (votes[c] < votes[loser] ||
                (votes[c] == votes[loser] &&
                 policy.elim_rank[tree.tie_id(c)] <
                     policy.elim_rank[tree.tie_id(loser)]))
                loser = c;
        }
        round.eliminated = loser;
        trace.rounds.push_back(std::move(round));
        remaining.erase(std::find(remaining.begin(), remaining.end(), loser));
    }
    trace.winner = remaining[0];
    return trace;
}

int pairwise_winner(const Tree& tree, int x, int y, const TiePolicy& policy) {
    if (x == y) throw std::invalid_argument("pairwise election needs distinct candidates");
    return run_irv(tree, {x, y}, policy).winner;
}

} // namespace irvz
