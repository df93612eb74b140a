#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "irvzones/election.hpp"
#include "irvzones/oracle.hpp"
#include "micro_irv.hpp"

using namespace irvz;

namespace {

Tree a10_tree() {
    return Tree::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}, {2, 4, 1, 3});
}

Tree random_tree(int n, std::mt19937_64& rng, bool scramble_ids = false) {
    std::vector<int> seq(std::max(0, n - 2));
    std::uniform_int_distribution<int> pick(1, n);
    for (auto& v : seq) v = pick(rng);
    std::vector<int> ids;
    if (scramble_ids) {
        ids.resize(n);
        for (int i = 0; i < n; ++i) ids[i] = i + 1;
        std::shuffle(ids.begin(), ids.end(), rng);
    }
    return Tree::from_edges(n, prufer_decode(seq), ids);
}

} // namespace

TEST_CASE("preference keys order by distance then id") {
    Tree t = a10_tree();
    TiePolicy p = TiePolicy::standard(4);
    // voter 2 ties between vertices 1 and 3; id(3)=1 beats id(1)=2
    CHECK(preference_key(t, 2, 3, p) < preference_key(t, 2, 1, p));
    // a voter co-located with a candidate ranks it first
    for (int c = 1; c <= 4; ++c)
        if (c != 2) CHECK(preference_key(t, 2, 2, p) < preference_key(t, 2, c, p));
    CHECK_THROWS_AS(preference_key(t, 0, 1, p), std::invalid_argument);
}

TEST_CASE("worked four-path elections") {
    Tree t = a10_tree();
    TiePolicy p = TiePolicy::standard(4);

    SUBCASE("two candidates, tie broken against the larger id") {
        ElectionTrace trace = run_irv(t, {2, 3}, p);
        REQUIRE(trace.rounds.size() == 1);
        CHECK(trace.rounds[0].tally ==
              std::vector<std::pair<int, int>>{{2, 2}, {3, 2}});
        CHECK(trace.rounds[0].eliminated == 2);
        CHECK(trace.winner == 3);
    }

    SUBCASE("full candidate set eliminates 2, then 4, then 1") {
        ElectionTrace trace = run_irv(t, {1, 2, 3, 4}, p);
        REQUIRE(trace.rounds.size() == 3);
        CHECK(trace.rounds[0].eliminated == 2);
        CHECK(trace.rounds[1].eliminated == 4);
        CHECK(trace.rounds[2].eliminated == 1);
        CHECK(trace.winner == 3);
    }

    SUBCASE("single candidate wins with zero rounds") {
        ElectionTrace trace = run_irv(t, {3}, p);
        CHECK(trace.rounds.empty());
        CHECK(trace.winner == 3);
    }

    SUBCASE("pairwise winners") {
        CHECK(pairwise_winner(t, 1, 2, p) == 2);
        CHECK(pairwise_winner(t, 1, 4, p) == 1);
        CHECK(pairwise_winner(t, 1, 3, p) == 3);
        CHECK(pairwise_winner(t, 2, 4, p) == 4);
        CHECK_THROWS_AS(pairwise_winner(t, 2, 2, p), std::invalid_argument);
    }
}

TEST_CASE("two-vertex tie goes to the smaller id") {
    Tree t = Tree::from_edges(2, {{1, 2}});
    CHECK(pairwise_winner(t, 1, 2, TiePolicy::standard(2)) == 1);
}

TEST_CASE("empty candidate set is rejected") {
    Tree t = a10_tree();
    CHECK_THROWS_AS(run_irv(t, {}, TiePolicy::standard(4)),
                    std::invalid_argument);
}

TEST_CASE("determinism, vote conservation, pairwise completeness") {
    std::mt19937_64 rng(21);
    TiePolicy p8 = TiePolicy::standard(8);
    for (int trial = 0; trial < 30; ++trial) {
        Tree t = random_tree(8, rng, trial % 2 == 0);
        std::vector<int> cands;
        for (int v = 1; v <= 8; ++v)
            if (rng() % 2) cands.push_back(v);
        if (cands.empty()) cands.push_back(1 + int(rng() % 8));

        ElectionTrace a = run_irv(t, cands, p8);
        ElectionTrace b = run_irv(t, cands, p8);
        CHECK(a.winner == b.winner);
        REQUIRE(a.rounds.size() == b.rounds.size());
        for (std::size_t r = 0; r < a.rounds.size(); ++r) {
            CHECK(a.rounds[r].tally == b.rounds[r].tally);
            CHECK(a.rounds[r].eliminated == b.rounds[r].eliminated);
            int total = 0;
            for (const auto& entry : a.rounds[r].tally) total += entry.second;
            CHECK(total == t.order());
        }

        for (int x = 1; x <= 8; ++x)
            for (int y = x + 1; y <= 8; ++y) {
                int w = pairwise_winner(t, x, y, p8);
                CHECK((w == x || w == y));
                CHECK(pairwise_winner(t, y, x, p8) == w);
            }
    }
}

TEST_CASE("restarting from any round reproduces the suffix") {
    std::mt19937_64 rng(22);
    TiePolicy p = TiePolicy::standard(9);
    for (int trial = 0; trial < 20; ++trial) {
        Tree t = random_tree(9, rng, true);
        std::vector<int> cands;
        for (int v = 1; v <= 9; ++v)
            if (rng() % 3) cands.push_back(v);
        if (cands.size() < 2) cands = {1, 2, 3};

        ElectionTrace full = run_irv(t, cands, p);
        std::vector<int> remaining = full.candidates;
        for (std::size_t r = 0; r < full.rounds.size(); ++r) {
            ElectionTrace suffix = run_irv(t, remaining, p);
            CHECK(suffix.winner == full.winner);
            for (std::size_t k = 0; k + r < full.rounds.size(); ++k) {
                CHECK(suffix.rounds[k].tally == full.rounds[r + k].tally);
                CHECK(suffix.rounds[k].eliminated == full.rounds[r + k].eliminated);
            }
            remaining.erase(std::find(remaining.begin(), remaining.end(),
                                      full.rounds[r].eliminated));
        }
    }
}

TEST_CASE("engine agrees with the independent micro implementation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 8);
        Tree t = random_tree(n, rng, trial % 3 == 0);
        std::vector<int> cands;
        for (int v = 1; v <= n; ++v)
            if (rng() % 2) cands.push_back(v);
        if (cands.empty()) cands.push_back(1 + int(rng() % n));
        int expected = micro_irv(n, t.edges(), t.tie_ids(), cands);
        CHECK(run_irv(t, cands, TiePolicy::standard(n)).winner == expected);
    }
}

TEST_CASE("policy presets") {
    Tree path9 = Tree::from_edges(
        9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    TiePolicy anticentral = TiePolicy::anticentral(path9);
    CHECK_FALSE(anticentral.is_standard());
    CHECK(TiePolicy::standard(9).is_standard());

    // the central vertex ranks last for voters and first for elimination
    for (int id = 1; id <= 9; ++id) {
        if (id != 5) {
            CHECK(anticentral.voter_rank[5] > anticentral.voter_rank[id]);
            CHECK(anticentral.elim_rank[5] < anticentral.elim_rank[id]);
        }
    }

    CHECK(policy_from_preset("prop2", path9).name == "prop2");
    CHECK(policy_from_preset("default", path9).is_standard());
    CHECK_THROWS_AS(policy_from_preset("nope", path9), std::invalid_argument);
}
