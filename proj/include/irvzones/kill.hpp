#ifndef IRVZONES_KILL_HPP
#define IRVZONES_KILL_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "irvzones/tree.hpp"

namespace irvz {

// Can `designated` be forced to lose an election whose other candidates are
// drawn from `allowed`?
struct KillQuery {
    int designated = 0;
    std::vector<int> allowed;  // never contains designated
};

// Round-1 plurality summary of one subtree against a single outside
// representative. `top` is the best placed candidate seen from the subtree
// root (0 when none), `runner` the best placed candidate outside top's child
// subtree (0 when none). rest_min/rest_min_id track the minimum vote count
// among the remaining placed candidates and the largest tie-break ID among
// those minimizers; the empty pool is (n+1, 0). `outside` counts voters whose
// ballot leaves the subtree.
struct DpSummary {
    int top = 0;
    int top_votes = 0;
    int runner = 0;
    int runner_votes = 0;
    int rest_min = 0;
    int rest_min_id = 0;
    int outside = 0;

    bool operator==(const DpSummary&) const = default;
};

struct KillStats {
    std::uint64_t stored_summaries = 0;
    std::uint64_t cells = 0;
    double seconds = 0.0;
};

struct KillVerdict {
    bool killed = false;
    // When killed: the designated vertex plus an antichain of allowed
    // opponents whose joint election eliminates it in round 1.
    std::vector<int> witness;
};

// Bottom-up feasibility DP over (subtree, outside representative) cells.
// Standard tie policy only. The engine is reusable across queries on the
// same tree; tables stay valid until the next solve().
class KillDp {
public:
    explicit KillDp(const Tree& tree);
    ~KillDp();
    KillVerdict solve(const KillQuery& query, bool want_witness = true,
                      int jobs = 1);

    // Stored summaries for a cell, in emission order. x must be the current
    // query's designated vertex (paired with e == x) or a proper subtree root
    // with e outside that subtree.
    std::vector<DpSummary> table(int x, int e) const;
    const KillStats& last_stats() const { return stats_; }

    static constexpr int kMaxVertices = 500;

private:
    struct Impl;
    struct Scratch;
    const Tree& tree_;
    KillStats stats_;

    // Flat per-cell tuple storage; see kill.cpp for the packed layout.
    struct Cell {
        std::vector<std::uint64_t> keys;
        std::vector<std::uint8_t> kind;
        std::vector<std::uint32_t> prov_begin;
        std::vector<std::uint32_t> prov;
    };
    std::vector<Cell> cells_;
    std::vector<std::unique_ptr<Scratch>> scratch_;
    RootedView view_;
    std::vector<char> is_allowed_;
    std::vector<std::vector<int>> allowed_below_;
    int designated_ = 0;
    bool have_run_ = false;

    friend struct Impl;
};

KillVerdict kill_dp(const Tree& tree, const KillQuery& query,
                    KillStats* stats = nullptr, int jobs = 1);

} // namespace irvz

#endif
