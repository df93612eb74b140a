#include "irvzones/kill.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "util.hpp"

namespace irvz {

// Cell (x, e) holds the feasible round-1 summaries of subtree T_x when its
// voters choose among the candidates placed inside T_x plus the single
// outside vertex e. Summaries are packed 9 bits per field into a uint64 key:
//   [0)top [9)top_votes [18)runner [27)runner_votes
//   [36)rest_min [45)rest_min_id [54)outside
// Provenance kinds: 0 = nothing placed in T_x, 1 = candidate at x itself,
// 2 = merge (prov lists one chosen summary index per child).
//
// A merge fixes the pair (top, runner) seen from x and routes each child's
// summary through it: votes leaving a child subtree can only reach e, top,
// or runner, so a child contributes three vote deltas plus a min/max-id pool
// over its remaining placed candidates. The per-child options are folded
// left to right through a deduplicated feasibility layer.

namespace {

constexpr std::uint64_t kFieldMask = (1u << 9) - 1;

inline std::uint64_t pack7(int a, int b, int c, int d, int e, int f, int g) {
    return (std::uint64_t(a)) | (std::uint64_t(b) << 9) |
           (std::uint64_t(c) << 18) | (std::uint64_t(d) << 27) |
           (std::uint64_t(e) << 36) | (std::uint64_t(f) << 45) |
           (std::uint64_t(g) << 54);
}

inline DpSummary unpack7(std::uint64_t k) {
    DpSummary s;
    s.top = int(k & kFieldMask);
    s.top_votes = int((k >> 9) & kFieldMask);
    s.runner = int((k >> 18) & kFieldMask);
    s.runner_votes = int((k >> 27) & kFieldMask);
    s.rest_min = int((k >> 36) & kFieldMask);
    s.rest_min_id = int((k >> 45) & kFieldMask);
    s.outside = int((k >> 54) & kFieldMask);
    return s;
}

inline std::uint64_t pack_state(int v1, int v2, int a, int m, int mid) {
    return (std::uint64_t(v1)) | (std::uint64_t(v2) << 9) |
           (std::uint64_t(a) << 18) | (std::uint64_t(m) << 27) |
           (std::uint64_t(mid) << 36);
}

struct MinPool {
    int votes;  // n+1 when empty
    int id;     // 0 when empty

    void add(int v, int i) {
        if (v < votes) {
            votes = v;
            id = i;
        } else if (v == votes && i > id) {
            id = i;
        }
    }
};

struct Contribution {
    int to_top = 0;
    int to_runner = 0;
    int to_outside = 0;
    MinPool pool{0, 0};
    std::uint32_t summary_index = 0;
};

struct Layer {
    std::vector<std::uint64_t> keys;
    std::vector<std::uint32_t> prev;
    std::vector<std::uint32_t> pick;
};

} // namespace

struct KillDp::Scratch {
    KeyIndex cell_index;
    KeyIndex dedup;
    std::vector<Layer> layers;
    std::vector<Contribution> contribs;
    std::vector<std::uint32_t> prov_tmp;
};

struct KillDp::Impl {
    KillDp& dp;
    const Tree& tree;
    int n;
    int root;
    int inf;  // n + 1
    bool want_witness = true;

    explicit Impl(KillDp& d)
        : dp(d), tree(d.tree_), n(d.tree_.order()), root(d.designated_),
          inf(d.tree_.order() + 1) {}

    KillDp::Cell& cell(int x, int e) { return dp.cells_[x * (n + 1) + e]; }

    bool kappa_less(int base, int a, int b) const {
        int da = tree.distance(base, a), db = tree.distance(base, b);
        if (da != db) return da < db;
        return tree.tie_id(a) < tree.tie_id(b);
    }

    // Smaller of a, b under the preference key at base; b == 0 means absent.
    int kappa_min(int base, int a, int b) const {
        if (b == 0) return a;
        return kappa_less(base, a, b) ? a : b;
    }

    int child_containing(int x, int v) const {
        const auto& kids = dp.view_.children[x];
        // children appear in increasing tin order
        int lo = 0, hi = int(kids.size()) - 1, ans = 0;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            if (dp.view_.tin[kids[mid]] <= dp.view_.tin[v]) {
                ans = kids[mid];
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        return ans;
    }

    void prepare_allowed_lists() {
        dp.allowed_below_.assign(n + 1, {});
        for (int x : dp.view_.postorder) {
            auto& list = dp.allowed_below_[x];
            for (int y : dp.view_.children[x]) {
                if (dp.is_allowed_[y]) list.push_back(y);
                list.insert(list.end(), dp.allowed_below_[y].begin(),
                            dp.allowed_below_[y].end());
            }
        }
    }

    void emit(KillDp::Cell& c, Scratch& s, std::uint64_t key, std::uint8_t kind,
              const std::uint32_t* prov, std::size_t prov_len) {
        bool inserted = false;
        s.cell_index.insert(key, std::uint32_t(c.keys.size()), inserted);
        if (!inserted) return;
        c.keys.push_back(key);
        c.kind.push_back(kind);
        if (want_witness) {
            c.prov_begin.push_back(std::uint32_t(c.prov.size()));
            c.prov.insert(c.prov.end(), prov, prov + prov_len);
        }
    }

    // Gathers child y's usable summaries for the fixed pair (r1, r2) into
    // s.contribs. Returns false when y admits none (pair infeasible).
    bool child_contributions(int x, int y, int e, int r1, int r2,
                             int top_child, int runner_child, Scratch& s) {
        int ey = (y == top_child) ? kappa_min(y, e, r2) : kappa_min(y, e, r1);
        const KillDp::Cell& src = cell(y, ey);
        if (src.keys.empty())
            throw std::logic_error("kill dp: missing child table entry");
        enum { kTop, kRunner, kPlain } role =
            (y == top_child) ? kTop : (y == runner_child ? kRunner : kPlain);
        s.contribs.clear();
        s.dedup.reset();
        for (std::uint32_t i = 0; i < src.keys.size(); ++i) {
            DpSummary t = unpack7(src.keys[i]);
            if (role == kTop) {
                if (t.top != r1) continue;
            } else if (role == kRunner) {
                if (t.top != r2) continue;
            } else if (t.top != 0) {
                // candidates in a plain child must rank below the runner
                if (r2 == 0 || !kappa_less(x, r2, t.top)) continue;
            }
            Contribution c;
            c.pool = {inf, 0};
            c.summary_index = i;
            if (ey == e)
                c.to_outside += t.outside;
            else if (ey == r1)
                c.to_top += t.outside;
            else
                c.to_runner += t.outside;
            if (t.top != 0) {
                if (t.top == r1)
                    c.to_top += t.top_votes;
                else if (t.top == r2)
                    c.to_runner += t.top_votes;
                else
                    c.pool.add(t.top_votes, tree.tie_id(t.top));
            }
            if (t.runner != 0) {
                if (t.runner == r1)
                    c.to_top += t.runner_votes;
                else if (t.runner == r2)
                    c.to_runner += t.runner_votes;
                else
                    c.pool.add(t.runner_votes, tree.tie_id(t.runner));
            }
            if (t.rest_min <= n) c.pool.add(t.rest_min, t.rest_min_id);
            std::uint64_t key = pack_state(c.to_top, c.to_runner, c.to_outside,
                                           c.pool.votes, c.pool.id);
            bool inserted = false;
            s.dedup.insert(key, std::uint32_t(s.contribs.size()), inserted);
            if (inserted) s.contribs.push_back(c);
        }
        return !s.contribs.empty();
    }

    void merge_pair(int x, int e, int r1, int r2, KillDp::Cell& out,
                    Scratch& s) {
        const auto& kids = dp.view_.children[x];
        int top_child = child_containing(x, r1);
        int runner_child = r2 ? child_containing(x, r2) : 0;

        if (s.layers.size() < kids.size() + 1) s.layers.resize(kids.size() + 1);
        Layer& init = s.layers[0];
        init.keys.assign(1, pack_state(0, 0, 0, inf, 0));
        init.prev.assign(1, 0);
        init.pick.assign(1, 0);

        for (std::size_t ci = 0; ci < kids.size(); ++ci) {
            if (!child_contributions(x, kids[ci], e, r1, r2, top_child,
                                     runner_child, s))
                return;
            const Layer& prev = s.layers[ci];
            Layer& next = s.layers[ci + 1];
            next.keys.clear();
            next.prev.clear();
            next.pick.clear();
            s.dedup.reset();
            for (std::uint32_t si = 0; si < prev.keys.size(); ++si) {
                std::uint64_t sk = prev.keys[si];
                int v1 = int(sk & kFieldMask);
                int v2 = int((sk >> 9) & kFieldMask);
                int a = int((sk >> 18) & kFieldMask);
                MinPool pool0{int((sk >> 27) & kFieldMask),
                              int((sk >> 36) & kFieldMask)};
                for (const Contribution& c : s.contribs) {
                    MinPool pool = pool0;
                    pool.add(c.pool.votes, c.pool.id);
                    std::uint64_t nk =
                        pack_state(v1 + c.to_top, v2 + c.to_runner,
                                   a + c.to_outside, pool.votes, pool.id);
                    bool inserted = false;
                    s.dedup.insert(nk, std::uint32_t(next.keys.size()),
                                   inserted);
                    if (inserted) {
                        next.keys.push_back(nk);
                        next.prev.push_back(si);
                        next.pick.push_back(c.summary_index);
                    }
                }
            }
        }

        // Boundary voter x: votes for the better of e and r1.
        bool x_votes_outside = kappa_less(x, e, r1);
        const Layer& last = s.layers[kids.size()];
        for (std::uint32_t si = 0; si < last.keys.size(); ++si) {
            std::uint64_t sk = last.keys[si];
            int v1 = int(sk & kFieldMask);
            int v2 = int((sk >> 9) & kFieldMask);
            int a = int((sk >> 18) & kFieldMask);
            int m = int((sk >> 27) & kFieldMask);
            int mid = int((sk >> 36) & kFieldMask);
            if (x_votes_outside)
                ++a;
            else
                ++v1;
            std::uint64_t key = pack7(r1, v1, r2, v2, m, mid, a);
            if (want_witness) {
                s.prov_tmp.assign(kids.size(), 0);
                std::uint32_t cur = si;
                for (std::size_t ci = kids.size(); ci-- > 0;) {
                    s.prov_tmp[ci] = s.layers[ci + 1].pick[cur];
                    cur = s.layers[ci + 1].prev[cur];
                }
                emit(out, s, key, 2, s.prov_tmp.data(), s.prov_tmp.size());
            } else {
                emit(out, s, key, 2, nullptr, 0);
            }
        }
    }

    void compute_cell(int x, int e, Scratch& s) {
        KillDp::Cell& out = cell(x, e);
        out.keys.clear();
        out.kind.clear();
        out.prov_begin.clear();
        out.prov.clear();
        s.cell_index.reset();

        int size_x = dp.view_.subtree_size[x];
        emit(out, s, pack7(0, 0, 0, 0, inf, 0, size_x), 0, nullptr, 0);
        if (x != root && dp.is_allowed_[x])
            emit(out, s, pack7(x, size_x, 0, 0, inf, 0, 0), 1, nullptr, 0);

        const auto& below = dp.allowed_below_[x];
        for (int r1 : below) {
            int top_child = child_containing(x, r1);
            merge_pair(x, e, r1, 0, out, s);
            for (int r2 : below) {
                if (dp.view_.in_subtree(top_child, r2)) continue;
                if (!kappa_less(x, r1, r2)) continue;
                merge_pair(x, e, r1, r2, out, s);
            }
        }
    }

    KillVerdict decide() {
        KillVerdict verdict;
        const KillDp::Cell& rc = cell(root, root);
        int root_id = tree.tie_id(root);
        for (std::uint32_t i = 0; i < rc.keys.size(); ++i) {
            DpSummary t = unpack7(rc.keys[i]);
            if (t.top == 0) continue;
            MinPool opp{inf, 0};
            opp.add(t.top_votes, tree.tie_id(t.top));
            if (t.runner != 0) opp.add(t.runner_votes, tree.tie_id(t.runner));
            if (t.rest_min <= n) opp.add(t.rest_min, t.rest_min_id);
            int votes_u = t.outside;
            if (votes_u < opp.votes ||
                (votes_u == opp.votes && root_id > opp.id)) {
                verdict.killed = true;
                if (want_witness) {
                    verdict.witness.push_back(root);
                    collect_witness(root, root, i, verdict.witness);
                    std::sort(verdict.witness.begin(), verdict.witness.end());
                }
                return verdict;
            }
        }
        return verdict;
    }

    void collect_witness(int x, int e, std::uint32_t index,
                         std::vector<int>& out) {
        const KillDp::Cell& c = cell(x, e);
        if (c.kind[index] == 0) return;
        if (c.kind[index] == 1) {
            out.push_back(x);
            return;
        }
        DpSummary t = unpack7(c.keys[index]);
        int top_child = child_containing(x, t.top);
        const auto& kids = dp.view_.children[x];
        std::uint32_t base = c.prov_begin[index];
        for (std::size_t ci = 0; ci < kids.size(); ++ci) {
            int y = kids[ci];
            int ey = (y == top_child) ? kappa_min(y, e, t.runner)
                                      : kappa_min(y, e, t.top);
            collect_witness(y, ey, c.prov[base + ci], out);
        }
    }
};

KillDp::KillDp(const Tree& tree) : tree_(tree) {
    if (tree.order() > kMaxVertices)
        throw std::invalid_argument("kill dp supports at most " +
                                    std::to_string(kMaxVertices) + " vertices");
    cells_.resize((tree.order() + 1) * (tree.order() + 1));
}

KillDp::~KillDp() = default;

KillVerdict KillDp::solve(const KillQuery& query, bool want_witness, int jobs) {
    int n = tree_.order();
    if (query.designated < 1 || query.designated > n)
        throw std::invalid_argument("designated vertex out of range");
    is_allowed_.assign(n + 1, 0);
    for (int v : query.allowed) {
        if (v < 1 || v > n)
            throw std::invalid_argument("allowed vertex out of range");
        if (v == query.designated)
            throw std::invalid_argument("allowed set contains the designated vertex");
        if (is_allowed_[v])
            throw std::invalid_argument("duplicate vertex in allowed set");
        is_allowed_[v] = 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    designated_ = query.designated;
    view_ = root_at(tree_, designated_);
    for (auto& c : cells_) {
        c.keys.clear();
        c.kind.clear();
        c.prov_begin.clear();
        c.prov.clear();
    }

    Impl impl(*this);
    impl.want_witness = want_witness;
    impl.prepare_allowed_lists();

    int workers = jobs > 1 ? jobs : 1;
    if (static_cast<int>(scratch_.size()) < workers) {
        scratch_.reserve(workers);
        while (static_cast<int>(scratch_.size()) < workers)
            scratch_.push_back(std::make_unique<Scratch>());
    }
    std::vector<int> outside;
    for (int x : view_.postorder) {
        if (x == designated_) break;  // root is last in postorder
        outside.clear();
        for (int e = 1; e <= n; ++e)
            if (!view_.in_subtree(x, e)) outside.push_back(e);
        parallel_for(outside.size(), jobs, [&](std::size_t i, int w) {
            impl.compute_cell(x, outside[i], *scratch_[w]);
        });
    }
    impl.compute_cell(designated_, designated_, *scratch_[0]);

    stats_ = KillStats{};
    for (const auto& c : cells_) stats_.stored_summaries += c.keys.size();
    stats_.cells = 1;
    for (int x : view_.postorder)
        if (x != designated_)
            stats_.cells += std::uint64_t(n - view_.subtree_size[x]);
    have_run_ = true;

    KillVerdict verdict = impl.decide();
    stats_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return verdict;
}

std::vector<DpSummary> KillDp::table(int x, int e) const {
    if (!have_run_) throw std::logic_error("kill dp: no query solved yet");
    int n = tree_.order();
    if (x < 1 || x > n || e < 1 || e > n)
        throw std::invalid_argument("vertex out of range");
    if (x == designated_) {
        if (e != designated_)
            throw std::invalid_argument(
                "root table is indexed by the designated vertex only");
    } else if (view_.in_subtree(x, e)) {
        throw std::invalid_argument("outside representative lies inside the subtree");
    }
    const Cell& c = cells_[x * (n + 1) + e];
    std::vector<DpSummary> out;
    out.reserve(c.keys.size());
    for (auto k : c.keys) out.push_back(unpack7(k));
    return out;
}

KillVerdict kill_dp(const Tree& tree, const KillQuery& query, KillStats* stats,
                    int jobs) {
    KillDp engine(tree);
    KillVerdict v = engine.solve(query, true, jobs);
    if (stats) *stats = engine.last_stats();
    return v;
}

} // namespace irvz
