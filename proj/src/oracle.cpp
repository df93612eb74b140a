#include "irvzones/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "irvzones/election.hpp"
#include "irvzones/errors.hpp"

namespace irvz {

bool brute_force_kill(const Tree& tree, int designated,
                      const std::vector<int>& allowed,
                      const EnumerationBudget& budget) {
    int n = tree.order();
    if (designated < 1 || designated > n)
        throw std::invalid_argument("designated vertex out of range");
    for (int v : allowed) {
        if (v < 1 || v > n) throw std::invalid_argument("allowed vertex out of range");
        if (v == designated)
            throw std::invalid_argument("allowed set contains the designated vertex");
    }
    if (allowed.size() >= 63 ||
        (std::uint64_t(1) << allowed.size()) > budget.max_subsets)
        throw BudgetError("2^" + std::to_string(allowed.size()) +
                          " candidate sets exceed the enumeration budget");

    TiePolicy policy = TiePolicy::standard(n);
    std::vector<int> candidates;
    std::uint64_t subsets = std::uint64_t(1) << allowed.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        candidates.clear();
        candidates.push_back(designated);
        for (size_t i = 0; i < allowed.size(); ++i)
            if (mask >> i & 1) candidates.push_back(allowed[i]);
        if (run_irv(tree, candidates, policy).winner != designated) return true;
    }
    return false;
}

bool brute_force_zone(const Tree& tree, const std::vector<int>& zone,
                      const EnumerationBudget& budget) {
    int n = tree.order();
    if (zone.empty()) throw std::invalid_argument("empty zone");
    if (n > budget.max_n ||
        (std::uint64_t(1) << n) > budget.max_subsets)
        throw BudgetError("2^" + std::to_string(n) +
                          " candidate sets exceed the enumeration budget");
    std::vector<bool> in_zone(n + 1, false);
    for (int v : zone) {
        if (v < 1 || v > n) throw std::invalid_argument("zone vertex out of range");
        in_zone[v] = true;
    }

    TiePolicy policy = TiePolicy::standard(n);
    std::vector<int> candidates;
    std::uint64_t subsets = std::uint64_t(1) << n;
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        candidates.clear();
        bool touches = false;
        for (int v = 1; v <= n; ++v) {
            if (mask >> (v - 1) & 1) {
                candidates.push_back(v);
                touches = touches || in_zone[v];
            }
        }
        if (!touches) continue;
        if (!in_zone[run_irv(tree, candidates, policy).winner]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n + 1, 1);
    for (int v : seq) {
        if (v < 1 || v > n) throw std::invalid_argument("prufer value out of range");
        ++degree[v];
    }
    std::vector<bool> used(n + 1, false);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v : seq) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (!used[leaf] && degree[leaf] == 1) {
                edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
                used[leaf] = true;
                --degree[v];
                break;
            }
        }
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v) {
        if (!used[v] && degree[v] == 1) {
            if (!a)
                a = v;
            else
                b = v;
        }
    }
    edges.emplace_back(a, b);
    return edges;
}

std::vector<int> prufer_encode(int n,
                               const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    std::vector<int> degree(n + 1, 0);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++degree[a];
        ++degree[b];
    }
    std::vector<bool> removed(n + 1, false);
    std::vector<int> seq;
    seq.reserve(std::max(0, n - 2));
    for (int step = 0; step < n - 2; ++step) {
        int leaf = 0;
        for (int v = 1; v <= n; ++v) {
            if (!removed[v] && degree[v] == 1) {
                leaf = v;
                break;
            }
        }
        removed[leaf] = true;
        for (int w : adj[leaf]) {
            if (!removed[w]) {
                seq.push_back(w);
                --degree[w];
            }
        }
    }
    return seq;
}

namespace {

std::vector<std::vector<int>> make_id_permutations(int n, int count) {
    std::vector<std::vector<int>> perms;
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    perms.push_back(identity);
    std::mt19937_64 rng(0x5eedu + n);
    for (int k = 1; k < count; ++k) {
        std::vector<int> p = identity;
        std::shuffle(p.begin(), p.end(), rng);
        perms.push_back(std::move(p));
    }
    return perms;
}

std::uint64_t power(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace

SmallTreeEnumerator::SmallTreeEnumerator(int n, int id_permutations) : n_(n) {
    if (n < 1 || n > 9)
        throw BudgetError("labeled-tree enumeration supports 1 <= n <= 9");
    if (id_permutations < 1) throw std::invalid_argument("need at least one permutation");
    perms_ = make_id_permutations(n, id_permutations);
    seq_.assign(std::max(0, n - 2), 1);
    total_ = (n <= 2 ? 1 : power(n, n - 2)) * perms_.size();
}

bool SmallTreeEnumerator::next(Tree& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        edges_ = prufer_decode(seq_);
    } else if (++perm_index_ >= perms_.size()) {
        perm_index_ = 0;
        // Odometer over Prufer sequences.
        size_t pos = 0;
        for (; pos < seq_.size(); ++pos) {
            if (seq_[pos] < n_) {
                ++seq_[pos];
                break;
            }
            seq_[pos] = 1;
        }
        if (pos == seq_.size()) {
            done_ = true;
            return false;
        }
        edges_ = prufer_decode(seq_);
    }
    if (n_ == 1) {
        out = Tree::from_edges(1, {}, perms_[perm_index_]);
        if (perm_index_ + 1 >= perms_.size()) done_ = true;
        return true;
    }
    out = Tree::from_edges(n_, edges_, perms_[perm_index_]);
    return true;
}

void for_each_labeled_tree(int n, int id_permutations,
                           const std::function<void(const Tree&)>& fn) {
    SmallTreeEnumerator en(n, id_permutations);
    Tree t = Tree::from_edges(1, {});
    while (en.next(t)) fn(t);
}

} // namespace irvz
