#ifndef IRVZONES_ORACLE_HPP
#define IRVZONES_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "irvzones/tree.hpp"

namespace irvz {

// Caps for the brute-force enumerations. Exceeding a cap raises BudgetError
// before any work starts; results are never silently truncated.
struct EnumerationBudget {
    int max_n = 16;
    std::uint64_t max_subsets = std::uint64_t(1) << 22;
};

// Exists K with designated in K, K \ {designated} within `allowed`, whose
// IRV winner differs from `designated`? Decided by checking every subset of
// `allowed` with the shared election engine under the standard tie policy.
bool brute_force_kill(const Tree& tree, int designated,
                      const std::vector<int>& allowed,
                      const EnumerationBudget& budget = {});

// Is `zone` an exclusion zone? Checks every nonempty candidate set that
// intersects the zone.
bool brute_force_zone(const Tree& tree, const std::vector<int>& zone,
                      const EnumerationBudget& budget = {});

// Labeled-tree edge list for a Prufer sequence (n = seq.size() + 2).
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq);
std::vector<int> prufer_encode(int n,
                               const std::vector<std::pair<int, int>>& edges);

// Iterates all n^(n-2) labeled trees on n vertices, each emitted once per
// requested ID permutation (the identity first, then fixed scrambles).
class SmallTreeEnumerator {
public:
    explicit SmallTreeEnumerator(int n, int id_permutations = 1);
    bool next(Tree& out);
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::vector<std::vector<int>> perms_;
    std::vector<int> seq_;
    std::size_t perm_index_ = 0;
    bool done_ = false;
    bool first_ = true;
    std::uint64_t total_;
    std::vector<std::pair<int, int>> edges_;
};

void for_each_labeled_tree(int n, int id_permutations,
                           const std::function<void(const Tree&)>& fn);

} // namespace irvz

#endif
