#ifndef IRVZONES_TREE_HPP
#define IRVZONES_TREE_HPP

#include <string>
#include <utility>
#include <vector>

namespace irvz {

// Unweighted tree on vertices 1..n with a per-vertex tie-break ID (a
// permutation of 1..n, defaulting to the identity) and a dense all-pairs
// hop-distance matrix. Immutable after construction; safe to share across
// threads.
class Tree {
public:
    static Tree parse(const std::string& text);
    static Tree from_edges(int n, std::vector<std::pair<int, int>> edges,
                           std::vector<int> ids = {});

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int tie_id(int v) const { return id_[v]; }
    const std::vector<int>& tie_ids() const { return id_; }
    bool has_identity_ids() const;

    int distance(int a, int b) const { return dist_[a * (n_ + 1) + b]; }
    const int* distance_row(int a) const { return &dist_[a * (n_ + 1)]; }

    // Canonical text form: vertex count, edges sorted ascending, then an
    // "ids" line only when the permutation is not the identity.
    std::string to_text() const;

private:
    Tree() = default;
    void build_distances();

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;   // canonical (a < b), sorted
    std::vector<int> id_;                      // 1-based
    std::vector<std::vector<int>> adj_;        // 1-based, ascending
    std::vector<int> dist_;                    // (n+1) x (n+1), row-major
};

// Parent/subtree/Euler-interval data for one choice of root. Children are
// listed in ascending vertex order so traversals are reproducible.
struct RootedView {
    int root = 0;
    std::vector<int> parent;        // parent[root] == root
    std::vector<int> depth;
    std::vector<int> subtree_size;
    std::vector<int> tin, tout;
    std::vector<int> postorder;     // root last
    std::vector<std::vector<int>> children;

    // True iff v lies in the subtree rooted at x.
    bool in_subtree(int x, int v) const {
        return tin[x] <= tin[v] && tin[v] <= tout[x];
    }
};

RootedView root_at(const Tree& tree, int root);

} // namespace irvz

#endif
