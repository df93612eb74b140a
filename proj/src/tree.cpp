#include "irvzones/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "irvzones/errors.hpp"

namespace irvz {

namespace {

// Union-find over 1..n, path halving.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

std::vector<std::string> significant_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

} // namespace

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges,
                      std::vector<int> ids) {
    if (n < 1) throw ParseError("invalid vertex count " + std::to_string(n));
    if (n > 4096)
        throw ParseError("vertex count " + std::to_string(n) +
                         " above the supported limit of 4096");
    if (static_cast<int>(edges.size()) != n - 1)
        throw ParseError("expected " + std::to_string(n - 1) + " edges, got " +
                         std::to_string(edges.size()));

    Tree t;
    t.n_ = n;
    t.adj_.assign(n + 1, {});
    DisjointSet ds(n);
    for (auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("vertex out of range in edge " + std::to_string(a) +
                             " " + std::to_string(b));
        if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (!ds.unite(a, b))
            throw ParseError("cycle introduced by edge " + std::to_string(a) +
                             " " + std::to_string(b));
        t.adj_[a].push_back(b);
        t.adj_[b].push_back(a);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw ParseError("duplicate edge " + std::to_string(edges[i].first) +
                             " " + std::to_string(edges[i].second));
    for (int v = 2; v <= n; ++v)
        if (ds.find(v) != ds.find(1)) throw ParseError("graph is disconnected");
    t.edges_ = std::move(edges);
    for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());

    if (ids.empty()) {
        ids.resize(n + 1);
        std::iota(ids.begin(), ids.end(), 0);
    } else {
        if (static_cast<int>(ids.size()) == n) ids.insert(ids.begin(), 0);
        if (static_cast<int>(ids.size()) != n + 1)
            throw ParseError("ids line must list exactly " + std::to_string(n) +
                             " values");
        std::vector<bool> seen(n + 1, false);
        for (int v = 1; v <= n; ++v) {
            int id = ids[v];
            if (id < 1 || id > n || seen[id])
                throw ParseError("ids line is not a permutation of 1.." +
                                 std::to_string(n));
            seen[id] = true;
        }
    }
    t.id_ = std::move(ids);
    t.build_distances();
    return t;
}

Tree Tree::parse(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty tree file");

    auto parse_int = [](const std::string& tok, const std::string& what) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("malformed " + what + ": '" + tok + "'");
        }
        if (pos != tok.size())
            throw ParseError("malformed " + what + ": '" + tok + "'");
        return value;
    };

    std::istringstream head(lines[0]);
    std::string tok, extra;
    if (!(head >> tok) || (head >> extra))
        throw ParseError("first line must be the vertex count");
    int n = parse_int(tok, "vertex count");
    if (n < 1) throw ParseError("invalid vertex count " + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    std::vector<int> ids;
    size_t li = 1;
    for (; li < lines.size(); ++li) {
        std::istringstream in(lines[li]);
        std::string first;
        in >> first;
        if (first == "ids") {
            ids.reserve(n);
            std::string t2;
            while (in >> t2) ids.push_back(parse_int(t2, "id"));
            ++li;
            break;
        }
        std::string second;
        if (!(in >> second) || (in >> extra))
            throw ParseError("malformed line: '" + lines[li] + "'");
        edges.emplace_back(parse_int(first, "edge endpoint"),
                           parse_int(second, "edge endpoint"));
    }
    if (li < lines.size())
        throw ParseError("unexpected trailing content: '" + lines[li] + "'");
    return from_edges(n, std::move(edges), std::move(ids));
}

void Tree::build_distances() {
    dist_.assign((n_ + 1) * (n_ + 1), -1);
    std::deque<int> queue;
    for (int s = 1; s <= n_; ++s) {
        int* row = &dist_[s * (n_ + 1)];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj_[v]) {
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

bool Tree::has_identity_ids() const {
    for (int v = 1; v <= n_; ++v)
        if (id_[v] != v) return false;
    return true;
}

std::string Tree::to_text() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (const auto& [a, b] : edges_) out << a << " " << b << "\n";
    if (!has_identity_ids()) {
        out << "ids";
        for (int v = 1; v <= n_; ++v) out << " " << id_[v];
        out << "\n";
    }
    return out.str();
}

RootedView root_at(const Tree& tree, int root) {
    int n = tree.order();
    if (root < 1 || root > n)
        throw std::invalid_argument("root vertex " + std::to_string(root) +
                                    " out of range");
    RootedView rv;
    rv.root = root;
    rv.parent.assign(n + 1, 0);
    rv.depth.assign(n + 1, 0);
    rv.subtree_size.assign(n + 1, 1);
    rv.tin.assign(n + 1, 0);
    rv.tout.assign(n + 1, 0);
    rv.children.assign(n + 1, {});
    rv.parent[root] = root;

    // Iterative DFS; children visited in ascending order (adjacency is sorted).
    std::vector<std::pair<int, size_t>> stack;
    stack.reserve(n);
    stack.emplace_back(root, 0);
    int timer = 0;
    rv.tin[root] = timer++;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nbrs = tree.neighbors(v);
        if (idx < nbrs.size()) {
            int w = nbrs[idx++];
            if (w == rv.parent[v]) continue;
            rv.parent[w] = v;
            rv.depth[w] = rv.depth[v] + 1;
            rv.children[v].push_back(w);
            rv.tin[w] = timer++;
            stack.emplace_back(w, 0);
        } else {
            rv.tout[v] = timer - 1;
            rv.postorder.push_back(v);
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack[stack.size() - 1].first;
                rv.subtree_size[p] += rv.subtree_size[v];
            }
        }
    }
    return rv;
}

} // namespace irvz
