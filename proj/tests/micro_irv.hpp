#ifndef IRVZONES_TESTS_MICRO_IRV_HPP
#define IRVZONES_TESTS_MICRO_IRV_HPP

// Tiny self-contained runoff implementation used only to cross-check the
// real engine. Shares no code with it: its own adjacency, its own BFS, its
// own round loop. Standard tie rules only (closer first, then smaller ID;
// the largest ID among last-place candidates is eliminated).

#include <queue>
#include <utility>
#include <vector>

inline int micro_irv(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<int>& ids, std::vector<int> cands) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::vector<int>> dist(n + 1, std::vector<int>(n + 1, -1));
    for (int s = 1; s <= n; ++s) {
        std::queue<int> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    while (cands.size() > 1) {
        std::vector<int> score(cands.size(), 0);
        for (int v = 1; v <= n; ++v) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < cands.size(); ++i) {
                int db = dist[v][cands[best]], di = dist[v][cands[i]];
                if (di < db || (di == db && ids[cands[i]] < ids[cands[best]]))
                    best = i;
            }
            ++score[best];
        }
        std::size_t out = 0;
        for (std::size_t i = 1; i < cands.size(); ++i) {
            if (score[i] < score[out] ||
                (score[i] == score[out] && ids[cands[i]] > ids[cands[out]]))
                out = i;
        }
        cands.erase(cands.begin() + out);
    }
    return cands[0];
}

#endif
