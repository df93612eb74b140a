#include "irvzones/zones.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "irvzones/election.hpp"
#include "util.hpp"

namespace irvz {

Tournament build_loss_graph(const Tree& tree) {
    int n = tree.order();
    TiePolicy policy = TiePolicy::standard(n);
    Tournament t;
    t.n = n;
    t.loses.assign(n + 1, std::vector<bool>(n + 1, false));
    for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
            int w = pairwise_winner(tree, x, y, policy);
            if (w == x)
                t.loses[y][x] = true;
            else
                t.loses[x][y] = true;
        }
    }
    return t;
}

std::vector<int> closure(const Tournament& t, const std::vector<int>& seed) {
    if (seed.empty()) throw std::invalid_argument("empty closure seed");
    std::vector<bool> reached(t.n + 1, false);
    std::vector<int> stack;
    for (int v : seed) {
        if (v < 1 || v > t.n)
            throw std::invalid_argument("seed vertex out of range");
        if (!reached[v]) {
            reached[v] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 1; y <= t.n; ++y) {
            if (t.loses[x][y] && !reached[y]) {
                reached[y] = true;
                stack.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (int v = 1; v <= t.n; ++v)
        if (reached[v]) out.push_back(v);
    return out;
}

ZoneReport verify_zone(const Tree& tree, std::vector<int> zone, int jobs) {
    int n = tree.order();
    if (zone.empty()) throw std::invalid_argument("empty zone");
    std::sort(zone.begin(), zone.end());
    zone.erase(std::unique(zone.begin(), zone.end()), zone.end());
    std::vector<bool> in_zone(n + 1, false);
    for (int v : zone) {
        if (v < 1 || v > n) throw std::invalid_argument("zone vertex out of range");
        in_zone[v] = true;
    }
    std::vector<int> complement;
    for (int v = 1; v <= n; ++v)
        if (!in_zone[v]) complement.push_back(v);

    ZoneReport report;
    report.zone = zone;
    report.per_vertex.resize(zone.size());
    parallel_for(zone.size(), jobs, [&](std::size_t i, int) {
        KillDp engine(tree);
        report.per_vertex[i] = {zone[i],
                                engine.solve({zone[i], complement}, true, 1)};
    });

    report.is_zone = true;
    for (const auto& [u, verdict] : report.per_vertex) {
        if (!verdict.killed) continue;
        report.is_zone = false;
        if (!report.refutation) {
            ZoneRefutation ref;
            ref.designated = u;
            ref.candidates = verdict.witness;
            ref.winner =
                run_irv(tree, ref.candidates, TiePolicy::standard(n)).winner;
            if (in_zone[ref.winner])
                throw std::logic_error("zone refutation replay stayed inside the zone");
            report.refutation = std::move(ref);
        }
    }
    return report;
}

namespace {

// Distinct singleton closures, each verified, ordered by (size, lex).
struct ClosureScan {
    std::vector<std::vector<int>> closures;
    std::vector<bool> verified;
};

ClosureScan scan_closures(const Tree& tree, int jobs) {
    Tournament t = build_loss_graph(tree);
    std::map<std::vector<int>, bool> distinct;
    for (int v = 1; v <= tree.order(); ++v) distinct[closure(t, {v})] = false;

    ClosureScan scan;
    for (const auto& [set, _] : distinct) scan.closures.push_back(set);
    std::sort(scan.closures.begin(), scan.closures.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    scan.verified.assign(scan.closures.size(), false);
    parallel_for(scan.closures.size(), jobs, [&](std::size_t i, int) {
        scan.verified[i] = verify_zone(tree, scan.closures[i], 1).is_zone;
    });
    return scan;
}

} // namespace

std::vector<int> min_zone(const Tree& tree, int jobs) {
    ClosureScan scan = scan_closures(tree, jobs);
    for (std::size_t i = 0; i < scan.closures.size(); ++i)
        if (scan.verified[i]) return scan.closures[i];
    throw std::logic_error("no verified zone; the full vertex set should always pass");
}

ZoneEnumeration enumerate_zones(const Tree& tree, int jobs) {
    ClosureScan scan = scan_closures(tree, jobs);
    ZoneEnumeration result;
    for (std::size_t i = 0; i < scan.closures.size(); ++i)
        if (scan.verified[i]) result.zones.push_back(scan.closures[i]);
    for (std::size_t i = 0; i < result.zones.size(); ++i) {
        for (std::size_t j = i + 1; j < result.zones.size(); ++j) {
            const auto& a = result.zones[i];
            const auto& b = result.zones[j];
            if (!std::includes(b.begin(), b.end(), a.begin(), a.end()))
                result.nesting_violations.emplace_back(a, b);
        }
    }
    return result;
}

} // namespace irvz
