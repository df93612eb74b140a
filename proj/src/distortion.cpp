#include "irvzones/distortion.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "irvzones/errors.hpp"
#include "util.hpp"

namespace irvz {

Ratio Ratio::of(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
    long long g = std::gcd(num, den);
    return Ratio{num / g, den / g};
}

std::string Ratio::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

long long social_cost(const Tree& tree, int candidate) {
    int n = tree.order();
    if (candidate < 1 || candidate > n)
        throw std::invalid_argument("candidate out of range");
    const int* row = tree.distance_row(candidate);
    long long total = 0;
    for (int v = 1; v <= n; ++v) total += row[v];
    return total;
}

std::pair<int, long long> optimal_candidate(const Tree& tree,
                                            const std::vector<int>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("empty candidate set");
    int best = 0;
    long long best_cost = 0;
    for (int c : candidates) {
        long long cost = social_cost(tree, c);
        if (best == 0 || cost < best_cost || (cost == best_cost && c < best)) {
            best = c;
            best_cost = cost;
        }
    }
    return {best, best_cost};
}

namespace {

class VectorSource : public ConfigSource {
public:
    explicit VectorSource(std::vector<std::vector<int>> configs)
        : configs_(std::move(configs)) {}
    std::optional<std::vector<int>> next() override {
        if (index_ >= configs_.size()) return std::nullopt;
        return configs_[index_++];
    }

private:
    std::vector<std::vector<int>> configs_;
    std::size_t index_ = 0;
};

// All nonempty subsets of 1..n with at most max_size elements, in mask order.
class SubsetSource : public ConfigSource {
public:
    SubsetSource(int n, int max_size) : n_(n), max_size_(max_size) {}
    std::optional<std::vector<int>> next() override {
        std::uint64_t limit = std::uint64_t(1) << n_;
        while (++mask_ < limit) {
            if (std::popcount(mask_) > max_size_) continue;
            std::vector<int> config;
            for (int v = 1; v <= n_; ++v)
                if (mask_ >> (v - 1) & 1) config.push_back(v);
            return config;
        }
        return std::nullopt;
    }

private:
    int n_;
    int max_size_;
    std::uint64_t mask_ = 0;
};

std::uint64_t count_subsets(int n, int max_size) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (int k = 1; k <= std::min(n, max_size); ++k) {
        binom = binom * std::uint64_t(n - k + 1) / std::uint64_t(k);
        total += binom;
        if (total > (std::uint64_t(1) << 40)) break;
    }
    return total;
}

} // namespace

std::unique_ptr<ConfigSource> make_config_source(const std::string& spec,
                                                 int n, std::uint64_t seed,
                                                 const EnumerationBudget& budget) {
    auto check_budget = [&](std::uint64_t count) {
        if (count > budget.max_subsets)
            throw BudgetError("configuration spec enumerates " +
                              std::to_string(count) +
                              " sets, above the budget of " +
                              std::to_string(budget.max_subsets));
    };
    if (spec == "all") {
        if (n >= 63) throw BudgetError("'all' needs fewer than 63 vertices");
        check_budget((std::uint64_t(1) << n) - 1);
        return std::make_unique<SubsetSource>(n, n);
    }
    if (spec.rfind("size:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(spec.substr(5));
        } catch (const std::exception&) {
            throw ParseError("bad config spec '" + spec + "'");
        }
        if (k < 1) throw ParseError("config size must be positive");
        if (n >= 63) throw BudgetError("'size:' needs fewer than 63 vertices");
        check_budget(count_subsets(n, k));
        return std::make_unique<SubsetSource>(n, k);
    }
    if (spec.rfind("explicit:", 0) == 0) {
        std::vector<int> config;
        std::string rest = spec.substr(9);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t next = rest.find(',', pos);
            if (next == std::string::npos) next = rest.size();
            try {
                config.push_back(std::stoi(rest.substr(pos, next - pos)));
            } catch (const std::exception&) {
                throw ParseError("bad config spec '" + spec + "'");
            }
            pos = next + 1;
        }
        if (config.empty()) throw ParseError("empty explicit configuration");
        std::sort(config.begin(), config.end());
        config.erase(std::unique(config.begin(), config.end()), config.end());
        std::vector<std::vector<int>> one = {config};
        return std::make_unique<VectorSource>(std::move(one));
    }
    if (spec.rfind("random:", 0) == 0) {
        std::string rest = spec.substr(7);
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError("random spec is random:count:size");
        int count = 0, size = 0;
        try {
            count = std::stoi(rest.substr(0, colon));
            size = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad config spec '" + spec + "'");
        }
        if (count < 1 || size < 1 || size > n)
            throw ParseError("bad random configuration parameters");
        check_budget(std::uint64_t(count));
        std::mt19937_64 rng(seed);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        std::vector<std::vector<int>> configs;
        configs.reserve(count);
        for (int i = 0; i < count; ++i) {
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> config(all.begin(), all.begin() + size);
            std::sort(config.begin(), config.end());
            configs.push_back(std::move(config));
        }
        return std::make_unique<VectorSource>(std::move(configs));
    }
    throw ParseError("unknown config spec '" + spec + "'");
}

DistortionReport distortion_scan(const Tree& tree, const TiePolicy& policy,
                                 ConfigSource& configs, int jobs) {
    std::vector<std::vector<int>> all;
    while (auto config = configs.next()) {
        if (config->empty())
            throw std::invalid_argument("empty candidate configuration");
        all.push_back(std::move(*config));
    }
    if (all.empty()) throw std::invalid_argument("no candidate configurations");

    DistortionReport report;
    report.policy = policy.name;
    report.records.resize(all.size());
    parallel_for(all.size(), jobs, [&](std::size_t i, int) {
        DistortionRecord rec;
        rec.config = all[i];
        rec.winner = run_irv(tree, rec.config, policy).winner;
        rec.sc_winner = social_cost(tree, rec.winner);
        auto [opt, opt_cost] = optimal_candidate(tree, rec.config);
        rec.optimum = opt;
        rec.sc_optimum = opt_cost;
        rec.ratio = rec.sc_optimum == 0 ? Ratio{1, 1}
                                        : Ratio::of(rec.sc_winner, rec.sc_optimum);
        report.records[i] = std::move(rec);
    });

    report.max_ratio = Ratio{0, 1};
    for (const auto& rec : report.records) {
        if (report.max_ratio < rec.ratio ||
            (rec.ratio == report.max_ratio && rec.config < report.argmax_config)) {
            report.max_ratio = rec.ratio;
            report.argmax_config = rec.config;
        }
    }
    return report;
}

Tree generate_family(const std::string& family, int param) {
    std::vector<std::pair<int, int>> edges;
    if (family == "path") {
        if (param < 1) throw ParseError("path needs n >= 1");
        for (int v = 1; v < param; ++v) edges.emplace_back(v, v + 1);
        return Tree::from_edges(param, std::move(edges));
    }
    if (family == "bistar") {
        int n = param;
        if (n < 4 || n % 2 != 0) throw ParseError("bistar needs even n >= 4");
        // 1, 2 are the hubs; 3..n/2+1 hang off hub 1, the rest off hub 2.
        edges.emplace_back(1, 2);
        for (int v = 3; v <= n / 2 + 1; ++v) edges.emplace_back(1, v);
        for (int v = n / 2 + 2; v <= n; ++v) edges.emplace_back(2, v);
        return Tree::from_edges(n, std::move(edges));
    }
    if (family == "modified_bistar") {
        int n = param;
        if (n < 8 || n % 2 != 0)
            throw ParseError("modified_bistar needs even n >= 8");
        // 1 = left hub, 2 = middle vertex, 3 = right hub, 4 = the right-star
        // leaf on the spine; 5..n/2+2 are the left leaves and the rest are
        // the remaining right leaves.
        edges.emplace_back(1, 2);
        edges.emplace_back(2, 3);
        edges.emplace_back(3, 4);
        for (int v = 5; v <= n / 2 + 2; ++v) edges.emplace_back(1, v);
        for (int v = n / 2 + 3; v <= n; ++v) edges.emplace_back(3, v);
        return Tree::from_edges(n, std::move(edges));
    }
    if (family == "perfect_binary_tree") {
        int h = param;
        if (h < 1 || h > 20) throw ParseError("perfect_binary_tree needs 1 <= h <= 20");
        int n = (1 << (h + 1)) - 1;
        for (int v = 2; v <= n; ++v) edges.emplace_back(v / 2, v);
        return Tree::from_edges(n, std::move(edges));
    }
    if (family == "spider_demo") {
        int n = param;
        if (n < 5) throw ParseError("spider_demo needs n >= 5");
        // Path of floor(sqrt(n)) + 1 vertices; all remaining vertices hang
        // off its far end. Shows why the best/worst social-cost gap alone
        // says little about the elected candidate.
        int s = 1;
        while ((s + 1) * (s + 1) <= n) ++s;
        for (int v = 1; v <= s; ++v) edges.emplace_back(v, v + 1);
        for (int v = s + 2; v <= n; ++v) edges.emplace_back(s + 1, v);
        return Tree::from_edges(n, std::move(edges));
    }
    throw ParseError("unknown tree family '" + family + "'");
}

Tree generate_spec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("generator spec is family:param");
    int param = 0;
    try {
        param = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("bad generator spec '" + spec + "'");
    }
    return generate_family(spec.substr(0, colon), param);
}

} // namespace irvz
