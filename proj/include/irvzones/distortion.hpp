#ifndef IRVZONES_DISTORTION_HPP
#define IRVZONES_DISTORTION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irvzones/election.hpp"
#include "irvzones/oracle.hpp"
#include "irvzones/tree.hpp"

namespace irvz {

// Exact nonnegative rational; social costs are integers, so ratios never
// touch floating point.
struct Ratio {
    long long num = 0;
    long long den = 1;

    static Ratio of(long long num, long long den);
    bool operator==(const Ratio& o) const {
        return num == o.num && den == o.den;
    }
    bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
    std::string str() const;
    double approx() const { return double(num) / double(den); }
};

long long social_cost(const Tree& tree, int candidate);

// Argmin of social cost over the candidate set; ties go to the smallest
// vertex index.
std::pair<int, long long> optimal_candidate(const Tree& tree,
                                            const std::vector<int>& candidates);

// Finite stream of candidate configurations.
class ConfigSource {
public:
    virtual ~ConfigSource() = default;
    virtual std::optional<std::vector<int>> next() = 0;
};

// Spec forms: "all", "size:k", "explicit:a,b,c", "random:count:size".
// Enumerative forms are budget-checked up front.
std::unique_ptr<ConfigSource> make_config_source(
    const std::string& spec, int n, std::uint64_t seed,
    const EnumerationBudget& budget = {});

struct DistortionRecord {
    std::vector<int> config;
    int winner = 0;
    long long sc_winner = 0;
    int optimum = 0;
    long long sc_optimum = 0;
    Ratio ratio;
};

struct DistortionReport {
    std::string policy;
    std::vector<DistortionRecord> records;
    Ratio max_ratio;
    std::vector<int> argmax_config;
};

DistortionReport distortion_scan(const Tree& tree, const TiePolicy& policy,
                                 ConfigSource& configs, int jobs = 1);

// Families: "path" (n >= 1), "bistar" (even n >= 4), "modified_bistar"
// (even n >= 8), "perfect_binary_tree" (height >= 1), "spider_demo" (n >= 5).
// Vertex conventions are documented in the README.
Tree generate_family(const std::string& family, int param);
Tree generate_spec(const std::string& spec);  // "family:param"

} // namespace irvz

#endif
