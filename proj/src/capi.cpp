#include "irvzones.h"

#include <cstring>
#include <string>

#include "irvzones/distortion.hpp"
#include "irvzones/docs.hpp"
#include "irvzones/election.hpp"
#include "irvzones/errors.hpp"
#include "irvzones/kill.hpp"
#include "irvzones/oracle.hpp"
#include "irvzones/tree.hpp"
#include "irvzones/zones.hpp"

using nlohmann::json;

struct irvz_tree {
    irvz::Tree tree;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

irvz_status fail(irvz_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
irvz_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const irvz::ParseError& e) {
        return fail(IRVZ_ERR_PARSE, e.what());
    } catch (const irvz::BudgetError& e) {
        return fail(IRVZ_ERR_BUDGET, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(IRVZ_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(IRVZ_ERR_INTERNAL, e.what());
    }
}

std::vector<int> to_vector(const int* values, int count) {
    if (count < 0) throw std::invalid_argument("negative element count");
    if (count > 0 && values == nullptr)
        throw std::invalid_argument("null vertex array");
    return std::vector<int>(values, values + count);
}

const irvz::Tree& deref(const irvz_tree* tree) {
    if (!tree) throw std::invalid_argument("null tree handle");
    return tree->tree;
}

irvz_status emit_json(const json& j, char** out) {
    if (!out) return fail(IRVZ_ERR_ARGUMENT, "null output pointer");
    *out = dup_string(j.dump(2) + "\n");
    return IRVZ_OK;
}

} // namespace

extern "C" {

const char* irvz_version(void) { return irvz::kToolVersion; }

const char* irvz_last_error(void) { return g_last_error.c_str(); }

void irvz_string_free(char* s) { delete[] s; }

irvz_status irvz_tree_parse(const char* text, irvz_tree** out) {
    return guarded([&]() -> irvz_status {
        if (!text || !out) return fail(IRVZ_ERR_ARGUMENT, "null argument");
        *out = new irvz_tree{irvz::Tree::parse(text)};
        return IRVZ_OK;
    });
}

irvz_status irvz_tree_generate(const char* family_spec, irvz_tree** out) {
    return guarded([&]() -> irvz_status {
        if (!family_spec || !out) return fail(IRVZ_ERR_ARGUMENT, "null argument");
        *out = new irvz_tree{irvz::generate_spec(family_spec)};
        return IRVZ_OK;
    });
}

void irvz_tree_free(irvz_tree* tree) { delete tree; }

int irvz_tree_order(const irvz_tree* tree) {
    return tree ? tree->tree.order() : -1;
}

int irvz_tree_distance(const irvz_tree* tree, int a, int b) {
    if (!tree) return -1;
    int n = tree->tree.order();
    if (a < 1 || a > n || b < 1 || b > n) return -1;
    return tree->tree.distance(a, b);
}

int irvz_tree_tie_id(const irvz_tree* tree, int v) {
    if (!tree) return -1;
    int n = tree->tree.order();
    if (v < 1 || v > n) return -1;
    return tree->tree.tie_id(v);
}

irvz_status irvz_tree_to_text(const irvz_tree* tree, char** out) {
    return guarded([&]() -> irvz_status {
        if (!out) return fail(IRVZ_ERR_ARGUMENT, "null output pointer");
        *out = dup_string(deref(tree).to_text());
        return IRVZ_OK;
    });
}

irvz_status irvz_elect(const irvz_tree* tree, const int* candidates, int count,
                       const char* policy, char** out_json) {
    return guarded([&]() -> irvz_status {
        const irvz::Tree& t = deref(tree);
        irvz::TiePolicy p =
            irvz::policy_from_preset(policy ? policy : "default", t);
        irvz::ElectionTrace trace = irvz::run_irv(t, to_vector(candidates, count), p);
        return emit_json(irvz::trace_to_json(trace), out_json);
    });
}

irvz_status irvz_kill(const irvz_tree* tree, int designated, const int* allowed,
                      int count, int check, char** out_json) {
    return guarded([&]() -> irvz_status {
        const irvz::Tree& t = deref(tree);
        irvz::KillQuery query{designated, to_vector(allowed, count)};
        irvz::KillVerdict verdict = irvz::kill_dp(t, query);
        json j = irvz::kill_to_json(query, verdict);
        if (check) {
            bool oracle = irvz::brute_force_kill(t, query.designated, query.allowed);
            j["check"] = {{"oracle", oracle}, {"agreement", oracle == verdict.killed}};
            if (oracle != verdict.killed) {
                irvz_status rc = emit_json(j, out_json);
                if (rc != IRVZ_OK) return rc;
                return fail(IRVZ_ERR_CHECK_FAILED,
                            "kill dp disagrees with the brute-force oracle");
            }
        }
        return emit_json(j, out_json);
    });
}

irvz_status irvz_zone_verify(const irvz_tree* tree, const int* zone, int count,
                             int check, int jobs, char** out_json) {
    return guarded([&]() -> irvz_status {
        const irvz::Tree& t = deref(tree);
        irvz::ZoneReport report = irvz::verify_zone(t, to_vector(zone, count), jobs);
        json j = irvz::zone_report_to_json(report);
        if (check) {
            bool oracle = irvz::brute_force_zone(t, report.zone);
            j["check"] = {{"oracle", oracle}, {"agreement", oracle == report.is_zone}};
            if (oracle != report.is_zone) {
                irvz_status rc = emit_json(j, out_json);
                if (rc != IRVZ_OK) return rc;
                return fail(IRVZ_ERR_CHECK_FAILED,
                            "zone verification disagrees with the brute-force oracle");
            }
        }
        return emit_json(j, out_json);
    });
}

irvz_status irvz_zone_min(const irvz_tree* tree, int check, int jobs,
                          char** out_json) {
    return guarded([&]() -> irvz_status {
        const irvz::Tree& t = deref(tree);
        std::vector<int> zone = irvz::min_zone(t, jobs);
        json j{{"min_zone", zone}};
        if (check) {
            // the brute-force reference scans every subset, smallest first
            int n = t.order();
            std::vector<int> best;
            std::uint64_t limit = std::uint64_t(1) << n;
            if (n > 16)
                throw irvz::BudgetError("--check on min zones needs n <= 16");
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                std::vector<int> candidate;
                for (int v = 1; v <= n; ++v)
                    if (mask >> (v - 1) & 1) candidate.push_back(v);
                bool better = best.empty() || candidate.size() < best.size() ||
                              (candidate.size() == best.size() && candidate < best);
                if (!better) continue;
                if (irvz::brute_force_zone(t, candidate)) best = candidate;
            }
            j["check"] = {{"oracle", best}, {"agreement", best == zone}};
            if (best != zone) {
                irvz_status rc = emit_json(j, out_json);
                if (rc != IRVZ_OK) return rc;
                return fail(IRVZ_ERR_CHECK_FAILED,
                            "min zone disagrees with the brute-force oracle");
            }
        }
        return emit_json(j, out_json);
    });
}

irvz_status irvz_zone_enumerate(const irvz_tree* tree, int check, int jobs,
                                char** out_json) {
    return guarded([&]() -> irvz_status {
        const irvz::Tree& t = deref(tree);
        irvz::ZoneEnumeration zones = irvz::enumerate_zones(t, jobs);
        json j = irvz::zone_enumeration_to_json(zones);
        if (check) {
            int n = t.order();
            if (n > 16)
                throw irvz::BudgetError("--check on zone enumeration needs n <= 16");
            std::vector<std::vector<int>> oracle;
            std::uint64_t limit = std::uint64_t(1) << n;
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                std::vector<int> candidate;
                for (int v = 1; v <= n; ++v)
                    if (mask >> (v - 1) & 1) candidate.push_back(v);
                if (irvz::brute_force_zone(t, candidate))
                    oracle.push_back(candidate);
            }
            std::sort(oracle.begin(), oracle.end(),
                      [](const auto& a, const auto& b) {
                          if (a.size() != b.size()) return a.size() < b.size();
                          return a < b;
                      });
            bool agree = oracle == zones.zones;
            j["check"] = {{"oracle", oracle}, {"agreement", agree}};
            if (!agree) {
                irvz_status rc = emit_json(j, out_json);
                if (rc != IRVZ_OK) return rc;
                return fail(IRVZ_ERR_CHECK_FAILED,
                            "zone enumeration disagrees with the brute-force oracle");
            }
        }
        return emit_json(j, out_json);
    });
}

namespace {

irvz_status run_distortion(const irvz_tree* tree, const char* config_spec,
                           const char* policy, uint64_t seed, int jobs,
                           bool as_table, char** out) {
    return guarded([&]() -> irvz_status {
        const irvz::Tree& t = deref(tree);
        if (!config_spec) return fail(IRVZ_ERR_ARGUMENT, "null config spec");
        irvz::TiePolicy p =
            irvz::policy_from_preset(policy ? policy : "default", t);
        auto source = irvz::make_config_source(config_spec, t.order(), seed);
        irvz::DistortionReport report =
            irvz::distortion_scan(t, p, *source, jobs);
        if (as_table) {
            if (!out) return fail(IRVZ_ERR_ARGUMENT, "null output pointer");
            *out = dup_string(irvz::distortion_to_table(report));
            return IRVZ_OK;
        }
        return emit_json(irvz::distortion_to_json(report), out);
    });
}

} // namespace

irvz_status irvz_distortion(const irvz_tree* tree, const char* config_spec,
                            const char* policy, uint64_t seed, int jobs,
                            char** out_json) {
    return run_distortion(tree, config_spec, policy, seed, jobs, false, out_json);
}

irvz_status irvz_distortion_table(const irvz_tree* tree, const char* config_spec,
                                  const char* policy, uint64_t seed, int jobs,
                                  char** out_table) {
    return run_distortion(tree, config_spec, policy, seed, jobs, true, out_table);
}

irvz_status irvz_selftest(int max_n, char** out_json) {
    return guarded([&]() -> irvz_status {
        if (max_n < 2 || max_n > 7)
            return fail(IRVZ_ERR_ARGUMENT, "selftest supports 2 <= max_n <= 7");
        std::uint64_t kill_checked = 0, zone_checked = 0;
        for (int n = 2; n <= max_n; ++n) {
            irvz::for_each_labeled_tree(n, 1, [&](const irvz::Tree& t) {
                irvz::KillDp engine(t);
                std::vector<int> others;
                for (int u = 1; u <= n; ++u) {
                    others.clear();
                    for (int v = 1; v <= n; ++v)
                        if (v != u) others.push_back(v);
                    std::uint64_t subsets = std::uint64_t(1) << others.size();
                    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                        std::vector<int> allowed;
                        for (std::size_t i = 0; i < others.size(); ++i)
                            if (mask >> i & 1) allowed.push_back(others[i]);
                        bool dp = engine.solve({u, allowed}, false).killed;
                        bool oracle = irvz::brute_force_kill(t, u, allowed);
                        if (dp != oracle)
                            throw std::runtime_error(
                                "selftest: kill dp disagrees with the oracle");
                        ++kill_checked;
                    }
                }
                std::uint64_t limit = std::uint64_t(1) << n;
                for (std::uint64_t mask = 1; mask < limit; ++mask) {
                    std::vector<int> zone;
                    for (int v = 1; v <= n; ++v)
                        if (mask >> (v - 1) & 1) zone.push_back(v);
                    bool fast = irvz::verify_zone(t, zone).is_zone;
                    bool oracle = irvz::brute_force_zone(t, zone);
                    if (fast != oracle)
                        throw std::runtime_error(
                            "selftest: zone verdict disagrees with the oracle");
                    ++zone_checked;
                }
            });
        }
        json j{{"max_n", max_n},
               {"kill_queries", kill_checked},
               {"zone_queries", zone_checked},
               {"ok", true}};
        return emit_json(j, out_json);
    });
}

} // extern "C"
