// Command-line front end. Everything goes through the C API in irvzones.h;
// the JSON documents it returns are rendered as text here when requested.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irvzones.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCheckFailed = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

std::string api_error() { return irvz_last_error(); }

using TreeHandle = std::unique_ptr<irvz_tree, decltype(&irvz_tree_free)>;

struct StringOut {
    char* value = nullptr;
    ~StringOut() { irvz_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

int map_status(irvz_status rc) {
    switch (rc) {
        case IRVZ_OK:
            return kExitOk;
        case IRVZ_ERR_CHECK_FAILED:
            return kExitCheckFailed;
        default:
            return kExitInput;
    }
}

struct TreeInput {
    std::string file;
    std::string generator;

    void add_options(CLI::App* cmd) {
        auto* tree = cmd->add_option("--tree", file, "tree file to load");
        auto* gen = cmd->add_option("--gen", generator,
                                    "generator spec family:param");
        tree->excludes(gen);
    }

    TreeHandle load() const {
        irvz_tree* raw = nullptr;
        if (!generator.empty()) {
            if (irvz_tree_generate(generator.c_str(), &raw) != IRVZ_OK)
                die(kExitInput, api_error());
        } else if (!file.empty()) {
            std::ifstream in(file);
            if (!in) die(kExitInput, "cannot open tree file '" + file + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            if (irvz_tree_parse(buffer.str().c_str(), &raw) != IRVZ_OK)
                die(kExitInput, api_error());
        } else {
            die(kExitInput, "one of --tree or --gen is required");
        }
        return TreeHandle(raw, &irvz_tree_free);
    }

    json manifest_entry() const {
        if (!generator.empty()) return json{{"generator", generator}};
        return json{{"tree_file", file}};
    }
};

std::vector<int> parse_vertex_list(const std::string& text,
                                   bool allow_empty = false) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (!tok.empty()) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                die(kExitInput, "malformed vertex list '" + text + "'");
            }
        }
        pos = next + 1;
    }
    if (out.empty() && !allow_empty)
        die(kExitInput, "empty vertex list '" + text + "'");
    return out;
}

void print_document(const json& manifest, const std::string& result_json,
                    const std::string& format, const std::string& text) {
    if (format == "doc") {
        json doc{{"tool",
                  {{"name", "irvzones"}, {"version", irvz_version()}}},
                 {"manifest", manifest},
                 {"result", json::parse(result_json)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "manifest: " << manifest.dump() << "\n" << text;
    }
}

std::string render_trace_text(const json& r) {
    std::ostringstream out;
    out << "candidates:";
    for (int c : r["candidates"]) out << " " << c;
    out << "\n";
    int round_no = 0;
    for (const auto& round : r["rounds"]) {
        out << "round " << ++round_no << ":";
        for (const auto& entry : round["tally"])
            out << " " << entry["candidate"].get<int>() << ":"
                << entry["votes"].get<int>();
        out << " -> eliminated " << round["eliminated"].get<int>() << "\n";
    }
    out << "winner: " << r["winner"].get<int>() << "\n";
    return out.str();
}

std::string join_ints(const json& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ",";
        out += std::to_string(v.get<int>());
    }
    return out;
}

std::string render_kill_text(const json& r) {
    std::ostringstream out;
    out << "kill(designated=" << r["designated"].get<int>() << ", allowed={"
        << join_ints(r["allowed"]) << "}): "
        << (r["killed"].get<bool>() ? "true" : "false") << "\n";
    if (r.contains("witness"))
        out << "witness candidate set: {" << join_ints(r["witness"]) << "}\n";
    if (r.contains("check"))
        out << "oracle: " << (r["check"]["oracle"].get<bool>() ? "true" : "false")
            << " (agreement: "
            << (r["check"]["agreement"].get<bool>() ? "yes" : "NO") << ")\n";
    return out.str();
}

std::string render_ratio(const json& ratio) {
    return std::to_string(ratio["num"].get<long long>()) + "/" +
           std::to_string(ratio["den"].get<long long>());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact instant-runoff analysis on trees"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int jobs = 1;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "doc"}));
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized configuration sampling");

    // elect
    auto* elect = app.add_subcommand("elect", "run one election");
    TreeInput elect_tree;
    elect_tree.add_options(elect);
    std::string elect_candidates;
    std::string elect_policy = "default";
    elect->add_option("--candidates", elect_candidates, "comma-separated vertices")
        ->required();
    elect->add_option("--policy", elect_policy, "tie policy preset");

    // kill
    auto* kill = app.add_subcommand("kill", "can a candidate be forced to lose?");
    TreeInput kill_tree;
    kill_tree.add_options(kill);
    int kill_u = 0;
    std::string kill_allowed;
    bool kill_check = false;
    std::string kill_policy = "default";
    kill->add_option("-u,--designated", kill_u, "designated vertex")->required();
    kill->add_option("-A,--allowed", kill_allowed,
                     "comma-separated allowed opponents (may be empty)");
    kill->add_flag("--check", kill_check, "cross-check with the brute-force oracle");
    kill->add_option("--policy", kill_policy,
                     "must be 'default'; the solver encodes the standard tie rules");

    // zone
    auto* zone = app.add_subcommand("zone", "exclusion-zone computations");
    TreeInput zone_tree;
    zone_tree.add_options(zone);
    std::string zone_action;
    std::string zone_set;
    bool zone_check = false;
    std::string zone_policy = "default";
    zone->add_option("action", zone_action, "verify | min | enumerate")
        ->required()
        ->check(CLI::IsMember({"verify", "min", "enumerate"}));
    zone->add_option("set", zone_set, "zone vertices for 'verify'");
    zone->add_flag("--check", zone_check, "cross-check with the brute-force oracle");
    zone->add_option("--policy", zone_policy,
                     "must be 'default'; the solver encodes the standard tie rules");

    // distortion
    auto* distortion = app.add_subcommand("distortion", "social-cost ratios");
    TreeInput dist_tree;
    dist_tree.add_options(distortion);
    std::string dist_configs;
    std::string dist_policy = "default";
    std::string dist_table;
    distortion
        ->add_option("--configs", dist_configs,
                     "all | size:k | explicit:a,b,c | random:count:size")
        ->required();
    distortion->add_option("--policy", dist_policy, "tie policy preset");
    distortion->add_option("--table", dist_table,
                           "also write a flat per-configuration table here");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated tree file");
    std::string gen_spec;
    std::string gen_output;
    gen->add_option("family", gen_spec, "generator spec family:param")->required();
    gen->add_option("-o,--output", gen_output, "output path (default stdout)");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "cross-check solvers on small trees");
    int selftest_max_n = 5;
    selftest->add_option("--max-n", selftest_max_n, "largest vertex count (<= 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInput;
    }

    try {
        if (elect->parsed()) {
            TreeHandle tree = elect_tree.load();
            std::vector<int> candidates = parse_vertex_list(elect_candidates);
            StringOut out;
            irvz_status rc =
                irvz_elect(tree.get(), candidates.data(),
                           int(candidates.size()), elect_policy.c_str(), &out.value);
            if (rc != IRVZ_OK) die(map_status(rc), api_error());
            json manifest{{"subcommand", "elect"},
                          {"input", elect_tree.manifest_entry()},
                          {"candidates", elect_candidates},
                          {"policy", elect_policy},
                          {"format", format},
                          {"check", false},
                          {"seed", seed},
                          {"jobs", jobs}};
            print_document(manifest, out.str(), format,
                           render_trace_text(json::parse(out.str())));
        } else if (kill->parsed()) {
            if (kill_policy != "default")
                die(kExitInput,
                    "kill supports only the default tie policy; the round-1 "
                    "summaries encode its tie rules");
            TreeHandle tree = kill_tree.load();
            std::vector<int> allowed = parse_vertex_list(kill_allowed, true);
            StringOut out;
            irvz_status rc =
                irvz_kill(tree.get(), kill_u, allowed.data(), int(allowed.size()),
                          kill_check ? 1 : 0, &out.value);
            if (rc != IRVZ_OK && rc != IRVZ_ERR_CHECK_FAILED)
                die(map_status(rc), api_error());
            json manifest{{"subcommand", "kill"},
                          {"input", kill_tree.manifest_entry()},
                          {"designated", kill_u},
                          {"allowed", kill_allowed},
                          {"policy", kill_policy},
                          {"format", format},
                          {"check", kill_check},
                          {"seed", seed},
                          {"jobs", jobs}};
            print_document(manifest, out.str(), format,
                           render_kill_text(json::parse(out.str())));
            if (rc == IRVZ_ERR_CHECK_FAILED) return kExitCheckFailed;
        } else if (zone->parsed()) {
            if (zone_policy != "default")
                die(kExitInput,
                    "zone computations support only the default tie policy");
            TreeHandle tree = zone_tree.load();
            StringOut out;
            irvz_status rc = IRVZ_OK;
            if (zone_action == "verify") {
                if (zone_set.empty())
                    die(kExitInput, "zone verify needs a vertex set");
                std::vector<int> zone_vertices = parse_vertex_list(zone_set);
                rc = irvz_zone_verify(tree.get(), zone_vertices.data(),
                                      int(zone_vertices.size()),
                                      zone_check ? 1 : 0, jobs, &out.value);
            } else if (zone_action == "min") {
                rc = irvz_zone_min(tree.get(), zone_check ? 1 : 0, jobs, &out.value);
            } else {
                rc = irvz_zone_enumerate(tree.get(), zone_check ? 1 : 0, jobs,
                                         &out.value);
            }
            if (rc != IRVZ_OK && rc != IRVZ_ERR_CHECK_FAILED)
                die(map_status(rc), api_error());
            json manifest{{"subcommand", "zone"},
                          {"input", zone_tree.manifest_entry()},
                          {"action", zone_action},
                          {"set", zone_set},
                          {"policy", zone_policy},
                          {"format", format},
                          {"check", zone_check},
                          {"seed", seed},
                          {"jobs", jobs}};
            json r = json::parse(out.str());
            std::ostringstream text;
            if (zone_action == "verify") {
                text << "zone {" << join_ints(r["zone"]) << "}: "
                     << (r["is_zone"].get<bool>() ? "true" : "false") << "\n";
                if (r.contains("refutation"))
                    text << "refutation: candidates {"
                         << join_ints(r["refutation"]["candidates"]) << "} elect "
                         << r["refutation"]["winner"].get<int>() << " (outside)\n";
            } else if (zone_action == "min") {
                text << "min zone: {" << join_ints(r["min_zone"]) << "}\n";
            } else {
                text << "zones:\n";
                for (const auto& z : r["zones"])
                    text << "  {" << join_ints(z) << "}\n";
                if (!r["nesting_violations"].empty())
                    text << "warning: zones are not totally ordered by inclusion\n";
            }
            if (r.contains("check"))
                text << "oracle agreement: "
                     << (r["check"]["agreement"].get<bool>() ? "yes" : "NO") << "\n";
            print_document(manifest, out.str(), format, text.str());
            if (rc == IRVZ_ERR_CHECK_FAILED) return kExitCheckFailed;
        } else if (distortion->parsed()) {
            TreeHandle tree = dist_tree.load();
            StringOut out;
            irvz_status rc =
                irvz_distortion(tree.get(), dist_configs.c_str(),
                                dist_policy.c_str(), seed, jobs, &out.value);
            if (rc != IRVZ_OK) die(map_status(rc), api_error());
            if (!dist_table.empty()) {
                StringOut table;
                rc = irvz_distortion_table(tree.get(), dist_configs.c_str(),
                                           dist_policy.c_str(), seed, jobs,
                                           &table.value);
                if (rc != IRVZ_OK) die(map_status(rc), api_error());
                std::ofstream table_out(dist_table);
                if (!table_out)
                    die(kExitInput, "cannot write table to '" + dist_table + "'");
                table_out << table.str();
            }
            json manifest{{"subcommand", "distortion"},
                          {"input", dist_tree.manifest_entry()},
                          {"configs", dist_configs},
                          {"policy", dist_policy},
                          {"format", format},
                          {"check", false},
                          {"seed", seed},
                          {"jobs", jobs}};
            json r = json::parse(out.str());
            std::ostringstream text;
            text << "policy: " << r["policy"].get<std::string>() << "\n"
                 << "configurations: " << r["records"].size() << "\n"
                 << "max ratio: " << render_ratio(r["max_ratio"]) << " = "
                 << r["max_ratio"]["approx"].get<double>() << " at config {"
                 << join_ints(r["argmax_config"]) << "}\n";
            print_document(manifest, out.str(), format, text.str());
        } else if (gen->parsed()) {
            irvz_tree* raw = nullptr;
            if (irvz_tree_generate(gen_spec.c_str(), &raw) != IRVZ_OK)
                die(kExitInput, api_error());
            TreeHandle tree(raw, &irvz_tree_free);
            StringOut out;
            if (irvz_tree_to_text(tree.get(), &out.value) != IRVZ_OK)
                die(kExitInput, api_error());
            if (gen_output.empty()) {
                std::cout << out.str();
            } else {
                std::ofstream file(gen_output);
                if (!file) die(kExitInput, "cannot write '" + gen_output + "'");
                file << out.str();
            }
        } else if (selftest->parsed()) {
            StringOut out;
            irvz_status rc = irvz_selftest(selftest_max_n, &out.value);
            if (rc != IRVZ_OK) die(map_status(rc), api_error());
            json manifest{{"subcommand", "selftest"},
                          {"max_n", selftest_max_n},
                          {"format", format},
                          {"seed", seed},
                          {"jobs", jobs}};
            json r = json::parse(out.str());
            std::ostringstream text;
            text << "kill queries checked: " << r["kill_queries"].get<std::uint64_t>()
                 << "\nzone queries checked: "
                 << r["zone_queries"].get<std::uint64_t>() << "\nall agree\n";
            print_document(manifest, out.str(), format, text.str());
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return kExitOk;
}
