#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "penta/errors.hpp"
#include "penta/odouble.hpp"
#include "penta/registry.hpp"
#include "penta/serialize.hpp"

namespace penta {

inline constexpr const char* kVersion = "0.1.0";

/// One fully reproducible batch run: which solutions, which equations,
/// backend parameters, and where the report goes.
struct SuiteConfig {
    std::string suite = "paper-all";
    std::string solution;                 // registry key; empty = every registered solution
    std::string hopf_file;                // structure-constant file instead of a registry key
    std::vector<std::string> equations;   // empty = all applicable
    RunParams params;
    std::string out;                      // report path; empty = stdout only
    int jobs = 0;                         // 0 = PENTA_JOBS env or 1
};

inline int default_jobs() {
    if (const char* env = std::getenv("PENTA_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

/// Strict config parser: unknown keys are rejected so a typo cannot turn
/// into a silently skipped check.
inline SuiteConfig parse_config(const Json& j) {
    SuiteConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "suite") cfg.suite = value.get<std::string>();
        else if (key == "solution") cfg.solution = value.get<std::string>();
        else if (key == "hopf_file") cfg.hopf_file = value.get<std::string>();
        else if (key == "equations") cfg.equations = value.get<std::vector<std::string>>();
        else if (key == "prime") cfg.params.prime = value.get<std::uint64_t>();
        else if (key == "samples") cfg.params.samples = value.get<long>();
        else if (key == "seed") cfg.params.seed = value.get<std::uint64_t>();
        else if (key == "order") cfg.params.q.order = value.get<long>();
        else if (key == "window") cfg.params.q.window = value.get<int>();
        else if (key == "floor") cfg.params.q.floor = value.get<long>();
        else if (key == "kcap") cfg.params.q.kcap = value.get<int>();
        else if (key == "slack") cfg.params.q.slack = value.get<long>();
        else if (key == "corrupt") cfg.params.corrupt = value.get<bool>();
        else if (key == "out") cfg.out = value.get<std::string>();
        else if (key == "jobs") cfg.jobs = value.get<int>();
        else throw ConfigError("unknown config key '" + key + "'");
    }
    return cfg;
}

inline SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad JSON config: ") + e.what());
    }
    return parse_config(j);
}

struct SuiteItem {
    std::string name;      // "<solution>/<equation>"
    std::string key;       // registry key, or "" for a loaded hopf file
    std::string equation;
};

struct SuiteResult {
    Json report;
    bool all_pass = true;
};

namespace suitedetail {

/// Checks applicable to a user-supplied Hopf structure-constant file; the
/// heavier relations are included only where the dimension keeps them
/// desk-scale.
inline std::vector<std::string> hopf_file_equations(int dim) {
    std::vector<std::string> eqs = {"hopf-axioms", "ss1", "ss2", "co", "ss3"};
    if (dim <= 3) eqs.push_back("tet");
    if (dim <= 2) eqs.push_back("fse");
    return eqs;
}

inline RelationReport run_hopf_file_eq(const HopfData& h, const std::string& eq,
                                       const RunParams& rp) {
    if (eq == "hopf-axioms") return validate_hopf_combined(h);
    require_valid_hopf(h);
    auto sol = regdetail::maybe_corrupt(canonical_pair(h), rp.corrupt);
    return regdetail::dispatch_operator_eq(sol, eq, rp.check());
}

}  // namespace suitedetail

/// Expands the config into suite items, runs them in a worker pool, and
/// assembles the report in declaration order.
inline SuiteResult run_suite(const SuiteConfig& cfg) {
    std::vector<SuiteItem> items;
    HopfData file_hopf;
    bool have_file = !cfg.hopf_file.empty();
    if (have_file) {
        file_hopf = load_hopf_file(cfg.hopf_file);
        std::vector<std::string> eqs = cfg.equations.empty()
                                           ? suitedetail::hopf_file_equations(file_hopf.dim)
                                           : cfg.equations;
        for (const auto& eq : eqs)
            items.push_back({"hopf-file/" + eq, "", eq});
    } else if (!cfg.solution.empty()) {
        const Registration& r = find_registration(cfg.solution);
        std::vector<std::string> eqs = cfg.equations.empty() ? r.equations : cfg.equations;
        for (const auto& eq : eqs) {
            if (!r.supports(eq))
                throw ConfigError("solution '" + r.key + "' does not support equation '" + eq +
                                  "'");
            items.push_back({r.key + "/" + eq, r.key, eq});
        }
    } else {
        // every registered solution x every applicable equation
        for (const auto& r : registry())
            for (const auto& eq : r.equations) {
                if (!cfg.equations.empty()) {
                    bool wanted = false;
                    for (const auto& want : cfg.equations) wanted = wanted || want == eq;
                    if (!wanted) continue;
                }
                items.push_back({r.key + "/" + eq, r.key, eq});
            }
    }
    if (items.empty()) throw ConfigError("suite selects no checks");

    std::vector<RelationReport> results(items.size());
    std::atomic<size_t> cursor{0};
    int jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();
    auto worker = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= items.size()) return;
            auto start = std::chrono::steady_clock::now();
            RelationReport rep;
            try {
                rep = items[i].key.empty()
                          ? suitedetail::run_hopf_file_eq(file_hopf, items[i].equation,
                                                          cfg.params)
                          : find_registration(items[i].key).run(items[i].equation, cfg.params);
            } catch (const Error& e) {
                rep = RelationReport::fail(items[i].equation, "error", e.what());
            }
            rep.ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
            results[i] = std::move(rep);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SuiteResult out;
    Json checks = Json::array();
    for (size_t i = 0; i < items.size(); ++i) {
        out.all_pass = out.all_pass && results[i].passed();
        checks.push_back(report_to_json(results[i], items[i].name));
    }
    out.report["suite"] = cfg.suite;
    out.report["checks"] = std::move(checks);
    out.report["seed"] = cfg.params.seed;
    out.report["version"] = kVersion;
    return out;
}

inline void write_report(const Json& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write report to " + path);
    out << report.dump(2) << "\n";
}

}  // namespace penta
