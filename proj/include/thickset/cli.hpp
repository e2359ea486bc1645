#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace thickset::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runtime bounds shared by all subcommands. Loaded from the key=value file
/// named by the THICKSET_CONFIG environment variable (when set), then
/// overridden by command-line flags.
struct Config {
    long long window = 10000;         // window radius for identity checks
    long long witness_bound = 100000;  // |y| bound for witness searches
    size_t dfs_cap = 64;               // independent-set search cap
    uint64_t seed = 0;

    static Config load_env();
    static Config from_file(const std::string& path);
};

/// Assembles the standard report envelope:
/// {command, inputs, verdict, cert: {type, payload}, seed, version}.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           const std::string& verdict, const std::string& cert_type,
                           nlohmann::json payload, uint64_t seed);

/// Replays the verification recorded in a report without redoing the search.
/// Unknown certificate types fail closed (false).
bool check_cert(const nlohmann::json& report);

/// Full command-line entry point. Writes the report (JSON, or text with
/// --format text; CSV for sweeps) to `out` and diagnostics to `err`.
/// Exit codes: 0 verified/decided, 1 refuted with witness, 2 unresolved
/// within bounds, 64 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thickset::cli
