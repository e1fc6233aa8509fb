#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twinec/verifier/verifier.hpp"

namespace twinec {

inline constexpr const char* kToolVersion = "twinec 1.0.0";

struct RunConfig {
    std::string command;
    std::optional<Integer> p;
    std::optional<Integer> max_p;
    std::optional<Integer> d;
    std::optional<int> theorem;
    int sigma = 1;
    bool sigma_given = false;
    Integer height_bound{10000};
    Integer xy_bound{2000};
    Integer y_bound{1000000};
    long multiple_bound = 9;
    unsigned jobs = 1;
    bool json = false;
    bool negative_x = false;
    std::optional<std::string> cache_path;
};

/// Snapshot of the result-relevant settings; jobs and the cache path are left out.
Json config_json(const RunConfig& config);

struct ReportEnvelope {
    std::string version = kToolVersion;
    Json config = Json::object();
    std::vector<TheoremReport> reports;
};

/// {version, config, reports[], summary}; reports sorted by (p, theorem, sub_case).
Json envelope_json(const ReportEnvelope& envelope);

bool has_inconsistent(const ReportEnvelope& envelope);

/// All p <= max_p with (p, p + 2) twin primes.
std::vector<Integer> twin_primes_up_to(const Integer& max_p);

/// The bounds a theorem's report depends on, as used for cache matching.
Json requested_bounds(int theorem, const RunConfig& config);

TheoremReport run_theorem(const TwinPrimePair& pair, int theorem, int sigma, const RunConfig& config);

ReportEnvelope cmd_analyze(const RunConfig& config, std::ostream& warnings);
ReportEnvelope cmd_scan(const RunConfig& config, std::ostream& warnings);
ReportEnvelope cmd_verify(const RunConfig& config, std::ostream& warnings);

/// Parses argv and runs the command. Returns 0, 1 (usage or input error) or 2 (inconsistent report).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twinec
