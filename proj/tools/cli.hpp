#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypermass/graph_geometry.hpp"
#include "hypermass/mass.hpp"
#include "hypermass/serialization.hpp"

namespace hypermass::cli {

struct RunConfig {
    std::string command;
    int n = 3;
    double m = 1.0;
    std::vector<double> masses;
    double kappa = 1.0;
    double beta = 2.0;
    double rho = 5.0;
    std::optional<double> h;
    std::optional<double> radius;
    Tolerances tol;
    double identity_tol = 1e-6;
    double r_min = 5.0;
    int rungs = 6;
    /// Empty selects the command default: csv for tables, json otherwise.
    std::string format;
    std::string output;
    std::uint64_t seed = 1;
    std::string family = "ads";
    std::string profile_path;
    int count = 20;
    int grid = 100;
    std::vector<std::string> suites;
    bool suites_given = false;
    bool inject_fault = false;
    int threads = 1;

    LadderOptions ladder() const;
    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

/// Worker count: hardware concurrency capped by HYPERMASS_THREADS.
int thread_budget();

/// Entry point shared by the executable and the tests. Returns the process
/// exit code: 0 success, 1 numeric or check failure, 2 configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
    std::string suite;
    std::string check;
    bool pass = false;
    Json detail;
};

const std::vector<std::string>& verify_suite_names();

/// Run the named invariant suites. Checks append in a fixed order.
std::vector<CheckResult> run_verify(const RunConfig& config);

/// Write `content` to `path` through a temporary file and an atomic rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace hypermass::cli
