#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freeboson/report.hpp"

namespace freeboson {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Selection and overrides for a verification run. Unset bounds keep each
/// check's own defaults.
struct RunConfig {
    std::string suite = "all";
    std::optional<int> weight_cap;
    std::optional<int> x_window;
    std::vector<int> y_orders;
    std::optional<std::pair<int, int>> mode_range;
    std::uint64_t seed = 1;
    std::string format = "json-lines";
    std::string out;
    bool timing = false;

    /// Throws ConfigError on non-positive bounds or an unknown format.
    void validate() const;
};

/// Applies flat `key = value` lines (# starts a comment) on top of `base`.
/// Unknown keys and malformed values throw ConfigError.
RunConfig parse_config(const std::string& text, RunConfig base = {});

/// "lo:hi" or "lo,hi"
std::pair<int, int> parse_mode_range(const std::string& text);

const std::vector<std::string>& catalog_ids();

/// Check ids for a suite name ("all", "core", "zeta"), a single id, or a
/// comma-separated list of ids, in catalog order. "" selects nothing.
std::vector<std::string> select_checks(const std::string& suite);

CheckReport run_check(const std::string& id, const RunConfig& config);
std::vector<CheckReport> run_suite(const RunConfig& config);

/// "json-lines" or "table"
std::string emit_report(const std::vector<CheckReport>& reports, const std::string& format, bool timing = false);

/// 0 if every report passes, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

/// Rows of "bernoulli", "zeta" or "partitions" up to max.
std::string render_table(const std::string& kind, int max);

}  // namespace freeboson
