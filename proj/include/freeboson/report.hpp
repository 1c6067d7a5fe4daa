#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "freeboson/fock.hpp"
#include "freeboson/scalar.hpp"
#include "freeboson/series.hpp"

namespace freeboson {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, window_insufficient };

std::string to_string(CheckStatus s);

/// One coefficient where the two sides of an identity disagree.
struct Mismatch {
    std::vector<int> monomial;
    std::string component;  // partition of the differing basis monomial, if vector-valued
    std::string lhs;
    std::string rhs;
    Json target;  // serialised target vector the identity was applied to
};

/// Outcome of verifying one identity.
struct CheckReport {
    std::string check_id;
    Json params = Json::object();
    CheckStatus status = CheckStatus::pass;
    std::vector<Mismatch> mismatches;
    std::int64_t mismatch_count = 0;
    std::int64_t coefficients_checked = 0;
    std::string note;
    Json details = Json::object();
    std::int64_t elapsed_ms = 0;

    [[nodiscard]] bool passed() const { return status == CheckStatus::pass; }
};

/// Collects comparisons for one check and produces its report.
class CheckRecorder {
public:
    CheckRecorder(std::string check_id, Json params);

    void compare(const std::vector<int>& monomial, const Scalar& lhs, const Scalar& rhs, const Json& target = Json());
    void compare(const std::vector<int>& monomial, const FockVector& lhs, const FockVector& rhs,
                 const Json& target = Json());
    /// Records comparisons made in bulk elsewhere (e.g. through Series compare).
    void count(std::int64_t k) { report_.coefficients_checked += k; }
    void window_error(const std::string& what);
    void fail(const std::string& what);
    Json& details() { return report_.details; }

    [[nodiscard]] CheckReport finish();

    static constexpr std::size_t kMaxStoredMismatches = 16;

private:
    void record(Mismatch m);

    CheckReport report_;
    std::chrono::steady_clock::time_point start_;
    bool window_failed_ = false;
};

/// One report for a group of sub-checks: counts add up, the worst status wins,
/// stored mismatches keep catalog order, and each part is summarised in details.parts.
CheckReport merge_reports(const std::string& check_id, Json params, const std::vector<CheckReport>& parts);

// ---- serialisation --------------------------------------------------------

Json to_json(const Partition& p);
Json to_json(const FockVector& v);
Json to_json(const ScalarSeries& s);
Json to_json(const CheckReport& r, bool with_timing);
Partition partition_from_json(const Json& j);
FockVector fock_vector_from_json(const Json& j);

}  // namespace freeboson
