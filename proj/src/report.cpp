#include "freeboson/report.hpp"

#include <algorithm>

namespace freeboson {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::window_insufficient:
            return "window-insufficient";
    }
    return "fail";
}

CheckRecorder::CheckRecorder(std::string check_id, Json params) : start_(std::chrono::steady_clock::now()) {
    report_.check_id = std::move(check_id);
    report_.params = std::move(params);
}

void CheckRecorder::record(Mismatch m) {
    ++report_.mismatch_count;
    if (report_.mismatches.size() < kMaxStoredMismatches) {
        report_.mismatches.push_back(std::move(m));
    }
}

void CheckRecorder::compare(const std::vector<int>& monomial, const Scalar& lhs, const Scalar& rhs,
                            const Json& target) {
    ++report_.coefficients_checked;
    if (lhs != rhs) {
        record({monomial, "", lhs.str(), rhs.str(), target});
    }
}

void CheckRecorder::compare(const std::vector<int>& monomial, const FockVector& lhs, const FockVector& rhs,
                            const Json& target) {
    ++report_.coefficients_checked;
    if (lhs == rhs) {
        return;
    }
    // report the first basis monomial on which the sides differ
    const FockVector diff = lhs - rhs;
    const Partition& p = diff.terms().begin()->first;
    record({monomial, p.str(), lhs.coeff(p).str(), rhs.coeff(p).str(), target});
}

void CheckRecorder::window_error(const std::string& what) {
    window_failed_ = true;
    if (!report_.note.empty()) {
        report_.note += "; ";
    }
    report_.note += what;
}

void CheckRecorder::fail(const std::string& what) {
    record({{}, "", what, "", Json()});
}

CheckReport CheckRecorder::finish() {
    if (window_failed_) {
        report_.status = CheckStatus::window_insufficient;
    } else if (report_.mismatch_count > 0) {
        report_.status = CheckStatus::fail;
    } else {
        report_.status = CheckStatus::pass;
    }
    report_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const FockVector& v) {
    Json out = Json::array();
    for (const auto& [p, c] : v.terms()) {
        Json t;
        t["parts"] = to_json(p);
        t["coeff"] = c.str();
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const ScalarSeries& s) {
    Json out = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json t;
        t["exponents"] = e;
        t["value"] = c.str();
        out.push_back(std::move(t));
    }
    return out;
}

CheckReport merge_reports(const std::string& check_id, Json params, const std::vector<CheckReport>& parts) {
    CheckReport out;
    out.check_id = check_id;
    out.params = std::move(params);
    Json summary = Json::array();
    std::vector<std::string> notes;
    for (const auto& r : parts) {
        out.coefficients_checked += r.coefficients_checked;
        out.mismatch_count += r.mismatch_count;
        out.elapsed_ms += r.elapsed_ms;
        for (const auto& m : r.mismatches) {
            if (out.mismatches.size() < CheckRecorder::kMaxStoredMismatches) {
                out.mismatches.push_back(m);
            }
        }
        if (r.status == CheckStatus::window_insufficient ||
            (r.status == CheckStatus::fail && out.status == CheckStatus::pass)) {
            out.status = r.status;
        }
        if (!r.note.empty() && std::find(notes.begin(), notes.end(), r.note) == notes.end()) {
            notes.push_back(r.note);
        }
        Json part;
        part["check"] = r.check_id;
        part["params"] = r.params;
        part["status"] = to_string(r.status);
        part["coefficients_checked"] = r.coefficients_checked;
        if (!r.details.empty()) {
            part["details"] = r.details;
        }
        summary.push_back(std::move(part));
    }
    for (const auto& n : notes) {
        out.note += (out.note.empty() ? "" : "; ") + n;
    }
    out.details["parts"] = std::move(summary);
    return out;
}

Json to_json(const CheckReport& r, bool with_timing) {
    Json j;
    j["check"] = r.check_id;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["coefficients_checked"] = r.coefficients_checked;
    j["mismatch_count"] = r.mismatch_count;
    Json ms = Json::array();
    for (const auto& m : r.mismatches) {
        Json mj;
        mj["monomial"] = m.monomial;
        if (!m.component.empty()) {
            mj["component"] = m.component;
        }
        mj["lhs"] = m.lhs;
        mj["rhs"] = m.rhs;
        mj["target"] = m.target;
        ms.push_back(std::move(mj));
    }
    j["mismatches"] = std::move(ms);
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    if (!r.details.empty()) {
        j["details"] = r.details;
    }
    if (with_timing) {
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

FockVector fock_vector_from_json(const Json& j) {
    FockVector v;
    for (const auto& t : j) {
        v.add_term(partition_from_json(t.at("parts")), Scalar::parse(t.at("coeff").get<std::string>()));
    }
    return v;
}

}  // namespace freeboson
