#include "freeboson/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "freeboson/regularized.hpp"
#include "freeboson/theorems.hpp"
#include "freeboson/voa.hpp"

namespace freeboson {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": " + text);
    }
    if (used != text.size()) {
        throw ConfigError("invalid integer for " + key + ": " + text);
    }
    return v;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_int(key, trim(item)));
    }
    return out;
}

std::vector<int> padded(const std::vector<int>& given, std::vector<int> defaults) {
    if (given.empty()) {
        return defaults;
    }
    for (std::size_t i = 0; i < defaults.size(); ++i) {
        defaults[i] = i < given.size() ? given[i] : given.back();
    }
    return defaults;
}

Json basic_params(const RunConfig& c) {
    Json j = Json::object();
    if (c.weight_cap) {
        j["weight_cap"] = *c.weight_cap;
    }
    if (c.x_window) {
        j["x_window"] = *c.x_window;
    }
    if (!c.y_orders.empty()) {
        j["y_orders"] = c.y_orders;
    }
    if (c.mode_range) {
        j["mode_range"] = std::vector<int>{c.mode_range->first, c.mode_range->second};
    }
    return j;
}

CheckReport heisenberg(const RunConfig& c) {
    const auto [lo, hi] = c.mode_range.value_or(std::make_pair(-5, 5));
    const int w = c.weight_cap.value_or(8);
    Json params;
    params["mode_range"] = std::vector<int>{lo, hi};
    params["weight_cap"] = w;
    CheckRecorder rec("HEISENBERG", params);
    for (const auto& b : basis_up_to(w)) {
        const FockVector v(b);
        const Json tj = to_json(v);
        for (int m = lo; m <= hi; ++m) {
            for (int n = lo; n <= hi; ++n) {
                const FockVector lhs = h_apply(m, h_apply(n, v)) - h_apply(n, h_apply(m, v));
                rec.compare({m, n}, lhs, Scalar(m + n == 0 ? m : 0) * v, tj);
            }
        }
    }
    return rec.finish();
}

CheckReport virasoro(const RunConfig& c, bool regularized) {
    const auto [lo, hi] = c.mode_range.value_or(std::make_pair(-3, 3));
    const int w = c.weight_cap.value_or(10);
    Json params;
    params["mode_range"] = std::vector<int>{lo, hi};
    params["weight_cap"] = w;
    std::vector<CheckReport> parts;
    for (int m = lo; m <= hi; ++m) {
        for (int n = lo; n <= hi; ++n) {
            parts.push_back(regularized ? modified_virasoro_check(m, n, w) : virasoro_check(m, n, w));
        }
    }
    if (regularized) {
        CheckRecorder rec("MODVIR-VACUUM", Json::object());
        const FockVector vac = FockVector::vacuum();
        rec.compare({0}, virasoro_bar_apply(0, vac), Scalar(-1, 24) * vac, to_json(vac));
        parts.push_back(rec.finish());
    }
    return merge_reports(regularized ? "MODVIR" : "VIRASORO", params, parts);
}

CheckReport monomial_law(const RunConfig& c) {
    std::vector<int> modes{1, 2, 3, 4};
    if (c.mode_range) {
        modes.clear();
        for (int m = std::max(1, c.mode_range->first); m <= c.mode_range->second; ++m) {
            modes.push_back(m);
        }
    }
    Json params;
    params["r_s_max"] = 2;
    params["modes"] = modes;
    std::vector<CheckReport> parts;
    for (int r = 0; r <= 2; ++r) {
        for (int s = 0; s <= 2; ++s) {
            parts.push_back(pure_monomial_check(r, s, modes));
        }
    }
    CheckRecorder rec("MONOMIAL-CONSTANT", Json::object());
    for (int m : modes) {
        rec.compare({m}, central_term(0, 0, m) / ipow(Scalar(m), 3), Scalar(1, 12));
    }
    parts.push_back(rec.finish());
    return merge_reports("BLOCH-MONOMIAL", params, parts);
}

CheckReport zeta_table(const RunConfig& c) {
    const int kmax = 8;
    Json params;
    params["k_max"] = kmax;
    CheckRecorder rec("ZETA-TABLE", params);
    (void)c;
    // x/(e^x - 1) = 1/u(x) with u(x) = (e^x - 1)/x
    ScalarSeries u({power_window("x", kmax)});
    const auto uc = em1_unit_coeffs(kmax);
    for (int k = 0; k <= kmax; ++k) {
        u.set({k}, uc[k]);
    }
    const ScalarSeries inv = inverse(u, "x");
    Json rows = Json::array();
    for (int k = 2; k <= kmax; ++k) {
        const Scalar bk = inv.coeff({k}) * factorial(static_cast<unsigned>(k));
        rec.compare({k}, bernoulli(k), bk);
        rec.compare({k}, zeta_neg(k), -bk / Scalar(k));
        rows.push_back(Json{{"k", k}, {"bernoulli", bk.str()}, {"zeta_1_minus_k", zeta_neg(k).str()}});
    }
    rec.compare({1}, zeta_neg(2), Scalar(-1, 12));
    for (int r = 0; r <= 3; ++r) {
        const Scalar sign(r % 2 == 0 ? 1 : -1);
        rec.compare({r}, regularization_constant(r), sign * zeta_neg(2 * r + 2) / Scalar(2));
    }
    rec.details()["rows"] = std::move(rows);
    return rec.finish();
}

CheckReport graded_dims(const RunConfig& c) {
    const int nmax = 30;
    Json params;
    params["n_max"] = nmax;
    CheckRecorder rec("GRADED-DIM", params);
    (void)c;
    // prod_k (1 - q^k)^{-1} as a product of geometric series
    ScalarSeries prod({power_window("q", nmax)});
    prod.set({0}, Scalar(1));
    for (int k = 1; k <= nmax; ++k) {
        ScalarSeries g({power_window("q", nmax)});
        for (int e = 0; e <= nmax; e += k) {
            g.set({e}, Scalar(1));
        }
        prod = mul(prod, g);
    }
    for (int n = 0; n <= nmax; ++n) {
        rec.compare({n}, Scalar(static_cast<long>(graded_dim(n))), prod.coeff({n}));
    }
    rec.compare({-1}, character_offset(), Scalar(-1, 24));
    rec.details()["character_offset"] = character_offset().str();
    return rec.finish();
}

CheckReport wick(const RunConfig& c) {
    const int x = c.x_window.value_or(3);
    const int w = c.weight_cap.value_or(6);
    const int y = c.y_orders.empty() ? 2 : c.y_orders.front();
    return merge_reports("WICK", basic_params(c), {wick_check(x, w), wick_check(x, w, y)});
}

CheckReport theorem1(const RunConfig& c) {
    Theorem1Params p;
    p.y_orders = padded(c.y_orders, {2, 2, 2, 2});
    p.x_window = c.x_window.value_or(3);
    p.max_weight = c.weight_cap.value_or(6);
    return theorem1_check(p);
}

CheckReport axioms(const RunConfig& c) {
    const int w = c.weight_cap.value_or(3);
    const int x = c.x_window.value_or(4);
    std::vector<CheckReport> parts;
    for (Axiom a : {Axiom::lower_truncation, Axiom::vacuum, Axiom::creation, Axiom::derivative, Axiom::grading}) {
        parts.push_back(axiom_check(a, w, x));
    }
    Json params;
    params["weight_cap"] = w;
    params["mode_window"] = x;
    return merge_reports("AXIOMS", params, parts);
}

std::vector<FockVector> jacobi_vectors() {
    return {v0(), free_boson().omega, FockVector(Partition{1, 1}), FockVector(Partition{2})};
}

CheckReport jacobi(const RunConfig& c) {
    const int w = c.weight_cap.value_or(4);
    const int x = c.x_window.value_or(3);
    std::vector<CheckReport> parts;
    for (const auto& u : jacobi_vectors()) {
        for (const auto& v : jacobi_vectors()) {
            std::vector<CheckReport> per_target;
            for (const auto& b : basis_up_to(w)) {
                per_target.push_back(jacobi_check(u, v, FockVector(b), x));
            }
            Json pp;
            pp["u"] = to_json(u);
            pp["v"] = to_json(v);
            CheckReport r = merge_reports("JACOBI", pp, per_target);
            r.details = Json::object();
            parts.push_back(std::move(r));
        }
    }
    Json params;
    params["weight_cap"] = w;
    params["window"] = x;
    return merge_reports("JACOBI", params, parts);
}

TheoremParams theorem_defaults(const RunConfig& c, std::vector<int> orders, int x_window) {
    TheoremParams p;
    p.y_orders = padded(c.y_orders, std::move(orders));
    p.x_window = c.x_window.value_or(x_window);
    p.max_weight = c.weight_cap.value_or(4);
    return p;
}

/// The default run and the run with omega as first vector.
std::vector<TheoremParams> two_runs(const TheoremParams& p) {
    TheoremParams q = p;
    q.u = free_boson().omega;
    q.u1 = free_boson().omega;
    return {p, q};
}

CheckReport theorem(const std::string& id, const RunConfig& c) {
    const TheoremId tid = parse_theorem(id);
    std::vector<CheckReport> parts;
    switch (tid) {
        case TheoremId::newjacobi:
            for (const auto& p : two_runs(theorem_defaults(c, {2}, 3))) {
                parts.push_back(theorem_check(tid, p));
            }
            break;
        case TheoremId::comm:
            for (const auto& p : two_runs(theorem_defaults(c, {2}, 3))) {
                parts.push_back(theorem_check(tid, p));
                parts.push_back(residue_link_check(p));
            }
            break;
        case TheoremId::genjacobi:
        case TheoremId::gencomm:
            for (const auto& p : two_runs(theorem_defaults(c, {2, 2, 2, 2}, 3))) {
                parts.push_back(theorem_check(tid, p));
            }
            break;
        case TheoremId::fourterm:
            for (const auto& p : two_runs(theorem_defaults(c, {2, 2}, 3))) {
                parts.push_back(theorem_check(tid, p));
            }
            break;
        case TheoremId::specialize:
            parts.push_back(theorem_check(tid, theorem_defaults(c, {1, 1, 1, 1}, 2)));
            break;
        case TheoremId::bridge:
            parts.push_back(theorem_check(tid, theorem_defaults(c, {2}, 3)));
            break;
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    return merge_reports(id, basic_params(c), parts);
}

}  // namespace

void RunConfig::validate() const {
    if (weight_cap && *weight_cap <= 0) {
        throw ConfigError("weight-cap must be positive");
    }
    if (x_window && *x_window <= 0) {
        throw ConfigError("x-window must be positive");
    }
    for (int o : y_orders) {
        if (o < 0) {
            throw ConfigError("y-order must be nonnegative");
        }
    }
    if (mode_range && mode_range->first > mode_range->second) {
        throw ConfigError("mode-range must satisfy lo <= hi");
    }
    if (format != "json-lines" && format != "table") {
        throw ConfigError("format must be json-lines or table");
    }
}

std::pair<int, int> parse_mode_range(const std::string& text) {
    const auto sep = text.find_first_of(":,");
    if (sep == std::string::npos) {
        throw ConfigError("mode-range must look like lo:hi");
    }
    return {parse_int("mode-range", trim(text.substr(0, sep))), parse_int("mode-range", trim(text.substr(sep + 1)))};
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "suite") {
            base.suite = value;
        } else if (key == "weight-cap") {
            base.weight_cap = parse_int(key, value);
        } else if (key == "x-window") {
            base.x_window = parse_int(key, value);
        } else if (key == "y-order") {
            base.y_orders = parse_int_list(key, value);
        } else if (key == "mode-range") {
            base.mode_range = parse_mode_range(value);
        } else if (key == "seed") {
            try {
                base.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ConfigError("invalid seed: " + value);
            }
        } else if (key == "format") {
            base.format = value;
        } else if (key == "out") {
            base.out = value;
        } else if (key == "timing") {
            if (value != "true" && value != "false") {
                throw ConfigError("timing must be true or false");
            }
            base.timing = value == "true";
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
    base.validate();
    return base;
}

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids{
        "HEISENBERG", "VIRASORO",   "MODVIR",  "BLOCH-MONOMIAL", "ZETA-TABLE", "GRADED-DIM",
        "WICK",       "THEOREM1",   "AXIOMS",  "JACOBI",         "NEWJACOBI",  "COMM",
        "GENJACOBI",  "GENCOMM",    "FOURTERM", "SPECIALIZE",    "BRIDGE",     "RES-CHANGE"};
    return ids;
}

std::vector<std::string> select_checks(const std::string& suite) {
    const auto& ids = catalog_ids();
    if (suite == "all") {
        return ids;
    }
    if (suite == "core") {
        return {"HEISENBERG", "VIRASORO", "MODVIR", "GRADED-DIM"};
    }
    if (suite == "zeta") {
        return {"ZETA-TABLE"};
    }
    std::vector<std::string> wanted;
    std::stringstream ss(suite);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        if (std::find(ids.begin(), ids.end(), item) == ids.end()) {
            throw ConfigError("unknown suite or check: " + item);
        }
        wanted.push_back(item);
    }
    std::vector<std::string> out;
    for (const auto& id : ids) {
        if (std::find(wanted.begin(), wanted.end(), id) != wanted.end()) {
            out.push_back(id);
        }
    }
    return out;
}

CheckReport run_check(const std::string& id, const RunConfig& c) {
    if (id == "HEISENBERG") {
        return heisenberg(c);
    }
    if (id == "VIRASORO") {
        return virasoro(c, false);
    }
    if (id == "MODVIR") {
        return virasoro(c, true);
    }
    if (id == "BLOCH-MONOMIAL") {
        return monomial_law(c);
    }
    if (id == "ZETA-TABLE") {
        return zeta_table(c);
    }
    if (id == "GRADED-DIM") {
        return graded_dims(c);
    }
    if (id == "WICK") {
        return wick(c);
    }
    if (id == "THEOREM1") {
        return theorem1(c);
    }
    if (id == "AXIOMS") {
        return axioms(c);
    }
    if (id == "JACOBI") {
        return jacobi(c);
    }
    if (id == "RES-CHANGE") {
        return residue_change_check(c.seed, 50);
    }
    return theorem(id, c);
}

std::vector<CheckReport> run_suite(const RunConfig& config) {
    config.validate();
    std::vector<CheckReport> out;
    for (const auto& id : select_checks(config.suite)) {
        try {
            out.push_back(run_check(id, config));
        } catch (const WindowInsufficient& e) {
            CheckRecorder rec(id, basic_params(config));
            rec.window_error(e.what());
            out.push_back(rec.finish());
        }
    }
    return out;
}

std::string emit_report(const std::vector<CheckReport>& reports, const std::string& format, bool timing) {
    std::ostringstream os;
    if (format == "json-lines") {
        for (const auto& r : reports) {
            os << to_json(r, timing).dump() << '\n';
        }
        return os.str();
    }
    if (format != "table") {
        throw ConfigError("format must be json-lines or table");
    }
    std::size_t width = 5;
    for (const auto& r : reports) {
        width = std::max(width, r.check_id.size());
    }
    auto pad = [](std::string s, std::size_t n) {
        s.resize(std::max(n, s.size()), ' ');
        return s;
    };
    os << pad("check", width) << "  " << pad("status", 19) << "  " << pad("checked", 10) << "  mismatches";
    if (timing) {
        os << "  ms";
    }
    os << '\n';
    for (const auto& r : reports) {
        os << pad(r.check_id, width) << "  " << pad(to_string(r.status), 19) << "  "
           << pad(std::to_string(r.coefficients_checked), 10) << "  " << r.mismatch_count;
        if (timing) {
            os << "  " << r.elapsed_ms;
        }
        os << '\n';
        if (!r.mismatches.empty()) {
            const auto& m = r.mismatches.front();
            Json mono = m.monomial;
            os << "    first mismatch at " << mono.dump();
            if (!m.component.empty()) {
                os << " component " << m.component;
            }
            os << ": lhs " << m.lhs << ", rhs " << m.rhs << '\n';
        }
        if (!r.note.empty()) {
            os << "    " << r.note << '\n';
        }
    }
    return os.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); }) ? 0 : 1;
}

std::string render_table(const std::string& kind, int max) {
    if (max < 0) {
        throw ConfigError("table --max must be nonnegative");
    }
    std::ostringstream os;
    if (kind == "bernoulli") {
        os << "k\tB_k\n";
        for (int k = 0; k <= max; ++k) {
            os << k << '\t' << bernoulli(k).str() << '\n';
        }
    } else if (kind == "zeta") {
        os << "s\tzeta(-s)\n";
        for (int s = 1; s <= max; ++s) {
            os << s << '\t' << zeta_neg(s + 1).str() << '\n';
        }
    } else if (kind == "partitions") {
        os << "n\tp(n)\n";
        for (int n = 0; n <= max; ++n) {
            os << n << '\t' << graded_dim(n) << '\n';
        }
    } else {
        throw ConfigError("unknown table: " + kind);
    }
    return os.str();
}

}  // namespace freeboson
