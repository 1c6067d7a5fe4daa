#include <doctest.h>

#include "freeboson/catalog.hpp"
#include "freeboson/report.hpp"

using namespace freeboson;

namespace {

CheckReport failing_report() {
    CheckRecorder rec("DEMO", Json{{"n", 1}});
    rec.compare({0, 1}, Scalar(1), Scalar(1));
    rec.compare({2, -1}, Scalar(-1, 24), Scalar(1, 12));
    return rec.finish();
}

}  // namespace

TEST_CASE("suite selection") {
    CHECK(catalog_ids().size() == 18);
    CHECK(select_checks("all") == catalog_ids());
    CHECK(select_checks("").empty());
    CHECK(select_checks("core").size() == 4);
    CHECK(select_checks("COMM,HEISENBERG") == std::vector<std::string>{"HEISENBERG", "COMM"});
    CHECK(select_checks("ZETA-TABLE") == std::vector<std::string>{"ZETA-TABLE"});
    CHECK_THROWS_AS(select_checks("NOPE"), ConfigError);
}

TEST_CASE("config parsing") {
    const auto c = parse_config("# run\nsuite = core\nweight-cap = 5\ny-order = 1,2\nmode-range = -2:3\ntiming = true\n");
    CHECK(c.suite == "core");
    CHECK(c.weight_cap == 5);
    CHECK(c.y_orders == std::vector<int>{1, 2});
    CHECK(c.mode_range == std::make_pair(-2, 3));
    CHECK(c.timing);
    RunConfig base;
    base.seed = 9;
    CHECK(parse_config("format = table", base).seed == 9);
    CHECK_THROWS_AS(parse_config("colour = red"), ConfigError);
    CHECK_THROWS_AS(parse_config("weight-cap = many"), ConfigError);
    CHECK(parse_mode_range("-1,4") == std::make_pair(-1, 4));
    RunConfig bad;
    bad.weight_cap = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = {};
    bad.mode_range = std::make_pair(3, 1);
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = {};
    bad.format = "xml";
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("reports are deterministic and carry exact rationals") {
    RunConfig c;
    c.suite = "HEISENBERG,GRADED-DIM,ZETA-TABLE";
    const auto a = run_suite(c);
    const auto b = run_suite(c);
    REQUIRE(a.size() == 3);
    CHECK(exit_code(a) == 0);
    const std::string out = emit_report(a, "json-lines");
    CHECK(out == emit_report(b, "json-lines"));
    CHECK(out.find("elapsed_ms") == std::string::npos);
    CHECK(emit_report(a, "json-lines", true).find("elapsed_ms") != std::string::npos);
    CHECK(out.find("\"-1/24\"") != std::string::npos);
    CHECK(out.find("\"-1/12\"") != std::string::npos);
    const auto line = Json::parse(out.substr(0, out.find('\n')));
    CHECK(line["check"] == "HEISENBERG");
    CHECK(line["status"] == "pass");
}

TEST_CASE("an empty suite succeeds") {
    RunConfig c;
    c.suite = "";
    const auto r = run_suite(c);
    CHECK(r.empty());
    CHECK(exit_code(r) == 0);
    CHECK(emit_report(r, "json-lines").empty());
}

TEST_CASE("failures name the monomial and both sides") {
    const auto r = failing_report();
    CHECK(r.status == CheckStatus::fail);
    CHECK(r.coefficients_checked == 2);
    CHECK(exit_code({r}) == 1);
    const auto j = Json::parse(emit_report({r}, "json-lines"));
    CHECK(j["mismatches"][0]["monomial"] == Json::array({2, -1}));
    CHECK(j["mismatches"][0]["lhs"] == "-1/24");
    CHECK(j["mismatches"][0]["rhs"] == "1/12");
    CHECK(emit_report({r}, "table").find("-1/24") != std::string::npos);
}

TEST_CASE("insufficient windows are not passes") {
    CheckRecorder rec("DEMO", Json::object());
    rec.window_error("window too small");
    const auto r = rec.finish();
    CHECK(r.status == CheckStatus::window_insufficient);
    CHECK(exit_code({r}) == 1);
}

TEST_CASE("merged reports") {
    CheckRecorder ok("A", Json::object());
    ok.compare({0}, Scalar(1), Scalar(1));
    const auto m = merge_reports("AB", Json::object(), {ok.finish(), failing_report()});
    CHECK(m.status == CheckStatus::fail);
    CHECK(m.coefficients_checked == 3);
    CHECK(m.mismatch_count == 1);
    CHECK(m.details["parts"].size() == 2);
    CHECK(m.details["parts"][0]["status"] == "pass");
    CheckRecorder w("W", Json::object());
    w.window_error("x");
    CHECK(merge_reports("ABW", Json::object(), {failing_report(), w.finish()}).status ==
          CheckStatus::window_insufficient);
}

TEST_CASE("tables") {
    const auto b = render_table("bernoulli", 4);
    CHECK(b.find("-1/30") != std::string::npos);
    CHECK(render_table("zeta", 3).find("-1/12") != std::string::npos);
    CHECK(render_table("partitions", 10).find("42") != std::string::npos);
    CHECK_THROWS(render_table("primes", 3));
}
