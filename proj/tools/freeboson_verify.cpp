#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "freeboson/catalog.hpp"

using namespace freeboson;

namespace {

int run_verify(const std::string& suite, const std::string& config_path, const RunConfig& flags,
               const std::vector<const CLI::Option*>& given) {
    RunConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            throw ConfigError("cannot read config file: " + config_path);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        config = parse_config(ss.str(), config);
    }
    config.suite = suite;
    // flags override the file
    auto set = [&](std::size_t i) { return given[i]->count() > 0; };
    if (set(0)) {
        config.weight_cap = flags.weight_cap;
    }
    if (set(1)) {
        config.x_window = flags.x_window;
    }
    if (set(2)) {
        config.y_orders = flags.y_orders;
    }
    if (set(3)) {
        config.mode_range = flags.mode_range;
    }
    if (set(4)) {
        config.seed = flags.seed;
    }
    if (set(5)) {
        config.format = flags.format;
    }
    if (set(6)) {
        config.out = flags.out;
    }
    if (set(7)) {
        config.timing = true;
    }
    config.validate();
    const auto reports = run_suite(config);
    const std::string text = emit_report(reports, config.format, config.timing);
    if (config.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(config.out, std::ios::binary);
        if (!out) {
            throw ConfigError("cannot write output file: " + config.out);
        }
        out << text;
    }
    return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of free boson vertex operator identities"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run a suite (all, core, zeta) or a check id");
    std::string suite;
    std::string config_path;
    RunConfig flags;
    int weight_cap = 0;
    int x_window = 0;
    std::string mode_range;
    verify->add_option("suite", suite, "Suite name or check id(s), comma separated")->required();
    std::vector<const CLI::Option*> given;
    given.push_back(verify->add_option("--weight-cap", weight_cap, "Weight cap on target vectors"));
    given.push_back(verify->add_option("--x-window", x_window, "Exponent window for x variables"));
    given.push_back(verify->add_option("--y-order", flags.y_orders, "Truncation order per y/w variable (repeatable)")
                        ->delimiter(','));
    given.push_back(verify->add_option("--mode-range", mode_range, "Mode range lo:hi"));
    given.push_back(verify->add_option("--seed", flags.seed, "Seed for sampled properties"));
    given.push_back(verify->add_option("--format", flags.format, "json-lines or table"));
    given.push_back(verify->add_option("--out", flags.out, "Write the report to a file"));
    given.push_back(verify->add_flag("--timing", "Include elapsed_ms in reports"));
    verify->add_option("--config", config_path, "Flat key=value config file");

    auto* table = app.add_subcommand("table", "Print bernoulli, zeta or partitions rows");
    std::string kind;
    int max = 10;
    table->add_option("kind", kind, "bernoulli | zeta | partitions")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "zeta", "partitions"}));
    table->add_option("--max", max, "Largest index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*verify) {
            if (given[0]->count() > 0) {
                flags.weight_cap = weight_cap;
            }
            if (given[1]->count() > 0) {
                flags.x_window = x_window;
            }
            if (given[3]->count() > 0) {
                flags.mode_range = parse_mode_range(mode_range);
            }
            return run_verify(suite, config_path, flags, given);
        }
        std::cout << render_table(kind, max);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
