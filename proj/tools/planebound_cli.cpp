#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "planebound/pipeline.hpp"

namespace {

int run_total(int k, std::size_t size, unsigned precision, const std::vector<int>& pockets,
              bool as_json) {
    if (!pockets.empty()) {
        const auto report = planebound::cmd_total_mixed(pockets, size, precision);
        if (as_json)
            std::cout << planebound::to_json(report).dump(2) << "\n";
        else
            std::cout << planebound::to_text(report);
        return 0;
    }
    const auto report = planebound::cmd_total(k, size, precision);
    if (as_json)
        std::cout << planebound::to_json(report).dump(2) << "\n";
    else
        std::cout << planebound::to_text(report);
    return 0;
}

int run_verify(const std::string& suite, int max_n) {
    const auto outcome = planebound::cmd_verify(suite, max_n);
    for (const auto& line : outcome.lines) std::cout << line << "\n";
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "\n";
    return outcome.pass ? 0 : 1;
}

int run_table1(int k_min, int k_max, std::size_t size, unsigned precision, bool as_json) {
    const auto report = planebound::cmd_table1(k_min, k_max, size, precision);
    if (as_json)
        std::cout << planebound::to_json(report).dump(2) << "\n";
    else
        std::cout << planebound::to_text(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "planebound: certified lower bounds on the number of crossing-free "
        "geometric graphs on generalized double zig-zag chains"};
    app.require_subcommand(1);

    int k = 5;
    std::size_t size = 1024;
    unsigned precision = 20;
    bool as_json = false, as_table = false;
    std::vector<int> pockets;

    auto* total = app.add_subcommand("total", "compose the full lower bound for one chain family");
    total->add_option("--k", k, "pocket size (1..6)")->default_val(5);
    total->add_option("--size", size, "production matrix dimension")->default_val(1024);
    total->add_option("--precision", precision, "decimal digits of agreement to target")
        ->default_val(20);
    total->add_flag("--json", as_json, "JSON report");
    total->add_flag("--table", as_table, "plain-text report (default)");
    total->add_option("--pockets", pockets,
                      "comma-separated pocket sizes for a mixed chain cycle, e.g. 2,3,2")
        ->delimiter(',');

    std::string suite;
    int max_n = 8;
    auto* verify = app.add_subcommand("verify", "run an oracle-vs-matrix or property suite");
    verify->add_option("suite", suite,
                       "one of: convex | outer | census | swap | lemma2 | primitivity")
        ->required();
    verify->add_option("--max-n", max_n, "instance size limit where applicable")->default_val(8);

    int k_min = 2, k_max = 6;
    auto* table1 = app.add_subcommand("table1", "census plus inner/total bound lines per k");
    table1->add_option("--k-min", k_min)->default_val(2);
    table1->add_option("--k-max", k_max)->default_val(6);
    table1->add_option("--size", size, "production matrix dimension")->default_val(1024);
    table1->add_option("--precision", precision)->default_val(20);
    table1->add_flag("--json", as_json, "JSON report");
    table1->add_flag("--table", as_table, "plain-text report (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (total->parsed()) return run_total(k, size, precision, pockets, as_json);
        if (verify->parsed()) return run_verify(suite, max_n);
        if (table1->parsed()) return run_table1(k_min, k_max, size, precision, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
