#pragma once

#include <string>
#include <vector>

#include "planebound/inner_bound.hpp"
#include "planebound/perron.hpp"
#include "planebound/production.hpp"

#include "json.hpp"

namespace planebound {

/// Composed lower bound 2 * r^{1/(k+1)} * inner for one chain family; all
/// reported figures are rounded downward.
struct BoundReport {
    int k = 0;
    std::size_t matrix_dim = 0;
    unsigned digits = 20;
    PerronCertificate perron_cert;
    InnerBoundResult inner;
    BigFloat root;        // certified Perron bound^{1/(k+1)}, rounded down
    BigFloat total_base;  // 2 * root * inner.base, rounded down
    std::string total_base_digits;
};

BoundReport cmd_total(int k, std::size_t m, unsigned digits = 20);

/// Mixed pocket sizes: product matrix bound with a per-cycle root.
/// Exploratory surface; composes exactly like the uniform case.
struct MixedBoundReport {
    std::vector<int> pockets;
    std::size_t matrix_dim = 0;
    unsigned digits = 20;
    int cycle = 0;  // vertices added per matrix application
    PerronCertificate perron_cert;
    MixedInnerResult inner;
    BigFloat root;
    BigFloat total_base;
    std::string total_base_digits;
};

MixedBoundReport cmd_total_mixed(const std::vector<int>& pockets, std::size_t m,
                                 unsigned digits = 20);

struct VerifyOutcome {
    bool pass = true;
    std::vector<std::string> lines;
};

/// Suites: convex | outer | census | swap | lemma2 | primitivity.
/// max_n bounds the instance size where it applies (convex point count,
/// outer chain length).
VerifyOutcome cmd_verify(const std::string& suite, int max_n = 8);

struct Table1Row {
    int k = 0;
    std::vector<Integer> census;  // p_t for t = 1..k
    std::string inner_base;
    std::string total_base;
};

struct Table1Report {
    std::size_t matrix_dim = 0;
    std::vector<Table1Row> rows;
};

/// Census, inner-bound and total-bound lines for k in [k_lo, k_hi] within 2..6.
Table1Report cmd_table1(int k_lo, int k_hi, std::size_t m, unsigned digits = 20);

nlohmann::ordered_json to_json(const BoundReport& report);
nlohmann::ordered_json to_json(const MixedBoundReport& report);
nlohmann::ordered_json to_json(const Table1Report& report);
std::string to_text(const BoundReport& report);
std::string to_text(const MixedBoundReport& report);
std::string to_text(const Table1Report& report);

}  // namespace planebound
