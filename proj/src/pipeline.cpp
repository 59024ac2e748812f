#include "planebound/pipeline.hpp"

#include <sstream>
#include <stdexcept>

#include "planebound/oracle.hpp"

namespace planebound {

namespace {

// reference census (t = 1..k, k = 2..6), cross-checked by the census suite
const std::vector<std::vector<long>> kCensusReference = {
    {2, 3},
    {3, 7, 11},
    {4, 12, 28, 45},
    {5, 18, 52, 121, 197},
    {6, 25, 84, 237, 550, 903},
};

BigFloat compose_total(const Rational& perron_bound, int cycle, const BigFloat& inner_base,
                       mpfr_prec_t prec, BigFloat& root_out) {
    root_out = BigFloat::rootn(BigFloat::from(perron_bound, prec, MPFR_RNDD),
                               static_cast<unsigned long>(cycle), MPFR_RNDD);
    const BigFloat two = BigFloat::from(2l, prec);
    return BigFloat::mul(BigFloat::mul(two, root_out, MPFR_RNDD), inner_base, MPFR_RNDD);
}

}  // namespace

BoundReport cmd_total(int k, std::size_t m, unsigned digits) {
    if (k < 1 || k > 6) throw std::invalid_argument("cmd_total: k must be in 1..6");
    if (m < static_cast<std::size_t>(k) + 2)
        throw std::invalid_argument("cmd_total: matrix dimension must be at least k+2");

    BoundReport report;
    report.k = k;
    report.matrix_dim = m;
    report.digits = digits;
    report.perron_cert = perron_lower(build_Pprime(k, m), digits);
    report.inner = maximize(k, coverage_census(k));
    const mpfr_prec_t prec = report.perron_cert.float_estimate.precision();
    report.total_base =
        compose_total(report.perron_cert.lower_bound, k + 1, report.inner.base, prec, report.root);
    report.total_base_digits = report.total_base.to_fixed_truncated(15);
    return report;
}

MixedBoundReport cmd_total_mixed(const std::vector<int>& pockets, std::size_t m,
                                 unsigned digits) {
    if (pockets.empty()) throw std::invalid_argument("cmd_total_mixed: empty pocket list");
    for (int k : pockets)
        if (k < 1 || k > 6) throw std::invalid_argument("cmd_total_mixed: k must be in 1..6");

    MixedBoundReport report;
    report.pockets = pockets;
    report.matrix_dim = m;
    report.digits = digits;
    for (int k : pockets) report.cycle += k + 1;
    report.perron_cert = perron_lower(mixed_pocket_product(pockets, m), digits);
    report.inner = maximize_mixed(pockets);
    const mpfr_prec_t prec = report.perron_cert.float_estimate.precision();
    report.total_base = compose_total(report.perron_cert.lower_bound, report.cycle,
                                      report.inner.base, prec, report.root);
    report.total_base_digits = report.total_base.to_fixed_truncated(15);
    return report;
}

namespace {

VerifyOutcome verify_convex(int max_n) {
    VerifyOutcome out;
    for (int n = 3; n <= std::max(3, max_n); ++n) {
        const PointConfig cfg = convex_config(n);
        const DegreeVector oracle = degree_partition(cfg, n - 1);
        const std::size_t m = static_cast<std::size_t>(n);
        const ExactMatrix power = mat_pow(build_convex_C(m), static_cast<unsigned long>(n - 2));
        const DegreeVector produced = mat_vec(power, start_vector(0, m));
        const bool ok = produced == oracle;
        out.pass = out.pass && ok;
        std::ostringstream line;
        line << "convex n=" << n << ": count=" << oracle.sum().get_str()
             << (ok ? " matrix==oracle" : " MISMATCH");
        out.lines.push_back(line.str());
    }
    return out;
}

VerifyOutcome verify_outer(int max_n) {
    VerifyOutcome out;
    for (int k = 1; k <= 3; ++k) {
        for (int pockets = 1; pockets <= 3; ++pockets) {
            const long z = 1 + static_cast<long>(pockets) * (k + 1);
            if (z > std::max<long>(7, max_n)) continue;
            const DegreeVector matrix =
                outer_degree_vector(ChainSpec{k, z, static_cast<std::size_t>(z)});
            const PointConfig cfg = zigzag_outer_config(std::vector<int>(pockets, k));
            const DegreeVector oracle = degree_partition(cfg, static_cast<int>(z) - 1);
            const bool ok = matrix == oracle;
            out.pass = out.pass && ok;
            std::ostringstream line;
            line << "outer k=" << k << " pockets=" << pockets << " z=" << z
                 << ": count=" << oracle.sum().get_str()
                 << (ok ? " matrix==oracle" : " MISMATCH");
            out.lines.push_back(line.str());
        }
    }
    return out;
}

VerifyOutcome verify_census(int) {
    VerifyOutcome out;
    for (int k = 2; k <= 6; ++k) {
        const CoverageCensus census = coverage_census(k);
        bool ok = census.total() == count_crossing_free(pocket_config(k));
        std::ostringstream line;
        line << "census k=" << k << ":";
        for (int t = 1; t <= k; ++t) {
            const Integer& p = census.counts.at(t);
            ok = ok && p == Integer(kCensusReference[k - 2][t - 1]);
            line << " " << p.get_str();
        }
        out.pass = out.pass && ok;
        line << (ok ? "" : " MISMATCH");
        out.lines.push_back(line.str());
    }
    return out;
}

VerifyOutcome verify_swap(int) {
    VerifyOutcome out;
    for (int k1 = 1; k1 <= 3; ++k1) {
        for (int k2 = k1 + 1; k2 <= 3; ++k2) {
            const Integer a = count_crossing_free(zigzag_outer_config({k1, k2}));
            const Integer b = count_crossing_free(zigzag_outer_config({k2, k1}));
            const std::size_t m = 16;
            const DegreeVector va =
                mat_vec(mixed_pocket_product({k1, k2}, m), start_vector(k1, m));
            const DegreeVector vb =
                mat_vec(mixed_pocket_product({k2, k1}, m), start_vector(k2, m));
            const bool ok = a == b && va.sum() == vb.sum();
            out.pass = out.pass && ok;
            std::ostringstream line;
            line << "swap (" << k1 << "," << k2 << "): oracle " << a.get_str() << "=="
                 << b.get_str() << ", matrix sums " << va.sum().get_str() << "=="
                 << vb.sum().get_str() << (ok ? "" : " MISMATCH");
            out.lines.push_back(line.str());
        }
    }
    return out;
}

VerifyOutcome verify_lemma2(int) {
    VerifyOutcome out;
    for (int k = 2; k <= 3; ++k) {
        const long z = 1 + 8 * (k + 1);  // eight pockets
        Integer prev = -1;
        bool ok = true;
        std::ostringstream line;
        line << "lemma2 k=" << k << " z=" << z << " counts:";
        for (std::size_t m : {8u, 16u, 32u, 64u}) {
            const Integer count = outer_degree_vector(ChainSpec{k, z, m}).sum();
            ok = ok && count >= prev;
            prev = count;
            line << " m=" << m << ":" << count.get_str();
        }
        out.pass = out.pass && ok;
        line << (ok ? " nondecreasing" : " VIOLATION");
        out.lines.push_back(line.str());
    }
    return out;
}

VerifyOutcome verify_primitivity(int) {
    VerifyOutcome out;
    for (int k = 1; k <= 6; ++k) {
        for (std::size_t m : {8u, 16u, 32u}) {
            if (m < static_cast<std::size_t>(k) + 2) continue;
            const PrimitivityResult r = is_primitive(build_Pprime(k, m));
            const bool ok = r.primitive && r.witness_exponent <= m + 1;
            out.pass = out.pass && ok;
            std::ostringstream line;
            line << "primitivity k=" << k << " m=" << m << ": witness N="
                 << r.witness_exponent << (ok ? "" : " FAILED");
            out.lines.push_back(line.str());
        }
    }
    return out;
}

}  // namespace

VerifyOutcome cmd_verify(const std::string& suite, int max_n) {
    if (suite == "convex") return verify_convex(max_n);
    if (suite == "outer") return verify_outer(max_n);
    if (suite == "census") return verify_census(max_n);
    if (suite == "swap") return verify_swap(max_n);
    if (suite == "lemma2") return verify_lemma2(max_n);
    if (suite == "primitivity") return verify_primitivity(max_n);
    throw std::invalid_argument("unknown verification suite: " + suite);
}

Table1Report cmd_table1(int k_lo, int k_hi, std::size_t m, unsigned digits) {
    if (k_lo < 2 || k_hi > 6 || k_lo > k_hi)
        throw std::invalid_argument("cmd_table1: supported range is k in 2..6");
    Table1Report report;
    report.matrix_dim = m;
    for (int k = k_lo; k <= k_hi; ++k) {
        Table1Row row;
        row.k = k;
        const CoverageCensus census = coverage_census(k);
        for (int t = 1; t <= k; ++t) row.census.push_back(census.counts.at(t));
        const BoundReport total = cmd_total(k, m, digits);
        row.inner_base = total.inner.base_digits;
        row.total_base = total.total_base.to_fixed_truncated(2);
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::ordered_json to_json(const BoundReport& report) {
    nlohmann::ordered_json j;
    j["k"] = report.k;
    j["matrix_dim"] = report.matrix_dim;
    j["precision_digits"] = report.digits;
    j["perron"] = to_json(report.perron_cert);
    j["inner"] = to_json(report.inner);
    j["root"] = report.root.to_string(25);
    j["total_base"] = report.total_base_digits;
    return j;
}

nlohmann::ordered_json to_json(const MixedBoundReport& report) {
    nlohmann::ordered_json j;
    j["pockets"] = report.pockets;
    j["matrix_dim"] = report.matrix_dim;
    j["precision_digits"] = report.digits;
    j["cycle"] = report.cycle;
    j["perron"] = to_json(report.perron_cert);
    nlohmann::ordered_json inner;
    inner["base"] = report.inner.base_digits;
    inner["log2_base"] = report.inner.log2_base.to_double();
    j["inner"] = std::move(inner);
    j["root"] = report.root.to_string(25);
    j["total_base"] = report.total_base_digits;
    return j;
}

nlohmann::ordered_json to_json(const Table1Report& report) {
    nlohmann::ordered_json j;
    j["matrix_dim"] = report.matrix_dim;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["k"] = row.k;
        nlohmann::ordered_json census;
        for (std::size_t t = 1; t <= row.census.size(); ++t)
            census[std::to_string(t)] = row.census[t - 1].get_ui();
        r["census"] = std::move(census);
        r["inner_base"] = row.inner_base;
        r["total_base"] = row.total_base;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string to_text(const BoundReport& report) {
    std::ostringstream os;
    os << "chain family k=" << report.k << ", matrix dimension " << report.matrix_dim << "\n"
       << "  certified Perron lower bound: "
       << BigFloat::from(report.perron_cert.lower_bound, 256, MPFR_RNDD).to_fixed_truncated(12)
       << "  (exact " << report.perron_cert.lower_bound.to_string().substr(0, 40) << "...)\n"
       << "  float estimate:               "
       << report.perron_cert.float_estimate.to_string(22) << "\n"
       << "  per-pocket root (" << report.k + 1 << "-th):     "
       << report.root.to_fixed_truncated(12) << "\n"
       << "  inner-part base:              " << report.inner.base_digits << "\n"
       << "  total growth base >=          " << report.total_base_digits << "\n";
    return os.str();
}

std::string to_text(const MixedBoundReport& report) {
    std::ostringstream os;
    os << "mixed chain pockets (";
    for (std::size_t i = 0; i < report.pockets.size(); ++i)
        os << (i ? "," : "") << report.pockets[i];
    os << "), matrix dimension " << report.matrix_dim << ", cycle " << report.cycle << "\n"
       << "  certified Perron lower bound: "
       << BigFloat::from(report.perron_cert.lower_bound, 256, MPFR_RNDD).to_fixed_truncated(12)
       << "\n"
       << "  per-cycle root:               " << report.root.to_fixed_truncated(12) << "\n"
       << "  inner-part base:              " << report.inner.base_digits << "\n"
       << "  total growth base >=          " << report.total_base_digits << "\n";
    return os.str();
}

std::string to_text(const Table1Report& report) {
    std::ostringstream os;
    os << "coverage census and bounds (matrix dimension " << report.matrix_dim << ")\n";
    os << "  t\\k";
    for (const auto& row : report.rows) os << "\tZ" << row.k;
    os << "\n";
    std::size_t tmax = 0;
    for (const auto& row : report.rows) tmax = std::max(tmax, row.census.size());
    for (std::size_t t = 1; t <= tmax; ++t) {
        os << "  " << t;
        for (const auto& row : report.rows) {
            os << "\t";
            if (t <= row.census.size()) os << row.census[t - 1].get_str();
            else os << "-";
        }
        os << "\n";
    }
    os << "  inner";
    for (const auto& row : report.rows) os << "\t" << row.inner_base.substr(0, 4);
    os << "\n  total";
    for (const auto& row : report.rows) os << "\t" << row.total_base;
    os << "\n";
    return os.str();
}

}  // namespace planebound
