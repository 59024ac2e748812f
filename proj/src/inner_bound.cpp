#include "planebound/inner_bound.hpp"

#include <cmath>
#include <stdexcept>

namespace planebound {

namespace {

constexpr mpfr_prec_t kPolishPrec = 224;

// The generic optimization problem: several pockets per chain cycle, one
// covering profile each, all sharing the uncovered double-chain leftover.
// The uniform case is a single pocket per cycle.
struct Problem {
    std::vector<int> ks;
    std::vector<std::vector<double>> log_p;  // log2 census counts, index t-1
    std::vector<CoverageCensus> censuses;
    int cycle = 0;  // sum of k_i + 1

    explicit Problem(std::vector<int> ks_in) : ks(std::move(ks_in)) {
        for (int k : ks) {
            censuses.push_back(coverage_census(k));
            cycle += k + 1;
        }
        init_logs();
    }
    Problem(int k, CoverageCensus census) : ks{k} {
        censuses.push_back(std::move(census));
        cycle = k + 1;
        init_logs();
    }

    void init_logs() {
        for (std::size_t p = 0; p < ks.size(); ++p) {
            std::vector<double> lp;
            for (int t = 1; t <= ks[p]; ++t) {
                const Integer& count = censuses[p].counts.at(t);
                const double c = count.get_d();
                if (c <= 0)
                    throw std::invalid_argument("census count p_" + std::to_string(t) +
                                                " must be positive");
                lp.push_back(std::log2(c));
            }
            log_p.push_back(std::move(lp));
        }
    }

    // flat parameter vector: profiles concatenated pocket by pocket
    std::size_t size() const {
        std::size_t s = 0;
        for (int k : ks) s += static_cast<std::size_t>(k);
        return s;
    }

    double eval(const std::vector<double>& a, double log2d) const {
        double xi = 0.0, cover = 0.0;
        std::size_t off = 0;
        for (std::size_t p = 0; p < ks.size(); ++p) {
            const int k = ks[p];
            double rem = 1.0;
            for (int t = k; t >= 1; --t) {
                const double at = a[off + t - 1];
                if (rem > 1e-300 && at > 0) xi += entropy(at / rem) * rem;
                xi += log_p[p][t - 1] * at;
                cover += t * at;
                rem -= at;
            }
            off += k;
        }
        return (xi + (cycle - cover) * log2d) / cycle;
    }
};

double golden_max(const std::vector<double>& a, std::size_t idx, double lo, double hi,
                  const Problem& prob, double log2d, double tol) {
    static const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    std::vector<double> work = a;
    auto f = [&](double v) {
        work[idx] = v;
        return prob.eval(work, log2d);
    };
    double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc < fd) {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        } else {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        }
    }
    return (lo + hi) / 2;
}

// coordinate ascent from one start; respects sum(alpha) <= 1 per pocket
void ascend(std::vector<double>& a, const Problem& prob, double log2d, double tol,
            int max_sweeps) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double delta = 0.0;
        std::size_t off = 0;
        for (std::size_t p = 0; p < prob.ks.size(); ++p) {
            const int k = prob.ks[p];
            for (int t = 1; t <= k; ++t) {
                const std::size_t idx = off + t - 1;
                double others = 0.0;
                for (int s = 1; s <= k; ++s)
                    if (s != t) others += a[off + s - 1];
                const double old = a[idx];
                a[idx] = golden_max(a, idx, 0.0, 1.0 - others, prob, log2d, 1e-15);
                delta = std::max(delta, std::fabs(a[idx] - old));
            }
            off += k;
        }
        if (delta < tol) break;
    }
}

std::vector<double> solve_double(const Problem& prob, double tolerance) {
    const double log2d = std::log2(2.0 + std::sqrt(2.0));
    const std::size_t n = prob.size();
    std::vector<std::vector<double>> starts;
    for (double s : {0.05, 0.1, 0.2}) starts.emplace_back(n, s);
    starts.emplace_back(n, 0.0);
    {
        std::vector<double> per(n);
        std::size_t off = 0;
        for (int k : prob.ks) {
            for (int t = 0; t < k; ++t) per[off + t] = 0.5 / k;
            off += k;
        }
        starts.push_back(std::move(per));
    }
    std::vector<double> best;
    double best_val = -1e300;
    for (auto& start : starts) {
        ascend(start, prob, log2d, std::min(tolerance, 1e-13), 400);
        const double val = prob.eval(start, log2d);
        if (val > best_val) {
            best_val = val;
            best = start;
        }
    }
    return best;
}

// High-precision evaluation of the same objective.
BigFloat eval_big(const Problem& prob, const std::vector<BigFloat>& a, mpfr_prec_t prec) {
    const BigFloat one = BigFloat::from(1l, prec);
    const BigFloat log2d = BigFloat::log2(double_chain_base(prec));
    BigFloat xi(prec), cover(prec);
    std::size_t off = 0;
    for (std::size_t p = 0; p < prob.ks.size(); ++p) {
        const int k = prob.ks[p];
        BigFloat rem = one;
        for (int t = k; t >= 1; --t) {
            const BigFloat& at = a[off + t - 1];
            if (at.sign() < 0) throw std::invalid_argument("profile entry is negative");
            if (at.sign() > 0) {
                if (rem.sign() > 0) xi = xi + entropy(at / rem) * rem;
                xi = xi + BigFloat::log2(BigFloat::from(prob.censuses[p].counts.at(t), prec)) * at;
            }
            cover = cover + BigFloat::from(static_cast<long>(t), prec) * at;
            rem = rem - at;
        }
        if (rem.sign() < 0) throw std::invalid_argument("profile fractions exceed 1");
        off += k;
    }
    const BigFloat c = BigFloat::from(static_cast<long>(prob.cycle), prec);
    return (xi + (c - cover) * log2d) / c;
}

void polish_big(const Problem& prob, std::vector<BigFloat>& a, mpfr_prec_t prec) {
    const BigFloat one = BigFloat::from(1l, prec);
    const BigFloat g = (BigFloat::sqrt(BigFloat::from(5l, prec)) - one) /
                       BigFloat::from(2l, prec);
    const BigFloat tol = BigFloat::mul_2exp(one, -(static_cast<long>(prec) / 2));
    for (int sweep = 0; sweep < 60; ++sweep) {
        BigFloat delta(prec);
        std::size_t off = 0;
        for (std::size_t p = 0; p < prob.ks.size(); ++p) {
            const int k = prob.ks[p];
            for (int t = 1; t <= k; ++t) {
                const std::size_t idx = off + t - 1;
                BigFloat others(prec);
                for (int s = 1; s <= k; ++s)
                    if (s != t) others = others + a[off + s - 1];
                BigFloat lo(prec), hi = one - others;
                auto f = [&](const BigFloat& v) {
                    BigFloat saved = a[idx];
                    a[idx] = v;
                    BigFloat r = eval_big(prob, a, prec);
                    a[idx] = std::move(saved);
                    return r;
                };
                BigFloat c = hi - g * (hi - lo), d = lo + g * (hi - lo);
                BigFloat fc = f(c), fd = f(d);
                while (hi - lo > tol) {
                    if (fc < fd) {
                        lo = c;
                        c = d;
                        fc = fd;
                        d = lo + g * (hi - lo);
                        fd = f(d);
                    } else {
                        hi = d;
                        d = c;
                        fd = fc;
                        c = hi - g * (hi - lo);
                        fc = f(c);
                    }
                }
                BigFloat mid = (lo + hi) / BigFloat::from(2l, prec);
                BigFloat change = BigFloat::abs(mid - a[idx]);
                if (change > delta) delta = change;
                a[idx] = std::move(mid);
            }
            off += k;
        }
        if (delta <= BigFloat::mul_2exp(one, -(static_cast<long>(prec) * 2 / 5))) break;
    }
}

// The reported value must stay below the true objective at the returned
// profile; the rounding slack dwarfs the evaluation error by many orders.
BigFloat certified_down(const Problem& prob, const std::vector<BigFloat>& a, mpfr_prec_t prec) {
    const BigFloat value = eval_big(prob, a, prec);
    return value - BigFloat::mul_2exp(BigFloat::from(1l, prec), -100);
}

}  // namespace

double entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("entropy: argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

BigFloat entropy(const BigFloat& x) {
    const mpfr_prec_t prec = x.precision();
    const BigFloat zero(prec);
    const BigFloat one = BigFloat::from(1l, prec);
    if (x < zero || x > one) throw std::domain_error("entropy: argument outside [0, 1]");
    if (x.is_zero() || x == one) return zero;
    const BigFloat y = one - x;
    return -(x * BigFloat::log2(x)) - y * BigFloat::log2(y);
}

BigFloat double_chain_base(mpfr_prec_t prec) {
    const BigFloat s2 = BigFloat::sqrt(BigFloat::from(2l, prec));
    const BigFloat num = BigFloat::from(10l, prec) + BigFloat::from(7l, prec) * s2;
    const BigFloat den = BigFloat::from(3l, prec) + BigFloat::from(2l, prec) * s2;
    return num / den;
}

void CoverageProfile::validate() const {
    if (k < 1 || alpha.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("CoverageProfile: need one fraction per t = 1..k");
    BigFloat sum(kPolishPrec);
    for (const auto& a : alpha) {
        if (a.sign() < 0) throw std::invalid_argument("CoverageProfile: negative fraction");
        sum = sum + a;
    }
    if (sum > BigFloat::from(1l, kPolishPrec))
        throw std::invalid_argument("CoverageProfile: fractions sum beyond 1");
}

BigFloat objective(const CoverageCensus& census, const CoverageProfile& profile) {
    if (census.k != profile.k) throw std::invalid_argument("objective: census/profile k mismatch");
    profile.validate();
    Problem prob(profile.k, census);
    mpfr_prec_t prec = kPolishPrec;
    for (const auto& a : profile.alpha) prec = std::max(prec, a.precision());
    std::vector<BigFloat> a;
    for (const auto& v : profile.alpha) a.push_back(BigFloat::from(v.to_rational(), prec));
    return eval_big(prob, a, prec);
}

namespace {

InnerBoundResult package_uniform(const Problem& prob, const std::vector<BigFloat>& a) {
    InnerBoundResult res;
    res.k = prob.ks[0];
    res.profile.k = res.k;
    res.profile.alpha = a;
    res.log2_base = certified_down(prob, a, kPolishPrec);
    res.base = BigFloat::exp2(res.log2_base, MPFR_RNDD);
    res.base_digits = res.base.to_fixed_truncated(10);
    return res;
}

std::vector<BigFloat> run_optimizer(const Problem& prob, double tolerance) {
    std::vector<double> best = solve_double(prob, tolerance);
    std::vector<BigFloat> a;
    a.reserve(best.size());
    for (double v : best) a.push_back(BigFloat::from(v, kPolishPrec));
    polish_big(prob, a, kPolishPrec);
    return a;
}

}  // namespace

InnerBoundResult maximize(int k, const CoverageCensus& census, double tolerance) {
    if (census.k != k) throw std::invalid_argument("maximize: census is for a different k");
    if (tolerance <= 0) throw std::invalid_argument("maximize: tolerance must be positive");
    Problem prob(k, census);
    return package_uniform(prob, run_optimizer(prob, tolerance));
}

MixedInnerResult maximize_mixed(const std::vector<int>& ks, double tolerance) {
    if (ks.empty()) throw std::invalid_argument("maximize_mixed: empty pocket list");
    Problem prob(ks);
    std::vector<BigFloat> a = run_optimizer(prob, tolerance);
    MixedInnerResult res;
    res.ks = ks;
    std::size_t off = 0;
    for (int k : ks) {
        CoverageProfile profile;
        profile.k = k;
        profile.alpha.assign(a.begin() + off, a.begin() + off + k);
        res.profiles.push_back(std::move(profile));
        off += k;
    }
    res.log2_base = certified_down(prob, a, kPolishPrec);
    res.base = BigFloat::exp2(res.log2_base, MPFR_RNDD);
    res.base_digits = res.base.to_fixed_truncated(10);
    return res;
}

nlohmann::ordered_json to_json(const InnerBoundResult& result) {
    nlohmann::ordered_json j;
    j["k"] = result.k;
    nlohmann::ordered_json alpha;
    for (int t = result.k; t >= 1; --t)
        alpha[std::to_string(t)] = result.profile.alpha[t - 1].to_double();
    j["alpha"] = std::move(alpha);
    j["log2_base"] = result.log2_base.to_double();
    j["base"] = result.base_digits;
    return j;
}

}  // namespace planebound
