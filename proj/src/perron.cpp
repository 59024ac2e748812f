#include "planebound/perron.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "planebound/production.hpp"

namespace planebound {

namespace {

void require_nonnegative(const ExactMatrix& a, const char* who) {
    if (!a.is_nonnegative())
        throw std::invalid_argument(std::string(who) + ": matrix has negative entries");
}

// Row-major floating copy of an exact matrix, with fma-based products.
struct FloatMatrix {
    std::size_t m = 0;
    mpfr_prec_t prec = 128;
    std::vector<BigFloat> e;

    FloatMatrix(const ExactMatrix& a, mpfr_prec_t p) : m(a.dim()), prec(p) {
        e.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) e.push_back(BigFloat::from(a.at(i, j), p));
    }

    void matvec(const std::vector<BigFloat>& x, std::vector<BigFloat>& y) const {
        for (std::size_t i = 0; i < m; ++i) {
            BigFloat acc(prec);
            for (std::size_t j = 0; j < m; ++j)
                mpfr_fma(acc.raw(), e[i * m + j].raw(), x[j].raw(), acc.raw(), MPFR_RNDN);
            y[i] = std::move(acc);
        }
    }
};

long lower_bandwidth(const ExactMatrix& a) {
    long band = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!a.at(i, j).is_zero()) band = std::max(band, static_cast<long>(i - j));
    return band;
}

// LU of (sigma I - A) without pivoting. Valid whenever sigma exceeds the
// spectral radius (then sigma I - A is an M-matrix and all pivots stay
// positive); a nonpositive pivot reports sigma as too low. Only `band`
// subdiagonals are eliminated, so the cost is O(band * m^2).
struct ShiftedLU {
    std::size_t m;
    long band;
    mpfr_prec_t prec;
    std::vector<BigFloat> f;  // L multipliers below diagonal, U on and above

    ShiftedLU(std::size_t m_, long band_, mpfr_prec_t p) : m(m_), band(band_), prec(p) {}

    bool factor(const ExactMatrix& a, const BigFloat& sigma) {
        f.assign(m * m, BigFloat(prec));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                BigFloat v = BigFloat::from(a.at(i, j), prec);
                mpfr_neg(v.raw(), v.raw(), MPFR_RNDN);
                if (i == j) mpfr_add(v.raw(), v.raw(), sigma.raw(), MPFR_RNDN);
                f[i * m + j] = std::move(v);
            }
        }
        BigFloat tmp(prec);
        for (std::size_t j = 0; j < m; ++j) {
            BigFloat& pivot = f[j * m + j];
            if (pivot.sign() <= 0) return false;
            const std::size_t last = std::min(m - 1, j + static_cast<std::size_t>(band));
            for (std::size_t i = j + 1; i <= last; ++i) {
                BigFloat& lij = f[i * m + j];
                if (lij.is_zero()) continue;
                mpfr_div(lij.raw(), lij.raw(), pivot.raw(), MPFR_RNDN);
                for (std::size_t c = j + 1; c < m; ++c) {
                    mpfr_mul(tmp.raw(), lij.raw(), f[j * m + c].raw(), MPFR_RNDN);
                    mpfr_sub(f[i * m + c].raw(), f[i * m + c].raw(), tmp.raw(), MPFR_RNDN);
                }
            }
        }
        return true;
    }

    void solve(std::vector<BigFloat>& x) const {
        BigFloat tmp(prec);
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t last = std::min(m - 1, j + static_cast<std::size_t>(band));
            for (std::size_t i = j + 1; i <= last; ++i) {
                mpfr_mul(tmp.raw(), f[i * m + j].raw(), x[j].raw(), MPFR_RNDN);
                mpfr_sub(x[i].raw(), x[i].raw(), tmp.raw(), MPFR_RNDN);
            }
        }
        for (std::size_t i = m; i-- > 0;) {
            BigFloat s = x[i];
            for (std::size_t c = i + 1; c < m; ++c) {
                mpfr_mul(tmp.raw(), f[i * m + c].raw(), x[c].raw(), MPFR_RNDN);
                mpfr_sub(s.raw(), s.raw(), tmp.raw(), MPFR_RNDN);
            }
            x[i] = BigFloat::div(s, f[i * m + i], MPFR_RNDN);
        }
    }
};

void sup_normalize(std::vector<BigFloat>& x) {
    const BigFloat* mx = &x[0];
    for (const auto& v : x)
        if (v > *mx) mx = &v;
    if (mx->is_zero()) return;
    const BigFloat scale = *mx;
    for (auto& v : x) v = v / scale;
}

std::vector<Rational> rationalize(const std::vector<BigFloat>& x) {
    std::vector<Rational> r;
    r.reserve(x.size());
    for (const auto& v : x) r.push_back(v.to_rational());
    return r;
}

bool all_positive(const std::vector<BigFloat>& x) {
    for (const auto& v : x)
        if (v.sign() <= 0) return false;
    return true;
}

// Grow a stage witness to the next ladder dimension, continuing the decay
// of the last components.
std::vector<BigFloat> extend_witness(const std::vector<BigFloat>& x, std::size_t m,
                                     mpfr_prec_t prec) {
    std::vector<BigFloat> out;
    out.reserve(m);
    for (const auto& v : x) out.push_back(v);
    BigFloat ratio = BigFloat::from(0.5, prec);
    const std::size_t n = x.size();
    if (n >= 2 && x[n - 2].sign() > 0 && x[n - 1].sign() > 0) {
        BigFloat r = x[n - 1] / x[n - 2];
        if (r.sign() > 0 && r < BigFloat::from(1l, prec)) ratio = r;
    }
    while (out.size() < m) out.push_back(out.back() * ratio);
    return out;
}

}  // namespace

PowerIterationResult power_iteration(const ExactMatrix& a, mpfr_prec_t prec, long max_iter) {
    require_nonnegative(a, "power_iteration");
    const std::size_t m = a.dim();
    FloatMatrix fa(a, prec);

    PowerIterationResult res;
    res.estimate = BigFloat(prec);
    res.vec.assign(m, BigFloat::from(1l, prec));
    std::vector<BigFloat> y(m, BigFloat(prec));
    BigFloat prev(prec);
    bool have_prev = false;

    for (long it = 1; it <= max_iter; ++it) {
        fa.matvec(res.vec, y);
        BigFloat num(prec), den(prec);
        for (std::size_t i = 0; i < m; ++i) {
            mpfr_fma(num.raw(), y[i].raw(), res.vec[i].raw(), num.raw(), MPFR_RNDN);
            mpfr_fma(den.raw(), res.vec[i].raw(), res.vec[i].raw(), den.raw(), MPFR_RNDN);
        }
        res.estimate = num / den;
        res.iterations = it;

        bool vanished = true;
        for (const auto& v : y)
            if (!v.is_zero()) {
                vanished = false;
                break;
            }
        if (vanished) {  // nilpotent direction exhausted; spectral radius 0
            res.estimate = BigFloat(prec);
            res.converged = true;
            return res;
        }
        std::swap(res.vec, y);
        sup_normalize(res.vec);

        if (have_prev) {
            const BigFloat diff = BigFloat::abs(res.estimate - prev);
            const BigFloat tol = BigFloat::mul_2exp(BigFloat::abs(res.estimate), -(prec / 2));
            if (diff <= tol) {
                res.converged = true;
                return res;
            }
        }
        prev = res.estimate;
        have_prev = true;
    }
    return res;  // best so far, converged stays false
}

std::pair<Rational, Rational> collatz_wielandt_bounds(const ExactMatrix& a,
                                                      const std::vector<Rational>& x) {
    require_nonnegative(a, "collatz_wielandt_bounds");
    const std::size_t m = a.dim();
    if (x.size() != m)
        throw std::invalid_argument("collatz_wielandt_bounds: dimension mismatch");
    for (const auto& xi : x)
        if (xi.sign() <= 0)
            throw std::invalid_argument("collatz_wielandt_bounds: witness must be positive");

    // scale the witness to integers; quotients are scale-invariant
    Integer den = 1;
    for (const auto& xi : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), xi.denominator().get_mpz_t());
    std::vector<Integer> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = x[i].numerator() * (den / x[i].denominator());

    const bool integral = a.is_integer();
    bool first = true;
    Rational lo, hi;
    for (std::size_t i = 0; i < m; ++i) {
        Rational quotient;
        if (integral) {
            Integer acc = 0;
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                mpz_addmul(acc.get_mpz_t(), aij.numerator().get_mpz_t(), y[j].get_mpz_t());
            }
            quotient = Rational(acc, y[i]);
        } else {
            Rational acc;
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& aij = a.at(i, j);
                if (!aij.is_zero()) acc += aij * Rational(y[j]);
            }
            quotient = acc / Rational(y[i]);
        }
        if (first || quotient < lo) lo = quotient;
        if (first || quotient > hi) hi = quotient;
        first = false;
    }
    return {lo, hi};
}

Rational certify_lower_bound(const ExactMatrix& a, const std::vector<Rational>& x) {
    return collatz_wielandt_bounds(a, x).first;
}

std::string PerronCertificate::witness_digest() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= ';';
        h *= 1099511628211ull;
    };
    for (const auto& w : witness) feed(w.to_string());
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

PerronCertificate perron_lower(const ExactMatrix& a, unsigned digits) {
    require_nonnegative(a, "perron_lower");
    const auto prim = is_primitive(a);
    if (!prim.primitive) throw std::domain_error("perron_lower: matrix is not primitive");

    const mpfr_prec_t bits =
        std::max<mpfr_prec_t>(128, 64 + static_cast<mpfr_prec_t>(digits) * 10 / 3);
    const mpfr_prec_t lu_bits = bits + 64;
    const std::size_t m = a.dim();
    long iterations = 0;

    // size ladder: converge cheaply on leading principal submatrices first
    std::vector<std::size_t> sizes{m};
    while (sizes.back() > 96) sizes.push_back((sizes.back() + 1) / 2);
    std::reverse(sizes.begin(), sizes.end());

    ExactMatrix base = a.principal_submatrix(sizes.front());
    PowerIterationResult seed = power_iteration(base, bits, 4000);
    iterations += seed.iterations;
    std::vector<BigFloat> x = std::move(seed.vec);
    BigFloat rho = seed.estimate;
    BigFloat margin = BigFloat::mul_2exp(BigFloat::abs(rho), -4) + BigFloat::from(1l, bits);

    PerronCertificate cert;
    cert.dim = m;

    for (std::size_t stage = 0; stage < sizes.size(); ++stage) {
        const std::size_t s = sizes[stage];
        const bool final_stage = (s == m);
        const ExactMatrix sub = final_stage ? a : a.principal_submatrix(s);
        const long band = std::max(lower_bandwidth(sub), 1l);
        ShiftedLU lu(s, band, lu_bits);
        if (stage > 0) x = extend_witness(x, s, bits);
        const BigFloat rho_entry = rho;

        BigFloat sigma = rho + margin;
        const int max_rounds = final_stage ? 12 : 3;
        BigFloat spread = BigFloat::abs(rho);
        Rational lo, hi;
        bool have_bounds = false;
        for (int round = 0; round < max_rounds; ++round) {
            while (!lu.factor(sub, sigma)) {  // sigma at or below the spectral radius
                margin = margin * BigFloat::from(4l, bits);
                sigma = rho + margin;
            }
            const int solves = final_stage ? 10 + 6 * round : 8;
            bool positive = true;
            for (int it = 0; it < solves; ++it) {
                lu.solve(x);
                ++iterations;
                sup_normalize(x);
                positive = all_positive(x);
                if (!positive) {  // rounding artifact: restart from a flat vector
                    x.assign(s, BigFloat::from(1l, bits));
                    break;
                }
            }
            if (!positive) {
                margin = margin * BigFloat::from(4l, bits);
                sigma = rho + margin;
                continue;
            }
            auto bounds = collatz_wielandt_bounds(sub, rationalize(x));
            lo = bounds.first;
            hi = bounds.second;
            have_bounds = true;
            const BigFloat lo_f = BigFloat::from(lo, bits, MPFR_RNDD);
            const BigFloat hi_f = BigFloat::from(hi, bits, MPFR_RNDU);
            spread = hi_f - lo_f;
            rho = lo_f + BigFloat::mul_2exp(spread, -1);
            const BigFloat target = BigFloat::mul_2exp(
                BigFloat::abs(hi_f), -static_cast<long>(digits * 10 / 3 + 6));
            if (spread <= target) break;
            // exact upper bound hi keeps the next shift strictly above rho
            sigma = BigFloat::from(hi, lu_bits, MPFR_RNDU) + BigFloat::mul_2exp(spread, 2) +
                    BigFloat::mul_2exp(BigFloat::abs(hi_f), -static_cast<long>(bits) + 8);
        }
        if (final_stage) {
            if (!have_bounds)
                throw std::runtime_error("perron_lower: could not produce a positive witness");
            cert.lower_bound = lo;
            cert.witness = rationalize(x);
            cert.float_estimate = rho;
            cert.iterations = iterations;
        } else {
            // margin for the next ladder size: the spectral radius grows by
            // roughly a quarter of the previous size step
            margin = (rho - rho_entry) + BigFloat::mul_2exp(spread, 2) +
                     BigFloat::mul_2exp(BigFloat::abs(rho), -24) + BigFloat::mul_2exp(margin, -6);
        }
    }
    return cert;
}

nlohmann::ordered_json to_json(const PerronCertificate& cert) {
    nlohmann::ordered_json j;
    j["dim"] = cert.dim;
    j["lower_bound"] = cert.lower_bound.to_string();
    j["float_estimate"] = cert.float_estimate.to_string(30);
    j["iterations"] = cert.iterations;
    j["witness_digest"] = cert.witness_digest();
    return j;
}

}  // namespace planebound
