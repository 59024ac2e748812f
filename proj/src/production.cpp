#include "planebound/production.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace planebound {

namespace {

Integer binom(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::vector<Rational> unit_vector(std::size_t m, std::size_t i) {
    std::vector<Rational> v(m);
    v[i] = Rational(1);
    return v;
}

void require_pocket_args(int k, std::size_t m) {
    if (k < 1) throw std::invalid_argument("pocket size k must be >= 1");
    if (m < static_cast<std::size_t>(k) + 2)
        throw std::invalid_argument("matrix dimension must be at least k+2");
}

// Positivity patterns as bit rows; enough for primitivity checking without
// ever forming exact powers.
class BitMatrix {
public:
    BitMatrix(std::size_t m) : m_(m), words_((m + 63) / 64), bits_(m * words_) {}

    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= 1ull << (j % 64); }

    bool all_ones() const {
        for (std::size_t i = 0; i < m_; ++i) {
            const std::uint64_t* row = &bits_[i * words_];
            for (std::size_t w = 0; w + 1 < words_; ++w)
                if (~row[w]) return false;
            const unsigned rem = m_ % 64;
            const std::uint64_t last = rem ? ((1ull << rem) - 1) : ~0ull;
            if ((row[words_ - 1] & last) != last) return false;
        }
        return true;
    }

    bool has_zero_row_or_col() const {
        std::vector<std::uint64_t> colmask(words_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) {
                any = any || bits_[i * words_ + w];
                colmask[w] |= bits_[i * words_ + w];
            }
            if (!any) return true;
        }
        for (std::size_t j = 0; j < m_; ++j)
            if (!(colmask[j / 64] >> (j % 64) & 1)) return true;
        return false;
    }

    friend BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix c(a.m_);
        for (std::size_t i = 0; i < a.m_; ++i) {
            std::uint64_t* crow = &c.bits_[i * c.words_];
            for (std::size_t w = 0; w < a.words_; ++w) {
                std::uint64_t bitsw = a.bits_[i * a.words_ + w];
                while (bitsw) {
                    const std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bitsw));
                    bitsw &= bitsw - 1;
                    const std::uint64_t* brow = &b.bits_[k * b.words_];
                    for (std::size_t v = 0; v < b.words_; ++v) crow[v] |= brow[v];
                }
            }
        }
        return c;
    }

private:
    std::size_t m_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

void ChainSpec::validate() const {
    if (k < 1) throw std::invalid_argument("ChainSpec: k must be >= 1");
    if (z < k + 2) throw std::invalid_argument("ChainSpec: z must be >= k+2");
    if ((z - 1) % (k + 1) != 0)
        throw std::invalid_argument("ChainSpec: z must be 1 mod (k+1), got z=" + std::to_string(z));
    if (m < static_cast<std::size_t>(k) + 2)
        throw std::invalid_argument("ChainSpec: m must be at least k+2");
}

ExactMatrix build_R(std::size_t m) {
    ExactMatrix a(m);
    for (std::size_t j = 0; j < m; ++j) a.at(0, j) = Rational(1);
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) a.at(i, j) = Rational(2);
    return a;
}

ExactMatrix build_S(std::size_t m) {
    ExactMatrix a(m);
    for (std::size_t i = 1; i < m; ++i) a.at(i, i - 1) = Rational(1);
    return a;
}

ExactMatrix build_convex_C(std::size_t m) { return mat_add(build_R(m), build_S(m)); }

std::vector<Rational> apply_R(std::vector<Rational> v) {
    const std::size_t m = v.size();
    Rational suffix;
    for (std::size_t i = m; i-- > 0;) {
        suffix += v[i];
        v[i] = (i == 0) ? suffix : Rational(2) * suffix;
    }
    return v;
}

std::vector<Rational> apply_R_inverse(std::vector<Rational> v) {
    const std::size_t m = v.size();
    const Rational half(1, 2);
    // from suffix sums: T_1 = v_1, T_i = v_i/2 for i >= 2, x_i = T_i - T_{i+1}
    std::vector<Rational> x(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational ti = (i == 0) ? v[0] : v[i] * half;
        Rational tnext = (i + 1 < m) ? v[i + 1] * half : Rational(0);
        x[i] = ti - tnext;
    }
    return x;
}

std::vector<Rational> apply_shift(const std::vector<Rational>& v, unsigned l) {
    const std::size_t m = v.size();
    std::vector<Rational> out(m);
    for (std::size_t i = l; i < m; ++i) out[i] = v[i - l];
    return out;
}

std::vector<Rational> apply_leading_L(int k, const std::vector<Rational>& v) {
    require_pocket_args(k, v.size());
    const std::size_t m = v.size();
    std::vector<Rational> out = apply_R(v);
    std::vector<Rational> u = v;  // R^{1-mu} v, starting at mu = 1
    for (int mu = 1; mu <= k + 1; ++mu) {
        if (mu > 1) u = apply_R_inverse(std::move(u));
        for (int l = 1; l <= mu; ++l) {
            const Rational c(binom(mu - 1, l - 1));
            for (std::size_t i = static_cast<std::size_t>(l); i < m; ++i)
                out[i] += c * u[i - l];
        }
    }
    return out;
}

std::vector<Rational> apply_Pprime(int k, const std::vector<Rational>& v) {
    require_pocket_args(k, v.size());
    const std::size_t m = v.size();
    std::vector<std::vector<Rational>> pw;  // R^j v for j = 0..k+1
    pw.reserve(k + 2);
    pw.push_back(v);
    for (int j = 0; j <= k; ++j) pw.push_back(apply_R(pw.back()));
    std::vector<Rational> out = pw[k + 1];
    for (int mu = 1; mu <= k + 1; ++mu) {
        const std::vector<Rational>& base = pw[k + 1 - mu];
        for (int l = 1; l <= mu; ++l) {
            const Rational c(binom(mu - 1, l - 1));
            for (std::size_t i = static_cast<std::size_t>(l); i < m; ++i)
                out[i] += c * base[i - l];
        }
    }
    return out;
}

namespace {

ExactMatrix from_columns(std::size_t m, const std::vector<std::vector<Rational>>& cols) {
    ExactMatrix a(m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < m; ++i) a.at(i, c) = cols[c][i];
    return a;
}

}  // namespace

ExactMatrix build_leading_L(int k, std::size_t m) {
    require_pocket_args(k, m);
    std::vector<std::vector<Rational>> cols(m);
    for (std::size_t c = 0; c < m; ++c) cols[c] = apply_leading_L(k, unit_vector(m, c));
    return from_columns(m, cols);
}

ExactMatrix build_pocket_P(int k, std::size_t m) {
    require_pocket_args(k, m);
    std::vector<std::vector<Rational>> cols(m);
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> v = apply_leading_L(k, unit_vector(m, c));
        for (int j = 0; j < k; ++j) v = apply_R(std::move(v));
        cols[c] = std::move(v);
    }
    return from_columns(m, cols);
}

ExactMatrix build_Pprime(int k, std::size_t m) {
    require_pocket_args(k, m);
    std::vector<std::vector<Rational>> cols(m);
    for (std::size_t c = 0; c < m; ++c) cols[c] = apply_Pprime(k, unit_vector(m, c));
    ExactMatrix a = from_columns(m, cols);
    if (!a.is_nonnegative() || !a.is_integer())
        throw std::logic_error("build_Pprime: result is not a nonnegative integer matrix");
    return a;
}

DegreeVector start_vector(int k, std::size_t m) {
    if (k < 0) throw std::invalid_argument("start_vector: k must be >= 0");
    DegreeVector v(m);
    v[0] = 1;
    return v;
}

DegreeVector outer_degree_vector(const ChainSpec& spec) {
    spec.validate();
    const long applications = spec.pockets() - 1;
    std::vector<Rational> v = unit_vector(spec.m, 0);
    if (applications >= 1) {
        v = apply_leading_L(spec.k, v);
        for (long i = 0; i < applications - 1; ++i) v = apply_Pprime(spec.k, v);
        for (int j = 0; j < spec.k; ++j) v = apply_R(std::move(v));
    }
    return DegreeVector::from_rationals(v);
}

PrimitivityResult is_primitive(const ExactMatrix& a) {
    if (!a.is_nonnegative())
        throw std::invalid_argument("is_primitive: matrix has negative entries");
    const std::size_t m = a.dim();
    BitMatrix base(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (a.at(i, j).sign() > 0) base.set(i, j);

    if (base.has_zero_row_or_col()) return {false, 0};

    // Wielandt: a primitive matrix has A^N > 0 for N = m^2 - 2m + 2, and once
    // A^w > 0 every larger power stays positive (no zero rows or columns).
    const unsigned long bound = (m <= 1) ? 1 : (m - 1) * m;
    BitMatrix power = base;
    unsigned long n = 1;
    while (n <= 64 && n <= bound) {
        if (power.all_ones()) return {true, n};
        power = multiply(power, base);
        ++n;
    }
    while (n < 2 * bound) {
        if (power.all_ones()) return {true, n};
        power = multiply(power, power);
        n *= 2;
    }
    return power.all_ones() ? PrimitivityResult{true, n} : PrimitivityResult{false, 0};
}

ExactMatrix mixed_pocket_product(const std::vector<int>& ks, std::size_t m) {
    if (ks.empty()) throw std::invalid_argument("mixed_pocket_product: empty pocket list");
    for (int k : ks) require_pocket_args(k, m);
    std::vector<std::vector<Rational>> cols(m);
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> v = unit_vector(m, c);
        for (int k : ks) v = apply_Pprime(k, v);
        cols[c] = std::move(v);
    }
    return from_columns(m, cols);
}

PocketMatrixSet build_pocket_set(int k, std::size_t m) {
    return PocketMatrixSet{build_R(m), build_S(m), build_leading_L(k, m),
                           build_pocket_P(k, m), build_Pprime(k, m)};
}

}  // namespace planebound
