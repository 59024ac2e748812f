#include "planebound/exact_matrix.hpp"

#include <stdexcept>

namespace planebound {

namespace {

void require_same_dim(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
}

}  // namespace

bool ExactMatrix::is_nonnegative() const {
    for (const auto& x : e_)
        if (x.sign() < 0) return false;
    return true;
}

bool ExactMatrix::is_integer() const {
    for (const auto& x : e_)
        if (!x.is_integer()) return false;
    return true;
}

bool ExactMatrix::is_upper_triangular_with_nonzero_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        if (at(i, i).is_zero()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::principal_submatrix(std::size_t dim) const {
    if (dim == 0 || dim > dim_)
        throw std::invalid_argument("principal_submatrix: bad dimension");
    ExactMatrix s(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) s.at(i, j) = at(i, j);
    return s;
}

DegreeVector DegreeVector::from_rationals(const std::vector<Rational>& r) {
    std::vector<Integer> v;
    v.reserve(r.size());
    for (const auto& x : r) {
        if (!x.is_integer() || x.sign() < 0)
            throw std::logic_error("production application produced entry " + x.to_string() +
                                   "; expected a nonnegative integer");
        v.push_back(x.numerator());
    }
    return DegreeVector(std::move(v));
}

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_dim(a, b);
    const std::size_t m = a.dim();
    ExactMatrix c(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_dim(a, b);
    const std::size_t m = a.dim();
    ExactMatrix c(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

ExactMatrix mat_pow(const ExactMatrix& a, unsigned long e) {
    ExactMatrix result = ExactMatrix::identity(a.dim());
    ExactMatrix base = a;
    while (e > 0) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return result;
}

ExactMatrix upper_tri_inverse(const ExactMatrix& a) {
    if (!a.is_upper_triangular_with_nonzero_diagonal())
        throw std::invalid_argument(
            "upper_tri_inverse: matrix is not upper triangular with nonzero diagonal");
    const std::size_t m = a.dim();
    ExactMatrix inv(m);
    // back-substitution, one unit vector per column
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t ii = m; ii-- > 0;) {
            Rational s = (ii == c) ? Rational(1) : Rational(0);
            for (std::size_t j = ii + 1; j < m; ++j) s -= a.at(ii, j) * inv.at(j, c);
            inv.at(ii, c) = s / a.at(ii, ii);
        }
    }
    return inv;
}

std::vector<Rational> mat_apply(const ExactMatrix& a, const std::vector<Rational>& v) {
    const std::size_t m = a.dim();
    if (v.size() != m) throw std::invalid_argument("mat_apply: vector dimension mismatch");
    std::vector<Rational> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational s;
        for (std::size_t j = 0; j < m; ++j) {
            const Rational& aij = a.at(i, j);
            if (!aij.is_zero() && !v[j].is_zero()) s += aij * v[j];
        }
        out[i] = s;
    }
    return out;
}

DegreeVector mat_vec(const ExactMatrix& a, const DegreeVector& v) {
    if (v.dim() != a.dim()) throw std::invalid_argument("mat_vec: dimension mismatch");
    return DegreeVector::from_rationals(mat_apply(a, v.to_rationals()));
}

nlohmann::ordered_json to_json(const ExactMatrix& a) {
    nlohmann::ordered_json j;
    j["dim"] = a.dim();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(a.at(i, c).to_string());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ExactMatrix matrix_from_json(const nlohmann::ordered_json& j) {
    const std::size_t m = j.at("dim").get<std::size_t>();
    ExactMatrix a(m);
    const auto& rows = j.at("entries");
    if (rows.size() != m) throw std::invalid_argument("matrix_from_json: row count mismatch");
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != m)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (std::size_t c = 0; c < m; ++c)
            a.at(i, c) = Rational::from_string(rows[i][c].get<std::string>());
    }
    return a;
}

}  // namespace planebound
