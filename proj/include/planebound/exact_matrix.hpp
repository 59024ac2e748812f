#pragma once

#include <cstddef>
#include <vector>

#include "planebound/rational.hpp"

#include "json.hpp"

namespace planebound {

/// Dense square matrix of exact rationals. Dimension is fixed at
/// construction; entries are mutable until the matrix is handed around
/// by value, which is how all operations treat their inputs.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("ExactMatrix: dimension must be positive");
    }

    static ExactMatrix identity(std::size_t dim) {
        ExactMatrix a(dim);
        for (std::size_t i = 0; i < dim; ++i) a.at(i, i) = Rational(1);
        return a;
    }

    std::size_t dim() const { return dim_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    bool is_nonnegative() const;
    bool is_integer() const;
    bool is_upper_triangular_with_nonzero_diagonal() const;

    /// Leading principal submatrix of the given dimension.
    ExactMatrix principal_submatrix(std::size_t dim) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

private:
    std::size_t dim_;
    std::vector<Rational> e_;
};

/// Exact nonnegative integer vector; entry j counts the graphs whose root
/// vertex has degree j.
class DegreeVector {
public:
    explicit DegreeVector(std::size_t dim) : v_(dim) {
        if (dim == 0) throw std::invalid_argument("DegreeVector: dimension must be positive");
    }
    explicit DegreeVector(std::vector<Integer> v) : v_(std::move(v)) {}

    std::size_t dim() const { return v_.size(); }
    Integer& operator[](std::size_t i) { return v_[i]; }
    const Integer& operator[](std::size_t i) const { return v_[i]; }

    Integer sum() const {
        Integer s = 0;
        for (const auto& x : v_) s += x;
        return s;
    }

    std::vector<Rational> to_rationals() const {
        std::vector<Rational> r;
        r.reserve(v_.size());
        for (const auto& x : v_) r.emplace_back(x);
        return r;
    }

    /// Converts an exact rational vector, rejecting negative or fractional
    /// entries; a failure here means a production construction is wrong.
    static DegreeVector from_rationals(const std::vector<Rational>& r);

    friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
        return a.v_ == b.v_;
    }

private:
    std::vector<Integer> v_;
};

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_pow(const ExactMatrix& a, unsigned long e);

/// Exact inverse of an upper triangular matrix with nonzero diagonal.
ExactMatrix upper_tri_inverse(const ExactMatrix& a);

/// Exact matrix-vector product over the rationals.
std::vector<Rational> mat_apply(const ExactMatrix& a, const std::vector<Rational>& v);

/// Production application: result must be a nonnegative integer vector.
/// Throws std::logic_error otherwise (a construction bug, not user error).
DegreeVector mat_vec(const ExactMatrix& a, const DegreeVector& v);

inline ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) { return mat_add(a, b); }
inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

// JSON scheme: { "dim": m, "entries": [["num/den", ...], ...] }
nlohmann::ordered_json to_json(const ExactMatrix& a);
ExactMatrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace planebound
