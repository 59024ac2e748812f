#include "doctest.h"

#include <random>

#include "planebound/exact_matrix.hpp"
#include "planebound/production.hpp"

using namespace planebound;

namespace {

ExactMatrix random_small_matrix(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    ExactMatrix a(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a.at(i, j) = Rational(num(rng), den(rng));
    return a;
}

}  // namespace

TEST_CASE("addition: identity element and doubling") {
    const ExactMatrix s = build_S(6);
    const ExactMatrix zero(6);
    CHECK(mat_add(s, zero) == s);
    const ExactMatrix two_s = mat_add(s, s);
    for (std::size_t i = 1; i < 6; ++i) CHECK(two_s.at(i, i - 1) == Rational(2));
    CHECK_THROWS_AS(mat_add(s, ExactMatrix(5)), std::invalid_argument);
}

TEST_CASE("multiplication: shift composition and triangular inverse") {
    const ExactMatrix s = build_S(6);
    const ExactMatrix s2 = mat_mul(s, s);
    for (std::size_t i = 2; i < 6; ++i) CHECK(s2.at(i, i - 2) == Rational(1));
    CHECK(s2.at(1, 0) == Rational(0));

    const ExactMatrix r = build_R(6);
    CHECK(mat_mul(r, upper_tri_inverse(r)) == ExactMatrix::identity(6));
    CHECK(mat_mul(upper_tri_inverse(r), r) == ExactMatrix::identity(6));
    CHECK_THROWS_AS(mat_mul(r, ExactMatrix(4)), std::invalid_argument);
}

TEST_CASE("powers: empty product, nilpotent shift, exponent additivity") {
    const ExactMatrix s = build_S(6);
    CHECK(mat_pow(s, 0) == ExactMatrix::identity(6));
    CHECK(mat_pow(s, 6) == ExactMatrix(6));  // S is nilpotent at its dimension

    std::mt19937 rng(99);
    std::uniform_int_distribution<unsigned long> exp(0, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const ExactMatrix a = random_small_matrix(rng, 4);
        const unsigned long e1 = exp(rng), e2 = exp(rng);
        CHECK(mat_pow(a, e1 + e2) == mat_mul(mat_pow(a, e1), mat_pow(a, e2)));
    }
}

TEST_CASE("upper triangular inverse entries and error paths") {
    const ExactMatrix r = build_R(6);
    const ExactMatrix rinv = upper_tri_inverse(r);
    CHECK(rinv.at(0, 1) == Rational(-1, 2));
    CHECK(upper_tri_inverse(ExactMatrix::identity(4)) == ExactMatrix::identity(4));

    CHECK_THROWS_AS(upper_tri_inverse(build_S(4)), std::invalid_argument);
    ExactMatrix singular = ExactMatrix::identity(3);
    singular.at(1, 1) = Rational(0);
    CHECK_THROWS_AS(upper_tri_inverse(singular), std::invalid_argument);
}

TEST_CASE("matrix-vector products on degree vectors") {
    const std::size_t m = 6;
    DegreeVector e1(m);
    e1[0] = 1;

    const DegreeVector v = mat_vec(build_convex_C(m), e1);
    CHECK(v[0] == 1);
    CHECK(v[1] == 1);
    CHECK(v.sum() == 2);

    CHECK(mat_vec(ExactMatrix(m), v).sum() == 0);

    DegreeVector e2(m);
    e2[1] = 1;
    // R^{-1} e2 has fractional entries: flags a misuse of the production path
    CHECK_THROWS_AS(mat_vec(upper_tri_inverse(build_R(m)), e2), std::logic_error);
    ExactMatrix neg(m);
    neg.at(0, 0) = Rational(-1);
    CHECK_THROWS_AS(mat_vec(neg, e1), std::logic_error);
    CHECK_THROWS_AS(mat_vec(build_R(4), e1), std::invalid_argument);
}

TEST_CASE("predicates") {
    const ExactMatrix r = build_R(5);
    CHECK(r.is_nonnegative());
    CHECK(r.is_integer());
    CHECK(r.is_upper_triangular_with_nonzero_diagonal());
    CHECK_FALSE(build_S(5).is_upper_triangular_with_nonzero_diagonal());
    CHECK_FALSE(upper_tri_inverse(r).is_nonnegative());
    CHECK_FALSE(upper_tri_inverse(r).is_integer());
    CHECK(build_pocket_P(2, 6).principal_submatrix(3) == build_pocket_P(2, 6).principal_submatrix(3));
}

TEST_CASE("JSON scheme round trip keeps exact entries") {
    const ExactMatrix p = build_pocket_P(2, 6);
    const auto j = to_json(p);
    CHECK(j["dim"] == 6);
    CHECK(j["entries"][0][3] == "155/4");
    CHECK(matrix_from_json(j) == p);
}
