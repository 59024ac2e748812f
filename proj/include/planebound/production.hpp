#pragma once

#include <vector>

#include "planebound/exact_matrix.hpp"

namespace planebound {

/// One generalized chain: pockets with k inner points, z points on the
/// chain (z = 1 mod k+1, total point count n = 2z), production matrices of
/// dimension m. m < z is the truncated regime; the produced counts are
/// then certified lower bounds rather than exact values.
struct ChainSpec {
    int k = 0;
    long z = 0;
    std::size_t m = 0;

    void validate() const;
    long pockets() const { return (z - 1) / (k + 1); }
};

// Production matrix builders. Row/column conventions follow the degree
// vectors: row j produces graphs whose new root vertex has degree j-1.
ExactMatrix build_R(std::size_t m);
ExactMatrix build_S(std::size_t m);
ExactMatrix build_convex_C(std::size_t m);

/// Leading-vertex matrix L = R + sum_{mu=1}^{k+1} sum_{l=1}^{mu}
/// binom(mu-1, l-1) S^l R^{1-mu}. Contains fractional entries.
ExactMatrix build_leading_L(int k, std::size_t m);

/// Whole-pocket matrix P = R^k L. Fractional in general.
ExactMatrix build_pocket_P(int k, std::size_t m);

/// Reordered pocket matrix P' = L R^k = R^{k+1} + sum sum binom S^l R^{k+1-mu}.
/// Nonnegative integer matrix; the one eigenvalue bounds are computed on.
ExactMatrix build_Pprime(int k, std::size_t m);

DegreeVector start_vector(int k, std::size_t m);

/// Degree vector at the last chain vertex of the outer part, via the
/// factorization P^J = R^k P'^{J-1} L. Never forms full powers of P.
DegreeVector outer_degree_vector(const ChainSpec& spec);

struct PrimitivityResult {
    bool primitive = false;
    unsigned long witness_exponent = 0;  // smallest found N with A^N > 0
};

/// Positivity-pattern primitivity test; sound for any nonnegative matrix.
PrimitivityResult is_primitive(const ExactMatrix& a);

/// Ordered product of per-pocket P' matrices; ks.front() is applied first.
ExactMatrix mixed_pocket_product(const std::vector<int>& ks, std::size_t m);

struct PocketMatrixSet {
    ExactMatrix R, S, L, P, Pprime;
};
PocketMatrixSet build_pocket_set(int k, std::size_t m);

// O(m)-per-application structured forms of R, R^{-1} and S^l; these are what
// keeps vector iteration affordable at dimension 1024.
std::vector<Rational> apply_R(std::vector<Rational> v);
std::vector<Rational> apply_R_inverse(std::vector<Rational> v);
std::vector<Rational> apply_shift(const std::vector<Rational>& v, unsigned l);
std::vector<Rational> apply_leading_L(int k, const std::vector<Rational>& v);
std::vector<Rational> apply_Pprime(int k, const std::vector<Rational>& v);

}  // namespace planebound
