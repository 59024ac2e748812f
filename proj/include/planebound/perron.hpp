#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planebound/bigfloat.hpp"
#include "planebound/exact_matrix.hpp"

#include "json.hpp"

namespace planebound {

struct PowerIterationResult {
    BigFloat estimate;            // Rayleigh quotient
    std::vector<BigFloat> vec;    // approximate Perron vector, sup-normalized
    long iterations = 0;
    bool converged = false;
};

/// Plain power iteration in high-precision floating point. Stops once
/// successive Rayleigh estimates differ by less than 2^{-prec/2} relative,
/// or at max_iter with the best estimate so far.
PowerIterationResult power_iteration(const ExactMatrix& a, mpfr_prec_t prec,
                                     long max_iter = 1000);

/// Exact Collatz-Wielandt quotients (min, max) of (Ax)_i / x_i over i, for
/// nonnegative a and strictly positive rational x. The minimum is a proven
/// lower bound on the spectral radius, the maximum a proven upper bound.
std::pair<Rational, Rational> collatz_wielandt_bounds(const ExactMatrix& a,
                                                      const std::vector<Rational>& x);

Rational certify_lower_bound(const ExactMatrix& a, const std::vector<Rational>& x);

/// A rational lower bound on a spectral radius together with the positive
/// witness vector whose exact quotients prove it.
struct PerronCertificate {
    Rational lower_bound;
    std::vector<Rational> witness;
    BigFloat float_estimate;
    long iterations = 0;
    std::size_t dim = 0;

    std::string witness_digest() const;
};

/// Certified Perron-root lower bound for a primitive nonnegative matrix:
/// power iteration seeds an estimate, shifted inverse iteration polishes
/// the witness (re-shifting with exact upper bounds whenever the certified
/// quotient spread is still too wide), and the returned bound is the exact
/// Collatz-Wielandt minimum of the final witness. `digits` is the decimal
/// agreement target between the certificate and the true Perron root.
PerronCertificate perron_lower(const ExactMatrix& a, unsigned digits = 20);

nlohmann::ordered_json to_json(const PerronCertificate& cert);

}  // namespace planebound
