#pragma once

#include <string>
#include <vector>

#include "planebound/bigfloat.hpp"
#include "planebound/oracle.hpp"

#include "json.hpp"

namespace planebound {

/// Binary entropy -x log2 x - (1-x) log2 (1-x) with H(0) = H(1) = 0.
double entropy(double x);
BigFloat entropy(const BigFloat& x);

/// Per-point growth base of the plain double chain, (10+7*sqrt(2))/(3+2*sqrt(2)).
BigFloat double_chain_base(mpfr_prec_t prec = 192);

/// alpha[t-1] = fraction of pockets with exactly t covered inner vertices.
struct CoverageProfile {
    int k = 0;
    std::vector<BigFloat> alpha;

    void validate() const;  // alpha_t >= 0, sum <= 1
};

/// log2 of the per-point inner-part base at the given covering profile:
/// xi(alpha)/(k+1) + (1 - sum_t t alpha_t/(k+1)) log2 D, where xi nests
/// entropy terms from t = k down to 1 with census weights log2 p_t.
/// Any feasible profile yields a valid lower bound; optimality is a bonus.
BigFloat objective(const CoverageCensus& census, const CoverageProfile& profile);

struct InnerBoundResult {
    int k = 0;
    CoverageProfile profile;
    BigFloat log2_base;
    BigFloat base;            // rounded down; base^n is a valid count bound
    std::string base_digits;  // truncated toward zero at 10 decimals
};

/// Deterministic multi-start projected coordinate ascent with golden-section
/// line searches, double precision first, then a high-precision polish.
InnerBoundResult maximize(int k, const CoverageCensus& census, double tolerance = 1e-12);

/// Mixed pocket sizes on one chain cycle: independent per-pocket profiles
/// sharing the double-chain leftover term.
struct MixedInnerResult {
    std::vector<int> ks;
    std::vector<CoverageProfile> profiles;
    BigFloat log2_base;  // per point
    BigFloat base;
    std::string base_digits;
};
MixedInnerResult maximize_mixed(const std::vector<int>& ks, double tolerance = 1e-12);

nlohmann::ordered_json to_json(const InnerBoundResult& result);

}  // namespace planebound
