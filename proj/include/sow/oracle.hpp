#ifndef SOW_ORACLE_HPP
#define SOW_ORACLE_HPP

#include "sow/codes.hpp"
#include "sow/enumerator.hpp"
#include "sow/ldpc.hpp"
#include "sow/macwilliams.hpp"

#include <cstdint>

namespace sow {

// Brute-force and Monte-Carlo ground truth for the closed forms elsewhere in
// the library. These paths share only field arithmetic and plain linear
// algebra with the implementations they check.

struct MembershipProbability {
    BigRat lhs;  // P{u in Xi(U), v in Xi(V)} by enumerating every monomial map
    BigRat rhs;  // A_sow(U,V) / A_sow(full, full), both counted by enumeration
};
MembershipProbability membership_probability_exact(const LinearCode& u_code, const LinearCode& v_code, const GFVec& u, const GFVec& v,
                          const OrbitTable& table, long long map_limit = 1'000'000);

// Exact ensemble expectation by enumerating every monomial-map configuration.
EnsembleDistribution ldpc_exact_expectation(const EnsembleSpec& spec, long long config_limit = 1'000'000);

struct MonteCarloStats {
    long long trials = 0;
    // per observed index: sum of counts and sum of squared counts
    std::map<SowVec, std::pair<std::uint64_t, std::uint64_t>> sums;
    // per-trial totals of the whole distribution (the sampled |C|^2)
    std::uint64_t total_sum = 0;
    std::uint64_t total_sumsq = 0;

    BigRat mean(const SowVec& index) const;
    double mean_double(const SowVec& index) const;
    // sample standard error of the mean; 0 when every trial agreed
    double standard_error(const SowVec& index) const;

    BigRat total_mean() const { return BigRat(total_sum, trials); }
    double total_standard_error() const;
};

// Samples the ensemble `trials` times: draw the maps, assemble the sparse
// parity-check matrix, enumerate the kernel and tally second-order weights.
// Trial t draws from counter stream (seed, t), so results are independent of
// thread count and a longer run reproduces a shorter run's prefix.
MonteCarloStats monte_carlo_ldpc(const EnsembleSpec& spec, long long trials, std::uint64_t seed,
                                 int threads = 1, long long kernel_limit = 1'000'000);

// max |empirical mean - expected| / SE over all indices of either support;
// indices with zero SE must match exactly (returns +inf otherwise).
double max_sigma_deviation(const MonteCarloStats& stats, const SowDist& expected);

struct CharacterCheckResult {
    double indicator_residual;  // |1{v' orthogonal to V} - avg of chi(v . v') over V|
    double kernel_power_residual;  // max coefficient gap between the character sum and (xK)^sow
};
CharacterCheckResult character_checks(const LinearCode& v_code, const GFVec& vprime, const OrbitTable& table,
                                      const KMatrix& k, long long limit = 1'000'000);

struct MacWilliamsBrute {
    Enumerator transformed;  // transform applied to the brute-force primal enumerator
    Enumerator direct;       // brute-force enumerator of the dual pair
};
MacWilliamsBrute macwilliams_brute(const LinearCode& u_code, const LinearCode& v_code, const OrbitTable& table,
                                   const KMatrix& k, long long pair_limit = LinearCode::kDefaultPairLimit);

}  // namespace sow

#endif
