#ifndef SOW_GOODMAT_HPP
#define SOW_GOODMAT_HPP

#include "sow/codes.hpp"
#include "sow/enumerator.hpp"

#include <iosfwd>
#include <utility>

namespace sow {

// A uniform distribution over a finite set of m x n matrices: an explicit
// duplicate-free support, or the implicit full matrix space.
class MatrixEnsemble {
  public:
    static MatrixEnsemble from_support(std::vector<MatrixGF> support);
    static MatrixEnsemble full_space(Field field, int m, int n);

    const Field& field() const { return field_; }
    int m() const { return m_; }
    int n() const { return n_; }
    bool is_full() const { return full_; }
    BigInt size() const;

    void for_each(const std::function<void(const MatrixGF&)>& fn) const;

    // One "q rows cols" block per matrix, blank-line separated.
    static MatrixEnsemble read(std::istream& in);
    void write(std::ostream& out) const;

  private:
    MatrixEnsemble(Field field, int m, int n, bool full, std::vector<MatrixGF> support);

    Field field_;
    int m_, n_;
    bool full_;
    std::vector<MatrixGF> support_;
};

// True iff U * A is uniform over F_q^{k x n} for every rank-k U in
// F_q^{k x m}. The scan is exhaustive; work is bounded by `limit` products.
bool is_k_good(const MatrixEnsemble& ensemble, int k, long long limit = 50'000'000);

// All rank-k matrices in F_q^{k x m}, generated as (invertible k x k) times
// (rank-k reduced-row-echelon k x m), each exactly once.
std::vector<MatrixGF> rank_k_matrices(const Field& field, int k, int m);

// Closed-form expected pair enumerators of the codes generated by a 2-good
// random m x n matrix: the normalized generator-side E[W_{C,C}/|C|^2] and the
// parity-side E[W_{B,B}] for the kernel code. Both require m < n. At m = 1
// the independent-pair term carries the factor (q^m - 1)(q^m - q) = 0, so
// only 1-goodness is exercised; the formulas remain valid.
Enumerator two_good_generator_expectation(int m, int n, const OrbitTable& table);
Enumerator two_good_parity_expectation(int m, int n, const OrbitTable& table);

// coef(W, sow(u,v)) / #pairs with that weight: the probability that a
// randomly scrambled code from the ensemble contains the pair. Equals q^-m
// for (u, 0) with u != 0 and q^-2m for linearly independent u, v when W is
// the parity-side expectation.
BigRat pairwise_prob(const Enumerator& w, const GFVec& u, const GFVec& v, const OrbitTable& table);

// Quantities from the random-coding argument for linear intersecting codes,
// for the kernel ensemble of rate m/n (parity-check matrix with n - m rows).
struct IntersectingReport {
    BigRat union_bound;          // (2q-1)^n q^{2(m-n)}
    double rate_bound;           // 1 - log_q(2q-1)/2
    BigRat expected_size;        // q^m + 1 - q^{m-n}
    BigRat variance_bound;       // q^{m+1}
    BigRat chebyshev_probability;  // 1/n^2 ...
    double chebyshev_deviation;    // ... for |size - q^m| >= 2n q^{(m+1)/2}
};
IntersectingReport intersecting_report(int q, int m, int n);

// The two rank-metric ensembles in F_2^{3x3} built from GF(8) row vectors
// x(1,a,a^2) and x(1,a,a^2) + y(1,a^2,a^4): the first is 1-good but not
// 2-good, the second 2-good.
std::pair<MatrixEnsemble, MatrixEnsemble> mrd_examples();

// Exhaustive joint distribution of (x G, x' G) over all G in F_q^{m x n}.
using PairDist = std::map<std::pair<GFVec, GFVec>, BigRat>;
PairDist uniform_image_distribution(const Field& field, int m, int n, const GFVec& x, const GFVec& xprime,
                                 long long limit = 50'000'000);
// The five-case closed form the distribution must match.
BigRat uniform_image_probability(const Field& field, int n, const GFVec& x, const GFVec& xprime, const GFVec& y,
                            const GFVec& yprime);

}  // namespace sow

#endif
