#ifndef SOW_ENUMERATOR_HPP
#define SOW_ENUMERATOR_HPP

#include "sow/orbits.hpp"
#include "sow/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sow {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in a lexicographically ordered map from exponent vector to nonzero
// coefficient, so iteration order and serialization are canonical.
class Enumerator {
  public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, BigRat>;

    explicit Enumerator(int nvars);
    static Enumerator constant(int nvars, const BigRat& c);
    static Enumerator variable(int nvars, int index);
    static Enumerator monomial(const Exp& exp, const BigRat& coef);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exp& exp, const BigRat& coef);

    Enumerator& operator+=(const Enumerator& other);
    Enumerator operator+(const Enumerator& other) const;
    Enumerator operator*(const Enumerator& other) const;
    Enumerator& scale(const BigRat& factor);
    Enumerator pow(long long k) const;

    bool operator==(const Enumerator& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const Enumerator& other) const { return !(*this == other); }

    BigRat coefficient(const Exp& exp) const;
    BigRat evaluate(std::span<const BigRat> point) const;

    // Substitution x_S <- sum_T x_T M[T][S] (row-vector convention x.M),
    // expanded and collected exactly. M must be nvars x nvars.
    Enumerator linear_substitute(const std::vector<std::vector<BigRat>>& m) const;

    int max_degree() const;
    // Total degree shared by all terms; nullopt if mixed. The zero
    // polynomial reports degree 0.
    std::optional<int> homogeneous_degree() const;

    // Guard against dense blowup: operations whose result could hold more
    // monomials than this refuse with InfeasibleError.
    static long long monomial_limit();
    static void set_monomial_limit(long long limit);

  private:
    int nvars_;
    TermMap terms_;
};

BigInt binomial(long long n, long long k);
// n! / prod(parts!); parts must sum to n.
BigInt multinomial(int n, std::span<const int> parts);

// [x_e00 + (q-1) * sum over the other orbits of x_S]^n: the enumerator of the
// full product space F_q^n x F_q^n.
Enumerator complete_enumerator(const OrbitTable& table, int n);

// Counts vector pairs per second-order weight; the closed form for the
// coefficients of complete_enumerator.
BigInt complete_count(const OrbitTable& table, int n, const SowVec& index);

// Substitutes x_S -> x^{w(first rep component)} y^{w(second rep component)},
// collapsing a pair enumerator W_{U,V} to W_U(x) * W_V(y). Requires a
// homogeneous input; the result lives in two variables (x, y).
Enumerator bivariate_projection(const Enumerator& a, const OrbitTable& table);

using SowDist = std::map<SowVec, BigRat>;

// Sum of dist over the indices contributing to A_j(U) * A_k(V): those with
// i_e10 = j - l, i_e01 = k - l and l = sum over two-sided-nonzero orbits.
BigRat second_moment_pair(const SowDist& dist, int j, int k, int n, const OrbitTable& table);

Enumerator enumerator_from_distribution(const SowDist& dist, int nvars);
SowDist distribution_from_enumerator(const Enumerator& a);

}  // namespace sow

#endif
