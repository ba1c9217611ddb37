#ifndef SOW_LDPC_HPP
#define SOW_LDPC_HPP

#include "sow/enumerator.hpp"
#include "sow/field.hpp"
#include "sow/macwilliams.hpp"

namespace sow {

// Regular LDPC ensembles. Kind I stacks c independent single-check layers
// (each layer a random monomial map feeding disjoint d-way checks); kind II
// repeats every symbol c times, scrambles all cn coordinates with one random
// monomial map and feeds them to cn/d checks.
struct EnsembleSpec {
    enum class Kind { I, II };

    Kind kind;
    Field field;
    int c, d, n;

    EnsembleSpec(Kind kind, Field field, int c, int d, int n);
    int check_count() const { return kind == Kind::I ? c * (n / d) : (c * n) / d; }
};

struct EnsembleDistribution {
    EnsembleSpec spec;
    SowDist values;  // nonzero expected counts, keys sum to n
};

// x_e00^c + (q-1) * sum over the other orbits of x_S^c: the pair enumerator
// of the length-c repetition code.
Enumerator repetition_enumerator(int c, const OrbitTable& table);

// Pair enumerator of the length-d single-check code, via the MacWilliams
// transform of the repetition enumerator:
// (1/q^2) [ (sum_S x_S K_{S,e00})^d + (q-1) sum_{T != e00} (sum_S x_S K_{S,T})^d ].
Enumerator check_enumerator(int d, const OrbitTable& table, const KMatrix& k);

// Expected second-order weight distributions of the two ensembles.
EnsembleDistribution ldpc1_expected(const EnsembleSpec& spec, const OrbitTable& table, const KMatrix& k);
EnsembleDistribution ldpc2_expected(const EnsembleSpec& spec, const OrbitTable& table, const KMatrix& k);

// E[A_j A_k] recovered from the expected distribution.
BigRat expected_second_moment(const EnsembleDistribution& dist, int j, int k);

// Independent binary-only path used to cross-check the general machinery at
// q = 2: g_d expanded from its explicit four-term form, and the second
// moments assembled directly from multinomials, with no kernel matrix or
// orbit table involved. Variable order (0,0), (0,1), (1,0), (1,1).
Enumerator binary_check_form(int d);
BigRat binary_second_moment(EnsembleSpec::Kind kind, int c, int d, int n, int j, int k);

}  // namespace sow

#endif
