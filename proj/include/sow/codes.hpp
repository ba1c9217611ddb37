#ifndef SOW_CODES_HPP
#define SOW_CODES_HPP

#include "sow/field.hpp"
#include "sow/orbits.hpp"
#include "sow/rational.hpp"
#include "sow/rng.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

namespace sow {

class MatrixGF {
  public:
    MatrixGF(Field field, int rows, int cols);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, int v);

    GFVec row(int i) const;
    void set_row(int i, const GFVec& v);

    MatrixGF operator*(const MatrixGF& other) const;
    GFVec mul_left(const GFVec& v) const;   // v * M, v of length rows
    GFVec mul_right(const GFVec& v) const;  // M * v^T, v of length cols

    bool operator==(const MatrixGF& other) const;
    bool operator!=(const MatrixGF& other) const { return !(*this == other); }
    bool operator<(const MatrixGF& other) const { return a_ < other.a_; }

    // Text format: first line "q rows cols", then row-major element indices.
    static MatrixGF read(std::istream& in);
    void write(std::ostream& out) const;

  private:
    Field field_;
    int rows_, cols_;
    std::vector<std::uint8_t> a_;
};

struct RrefResult {
    MatrixGF rref;
    int rank;
    MatrixGF nullspace;  // one basis row per free column; rank + rows = cols
};

RrefResult rref_rank_nullspace(const MatrixGF& m);

// A linear code stored by its reduced-row-echelon basis (k x n, full row
// rank; k = 0 means the zero code).
class LinearCode {
  public:
    LinearCode(Field field, int n);  // zero code
    static LinearCode from_generator(const MatrixGF& g);
    static LinearCode from_parity(const MatrixGF& h);
    static LinearCode full_space(Field field, int n);
    static LinearCode repetition(int length, const Field& field);
    static LinearCode check(int length, const Field& field);

    const Field& field() const { return field_; }
    int length() const { return n_; }
    int dimension() const { return basis_.rows(); }
    const MatrixGF& basis() const { return basis_; }
    BigInt size() const;  // q^k

    bool contains(const GFVec& v) const;
    // All q^k codewords, each once; throws InfeasibleError past the limit.
    std::vector<GFVec> codewords(long long limit = kDefaultPairLimit) const;

    LinearCode dual() const;

    bool operator==(const LinearCode& other) const;

    static constexpr long long kDefaultPairLimit = 1LL << 20;

  private:
    Field field_;
    int n_;
    MatrixGF basis_;
};

// Coordinate permutation combined with nonzero coordinate scaling:
// result[i] = scalars[i] * v[perm_inverse(i)].
struct MonomialMap {
    std::vector<std::uint8_t> scalars;  // nonzero field elements, length n
    std::vector<int> perm;              // perm[j] = destination of coordinate j

    static MonomialMap identity(int n);
    GFVec apply(const Field& field, const GFVec& v) const;
    MonomialMap inverse(const Field& field) const;
};

// Uniform over all n! * (q-1)^n maps, deterministic per generator state.
MonomialMap sample_monomial(int n, const Field& field, CounterRng& rng);

// Visits every monomial map exactly once; returns the total count.
long long for_each_monomial(int n, const Field& field, const std::function<void(const MonomialMap&)>& fn);
long long monomial_count(int n, int q);  // n! * (q-1)^n, throws on overflow

using SowCountDist = std::map<SowVec, long long>;

// Brute-force second-order weight distribution of U x V.
SowCountDist sow_distribution(const std::vector<GFVec>& u_words, const std::vector<GFVec>& v_words,
                              const OrbitTable& table, long long pair_limit = LinearCode::kDefaultPairLimit);
SowCountDist sow_distribution(const LinearCode& u, const LinearCode& v, const OrbitTable& table,
                              long long pair_limit = LinearCode::kDefaultPairLimit);

}  // namespace sow

#endif
