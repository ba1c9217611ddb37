#ifndef SOW_MACWILLIAMS_HPP
#define SOW_MACWILLIAMS_HPP

#include "sow/enumerator.hpp"
#include "sow/orbits.hpp"

#include <vector>

namespace sow {

// Integer kernel of the second-order MacWilliams transform: entry (S, T) is
// |S| when the whole orbit T is orthogonal to S in F_q^2, else -1. Row and
// column order follow the orbit order.
struct KMatrix {
    std::vector<std::vector<int>> entries;

    int at(int s, int t) const { return entries[s][t]; }
    int size() const { return static_cast<int>(entries.size()); }
    std::vector<std::vector<BigRat>> as_rational() const;
};

KMatrix build_k_matrix(const OrbitTable& table);

// W_{U',V'}(x) = W_{U,V}(x K) / (|U| |V|) for the orthogonal pair; the input
// must be homogeneous (a pair enumerator of some length n).
Enumerator transform(const Enumerator& w, const BigInt& size_u, const BigInt& size_v, const KMatrix& k);

}  // namespace sow

#endif
