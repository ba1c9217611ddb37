#include "sow/macwilliams.hpp"

#include <stdexcept>

namespace sow {

std::vector<std::vector<BigRat>> KMatrix::as_rational() const {
    std::vector<std::vector<BigRat>> out(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) out[i].assign(entries[i].begin(), entries[i].end());
    return out;
}

KMatrix build_k_matrix(const OrbitTable& table) {
    const Field& f = table.field();
    const int nv = table.count();
    KMatrix k;
    k.entries.assign(nv, std::vector<int>(nv, 0));
    for (int s = 0; s < nv; ++s) {
        const auto [su, sv] = table.rep(s);
        for (int t = 0; t < nv; ++t) {
            // T lies in the orthogonal of S iff every member of T is
            // orthogonal to the representative of S (S is closed under
            // scaling, so checking the representative suffices on that side).
            bool orthogonal = true;
            for (const auto& [tu, tv] : table.members(t)) {
                if (f.add(f.mul(su, tu), f.mul(sv, tv)) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            k.entries[s][t] = orthogonal ? table.size(s) : -1;
        }
    }
    return k;
}

Enumerator transform(const Enumerator& w, const BigInt& size_u, const BigInt& size_v, const KMatrix& k) {
    if (w.nvars() != k.size()) throw std::invalid_argument("transform: variable count mismatch");
    if (!w.homogeneous_degree()) throw std::invalid_argument("transform requires a homogeneous enumerator");
    if (size_u < 1 || size_v < 1) throw std::invalid_argument("transform: set sizes must be positive");
    Enumerator out = w.linear_substitute(k.as_rational());
    out.scale(BigRat(1, size_u * size_v));
    return out;
}

}  // namespace sow
