#ifndef SOW_ORBITS_HPP
#define SOW_ORBITS_HPP

#include "sow/field.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace sow {

using GFVec = std::vector<std::uint8_t>;  // vector over F_q, entries are element indices
using SowVec = std::vector<int>;          // q+2 orbit counts summing to the length n

// The q+2 orbits of the scalar action c.(u,v) = (cu,cv), c != 0, on F_q^2.
// Fixed order: 0 = {(0,0)}, 1 = orbit of (0,1), 2 = orbit of (1,0), then the
// orbits of (1,a) for nonzero a in element-index order. Every exponent
// vector, distribution index and kernel-matrix row/column below uses this
// order.
class OrbitTable {
  public:
    static constexpr int kE00 = 0;
    static constexpr int kE01 = 1;
    static constexpr int kE10 = 2;

    explicit OrbitTable(const Field& field);

    const Field& field() const { return field_; }
    int q() const { return field_.q(); }
    int count() const { return field_.q() + 2; }

    // Standard representative: the unique member whose first nonzero
    // component is 1, or (0,0) for the zero orbit.
    std::pair<int, int> rep(int orbit) const { return reps_.at(orbit); }
    int size(int orbit) const { return orbit == kE00 ? 1 : field_.q() - 1; }
    // All members, size() of them.
    std::vector<std::pair<int, int>> members(int orbit) const;

    int classify(int u, int v) const { return lookup_[static_cast<size_t>(u) * field_.q() + v]; }
    bool in_pi11(int orbit) const { return orbit > kE10; }

  private:
    Field field_;
    std::vector<std::pair<int, int>> reps_;
    std::vector<std::uint16_t> lookup_;  // dense q*q table; indices reach q+1
};

// Per-orbit coordinate counts of a vector pair (the second-order weight).
SowVec second_order_weight(const GFVec& u, const GFVec& v, const OrbitTable& table);

// True iff the pair underlying the counts is linearly independent, i.e. more
// than one orbit other than the zero orbit occurs.
bool independent_from_sow(const SowVec& counts);

// (w00, w10, w01, w11): counts of positions by the zero/nonzero pattern of
// the two vectors. Coarser than the second-order weight for q >= 3.
std::array<int, 4> joint_weight(const GFVec& u, const GFVec& v);

}  // namespace sow

#endif
