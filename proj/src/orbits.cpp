#include "sow/orbits.hpp"

#include <stdexcept>

namespace sow {

OrbitTable::OrbitTable(const Field& field) : field_(field) {
    const int q = field_.q();
    reps_.reserve(q + 2);
    reps_.emplace_back(0, 0);
    reps_.emplace_back(0, 1);
    reps_.emplace_back(1, 0);
    for (int a = 1; a < q; ++a) reps_.emplace_back(1, a);
    lookup_.assign(static_cast<size_t>(q) * q, 0);
    for (int u = 0; u < q; ++u) {
        for (int v = 0; v < q; ++v) {
            int orbit;
            if (u == 0) {
                orbit = (v == 0) ? kE00 : kE01;
            } else {
                const int a = field_.div(v, u);  // (u,v) ~ (1, v/u)
                orbit = (a == 0) ? kE10 : 2 + a;
            }
            lookup_[static_cast<size_t>(u) * q + v] = static_cast<std::uint16_t>(orbit);
        }
    }
}

std::vector<std::pair<int, int>> OrbitTable::members(int orbit) const {
    const auto [u, v] = rep(orbit);
    if (orbit == kE00) return {{0, 0}};
    std::vector<std::pair<int, int>> out;
    out.reserve(field_.q() - 1);
    for (int c = 1; c < field_.q(); ++c) out.emplace_back(field_.mul(c, u), field_.mul(c, v));
    return out;
}

SowVec second_order_weight(const GFVec& u, const GFVec& v, const OrbitTable& table) {
    if (u.size() != v.size()) throw std::invalid_argument("sow: length mismatch");
    SowVec counts(table.count(), 0);
    for (size_t i = 0; i < u.size(); ++i) ++counts[table.classify(u[i], v[i])];
    return counts;
}

bool independent_from_sow(const SowVec& counts) {
    int occupied = 0;
    for (size_t s = 1; s < counts.size(); ++s)
        if (counts[s] > 0) ++occupied;
    return occupied > 1;
}

std::array<int, 4> joint_weight(const GFVec& u, const GFVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("joint_weight: length mismatch");
    std::array<int, 4> w{0, 0, 0, 0};  // w00, w10, w01, w11
    for (size_t i = 0; i < u.size(); ++i) {
        const int a = u[i] != 0, b = v[i] != 0;
        ++w[static_cast<size_t>(a) * 2 + b];
    }
    return {w[0], w[2], w[1], w[3]};
}

}  // namespace sow
