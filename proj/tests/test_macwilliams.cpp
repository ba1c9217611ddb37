#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sow/codes.hpp"
#include "sow/enumerator.hpp"
#include "sow/macwilliams.hpp"

#include <vector>

using namespace sow;

namespace {

Enumerator pair_enumerator(const LinearCode& u, const LinearCode& v, const OrbitTable& t) {
    Enumerator e(t.count());
    for (const auto& [index, count] : sow_distribution(u, v, t)) e.add_term(index, count);
    return e;
}

MatrixGF random_matrix(const Field& f, int rows, int cols, CounterRng& rng) {
    MatrixGF m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<int>(rng.next_below(f.q())));
    return m;
}

}  // namespace

TEST_CASE("kernel matrix for q = 2") {
    const OrbitTable t(Field::make(2, 1));
    const KMatrix k = build_k_matrix(t);
    const std::vector<std::vector<int>> expected{
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    CHECK(k.entries == expected);
}

TEST_CASE("kernel matrix for q = 3") {
    const OrbitTable t(Field::make(3, 1));
    const KMatrix k = build_k_matrix(t);
    const std::vector<std::vector<int>> expected{{1, 1, 1, 1, 1},
                                                 {2, -1, 2, -1, -1},
                                                 {2, 2, -1, -1, -1},
                                                 {2, -1, -1, -1, 2},
                                                 {2, -1, -1, 2, -1}};
    CHECK(k.entries == expected);
}

TEST_CASE("kernel matrix structure for larger fields") {
    for (const int q : {2, 3, 4, 5, 8}) {
        const OrbitTable t(Field::from_order(q));
        const KMatrix k = build_k_matrix(t);
        CAPTURE(q);
        for (int s = 0; s < t.count(); ++s) {
            CHECK(k.at(0, s) == 1);          // zero orbit is orthogonal to everything
            CHECK(k.at(s, 0) == t.size(s));  // and everything contains the zero orbit
            for (int u = 0; u < t.count(); ++u) {
                const int entry = k.at(s, u);
                CHECK((entry == t.size(s) || entry == -1));
            }
        }
    }
}

TEST_CASE("transform sends repetition pairs to check pairs") {
    for (const int q : {2, 3, 4}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        const KMatrix k = build_k_matrix(t);
        for (int d = 1; d <= 4; ++d) {
            const LinearCode rep = LinearCode::repetition(d, f);
            const LinearCode chk = LinearCode::check(d, f);
            const Enumerator w = pair_enumerator(rep, rep, t);
            const Enumerator expected = pair_enumerator(chk, chk, t);
            CHECK(transform(w, rep.size(), rep.size(), k) == expected);
        }
    }
}

TEST_CASE("transform endpoints: full space and zero code") {
    for (const int q : {2, 3}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        const KMatrix k = build_k_matrix(t);
        for (int n = 1; n <= 3; ++n) {
            const BigInt qn = ipow(q, n);
            Enumerator::Exp zero_exp(t.count(), 0);
            zero_exp[0] = n;
            const Enumerator zero_enum = Enumerator::monomial(zero_exp, 1);

            CHECK(transform(complete_enumerator(t, n), qn, qn, k) == zero_enum);
            CHECK(transform(zero_enum, 1, 1, k) == complete_enumerator(t, n));
        }
    }
}

TEST_CASE("transform requires a homogeneous input") {
    const OrbitTable t(Field::make(2, 1));
    const KMatrix k = build_k_matrix(t);
    Enumerator mixed(4);
    mixed.add_term({1, 0, 0, 0}, 1);
    mixed.add_term({2, 0, 0, 0}, 1);
    CHECK_THROWS_AS(transform(mixed, 1, 1, k), std::invalid_argument);
}

TEST_CASE("transform equals brute-force dual enumeration") {
    // exhaustive over F_2^n subspace pairs for n <= 3 (n = 4 in acceptance),
    // random pairs over F_3
    const Field f2 = Field::make(2, 1);
    for (int n = 1; n <= 3; ++n) {
        const OrbitTable t(f2);
        const KMatrix k = build_k_matrix(t);
        std::vector<LinearCode> subspaces;
        MatrixGF g(f2, n, n);
        std::vector<int> cells(static_cast<size_t>(n) * n, 0);
        while (true) {
            auto code = LinearCode::from_generator(g);
            if (std::none_of(subspaces.begin(), subspaces.end(),
                             [&](const LinearCode& c) { return c == code; }))
                subspaces.push_back(std::move(code));
            size_t i = 0;
            while (i < cells.size()) {
                cells[i] = (cells[i] + 1) % 2;
                g.set(static_cast<int>(i) / n, static_cast<int>(i) % n, cells[i]);
                if (cells[i] != 0) break;
                ++i;
            }
            if (i == cells.size()) break;
        }
        for (const auto& cu : subspaces)
            for (const auto& cv : subspaces) {
                const Enumerator w = pair_enumerator(cu, cv, t);
                const Enumerator dual_w = pair_enumerator(cu.dual(), cv.dual(), t);
                CHECK(transform(w, cu.size(), cv.size(), k) == dual_w);
            }
    }

    const Field f3 = Field::make(3, 1);
    const OrbitTable t3(f3);
    const KMatrix k3 = build_k_matrix(t3);
    CounterRng rng(31, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(2));
        const LinearCode cu =
            LinearCode::from_generator(random_matrix(f3, 1 + static_cast<int>(rng.next_below(n)), n, rng));
        const LinearCode cv =
            LinearCode::from_generator(random_matrix(f3, 1 + static_cast<int>(rng.next_below(n)), n, rng));
        const Enumerator w = pair_enumerator(cu, cv, t3);
        const Enumerator dual_w = pair_enumerator(cu.dual(), cv.dual(), t3);
        CHECK(transform(w, cu.size(), cv.size(), k3) == dual_w);
    }
}

TEST_CASE("double transform is the identity") {
    for (const int q : {2, 3}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        const KMatrix k = build_k_matrix(t);
        CounterRng rng(37, q);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + static_cast<int>(rng.next_below(4));
            const LinearCode cu =
                LinearCode::from_generator(random_matrix(f, 1 + static_cast<int>(rng.next_below(n)), n, rng));
            const LinearCode cv =
                LinearCode::from_generator(random_matrix(f, 1 + static_cast<int>(rng.next_below(n)), n, rng));
            const Enumerator w = pair_enumerator(cu, cv, t);
            const Enumerator once = transform(w, cu.size(), cv.size(), k);
            const Enumerator twice = transform(once, cu.dual().size(), cv.dual().size(), k);
            CHECK(twice == w);
        }
    }
}
