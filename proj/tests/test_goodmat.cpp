#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sow/codes.hpp"
#include "sow/common.hpp"
#include "sow/enumerator.hpp"
#include "sow/goodmat.hpp"

#include <cmath>
#include <sstream>

using namespace sow;

namespace {

Enumerator pair_enumerator(const LinearCode& u, const LinearCode& v, const OrbitTable& t) {
    Enumerator e(t.count());
    for (const auto& [index, count] : sow_distribution(u, v, t)) e.add_term(index, count);
    return e;
}

// representative pair with the given per-orbit counts
std::pair<GFVec, GFVec> pair_from_index(const SowVec& index, const OrbitTable& t) {
    GFVec u, v;
    for (int s = 0; s < t.count(); ++s) {
        const auto [ru, rv] = t.rep(s);
        for (int c = 0; c < index[s]; ++c) {
            u.push_back(static_cast<std::uint8_t>(ru));
            v.push_back(static_cast<std::uint8_t>(rv));
        }
    }
    return {u, v};
}

void for_each_index(int n, int nv, const std::function<void(const SowVec&)>& fn) {
    SowVec index(nv, 0);
    index[0] = n;
    std::function<void(int, int)> rec = [&](int slot, int rem) {
        if (slot == nv - 1) {
            index[slot] = rem;
            fn(index);
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            index[slot] = c;
            rec(slot + 1, rem - c);
        }
    };
    rec(0, n);
}

}  // namespace

TEST_CASE("ensemble construction and text round trip") {
    const Field f2 = Field::make(2, 1);
    std::vector<MatrixGF> support;
    MatrixGF a(f2, 1, 2), b(f2, 1, 2);
    b.set(0, 0, 1);
    support.push_back(a);
    support.push_back(b);
    const auto ensemble = MatrixEnsemble::from_support(support);
    CHECK(ensemble.size() == 2);

    std::stringstream s;
    ensemble.write(s);
    const auto back = MatrixEnsemble::read(s);
    CHECK(back.size() == 2);

    support.push_back(a);  // duplicate
    CHECK_THROWS_AS(MatrixEnsemble::from_support(support), std::invalid_argument);
    CHECK_THROWS_AS(MatrixEnsemble::from_support({}), std::invalid_argument);

    CHECK(MatrixEnsemble::full_space(f2, 2, 3).size() == 64);
}

TEST_CASE("rank-k generation") {
    const Field f2 = Field::make(2, 1);
    // rank-1 nonzero row vectors of length 3: 7 of them
    CHECK(rank_k_matrices(f2, 1, 3).size() == 7);
    // rank-2 2x3 matrices over F_2: (2^2-1)(2^2-2) echelon classes * ... = 7*6/... count directly
    const auto rank2 = rank_k_matrices(f2, 2, 3);
    long long by_filter = 0;
    for (const auto& m : rank2) CHECK(rref_rank_nullspace(m).rank == 2);
    // compare against counting all 2x3 matrices of rank 2
    for (int bits = 0; bits < 64; ++bits) {
        MatrixGF m(f2, 2, 3);
        for (int c = 0; c < 6; ++c) m.set(c / 3, c % 3, (bits >> c) & 1);
        if (rref_rank_nullspace(m).rank == 2) ++by_filter;
    }
    CHECK(static_cast<long long>(rank2.size()) == by_filter);
}

TEST_CASE("full uniform ensembles are k-good") {
    const Field f2 = Field::make(2, 1);
    CHECK(is_k_good(MatrixEnsemble::full_space(f2, 2, 3), 2));
    CHECK(is_k_good(MatrixEnsemble::full_space(f2, 2, 3), 1));
    CHECK(is_k_good(MatrixEnsemble::full_space(f2, 2, 2), 2));
    const Field f3 = Field::make(3, 1);
    CHECK(is_k_good(MatrixEnsemble::full_space(f3, 1, 2), 1));
    CHECK_THROWS_AS(is_k_good(MatrixEnsemble::full_space(f2, 2, 3), 3), std::invalid_argument);
    // the feasibility pre-check fires before any enumeration starts
    CHECK_THROWS_AS(is_k_good(MatrixEnsemble::full_space(f2, 5, 5), 5), InfeasibleError);
}

TEST_CASE("rank-metric example ensembles") {
    const auto [a1, a2] = mrd_examples();
    CHECK(a1.size() == 8);
    CHECK(a2.size() == 64);
    CHECK(a2.size() < 512);  // proper subset of the 3x3 binary matrix space

    CHECK(is_k_good(a1, 1));
    CHECK(!is_k_good(a1, 2));  // cardinality alone rules it out
    CHECK(is_k_good(a2, 2));
    CHECK(is_k_good(a2, 1));
}

TEST_CASE("2-good implies 1-good on tested ensembles") {
    const auto [a1, a2] = mrd_examples();
    const Field f2 = Field::make(2, 1);
    for (const auto* e : {&a2}) {
        if (is_k_good(*e, 2)) CHECK(is_k_good(*e, 1));
    }
    const auto full = MatrixEnsemble::full_space(f2, 2, 3);
    if (is_k_good(full, 2)) CHECK(is_k_good(full, 1));
}

TEST_CASE("generator-side closed form normalizes to one") {
    for (const int q : {2, 3, 4}) {
        const OrbitTable t(Field::from_order(q));
        const std::vector<BigRat> ones(t.count(), 1);
        for (int n = 2; n <= 6; ++n)
            for (int m = 1; m < n; ++m) {
                CAPTURE(q);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(two_good_generator_expectation(m, n, t).evaluate(ones) == 1);
            }
    }
    const OrbitTable t2(Field::make(2, 1));
    CHECK_THROWS_AS(two_good_generator_expectation(3, 3, t2), std::invalid_argument);
}

TEST_CASE("generator-side closed form equals the exhaustive average") {
    const Field f2 = Field::make(2, 1);
    const OrbitTable t(f2);
    const int m = 2, n = 3;
    Enumerator average(t.count());
    long long matrices = 0;
    // every generator matrix in F_2^{2x3}
    for (int bits = 0; bits < 64; ++bits) {
        MatrixGF g(f2, m, n);
        for (int c = 0; c < 6; ++c) g.set(c / 3, c % 3, (bits >> c) & 1);
        const LinearCode code = LinearCode::from_generator(g);
        Enumerator w = pair_enumerator(code, code, t);
        w.scale(BigRat(1, code.size() * code.size()));
        average += w;
        ++matrices;
    }
    average.scale(BigRat(1, matrices));
    CHECK(average == two_good_generator_expectation(m, n, t));
}

TEST_CASE("parity-side closed form equals the exhaustive kernel average") {
    for (const auto& [q, m, n] : {std::tuple{2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {3, 1, 2}}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        Enumerator average(t.count());
        long long matrices = 0;
        std::vector<int> cells(static_cast<size_t>(m) * n, 0);
        MatrixGF h(f, m, n);
        while (true) {
            average += pair_enumerator(LinearCode::from_parity(h), LinearCode::from_parity(h), t);
            ++matrices;
            size_t i = 0;
            while (i < cells.size()) {
                cells[i] = (cells[i] + 1) % q;
                h.set(static_cast<int>(i) / n, static_cast<int>(i) % n, cells[i]);
                if (cells[i] != 0) break;
                ++i;
            }
            if (i == cells.size()) break;
        }
        average.scale(BigRat(1, matrices));
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(average == two_good_parity_expectation(m, n, t));
    }
}

TEST_CASE("parity-side frozen case q=2, m=1, n=2") {
    const Field f2 = Field::make(2, 1);
    const OrbitTable t(f2);
    const Enumerator w = two_good_parity_expectation(1, 2, t);
    // (1/4) [ (x00+x01)^2 + (x00+x10)^2 + (x00+x11)^2 + (x00+x01+x10+x11)^2 ]
    Enumerator expected(4);
    for (int s = 1; s < 4; ++s) {
        Enumerator form(4);
        form.add_term({1, 0, 0, 0}, 1);
        Enumerator::Exp e(4, 0);
        e[s] = 1;
        form.add_term(e, 1);
        expected += form.pow(2);
    }
    expected += complete_enumerator(t, 2);
    expected.scale(BigRat(1, 4));
    CHECK(w == expected);

    // all-ones evaluation: the average of |kernel|^2 = (16+4+4+4)/4
    const std::vector<BigRat> ones(4, 1);
    CHECK(w.evaluate(ones) == 7);
}

TEST_CASE("generator-side projection gives the classical bivariate formula") {
    // E[W_C(x) W_C(y) / |C|^2] splits into constant, x-only, y-only, diagonal
    // and product terms with the stated coefficients
    for (const auto& [q, m, n] : {std::tuple{2, 1, 3}, {2, 2, 4}, {3, 2, 3}, {4, 1, 2}}) {
        const OrbitTable t(Field::from_order(q));
        const Enumerator projected = bivariate_projection(two_good_generator_expectation(m, n, t), t);

        const BigInt qm = ipow(q, m);
        const BigRat norm(1, ipow(q, 2LL * m));
        const auto affine = [&](int xvar, const BigRat& coef) {
            // (1/q + (q-1)/q * var)^n
            Enumerator base(2);
            base.add_term({0, 0}, BigRat(1, q));
            Enumerator::Exp e(2, 0);
            e[xvar] = 1;
            base.add_term(e, BigRat(q - 1, q));
            Enumerator out = base.pow(n);
            out.scale(coef);
            return out;
        };
        Enumerator expected = Enumerator::constant(2, norm);
        expected += affine(0, norm * (qm - 1));
        expected += affine(1, norm * (qm - 1));
        {
            Enumerator diag(2);
            diag.add_term({0, 0}, BigRat(1, q));
            diag.add_term({1, 1}, BigRat(q - 1, q));
            Enumerator d = diag.pow(n);
            d.scale(norm * (qm - 1) * (q - 1));
            expected += d;
        }
        {
            Enumerator prod = affine(0, 1) * affine(1, 1);
            prod.scale(norm * (qm - 1) * (qm - q));
            expected += prod;
        }
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(projected == expected);
    }
}

TEST_CASE("pairwise membership probabilities") {
    for (const auto& [q, m, n] : {std::tuple{2, 1, 2}, {2, 2, 3}, {3, 1, 2}, {3, 2, 3}, {4, 2, 4}}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        const Enumerator w = two_good_parity_expectation(m, n, t);
        const BigRat qm_inv(1, ipow(q, m));
        const BigRat qm2_inv(1, ipow(q, 2LL * m));
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);

        // zero pair is always present
        const GFVec zero(n, 0);
        CHECK(pairwise_prob(w, zero, zero, t) == 1);

        for_each_index(n, t.count(), [&](const SowVec& index) {
            const auto [u, v] = pair_from_index(index, t);
            const bool u_zero = index[0] + index[OrbitTable::kE01] == n;
            const bool v_zero = index[0] + index[OrbitTable::kE10] == n;
            if (!u_zero && v_zero) CHECK(pairwise_prob(w, u, v, t) == qm_inv);
            if (independent_from_sow(index)) CHECK(pairwise_prob(w, u, v, t) == qm2_inv);
        });
    }
}

TEST_CASE("intersecting-code bounds") {
    const auto rep2 = intersecting_report(2, 1, 2);
    CHECK(rep2.union_bound == BigRat(9, 4));
    CHECK(rep2.expected_size == BigRat(5, 2));
    CHECK(rep2.variance_bound == 4);
    CHECK(rep2.chebyshev_probability == BigRat(1, 4));
    CHECK(std::abs(intersecting_report(2, 3, 16).rate_bound - 0.20751875) < 1e-8);
    CHECK(std::abs(intersecting_report(3, 1, 4).rate_bound - (1.0 - 0.5 * std::log(5.0) / std::log(3.0))) <
          1e-12);
    CHECK(std::abs(intersecting_report(3, 1, 4).rate_bound - 0.26752) < 1e-5);
    CHECK_THROWS_AS(intersecting_report(2, 2, 2), std::invalid_argument);

    // exhaustive cross-checks at (q, m, n) = (2, 1, 2): the ensemble is the
    // kernel of a uniform (n-m) x n parity matrix
    const Field f2 = Field::make(2, 1);
    BigRat size_sum = 0;
    long long count = 0;
    for (int bits = 0; bits < 4; ++bits) {
        MatrixGF h(f2, 1, 2);
        h.set(0, 0, bits & 1);
        h.set(0, 1, (bits >> 1) & 1);
        size_sum += BigRat(LinearCode::from_parity(h).size());
        ++count;
    }
    CHECK(size_sum / count == rep2.expected_size);

    // (2q-1)^n counts the ordered non-intersecting pairs
    long long non_intersecting = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            bool meets = false;
            for (int i = 0; i < 2; ++i)
                if (((u >> i) & 1) && ((v >> i) & 1)) meets = true;
            if (!meets) ++non_intersecting;
        }
    CHECK(non_intersecting == 9);
    CHECK(rep2.union_bound == BigRat(non_intersecting) * BigRat(1, 4));

    // exact ensemble variance stays below the reported bound
    const BigRat variance = BigRat(1, 2) * 1 * 3 * BigRat(1, 2);
    CHECK(variance < rep2.variance_bound);
}

TEST_CASE("joint image distribution under a uniform matrix") {
    const Field f2 = Field::make(2, 1);

    // independent inputs: every image pair has probability q^{-2n}
    const auto dist = uniform_image_distribution(f2, 2, 2, {1, 0}, {0, 1});
    CHECK(dist.size() == 16);
    for (const auto& [images, prob] : dist) CHECK(prob == BigRat(1, 16));

    // zero inputs: unit mass at (0, 0)
    const auto zero_dist = uniform_image_distribution(f2, 2, 2, {0, 0}, {0, 0});
    REQUIRE(zero_dist.size() == 1);
    CHECK(zero_dist.at({GFVec{0, 0}, GFVec{0, 0}}) == 1);

    // proportional inputs over F_3: mass q^{-n} exactly on y' = a y
    const Field f3 = Field::make(3, 1);
    const auto prop = uniform_image_distribution(f3, 2, 2, {1, 2}, {2, 1});  // x' = 2x
    BigRat mass = 0;
    for (const auto& [images, prob] : prop) {
        const auto& [y, yp] = images;
        CHECK(yp[0] == f3.mul(2, y[0]));
        CHECK(yp[1] == f3.mul(2, y[1]));
        CHECK(prob == BigRat(1, 9));
        mass += prob;
    }
    CHECK(mass == 1);
}

TEST_CASE("joint image distribution matches the closed form everywhere") {
    const Field f2 = Field::make(2, 1);
    const int m = 2, n = 2;
    std::vector<GFVec> inputs;
    GFVec x(m, 0);
    while (true) {
        inputs.push_back(x);
        size_t i = 0;
        while (i < x.size() && ++x[i] == 2) x[i++] = 0;
        if (i == x.size()) break;
    }
    for (const auto& xa : inputs)
        for (const auto& xb : inputs) {
            const auto dist = uniform_image_distribution(f2, m, n, xa, xb);
            BigRat mass = 0;
            for (const auto& [images, prob] : dist) {
                CHECK(prob == uniform_image_probability(f2, n, xa, xb, images.first, images.second));
                mass += prob;
            }
            CHECK(mass == 1);
        }
}
