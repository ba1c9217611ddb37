#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sow/codes.hpp"
#include "sow/common.hpp"
#include "sow/enumerator.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace sow;

namespace {

MatrixGF matrix_from(const Field& f, int rows, int cols, const std::vector<int>& entries) {
    MatrixGF m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, entries[static_cast<size_t>(i) * cols + j]);
    return m;
}

MatrixGF random_matrix(const Field& f, int rows, int cols, CounterRng& rng) {
    MatrixGF m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<int>(rng.next_below(f.q())));
    return m;
}

}  // namespace

TEST_CASE("rref on simple matrices") {
    const Field f2 = Field::make(2, 1);

    const MatrixGF id = matrix_from(f2, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto rid = rref_rank_nullspace(id);
    CHECK(rid.rank == 3);
    CHECK(rid.nullspace.rows() == 0);

    const MatrixGF zero(f2, 2, 3);
    const auto rz = rref_rank_nullspace(zero);
    CHECK(rz.rank == 0);
    CHECK(rz.nullspace.rows() == 3);

    const MatrixGF ones = matrix_from(f2, 1, 2, {1, 1});
    const auto ro = rref_rank_nullspace(ones);
    CHECK(ro.rank == 1);
    REQUIRE(ro.nullspace.rows() == 1);
    CHECK(ro.nullspace.row(0) == GFVec{1, 1});
}

TEST_CASE("rank plus nullity equals column count, and null rows annihilate") {
    for (const int q : {2, 3, 4, 5}) {
        const Field f = Field::from_order(q);
        CounterRng rng(41, q);
        for (int trial = 0; trial < 30; ++trial) {
            const int rows = 1 + static_cast<int>(rng.next_below(4));
            const int cols = 1 + static_cast<int>(rng.next_below(5));
            const MatrixGF m = random_matrix(f, rows, cols, rng);
            const auto res = rref_rank_nullspace(m);
            CHECK(res.rank + res.nullspace.rows() == cols);
            for (int i = 0; i < res.nullspace.rows(); ++i) {
                const GFVec x = res.nullspace.row(i);
                const GFVec image = m.mul_right(x);
                CHECK(std::all_of(image.begin(), image.end(), [](std::uint8_t e) { return e == 0; }));
            }
            // idempotent: rref of the rref is itself
            CHECK(rref_rank_nullspace(res.rref).rref == res.rref);
        }
    }
}

TEST_CASE("codeword enumeration") {
    const Field f2 = Field::make(2, 1);
    const LinearCode c = LinearCode::from_generator(matrix_from(f2, 1, 2, {1, 1}));
    const auto words = c.codewords();
    REQUIRE(words.size() == 2);
    CHECK(std::set<GFVec>(words.begin(), words.end()) == std::set<GFVec>{{0, 0}, {1, 1}});

    const LinearCode zero(f2, 3);
    CHECK(zero.codewords() == std::vector<GFVec>{{0, 0, 0}});

    const Field f3 = Field::make(3, 1);
    const LinearCode rep = LinearCode::repetition(3, f3);
    const auto rep_words = rep.codewords();
    CHECK(std::set<GFVec>(rep_words.begin(), rep_words.end()) ==
          std::set<GFVec>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});

    CHECK_THROWS_AS(LinearCode::full_space(f3, 8).codewords(100), InfeasibleError);
}

TEST_CASE("membership") {
    const Field f3 = Field::make(3, 1);
    const LinearCode chk = LinearCode::check(3, f3);
    CHECK(chk.dimension() == 2);
    int members = 0;
    GFVec v(3, 0);
    while (true) {
        const int total = f3.add(f3.add(v[0], v[1]), v[2]);
        CHECK(chk.contains(v) == (total == 0));
        members += chk.contains(v);
        size_t i = 0;
        while (i < v.size() && ++v[i] == 3) v[i++] = 0;
        if (i == v.size()) break;
    }
    CHECK(members == 9);
}

TEST_CASE("duals") {
    const Field f3 = Field::make(3, 1);
    for (int d = 1; d <= 4; ++d) {
        CHECK(LinearCode::repetition(d, f3).dual() == LinearCode::check(d, f3));
    }
    const LinearCode full = LinearCode::full_space(f3, 3);
    CHECK(full.dual() == LinearCode(f3, 3));
    CHECK(LinearCode(f3, 3).dual() == full);
}

TEST_CASE("dual of dual is the original") {
    for (const int q : {2, 3, 4}) {
        const Field f = Field::from_order(q);
        CounterRng rng(17, q);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 1 + static_cast<int>(rng.next_below(6));
            const int rows = 1 + static_cast<int>(rng.next_below(n));
            const LinearCode c = LinearCode::from_generator(random_matrix(f, rows, n, rng));
            const LinearCode dd = c.dual().dual();
            CHECK(dd == c);
            CHECK(c.dual().dimension() == n - c.dimension());
            // every dual word is orthogonal to every codeword
            for (const auto& u : c.codewords())
                for (const auto& v : c.dual().codewords()) {
                    int dot = 0;
                    for (int i = 0; i < n; ++i) dot = f.add(dot, f.mul(u[i], v[i]));
                    CHECK(dot == 0);
                }
        }
    }
}

TEST_CASE("atomic codes") {
    const Field f2 = Field::make(2, 1);
    const auto rep2 = LinearCode::repetition(2, f2).codewords();
    CHECK(std::set<GFVec>(rep2.begin(), rep2.end()) == std::set<GFVec>{{0, 0}, {1, 1}});
    const auto chk2 = LinearCode::check(2, f2).codewords();
    CHECK(std::set<GFVec>(chk2.begin(), chk2.end()) == std::set<GFVec>{{0, 0}, {1, 1}});

    const Field f3 = Field::make(3, 1);
    const auto chk3 = LinearCode::check(3, f3).codewords();
    CHECK(chk3.size() == 9);
    for (const auto& w : chk3) CHECK(f3.add(f3.add(w[0], w[1]), w[2]) == 0);
}

TEST_CASE("monomial map application") {
    const Field f3 = Field::make(3, 1);
    const MonomialMap id = MonomialMap::identity(4);
    const GFVec v{1, 2, 0, 1};
    CHECK(id.apply(f3, v) == v);

    MonomialMap m = MonomialMap::identity(2);
    m.scalars = {2, 2};
    CHECK(m.apply(f3, {1, 0}) == GFVec{2, 0});

    // inverse undoes the map
    CounterRng rng(5, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const MonomialMap s = sample_monomial(4, f3, rng);
        const MonomialMap inv = s.inverse(f3);
        CHECK(inv.apply(f3, s.apply(f3, v)) == v);
    }
}

TEST_CASE("monomial enumeration covers the whole group") {
    const Field f3 = Field::make(3, 1);
    std::set<std::pair<std::vector<int>, GFVec>> seen;
    const long long visited = for_each_monomial(3, f3, [&](const MonomialMap& m) {
        seen.insert({m.perm, m.scalars});
    });
    CHECK(visited == monomial_count(3, 3));
    CHECK(visited == 6 * 8);
    CHECK(seen.size() == static_cast<size_t>(visited));

    // q = 2: exactly the n! permutations
    const Field f2 = Field::make(2, 1);
    CHECK(monomial_count(4, 2) == 24);
    long long count2 = for_each_monomial(4, f2, [&](const MonomialMap& m) {
        CHECK(std::all_of(m.scalars.begin(), m.scalars.end(), [](std::uint8_t s) { return s == 1; }));
    });
    CHECK(count2 == 24);
}

TEST_CASE("monomial sampling is deterministic and roughly uniform") {
    const Field f3 = Field::make(3, 1);
    CounterRng a(7, 3), b(7, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const MonomialMap ma = sample_monomial(3, f3, a);
        const MonomialMap mb = sample_monomial(3, f3, b);
        CHECK(ma.perm == mb.perm);
        CHECK(ma.scalars == mb.scalars);
    }
    // all 48 maps of length 3 appear across enough samples
    std::set<std::pair<std::vector<int>, GFVec>> seen;
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 4000; ++trial) {
        const MonomialMap m = sample_monomial(3, f3, rng);
        seen.insert({m.perm, m.scalars});
    }
    CHECK(seen.size() == 48);
}

TEST_CASE("second-order weight distribution of small codes") {
    const Field f2 = Field::make(2, 1);
    const OrbitTable t(f2);
    const LinearCode c = LinearCode::from_generator(matrix_from(f2, 1, 2, {1, 1}));
    const auto dist = sow_distribution(c, c, t);
    REQUIRE(dist.size() == 4);
    CHECK(dist.at(SowVec{2, 0, 0, 0}) == 1);
    CHECK(dist.at(SowVec{0, 2, 0, 0}) == 1);
    CHECK(dist.at(SowVec{0, 0, 2, 0}) == 1);
    CHECK(dist.at(SowVec{0, 0, 0, 2}) == 1);

    const LinearCode zero(f2, 5);
    const auto zd = sow_distribution(zero, zero, OrbitTable(f2));
    REQUIRE(zd.size() == 1);
    CHECK(zd.at(SowVec{5, 0, 0, 0}) == 1);
}

TEST_CASE("distribution of the full space matches the closed form") {
    const Field f3 = Field::make(3, 1);
    const OrbitTable t(f3);
    const LinearCode full = LinearCode::full_space(f3, 1);
    const auto dist = sow_distribution(full, full, t);
    long long total = 0;
    for (const auto& [index, count] : dist) {
        CHECK(BigInt(count) == complete_count(t, 1, index));
        total += count;
    }
    CHECK(total == 9);
}

TEST_CASE("distributions are invariant under monomial maps") {
    for (const int q : {2, 3}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        CounterRng rng(23, q);
        for (int n = 2; n <= 3; ++n) {
            const LinearCode cu = LinearCode::from_generator(random_matrix(f, 1, n, rng));
            const LinearCode cv = LinearCode::from_generator(random_matrix(f, 2, n, rng));
            const auto base = sow_distribution(cu, cv, t);
            const auto u_words = cu.codewords();
            const auto v_words = cv.codewords();
            for_each_monomial(n, f, [&](const MonomialMap& m) {
                std::vector<GFVec> mu, mv;
                for (const auto& w : u_words) mu.push_back(m.apply(f, w));
                for (const auto& w : v_words) mv.push_back(m.apply(f, w));
                CHECK(sow_distribution(mu, mv, t) == base);
            });
        }
    }
}

TEST_CASE("pair distribution marginalizes to the weight distribution") {
    for (const int q : {2, 3}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        CounterRng rng(29, q);
        for (int n = 2; n <= 4; ++n) {
            const LinearCode c = LinearCode::from_generator(
                random_matrix(f, 1 + static_cast<int>(rng.next_below(n)), n, rng));
            Enumerator pair_enum(t.count());
            for (const auto& [index, count] : sow_distribution(c, c, t)) pair_enum.add_term(index, count);
            const Enumerator proj = bivariate_projection(pair_enum, t);

            std::vector<BigInt> weight_dist(n + 1, 0);
            for (const auto& w : c.codewords()) {
                int weight = 0;
                for (const auto x : w) weight += x != 0;
                ++weight_dist[weight];
            }
            // setting y = 1 recovers |C| * W_C(x)
            for (int j = 0; j <= n; ++j) {
                BigRat row = 0;
                for (int k = 0; k <= n; ++k) row += proj.coefficient({j, k});
                CHECK(row == BigRat(weight_dist[j] * BigInt(c.size())));
            }
        }
    }
}

TEST_CASE("repetition pair distribution matches its closed form") {
    for (const int q : {2, 3, 4}) {
        const Field f = Field::from_order(q);
        const OrbitTable t(f);
        for (int c = 1; c <= 5; ++c) {
            const auto dist = sow_distribution(LinearCode::repetition(c, f), LinearCode::repetition(c, f), t);
            // x00^c + (q-1) sum_S x_S^c
            REQUIRE(dist.size() == static_cast<size_t>(q + 2));
            for (int s = 0; s < t.count(); ++s) {
                SowVec index(t.count(), 0);
                index[s] = c;
                CHECK(dist.at(index) == (s == 0 ? 1 : q - 1));
            }
        }
    }
}

TEST_CASE("matrix text round trip") {
    const Field f3 = Field::make(3, 1);
    const MatrixGF m = matrix_from(f3, 2, 3, {0, 1, 2, 2, 1, 0});
    std::stringstream s;
    m.write(s);
    CHECK(s.str() == "3 2 3\n0 1 2\n2 1 0\n");
    const MatrixGF back = MatrixGF::read(s);
    CHECK(back == m);

    std::stringstream bad("3 2 3\n0 1 2\n");
    CHECK_THROWS_AS(MatrixGF::read(bad), std::invalid_argument);
}
