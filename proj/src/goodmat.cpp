#include "sow/goodmat.hpp"

#include "sow/common.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sow {

namespace {

// Odometer over all matrices of the given shape.
void for_each_matrix(const Field& field, int rows, int cols, const std::function<void(const MatrixGF&)>& fn) {
    MatrixGF m(field, rows, cols);
    const int cells = rows * cols;
    std::vector<int> digits(cells, 0);
    while (true) {
        fn(m);
        int i = 0;
        while (i < cells) {
            const int v = (digits[i] + 1) % field.q();
            digits[i] = v;
            m.set(i / cols, i % cols, v);
            if (v != 0) break;
            ++i;
        }
        if (i == cells) break;
    }
}

bool is_full_rank_rref(const MatrixGF& m) {
    int prev_pivot = -1;
    for (int i = 0; i < m.rows(); ++i) {
        int pivot = 0;
        while (pivot < m.cols() && m.at(i, pivot) == 0) ++pivot;
        if (pivot == m.cols() || pivot <= prev_pivot) return false;  // zero row or out of order
        if (m.at(i, pivot) != 1) return false;
        for (int r = 0; r < m.rows(); ++r)
            if (r != i && m.at(r, pivot) != 0) return false;
        prev_pivot = pivot;
    }
    return true;
}

}  // namespace

MatrixEnsemble::MatrixEnsemble(Field field, int m, int n, bool full, std::vector<MatrixGF> support)
    : field_(std::move(field)), m_(m), n_(n), full_(full), support_(std::move(support)) {}

MatrixEnsemble MatrixEnsemble::from_support(std::vector<MatrixGF> support) {
    if (support.empty()) throw std::invalid_argument("ensemble support must be nonempty");
    const Field field = support.front().field();
    const int m = support.front().rows(), n = support.front().cols();
    std::set<MatrixGF> seen;
    for (const auto& mat : support) {
        if (mat.field() != field || mat.rows() != m || mat.cols() != n)
            throw std::invalid_argument("ensemble support members must share field and shape");
        if (!seen.insert(mat).second) throw std::invalid_argument("ensemble support contains duplicates");
    }
    return MatrixEnsemble(field, m, n, false, std::move(support));
}

MatrixEnsemble MatrixEnsemble::full_space(Field field, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix shape must be positive");
    return MatrixEnsemble(std::move(field), m, n, true, {});
}

BigInt MatrixEnsemble::size() const {
    if (full_) return ipow(field_.q(), static_cast<long long>(m_) * n_);
    return static_cast<long long>(support_.size());
}

void MatrixEnsemble::for_each(const std::function<void(const MatrixGF&)>& fn) const {
    if (full_) {
        for_each_matrix(field_, m_, n_, fn);
    } else {
        for (const auto& m : support_) fn(m);
    }
}

MatrixEnsemble MatrixEnsemble::read(std::istream& in) {
    std::vector<MatrixGF> support;
    while (true) {
        std::ws(in);
        if (!in.good() || in.peek() == std::char_traits<char>::eof()) break;
        support.push_back(MatrixGF::read(in));
    }
    return from_support(std::move(support));
}

void MatrixEnsemble::write(std::ostream& out) const {
    bool first = true;
    for_each([&](const MatrixGF& m) {
        if (!first) out << "\n";
        first = false;
        m.write(out);
    });
}

std::vector<MatrixGF> rank_k_matrices(const Field& field, int k, int m) {
    if (k < 1 || k > m) throw std::invalid_argument("rank out of range");
    if (ipow(field.q(), static_cast<long long>(k) * m) > 100'000'000)
        throw InfeasibleError("rank-k matrix enumeration exceeds limit");
    std::vector<MatrixGF> rrefs;
    for_each_matrix(field, k, m, [&](const MatrixGF& cand) {
        if (is_full_rank_rref(cand)) rrefs.push_back(cand);
    });
    std::vector<MatrixGF> invertibles;
    for_each_matrix(field, k, k, [&](const MatrixGF& cand) {
        if (rref_rank_nullspace(cand).rank == k) invertibles.push_back(cand);
    });
    std::vector<MatrixGF> out;
    out.reserve(rrefs.size() * invertibles.size());
    for (const auto& r : invertibles)
        for (const auto& e : rrefs) out.push_back(r * e);
    return out;
}

bool is_k_good(const MatrixEnsemble& ensemble, int k, long long limit) {
    if (k < 1 || k > std::min(ensemble.m(), ensemble.n()))
        throw std::invalid_argument("k must satisfy 1 <= k <= min(m, n)");
    const Field& f = ensemble.field();
    const BigInt outcomes = ipow(f.q(), static_cast<long long>(k) * ensemble.n());
    // uniformity is impossible unless q^{kn} divides the support size
    if (ensemble.size() % outcomes != 0) return false;
    const BigInt per_outcome = ensemble.size() / outcomes;

    // number of rank-k inputs, before enumerating any of them
    BigInt input_count = 1;
    for (int i = 0; i < k; ++i) input_count *= ipow(f.q(), ensemble.m()) - ipow(f.q(), i);
    if (ensemble.size() * input_count > limit) throw InfeasibleError("k-goodness scan exceeds limit");

    const auto inputs = rank_k_matrices(f, k, ensemble.m());

    for (const auto& u : inputs) {
        std::map<std::vector<std::uint8_t>, BigInt> tally;
        ensemble.for_each([&](const MatrixGF& a) {
            const MatrixGF prod = u * a;
            std::vector<std::uint8_t> key;
            key.reserve(static_cast<size_t>(k) * ensemble.n());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < ensemble.n(); ++j) key.push_back(static_cast<std::uint8_t>(prod.at(i, j)));
            ++tally[key];
        });
        if (static_cast<BigInt>(tally.size()) != outcomes) return false;
        for (const auto& [key, count] : tally)
            if (count != per_outcome) return false;
    }
    return true;
}

Enumerator two_good_generator_expectation(int m, int n, const OrbitTable& table) {
    if (m < 1 || m >= n) throw std::invalid_argument("requires 1 <= m < n");
    const int q = table.q();
    const int nv = table.count();
    const BigInt qm = ipow(q, m);
    const BigRat norm(1, ipow(q, 2LL * m));

    Enumerator out(nv);
    Enumerator::Exp e00(nv, 0);
    e00[OrbitTable::kE00] = n;
    out.add_term(e00, norm);

    for (int s = 1; s < nv; ++s) {
        Enumerator form(nv);
        Enumerator::Exp exp(nv, 0);
        exp[OrbitTable::kE00] = 1;
        form.add_term(exp, BigRat(1, q));
        exp[OrbitTable::kE00] = 0;
        exp[s] = 1;
        form.add_term(exp, BigRat(q - 1, q));
        Enumerator powed = form.pow(n);
        powed.scale(norm * (qm - 1));
        out += powed;
    }

    Enumerator diffuse(nv);
    {
        Enumerator::Exp exp(nv, 0);
        exp[OrbitTable::kE00] = 1;
        diffuse.add_term(exp, BigRat(1, static_cast<long long>(q) * q));
        exp[OrbitTable::kE00] = 0;
        for (int s = 1; s < nv; ++s) {
            exp[s] = 1;
            diffuse.add_term(exp, BigRat(q - 1, static_cast<long long>(q) * q));
            exp[s] = 0;
        }
    }
    Enumerator tail = diffuse.pow(n);
    tail.scale(norm * (qm - 1) * (qm - q));
    out += tail;
    return out;
}

Enumerator two_good_parity_expectation(int m, int n, const OrbitTable& table) {
    if (m < 1 || m >= n) throw std::invalid_argument("requires 1 <= m < n");
    const int q = table.q();
    const int nv = table.count();
    const BigInt qm = ipow(q, m);
    const BigRat norm(1, ipow(q, 2LL * m));

    Enumerator out(nv);
    Enumerator::Exp e00(nv, 0);
    e00[OrbitTable::kE00] = n;
    out.add_term(e00, norm * (qm - 1) * (qm - q));

    for (int s = 1; s < nv; ++s) {
        Enumerator form(nv);
        Enumerator::Exp exp(nv, 0);
        exp[OrbitTable::kE00] = 1;
        form.add_term(exp, 1);
        exp[OrbitTable::kE00] = 0;
        exp[s] = 1;
        form.add_term(exp, q - 1);
        Enumerator powed = form.pow(n);
        powed.scale(norm * (qm - 1));
        out += powed;
    }

    Enumerator complete = complete_enumerator(table, n);
    complete.scale(norm);
    out += complete;
    return out;
}

BigRat pairwise_prob(const Enumerator& w, const GFVec& u, const GFVec& v, const OrbitTable& table) {
    const auto degree = w.homogeneous_degree();
    if (!degree || *degree != static_cast<int>(u.size()))
        throw std::invalid_argument("enumerator degree must equal the vector length");
    const SowVec index = second_order_weight(u, v, table);
    return w.coefficient(index) / BigRat(complete_count(table, static_cast<int>(u.size()), index));
}

IntersectingReport intersecting_report(int q, int m, int n) {
    if (q < 2 || m < 1 || m >= n) throw std::invalid_argument("requires q >= 2 and 0 < m < n");
    IntersectingReport rep;
    rep.union_bound = BigRat(ipow(2 * q - 1, n), ipow(q, 2LL * (n - m)));
    rep.rate_bound = 1.0 - 0.5 * std::log(2.0 * q - 1.0) / std::log(static_cast<double>(q));
    rep.expected_size = BigRat(ipow(q, m)) + 1 - BigRat(1, ipow(q, n - m));
    rep.variance_bound = BigRat(ipow(q, m + 1));
    rep.chebyshev_probability = BigRat(1, static_cast<long long>(n) * n);
    rep.chebyshev_deviation = 2.0 * n * std::pow(static_cast<double>(q), (m + 1) / 2.0);
    return rep;
}

std::pair<MatrixEnsemble, MatrixEnsemble> mrd_examples() {
    const Field f8 = Field::make(2, 3);
    const Field f2 = Field::make(2, 1);
    const int alpha = 2;  // the residue class of a itself
    const auto to_matrix = [&](const std::array<int, 3>& word) {
        // columns are coordinate vectors relative to 1, a, a^2
        MatrixGF m(f2, 3, 3);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) m.set(i, j, (word[j] >> i) & 1);
        return m;
    };
    const std::array<int, 3> base1{1, alpha, f8.pow(alpha, 2)};
    const std::array<int, 3> base2{1, f8.pow(alpha, 2), f8.pow(alpha, 4)};

    std::vector<MatrixGF> a1, a2;
    for (int x = 0; x < 8; ++x) {
        std::array<int, 3> word;
        for (int j = 0; j < 3; ++j) word[j] = f8.mul(x, base1[j]);
        a1.push_back(to_matrix(word));
    }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            std::array<int, 3> word;
            for (int j = 0; j < 3; ++j) word[j] = f8.add(f8.mul(x, base1[j]), f8.mul(y, base2[j]));
            a2.push_back(to_matrix(word));
        }
    return {MatrixEnsemble::from_support(std::move(a1)), MatrixEnsemble::from_support(std::move(a2))};
}

PairDist uniform_image_distribution(const Field& field, int m, int n, const GFVec& x, const GFVec& xprime,
                                 long long limit) {
    if (static_cast<int>(x.size()) != m || static_cast<int>(xprime.size()) != m)
        throw std::invalid_argument("input vectors must have length m");
    const BigInt total = ipow(field.q(), static_cast<long long>(m) * n);
    if (total > limit) throw InfeasibleError("matrix-space enumeration exceeds limit");
    std::map<std::pair<GFVec, GFVec>, BigInt> counts;
    for_each_matrix(field, m, n, [&](const MatrixGF& g) {
        ++counts[{g.mul_left(x), g.mul_left(xprime)}];
    });
    PairDist out;
    for (const auto& [key, count] : counts) out.emplace(key, BigRat(count, total));
    return out;
}

BigRat uniform_image_probability(const Field& field, int n, const GFVec& x, const GFVec& xprime, const GFVec& y,
                            const GFVec& yprime) {
    const auto is_zero = [](const GFVec& v) {
        return std::all_of(v.begin(), v.end(), [](std::uint8_t e) { return e == 0; });
    };
    const BigRat qn_inv(1, ipow(field.q(), n));
    if (is_zero(x) && is_zero(xprime)) return (is_zero(y) && is_zero(yprime)) ? 1 : 0;
    if (is_zero(x)) return is_zero(y) ? qn_inv : 0;
    if (is_zero(xprime)) return is_zero(yprime) ? qn_inv : 0;
    for (int a = 1; a < field.q(); ++a) {
        bool matches = true;
        for (size_t i = 0; i < x.size(); ++i)
            if (xprime[i] != field.mul(a, x[i])) {
                matches = false;
                break;
            }
        if (matches) {
            bool scaled = true;
            for (size_t i = 0; i < y.size(); ++i)
                if (yprime[i] != field.mul(a, y[i])) {
                    scaled = false;
                    break;
                }
            return scaled ? qn_inv : 0;
        }
    }
    return qn_inv * qn_inv;  // linearly independent inputs
}

}  // namespace sow
