#include "sow/codes.hpp"

#include "sow/common.hpp"
#include "sow/rational.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sow {

MatrixGF::MatrixGF(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void MatrixGF::set(int i, int j, int v) {
    if (v < 0 || v >= field_.q()) throw std::out_of_range("matrix entry out of field range");
    a_[static_cast<size_t>(i) * cols_ + j] = static_cast<std::uint8_t>(v);
}

GFVec MatrixGF::row(int i) const {
    return GFVec(a_.begin() + static_cast<size_t>(i) * cols_, a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

void MatrixGF::set_row(int i, const GFVec& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols_; ++j) set(i, j, v[j]);
}

MatrixGF MatrixGF::operator*(const MatrixGF& other) const {
    if (cols_ != other.rows_ || field_ != other.field_) throw std::invalid_argument("matrix product shape mismatch");
    MatrixGF out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < other.cols_; ++j) {
            int acc = 0;
            for (int k = 0; k < cols_; ++k) acc = field_.add(acc, field_.mul(at(i, k), other.at(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

GFVec MatrixGF::mul_left(const GFVec& v) const {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("vector length mismatch");
    GFVec out(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < cols_; ++j) out[j] = static_cast<std::uint8_t>(field_.add(out[j], field_.mul(v[i], at(i, j))));
    }
    return out;
}

GFVec MatrixGF::mul_right(const GFVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    GFVec out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        int acc = 0;
        for (int j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul(at(i, j), v[j]));
        out[i] = static_cast<std::uint8_t>(acc);
    }
    return out;
}

bool MatrixGF::operator==(const MatrixGF& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ && a_ == other.a_;
}

MatrixGF MatrixGF::read(std::istream& in) {
    int q = 0, rows = -1, cols = -1;
    if (!(in >> q >> rows >> cols)) throw std::invalid_argument("matrix header must be \"q rows cols\"");
    MatrixGF m(Field::from_order(q), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v;
            if (!(in >> v)) throw std::invalid_argument("matrix body is short");
            m.set(i, j, v);
        }
    return m;
}

void MatrixGF::write(std::ostream& out) const {
    out << field_.q() << " " << rows_ << " " << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j);
        out << "\n";
    }
}

RrefResult rref_rank_nullspace(const MatrixGF& m) {
    const Field& f = m.field();
    MatrixGF a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_col;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead) {
            GFVec tmp = a.row(pivot);
            a.set_row(pivot, a.row(lead));
            a.set_row(lead, tmp);
        }
        const int scale = f.inv(a.at(lead, col));
        for (int j = 0; j < cols; ++j) a.set(lead, j, f.mul(scale, a.at(lead, j)));
        for (int i = 0; i < rows; ++i) {
            if (i == lead || a.at(i, col) == 0) continue;
            const int factor = a.at(i, col);
            for (int j = 0; j < cols; ++j) a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(lead, j))));
        }
        pivot_col.push_back(col);
        ++lead;
    }
    const int rank = static_cast<int>(pivot_col.size());

    // one nullspace basis row per free column
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    MatrixGF ns(f, cols - rank, cols);
    int row = 0;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ns.set(row, free, 1);
        for (int r = 0; r < rank; ++r) ns.set(row, pivot_col[r], f.neg(a.at(r, free)));
        ++row;
    }
    return {std::move(a), rank, std::move(ns)};
}

LinearCode::LinearCode(Field field, int n) : field_(std::move(field)), n_(n), basis_(field_, 0, n) {
    if (n < 1) throw std::invalid_argument("code length must be positive");
}

LinearCode LinearCode::from_generator(const MatrixGF& g) {
    auto res = rref_rank_nullspace(g);
    LinearCode code(g.field(), g.cols());
    MatrixGF basis(g.field(), res.rank, g.cols());
    for (int i = 0; i < res.rank; ++i) basis.set_row(i, res.rref.row(i));
    code.basis_ = std::move(basis);
    return code;
}

LinearCode LinearCode::from_parity(const MatrixGF& h) {
    const auto res = rref_rank_nullspace(h);
    return from_generator(res.nullspace);
}

LinearCode LinearCode::full_space(Field field, int n) {
    MatrixGF id(field, n, n);
    for (int i = 0; i < n; ++i) id.set(i, i, 1);
    return from_generator(id);
}

LinearCode LinearCode::repetition(int length, const Field& field) {
    if (length < 1) throw std::invalid_argument("repetition length must be >= 1");
    MatrixGF g(field, 1, length);
    for (int j = 0; j < length; ++j) g.set(0, j, 1);
    return from_generator(g);
}

LinearCode LinearCode::check(int length, const Field& field) {
    if (length < 1) throw std::invalid_argument("check length must be >= 1");
    MatrixGF h(field, 1, length);
    for (int j = 0; j < length; ++j) h.set(0, j, 1);
    return from_parity(h);
}

BigInt LinearCode::size() const { return ipow(field_.q(), dimension()); }

bool LinearCode::contains(const GFVec& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");
    // reduce against the echelon basis
    GFVec rem = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        int lead = 0;
        while (lead < n_ && basis_.at(i, lead) == 0) ++lead;
        if (lead == n_ || rem[lead] == 0) continue;
        const int factor = field_.div(rem[lead], basis_.at(i, lead));
        for (int j = lead; j < n_; ++j)
            rem[j] = static_cast<std::uint8_t>(field_.sub(rem[j], field_.mul(factor, basis_.at(i, j))));
    }
    return std::all_of(rem.begin(), rem.end(), [](std::uint8_t x) { return x == 0; });
}

std::vector<GFVec> LinearCode::codewords(long long limit) const {
    const int k = dimension();
    if (size() > limit) throw InfeasibleError("codeword enumeration exceeds limit");
    const long long count = static_cast<long long>(size());
    std::vector<GFVec> words;
    words.reserve(count);
    GFVec msg(k, 0);
    for (long long idx = 0;; ++idx) {
        words.push_back(basis_.mul_left(msg));
        int i = 0;
        while (i < k && ++msg[i] == field_.q()) msg[i++] = 0;
        if (i == k) break;
    }
    return words;
}

LinearCode LinearCode::dual() const {
    if (dimension() == 0) return full_space(field_, n_);
    return from_generator(rref_rank_nullspace(basis_).nullspace);
}

bool LinearCode::operator==(const LinearCode& other) const {
    return n_ == other.n_ && field_ == other.field_ && basis_ == other.basis_;
}

MonomialMap MonomialMap::identity(int n) {
    MonomialMap m;
    m.scalars.assign(n, 1);
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    return m;
}

GFVec MonomialMap::apply(const Field& field, const GFVec& v) const {
    if (v.size() != perm.size()) throw std::invalid_argument("monomial map length mismatch");
    GFVec out(v.size(), 0);
    for (size_t j = 0; j < v.size(); ++j) {
        const int dest = perm[j];
        out[dest] = static_cast<std::uint8_t>(field.mul(scalars[dest], v[j]));
    }
    return out;
}

MonomialMap MonomialMap::inverse(const Field& field) const {
    MonomialMap inv;
    const size_t n = perm.size();
    inv.scalars.resize(n);
    inv.perm.resize(n);
    for (size_t j = 0; j < n; ++j) {
        inv.perm[perm[j]] = static_cast<int>(j);
        inv.scalars[j] = static_cast<std::uint8_t>(field.inv(scalars[perm[j]]));
    }
    return inv;
}

MonomialMap sample_monomial(int n, const Field& field, CounterRng& rng) {
    MonomialMap m = MonomialMap::identity(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(m.perm[i], m.perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    for (int i = 0; i < n; ++i)
        m.scalars[i] = static_cast<std::uint8_t>(1 + rng.next_below(static_cast<std::uint64_t>(field.q()) - 1));
    return m;
}

long long monomial_count(int n, int q) {
    long long total = 1;
    const auto mul_checked = [&total](long long f) {
        if (total > (1LL << 62) / f) throw InfeasibleError("monomial map count overflows");
        total *= f;
    };
    for (int i = 2; i <= n; ++i) mul_checked(i);
    for (int i = 0; i < n; ++i) mul_checked(q - 1);
    return total;
}

long long for_each_monomial(int n, const Field& field, const std::function<void(const MonomialMap&)>& fn) {
    MonomialMap m = MonomialMap::identity(n);
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    long long visited = 0;
    do {
        m.perm = base;
        // odometer over scalar assignments
        std::fill(m.scalars.begin(), m.scalars.end(), 1);
        while (true) {
            fn(m);
            ++visited;
            int i = 0;
            while (i < n && ++m.scalars[i] == field.q()) m.scalars[i++] = 1;
            if (i == n) break;
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return visited;
}

SowCountDist sow_distribution(const std::vector<GFVec>& u_words, const std::vector<GFVec>& v_words,
                              const OrbitTable& table, long long pair_limit) {
    const long long pairs = static_cast<long long>(u_words.size()) * static_cast<long long>(v_words.size());
    if (pairs > pair_limit) throw InfeasibleError("pair enumeration exceeds limit");
    SowCountDist dist;
    for (const auto& u : u_words)
        for (const auto& v : v_words) ++dist[second_order_weight(u, v, table)];
    return dist;
}

SowCountDist sow_distribution(const LinearCode& u, const LinearCode& v, const OrbitTable& table,
                              long long pair_limit) {
    const BigInt pairs = u.size() * v.size();
    if (pairs > pair_limit) throw InfeasibleError("pair enumeration exceeds limit");
    return sow_distribution(u.codewords(pair_limit), v.codewords(pair_limit), table, pair_limit);
}

}  // namespace sow
