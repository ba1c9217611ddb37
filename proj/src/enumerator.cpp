#include "sow/enumerator.hpp"

#include "sow/common.hpp"

#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sow {

namespace {

std::atomic<long long> g_monomial_limit{5'000'000};

// Number of monomials of total degree exactly d in nv variables.
BigInt monomial_count(int d, int nv) { return binomial(static_cast<long long>(d) + nv - 1, nv - 1); }

void check_result_degree(int d, int nv) {
    if (monomial_count(d, nv) > Enumerator::monomial_limit())
        throw InfeasibleError("enumerator operation exceeds the monomial-count limit");
}

}  // namespace

long long Enumerator::monomial_limit() { return g_monomial_limit.load(); }

void Enumerator::set_monomial_limit(long long limit) {
    if (limit < 1) throw std::invalid_argument("monomial limit must be positive");
    g_monomial_limit.store(limit);
}

Enumerator::Enumerator(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("enumerator needs at least one variable");
}

Enumerator Enumerator::constant(int nvars, const BigRat& c) {
    Enumerator e(nvars);
    e.add_term(Exp(nvars, 0), c);
    return e;
}

Enumerator Enumerator::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Exp exp(nvars, 0);
    exp[index] = 1;
    return monomial(exp, 1);
}

Enumerator Enumerator::monomial(const Exp& exp, const BigRat& coef) {
    Enumerator e(static_cast<int>(exp.size()));
    e.add_term(exp, coef);
    return e;
}

void Enumerator::add_term(const Exp& exp, const BigRat& coef) {
    if (static_cast<int>(exp.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    for (int x : exp)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Enumerator& Enumerator::operator+=(const Enumerator& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, coef] : other.terms_) add_term(exp, coef);
    return *this;
}

Enumerator Enumerator::operator+(const Enumerator& other) const {
    Enumerator out = *this;
    out += other;
    return out;
}

Enumerator Enumerator::operator*(const Enumerator& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    check_result_degree(max_degree() + other.max_degree(), nvars_);
    Enumerator out(nvars_);
    Exp exp(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) exp[i] = ea[i] + eb[i];
            out.add_term(exp, ca * cb);
        }
    }
    return out;
}

Enumerator& Enumerator::scale(const BigRat& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exp, coef] : terms_) coef *= factor;
    return *this;
}

Enumerator Enumerator::pow(long long k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    const long long degree = k * max_degree();
    if (degree > std::numeric_limits<int>::max())
        throw InfeasibleError("enumerator power degree is out of range");
    check_result_degree(static_cast<int>(degree), nvars_);
    Enumerator result = constant(nvars_, 1);
    Enumerator base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        if (k >>= 1) base = base * base;
    }
    return result;
}

BigRat Enumerator::coefficient(const Exp& exp) const {
    if (static_cast<int>(exp.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    const auto it = terms_.find(exp);
    return it == terms_.end() ? BigRat(0) : it->second;
}

BigRat Enumerator::evaluate(std::span<const BigRat> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point length mismatch");
    BigRat total = 0;
    for (const auto& [exp, coef] : terms_) {
        BigRat term = coef;
        for (int i = 0; i < nvars_; ++i)
            if (exp[i] != 0) term *= rpow(point[i], exp[i]);
        total += term;
    }
    return total;
}

Enumerator Enumerator::linear_substitute(const std::vector<std::vector<BigRat>>& m) const {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("substitution matrix size mismatch");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != nvars_) throw std::invalid_argument("substitution matrix size mismatch");
    check_result_degree(max_degree(), nvars_);

    // forms[s] = (x m)_s; powers are cached since exponents repeat heavily
    std::vector<Enumerator> forms;
    forms.reserve(nvars_);
    for (int s = 0; s < nvars_; ++s) {
        Enumerator f(nvars_);
        Exp exp(nvars_, 0);
        for (int t = 0; t < nvars_; ++t) {
            exp[t] = 1;
            f.add_term(exp, m[t][s]);
            exp[t] = 0;
        }
        forms.push_back(std::move(f));
    }
    std::vector<std::map<int, Enumerator>> pow_cache(nvars_);
    const auto form_pow = [&](int s, int k) -> const Enumerator& {
        auto [it, inserted] = pow_cache[s].try_emplace(k, nvars_);
        if (inserted) it->second = forms[s].pow(k);
        return it->second;
    };

    Enumerator out(nvars_);
    for (const auto& [exp, coef] : terms_) {
        Enumerator term = constant(nvars_, coef);
        for (int s = 0; s < nvars_; ++s)
            if (exp[s] != 0) term = term * form_pow(s, exp[s]);
        out += term;
    }
    return out;
}

int Enumerator::max_degree() const {
    int best = 0;
    for (const auto& [exp, coef] : terms_)
        best = std::max(best, std::accumulate(exp.begin(), exp.end(), 0));
    return best;
}

std::optional<int> Enumerator::homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [exp, coef] : terms_) {
        const int d = std::accumulate(exp.begin(), exp.end(), 0);
        if (!degree)
            degree = d;
        else if (*degree != d)
            return std::nullopt;
    }
    return degree.value_or(0);
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multinomial(int n, std::span<const int> parts) {
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    BigInt r = 1;
    long long rem = n;
    for (int p : parts) {
        r *= binomial(rem, p);
        rem -= p;
    }
    return r;
}

Enumerator complete_enumerator(const OrbitTable& table, int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    const int nv = table.count();
    Enumerator form(nv);
    Enumerator::Exp exp(nv, 0);
    exp[OrbitTable::kE00] = 1;
    form.add_term(exp, 1);
    exp[OrbitTable::kE00] = 0;
    for (int s = 1; s < nv; ++s) {
        exp[s] = 1;
        form.add_term(exp, table.q() - 1);
        exp[s] = 0;
    }
    return form.pow(n);
}

BigInt complete_count(const OrbitTable& table, int n, const SowVec& index) {
    if (static_cast<int>(index.size()) != table.count()) throw std::invalid_argument("index length mismatch");
    return multinomial(n, index) * ipow(table.q() - 1, n - index[OrbitTable::kE00]);
}

Enumerator bivariate_projection(const Enumerator& a, const OrbitTable& table) {
    if (a.nvars() != table.count()) throw std::invalid_argument("variable count mismatch");
    if (!a.homogeneous_degree()) throw std::invalid_argument("projection requires a homogeneous enumerator");
    Enumerator out(2);
    for (const auto& [exp, coef] : a.terms()) {
        int pi11 = 0;
        for (int s = OrbitTable::kE10 + 1; s < table.count(); ++s) pi11 += exp[s];
        out.add_term({exp[OrbitTable::kE10] + pi11, exp[OrbitTable::kE01] + pi11}, coef);
    }
    return out;
}

BigRat second_moment_pair(const SowDist& dist, int j, int k, int n, const OrbitTable& table) {
    if (j < 0 || k < 0 || j > n || k > n) throw std::invalid_argument("weights out of range");
    BigRat total = 0;
    for (const auto& [index, value] : dist) {
        if (static_cast<int>(index.size()) != table.count() ||
            std::accumulate(index.begin(), index.end(), 0) != n)
            throw std::invalid_argument("distribution index does not sum to n");
        int l = 0;
        for (int s = OrbitTable::kE10 + 1; s < table.count(); ++s) l += index[s];
        if (index[OrbitTable::kE10] + l == j && index[OrbitTable::kE01] + l == k) total += value;
    }
    return total;
}

Enumerator enumerator_from_distribution(const SowDist& dist, int nvars) {
    Enumerator out(nvars);
    for (const auto& [index, value] : dist) out.add_term(index, value);
    return out;
}

SowDist distribution_from_enumerator(const Enumerator& a) {
    SowDist out;
    for (const auto& [exp, coef] : a.terms()) out.emplace(exp, coef);
    return out;
}

}  // namespace sow
