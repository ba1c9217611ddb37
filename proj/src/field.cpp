#include "sow/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sow {

namespace {

// Polynomials over F_p as coefficient vectors, constant term first, no
// trailing zeros (zero polynomial = empty vector).

std::vector<int> trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return trim(std::move(c));
}

// Remainder of a modulo the monic polynomial m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = trim(std::move(a));
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

bool poly_divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& m, int p) {
    const int deg = static_cast<int>(m.size()) - 1;
    if (deg < 1) return false;
    for (int dd = 1; dd <= deg / 2; ++dd) {
        // enumerate monic divisors of degree dd by odometer over low coefficients
        std::vector<int> cand(dd + 1, 0);
        cand[dd] = 1;
        while (true) {
            if (poly_divides(cand, m, p)) return false;
            int i = 0;
            while (i < dd && ++cand[i] == p) cand[i++] = 0;
            if (i == dd) break;
        }
    }
    return true;
}

std::vector<int> index_to_poly(int v, int p, int r) {
    std::vector<int> a(r, 0);
    for (int j = 0; j < r; ++j) {
        a[j] = v % p;
        v /= p;
    }
    return trim(std::move(a));
}

int poly_to_index(const std::vector<int>& a, int p) {
    int v = 0;
    for (size_t j = a.size(); j-- > 0;) v = v * p + a[j];
    return v;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> Field::default_modulus(int p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (r == 1) return {0, 1};
    const int q = static_cast<int>(std::pow(p, r) + 0.5);
    switch (q) {
        case 4: return {1, 1, 1};
        case 8: return {1, 1, 0, 1};
        case 9: return {1, 0, 1};
        case 16: return {1, 1, 0, 0, 1};
        case 25: return {2, 1, 1};
        case 27: return {1, 2, 0, 1};
        default: break;
    }
    // lexicographically smallest monic irreducible, constant term compared first
    std::vector<int> cand(r + 1, 0);
    cand[r] = 1;
    while (true) {
        if (is_irreducible(cand, p)) return cand;
        int i = 0;
        while (i < r && ++cand[i] == p) cand[i++] = 0;
        if (i == r) break;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

Field Field::make(int p, int r) { return make(p, r, default_modulus(p, r)); }

Field Field::make(int p, int r, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds bound " + std::to_string(kMaxOrder));
    }
    if (static_cast<int>(modulus.size()) != r + 1 || modulus[r] != 1)
        throw std::invalid_argument("modulus must be monic of degree r");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in 0..p-1");
    if (r > 1 && !is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible over F_p");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->r = r;
    d->q = static_cast<int>(q);
    d->modulus = modulus;
    const int n = d->q;
    d->add.resize(static_cast<size_t>(n) * n);
    d->mul.resize(static_cast<size_t>(n) * n);
    d->neg.resize(n);
    d->inv.assign(n, 0);
    d->trace.resize(n);
    for (int a = 0; a < n; ++a) {
        const auto pa = index_to_poly(a, p, r);
        for (int b = 0; b < n; ++b) {
            const auto pb = index_to_poly(b, p, r);
            std::vector<int> sum(r, 0);
            for (int j = 0; j < r; ++j)
                sum[j] = ((j < static_cast<int>(pa.size()) ? pa[j] : 0) +
                          (j < static_cast<int>(pb.size()) ? pb[j] : 0)) % p;
            d->add[static_cast<size_t>(a) * n + b] = static_cast<std::uint8_t>(poly_to_index(trim(sum), p));
            d->mul[static_cast<size_t>(a) * n + b] =
                static_cast<std::uint8_t>(poly_to_index(poly_mod(poly_mul(pa, pb, p), modulus, p), p));
        }
    }
    for (int a = 0; a < n; ++a) {
        std::vector<int> pa = index_to_poly(a, p, r);
        for (int& c : pa) c = (p - c) % p;
        d->neg[a] = static_cast<std::uint8_t>(poly_to_index(trim(std::move(pa)), p));
    }
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            if (d->mul[static_cast<size_t>(a) * n + b] == 1) d->inv[a] = static_cast<std::uint8_t>(b);
    for (int a = 0; a < n; ++a) {
        // t = a + a^p + ... + a^(p^(r-1))
        int t = 0, x = a;
        for (int j = 0; j < r; ++j) {
            t = d->add[static_cast<size_t>(t) * n + x];
            int y = x;
            for (int e = 1; e < p; ++e) y = d->mul[static_cast<size_t>(y) * n + x];
            x = y;  // x^p
        }
        d->trace[a] = static_cast<std::uint8_t>(t);
    }
    return Field(std::move(d));
}

Field Field::from_order(int q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int r = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++r;
        }
        if (m != 1) break;
        return make(p, r);
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

int Field::inv(int a) const {
    idx(a);
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(d_->q) + ")");
    return d_->inv[a];
}

int Field::pow(int a, long long e) const {
    idx(a);
    if (e < 0) return pow(inv(a), -e);
    int r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::complex<double> Field::character(int v) const {
    const double angle = 2.0 * std::numbers::pi * trace(v) / d_->p;
    return {std::cos(angle), std::sin(angle)};
}

std::string Field::element_name(int v) const {
    idx(v);
    if (d_->r == 1) return std::to_string(v);
    if (v == 0) return "0";
    std::string out;
    const auto coeffs = index_to_poly(v, d_->p, d_->r);
    for (size_t j = coeffs.size(); j-- > 0;) {
        if (coeffs[j] == 0) continue;
        if (!out.empty()) out += "+";
        if (j == 0 || coeffs[j] > 1) out += std::to_string(coeffs[j]);
        if (j >= 1) out += (coeffs[j] > 1 ? "*a" : "a");
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out;
}

}  // namespace sow
