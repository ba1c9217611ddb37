#ifndef SOW_FIELD_HPP
#define SOW_FIELD_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sow {

// A finite field GF(p^r), q = p^r <= kMaxOrder. Elements are integer indices
// 0..q-1 encoding the coordinate vector (a_0, ..., a_{r-1}) relative to the
// basis 1, alpha, ..., alpha^{r-1} as index = sum a_j p^j (constant
// coordinate least significant), so 0 -> 0 and 1 -> 1. The modulus polynomial
// is monic of degree r with coefficients listed from the constant term up.
//
// Field is a cheap value handle over immutable shared data; all operations
// are pure and safe to share across threads.
class Field {
  public:
    static constexpr int kMaxOrder = 256;

    // Uses the documented default modulus for q = p^r (see default_modulus).
    static Field make(int p, int r);
    // Rejects non-prime p, out-of-range q, and reducible or non-monic moduli.
    static Field make(int p, int r, const std::vector<int>& modulus);
    // Factors q as p^r; rejects non-prime-powers.
    static Field from_order(int q);

    int p() const { return d_->p; }
    int r() const { return d_->r; }
    int q() const { return d_->q; }
    const std::vector<int>& modulus() const { return d_->modulus; }

    int add(int a, int b) const { return d_->add[idx(a) * d_->q + idx(b)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return d_->mul[idx(a) * d_->q + idx(b)]; }
    int neg(int a) const { return d_->neg[idx(a)]; }
    // inv/div throw std::domain_error on zero divisor.
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;

    // v + v^p + ... + v^(p^(r-1)); lands in the prime subfield, returned as
    // an element index in 0..p-1.
    int trace(int v) const { return d_->trace[idx(v)]; }

    // exp(2*pi*i*trace(v)/p), the additive character.
    std::complex<double> character(int v) const;

    // Polynomial rendering, e.g. "a^2+1" over GF(8); "0".."p-1" for r = 1.
    std::string element_name(int v) const;

    // Default modulus polynomials, fixed so outputs are reproducible:
    // q=4: a^2+a+1; q=8: a^3+a+1; q=9: a^2+1; q=16: a^4+a+1; q=25: a^2+a+2;
    // q=27: a^3+2a+1. Any other extension order gets the lexicographically
    // smallest monic irreducible (coefficients compared from the constant
    // term up). r=1 uses the trivial modulus x - 0 placeholder [0, 1].
    static std::vector<int> default_modulus(int p, int r);

    bool operator==(const Field& o) const {
        return d_->p == o.d_->p && d_->r == o.d_->r && d_->modulus == o.d_->modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    struct Data {
        int p, r, q;
        std::vector<int> modulus;
        std::vector<std::uint8_t> add, mul, neg, inv, trace;
    };

    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    int idx(int a) const {
        if (a < 0 || a >= d_->q) throw std::out_of_range("field element index out of range");
        return a;
    }

    std::shared_ptr<const Data> d_;
};

bool is_prime(int n);

}  // namespace sow

#endif
