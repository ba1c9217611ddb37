#include "sow/rational.hpp"

#include <stdexcept>

namespace sow {

BigInt ipow(const BigInt& base, long long e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt r = 1, b = base;
    long long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

BigRat rpow(const BigRat& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rpow: 0 to a negative power");
        return 1 / rpow(base, -e);
    }
    BigRat r = 1, b = base;
    long long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::string rat_to_string(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigRat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string rat_to_decimal(const BigRat& r, int digits) {
    if (digits < 0) throw std::invalid_argument("rat_to_decimal: negative digit count");
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    const BigInt scale = ipow(10, digits);
    // round half away from zero
    const BigInt scaled = (num * scale * 2 + den) / (den * 2);
    const BigInt whole = scaled / scale;
    std::string out = (neg && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string frac = BigInt(scaled % scale).str();
        out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace sow
