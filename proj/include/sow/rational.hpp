#ifndef SOW_RATIONAL_HPP
#define SOW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sow {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// q^e for e >= 0.
BigInt ipow(const BigInt& base, long long e);
BigRat rpow(const BigRat& base, long long e);

// Renders as "num/den" with positive denominator, "num" when den == 1.
std::string rat_to_string(const BigRat& r);

// Accepts "num", "num/den"; throws std::invalid_argument on malformed input.
BigRat rat_from_string(const std::string& s);

// Decimal rendering with the given number of fractional digits (round half away
// from zero); used only for convenience output, never for exact payloads.
std::string rat_to_decimal(const BigRat& r, int digits);

}  // namespace sow

#endif
