#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gqm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always stored in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den = 1) { return Rat(num, den); }
inline Rat make_rat(const BigInt& num, const BigInt& den) { return Rat(num, den); }

BigInt numerator_of(const Rat& r);
BigInt denominator_of(const Rat& r);

/// "num/den", denominator always present ("1/1", "-1/3", "0/1").
std::string to_string(const Rat& r);

/// Accepts "num/den" or a bare integer. Throws Error{InvalidArgs} otherwise.
Rat parse_rat(std::string_view text);

}  // namespace gqm
