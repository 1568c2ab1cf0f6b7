#pragma once

// Exact big-integer / rational arithmetic used by the combinatorial paths.
// Binomial coefficients follow the convention C(n,k) = 0 whenever k < 0,
// n < 0 or k > n, which the coupling table relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mmes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(long long n, long long k);

// n! / (s0! s1! s2! s3! (n - s0 - s1 - s2 - s3)!), zero if any slot is
// negative or the slots do not fit into n.
BigInt multinomial4(long long n, long long s0, long long s1, long long s2, long long s3);

BigInt pow2(unsigned exponent);

double to_double(const Rational& r);

// "p/q" (or just "p" when q == 1); round-trips through parse_fraction.
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& text);

}  // namespace mmes
