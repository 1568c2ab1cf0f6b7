#include "mmes/exact.hpp"

#include <stdexcept>

namespace mmes {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

BigInt multinomial4(long long n, long long s0, long long s1, long long s2, long long s3) {
    const long long rest = n - s0 - s1 - s2 - s3;
    if (s0 < 0 || s1 < 0 || s2 < 0 || s3 < 0 || rest < 0) return 0;
    return binomial(n, s0) * binomial(n - s0, s1) * binomial(n - s0 - s1, s2) *
           binomial(n - s0 - s1 - s2, s3);
}

BigInt pow2(unsigned exponent) {
    return BigInt(1) << exponent;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string to_fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_fraction: zero denominator");
    return Rational(num, den);
}

}  // namespace mmes
