#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lforge/errors.hpp"

namespace lforge {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we rely on for
// structural polynomial equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw InputError("cannot parse rational: '" + s + "'");
    }
}

// r^k for k of either sign; negative powers require r != 0.
inline Rational rational_pow(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    if (r == 0) {
        if (k < 0) throw InputError("negative power of zero");
        return Rational(0);
    }
    Rational base = k > 0 ? r : Rational(1) / r;
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Rational acc(1);
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

} // namespace lforge
