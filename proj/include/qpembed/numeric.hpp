#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace qpembed {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Exponent of p in n.  n must be nonzero.
inline long long int_valuation(Int n, const Int& p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline Int pow_int(const Int& base, long long e) {
    Int r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int mod_reduce(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

inline Int pow_mod(Int base, Int e, const Int& m) {
    Int r = 1;
    base = mod_reduce(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

// Inverse of a modulo m; a and m must be coprime.
Int mod_inverse(const Int& a, const Int& m);

bool is_prime(const Int& n);

std::string int_to_string(const Int& n);

}  // namespace qpembed
