#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpembed/errors.hpp"
#include "qpembed/numeric.hpp"

namespace qpembed {

// Fixed odd prime together with its canonical nonresidue and the default
// number of stored base-p digits.
struct PrimeContext {
    long long p = 0;
    long long lambda = 0;        // least positive quadratic nonresidue mod p
    int default_precision = 32;  // unit digits, >= 4

    bool operator==(const PrimeContext&) const = default;
};

// Validates p (odd prime) and precision, computes lambda.
PrimeContext make_context(long long p, int default_precision = 32);

// Legendre symbol (u/p) via Euler's criterion: 0 if p | u, else +-1.
int legendre(const Int& u, const PrimeContext& ctx);

// An element of Q_p at finite precision: p^v * (d0 + d1 p + ...) known
// modulo p^(v+N), with d0 != 0 for nonzero values.  Numbers constructed
// from rationals additionally remember their exact value, so arithmetic
// among them never loses precision.
class PAdicNumber {
public:
    PAdicNumber() = default;

    static PAdicNumber zero(const PrimeContext& ctx, int precision = 0);
    static PAdicNumber from_rational(const Int& num, const Int& den, const PrimeContext& ctx,
                                     int precision = 0);
    static PAdicNumber from_rational(const Rational& q, const PrimeContext& ctx, int precision = 0);
    static PAdicNumber from_integer(long long n, const PrimeContext& ctx, int precision = 0);
    // Builds an inexact value p^v * unit known to `precision` digits.
    static PAdicNumber from_unit_approx(long long valuation, const Int& unit,
                                        const PrimeContext& ctx, int precision);

    const PrimeContext& context() const { return ctx_; }
    bool is_zero() const { return zero_; }
    bool is_exact() const { return zero_ || exact_.has_value(); }
    const std::optional<Rational>& exact_value() const { return exact_; }

    long long valuation() const;  // throws UsageError on zero
    int precision() const { return prec_; }
    const Int& unit() const;  // canonical representative in [1, p^prec), not divisible by p

    std::vector<int> digits() const;  // little-endian base-p digits of the unit
    int leading_digit() const;        // d0

    // Exact value when tracked, otherwise the representative p^v * unit,
    // which agrees with the true value modulo p^(v + precision).
    Rational representative() const;

    PAdicNumber operator-() const;
    PAdicNumber operator+(const PAdicNumber& rhs) const;
    PAdicNumber operator-(const PAdicNumber& rhs) const;
    PAdicNumber operator*(const PAdicNumber& rhs) const;
    PAdicNumber inverse() const;
    PAdicNumber operator/(const PAdicNumber& rhs) const;

    bool is_square() const;    // throws UsageError on zero
    PAdicNumber sqrt() const;  // leading digit <= (p-1)/2; sqrt(0) = 0

    // True when the two values agree modulo p^(v + min shared precision).
    bool same_value(const PAdicNumber& rhs) const;

    // `p^v * (d0 + d1*p + ...) [mod p^(v+N)]`
    std::string to_string() const;
    // `...d3 d2 d1 d0 (base p) * p^v`
    std::string digit_string() const;

private:
    PrimeContext ctx_{};
    bool zero_ = true;
    std::optional<Rational> exact_;
    long long val_ = 0;
    Int unit_ = 0;
    int prec_ = 0;

    int effective_precision_for(int wanted) const;
    Int unit_mod(int digits) const;  // unit to `digits` digits (recomputes exact values)
    static void check_same_prime(const PAdicNumber& a, const PAdicNumber& b);
};

// Unique root r in Z_p of f with r = x0 mod p, for f with integer
// coefficients (ascending degree), f(x0) = 0 mod p and f'(x0) a unit.
// Newton iteration with precision doubling.
PAdicNumber hensel_lift(const std::vector<Int>& coeffs, const Int& x0, const PrimeContext& ctx,
                        int precision = 0);

Int poly_eval(const std::vector<Int>& coeffs, const Int& x);
std::vector<Int> poly_derivative(const std::vector<Int>& coeffs);

// Accepts integers, fractions `a/b`, and `p^k*u` tokens (u itself an
// integer or fraction; `p^k` alone is also allowed).
PAdicNumber parse_padic(const std::string& text, const PrimeContext& ctx, int precision = 0);

Rational parse_rational(const std::string& text);

}  // namespace qpembed
