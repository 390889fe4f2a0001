#include "qpembed/padic.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <sstream>

namespace qpembed {

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw UsageError("mod_inverse: arguments not coprime");
    return mod_reduce(old_s, m);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 32);
}

std::string int_to_string(const Int& n) { return n.str(); }

PrimeContext make_context(long long p, int default_precision) {
    if (p < 3 || p % 2 == 0) throw UsageError("prime must be odd and >= 3");
    if (!is_prime(Int(p))) throw UsageError("p is not prime: " + std::to_string(p));
    if (default_precision < 4) throw UsageError("precision must be >= 4");
    PrimeContext ctx;
    ctx.p = p;
    ctx.default_precision = default_precision;
    for (long long u = 2; u < p; ++u) {
        if (pow_mod(u, Int(p - 1) / 2, p) == p - 1) {
            ctx.lambda = u;
            break;
        }
    }
    return ctx;
}

int legendre(const Int& u, const PrimeContext& ctx) {
    Int r = mod_reduce(u, ctx.p);
    if (r == 0) return 0;
    Int e = pow_mod(r, Int(ctx.p - 1) / 2, ctx.p);
    return e == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// PAdicNumber

PAdicNumber PAdicNumber::zero(const PrimeContext& ctx, int precision) {
    PAdicNumber x;
    x.ctx_ = ctx;
    x.zero_ = true;
    x.exact_ = Rational(0);
    x.prec_ = precision > 0 ? precision : ctx.default_precision;
    return x;
}

PAdicNumber PAdicNumber::from_rational(const Int& num, const Int& den, const PrimeContext& ctx,
                                       int precision) {
    if (den == 0) throw UsageError("from_rational: zero denominator");
    return from_rational(Rational(num, den), ctx, precision);
}

PAdicNumber PAdicNumber::from_rational(const Rational& q, const PrimeContext& ctx, int precision) {
    int prec = precision > 0 ? precision : ctx.default_precision;
    if (q == 0) return zero(ctx, prec);
    PAdicNumber x;
    x.ctx_ = ctx;
    x.zero_ = false;
    x.exact_ = q;
    x.prec_ = prec;
    Int p(ctx.p);
    Int num = rat_num(q), den = rat_den(q);
    long long va = int_valuation(num, p);
    long long vb = int_valuation(den, p);
    x.val_ = va - vb;
    Int pn = pow_int(p, prec);
    Int nu = mod_reduce(num / pow_int(p, va), pn);
    Int du = mod_reduce(den / pow_int(p, vb), pn);
    x.unit_ = nu * mod_inverse(du, pn) % pn;
    return x;
}

PAdicNumber PAdicNumber::from_integer(long long n, const PrimeContext& ctx, int precision) {
    return from_rational(Rational(n), ctx, precision);
}

PAdicNumber PAdicNumber::from_unit_approx(long long valuation, const Int& unit,
                                          const PrimeContext& ctx, int precision) {
    if (precision < 1) throw UsageError("from_unit_approx: precision must be >= 1");
    PAdicNumber x;
    x.ctx_ = ctx;
    x.zero_ = false;
    x.val_ = valuation;
    x.prec_ = precision;
    Int pn = pow_int(Int(ctx.p), precision);
    x.unit_ = mod_reduce(unit, pn);
    if (x.unit_ == 0 || x.unit_ % ctx.p == 0)
        throw UsageError("from_unit_approx: unit divisible by p");
    return x;
}

long long PAdicNumber::valuation() const {
    if (zero_) throw UsageError("valuation of zero is undefined");
    return val_;
}

const Int& PAdicNumber::unit() const {
    if (zero_) throw UsageError("unit of zero is undefined");
    return unit_;
}

Int PAdicNumber::unit_mod(int digits) const {
    if (zero_) throw UsageError("unit of zero is undefined");
    if (digits <= prec_) return unit_ % pow_int(Int(ctx_.p), digits);
    if (exact_) {
        PAdicNumber w = from_rational(*exact_, ctx_, digits);
        return w.unit_;
    }
    throw UsageError("requested more digits than tracked");
}

std::vector<int> PAdicNumber::digits() const {
    std::vector<int> d;
    if (zero_) {
        d.assign(static_cast<size_t>(std::max(prec_, 1)), 0);
        return d;
    }
    Int u = unit_;
    for (int i = 0; i < prec_; ++i) {
        d.push_back(static_cast<int>(u % ctx_.p));
        u /= ctx_.p;
    }
    return d;
}

int PAdicNumber::leading_digit() const {
    if (zero_) return 0;
    return static_cast<int>(unit_ % ctx_.p);
}

Rational PAdicNumber::representative() const {
    if (zero_) return Rational(0);
    if (exact_) return *exact_;
    Rational r(unit_);
    Int pv = pow_int(Int(ctx_.p), std::abs(val_));
    return val_ >= 0 ? Rational(r * pv) : Rational(r / pv);
}

void PAdicNumber::check_same_prime(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.ctx_.p != b.ctx_.p) throw UsageError("operands use different primes");
}

PAdicNumber PAdicNumber::operator-() const {
    if (zero_) return *this;
    if (exact_) return from_rational(-*exact_, ctx_, prec_);
    PAdicNumber x = *this;
    Int pn = pow_int(Int(ctx_.p), prec_);
    x.unit_ = pn - unit_;
    return x;
}

PAdicNumber PAdicNumber::operator+(const PAdicNumber& rhs) const {
    check_same_prime(*this, rhs);
    if (zero_) return rhs;
    if (rhs.zero_) return *this;
    if (exact_ && rhs.exact_)
        return from_rational(*exact_ + *rhs.exact_, ctx_, std::min(prec_, rhs.prec_));

    // Known moduli: p^(v+N) per inexact operand; exact operands do not bind.
    long long known = 0;
    bool bound = false;
    if (!exact_) {
        known = val_ + prec_;
        bound = true;
    }
    if (!rhs.exact_) {
        long long k2 = rhs.val_ + rhs.prec_;
        known = bound ? std::min(known, k2) : k2;
        bound = true;
    }
    long long vm = std::min(val_, rhs.val_);
    long long window = known - vm;  // digits of the sum we can certify
    if (window <= 0) throw PrecisionExhausted("no certified digits in sum");

    Int p(ctx_.p);
    Int pw = pow_int(p, window);
    Int s = 0;
    long long d1 = window - (val_ - vm);
    long long d2 = window - (rhs.val_ - vm);
    if (d1 > 0) s += unit_mod(static_cast<int>(d1)) * pow_int(p, val_ - vm);
    if (d2 > 0) s += rhs.unit_mod(static_cast<int>(d2)) * pow_int(p, rhs.val_ - vm);
    s = mod_reduce(s, pw);
    if (s == 0) throw PrecisionExhausted("addition cancelled all known digits");
    long long shift = int_valuation(s, p);
    PAdicNumber r;
    r.ctx_ = ctx_;
    r.zero_ = false;
    r.val_ = vm + shift;
    r.prec_ = static_cast<int>(window - shift);
    r.unit_ = s / pow_int(p, shift);
    return r;
}

PAdicNumber PAdicNumber::operator-(const PAdicNumber& rhs) const { return *this + (-rhs); }

PAdicNumber PAdicNumber::operator*(const PAdicNumber& rhs) const {
    check_same_prime(*this, rhs);
    if (zero_ || rhs.zero_) return zero(ctx_, std::min(prec_, rhs.prec_));
    if (exact_ && rhs.exact_)
        return from_rational(*exact_ * *rhs.exact_, ctx_, std::min(prec_, rhs.prec_));
    int prec = !exact_ && !rhs.exact_ ? std::min(prec_, rhs.prec_) : (!exact_ ? prec_ : rhs.prec_);
    PAdicNumber r;
    r.ctx_ = ctx_;
    r.zero_ = false;
    r.val_ = val_ + rhs.val_;
    r.prec_ = prec;
    Int pn = pow_int(Int(ctx_.p), prec);
    r.unit_ = unit_mod(prec) * rhs.unit_mod(prec) % pn;
    return r;
}

PAdicNumber PAdicNumber::inverse() const {
    if (zero_) throw UsageError("inverse of zero");
    if (exact_) return from_rational(Rational(1) / *exact_, ctx_, prec_);
    PAdicNumber r = *this;
    r.val_ = -val_;
    r.unit_ = mod_inverse(unit_, pow_int(Int(ctx_.p), prec_));
    return r;
}

PAdicNumber PAdicNumber::operator/(const PAdicNumber& rhs) const { return *this * rhs.inverse(); }

bool PAdicNumber::is_square() const {
    if (zero_) throw UsageError("is_square: zero has no square class");
    if (val_ % 2 != 0) return false;
    return legendre(Int(leading_digit()), ctx_) == 1;
}

namespace {

// Square root of a QR residue mod p by Tonelli-Shanks.
Int sqrt_mod_p(const Int& a0, const PrimeContext& ctx) {
    Int p(ctx.p);
    Int a = mod_reduce(a0, p);
    if (a == 0) return 0;
    if (ctx.p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    Int q = p - 1;
    long long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z(ctx.lambda);  // any nonresidue works
    Int m(s), c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        long long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = pow_mod(c, pow_int(2, static_cast<long long>(m) - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Lifts r0 with r0^2 = u mod p to r with r^2 = u mod p^prec (u a unit).
Int sqrt_lift(const Int& u, const Int& r0, const PrimeContext& ctx, int prec) {
    Int p(ctx.p);
    Int r = r0;
    long long have = 1;
    while (have < prec) {
        have = std::min<long long>(2 * have, prec);
        Int pk = pow_int(p, have);
        Int um = mod_reduce(u, pk);
        r = mod_reduce((r + um * mod_inverse(r, pk)) % pk * mod_inverse(Int(2), pk), pk);
    }
    return r;
}

bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    if (n == 0) {
        root = 0;
        return true;
    }
    Int r = boost::multiprecision::sqrt(n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) {
        root = r;
        return true;
    }
    return false;
}

}  // namespace

PAdicNumber PAdicNumber::sqrt() const {
    if (zero_) return *this;
    if (!is_square()) throw NotASquare("sqrt: value is not a square in Q_p");
    long long half = val_ / 2;
    Int p(ctx_.p);

    if (exact_) {
        // Exact rational square roots survive as exact values.
        Int nr, dr;
        Int num = rat_num(*exact_), den = rat_den(*exact_);
        if (perfect_square(num, nr) && perfect_square(den, dr)) {
            PAdicNumber r = from_rational(Rational(nr, dr), ctx_, prec_);
            if (!r.zero_ && r.leading_digit() > (ctx_.p - 1) / 2) r = -r;
            return r;
        }
    }
    Int u = unit_mod(prec_);
    Int r0 = sqrt_mod_p(u % p, ctx_);
    Int r = sqrt_lift(u, r0, ctx_, prec_);
    if (r % p > (ctx_.p - 1) / 2) r = pow_int(p, prec_) - r;
    PAdicNumber out;
    out.ctx_ = ctx_;
    out.zero_ = false;
    out.val_ = half;
    out.prec_ = prec_;
    out.unit_ = r;
    return out;
}

bool PAdicNumber::same_value(const PAdicNumber& rhs) const {
    check_same_prime(*this, rhs);
    if (zero_ || rhs.zero_) return zero_ && rhs.zero_;
    if (exact_ && rhs.exact_) return *exact_ == *rhs.exact_;
    if (val_ != rhs.val_) return false;
    int shared = std::min(exact_ ? rhs.prec_ : prec_, rhs.exact_ ? prec_ : rhs.prec_);
    Int pn = pow_int(Int(ctx_.p), shared);
    return unit_mod(shared) % pn == rhs.unit_mod(shared) % pn;
}

std::string PAdicNumber::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "0 [exact]";
        return os.str();
    }
    os << ctx_.p << "^" << val_ << " * (";
    auto d = digits();
    bool first = true;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << d[i];
        if (i == 1) os << "*" << ctx_.p;
        if (i > 1) os << "*" << ctx_.p << "^" << i;
    }
    if (first) os << "0";
    os << ") [mod " << ctx_.p << "^" << (val_ + prec_) << "]";
    return os.str();
}

std::string PAdicNumber::digit_string() const {
    std::ostringstream os;
    os << "...";
    auto d = digits();
    for (size_t i = d.size(); i-- > 0;) {
        os << d[i];
        if (i > 0) os << " ";
    }
    os << " (base " << ctx_.p << ") * " << ctx_.p << "^" << (zero_ ? 0 : val_);
    return os.str();
}

// ---------------------------------------------------------------------------
// Hensel lifting

Int poly_eval(const std::vector<Int>& coeffs, const Int& x) {
    Int r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

std::vector<Int> poly_derivative(const std::vector<Int>& coeffs) {
    std::vector<Int> d;
    for (size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * Int(i));
    return d;
}

PAdicNumber hensel_lift(const std::vector<Int>& coeffs, const Int& x0, const PrimeContext& ctx,
                        int precision) {
    int prec = precision > 0 ? precision : ctx.default_precision;
    Int p(ctx.p);
    Int r = mod_reduce(x0, p);
    if (mod_reduce(poly_eval(coeffs, r), p) != 0)
        throw NotASimpleRoot("hensel_lift: f(x0) != 0 mod p");
    std::vector<Int> deriv = poly_derivative(coeffs);
    if (mod_reduce(poly_eval(deriv, r), p) == 0)
        throw NotASimpleRoot("hensel_lift: f'(x0) = 0 mod p");

    long long have = 1;
    while (have < prec) {
        have = std::min<long long>(2 * have, prec);
        Int pk = pow_int(p, have);
        Int fr = mod_reduce(poly_eval(coeffs, r), pk);
        Int dr = mod_reduce(poly_eval(deriv, r), pk);
        r = mod_reduce(r - fr * mod_inverse(dr, pk), pk);
    }

    // An exact integer root stays exact.
    Int pk = pow_int(p, prec);
    if (poly_eval(coeffs, r) == 0) return PAdicNumber::from_rational(Rational(r), ctx, prec);
    if (poly_eval(coeffs, r - pk) == 0)
        return PAdicNumber::from_rational(Rational(r - pk), ctx, prec);

    if (r == 0) throw PrecisionExhausted("hensel_lift: root vanishes to full precision");
    long long v = int_valuation(r, p);
    if (prec - v < 1) throw PrecisionExhausted("hensel_lift: root valuation exhausts precision");
    return PAdicNumber::from_unit_approx(v, r / pow_int(p, v), ctx, static_cast<int>(prec - v));
}

// ---------------------------------------------------------------------------
// Parsing

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

PAdicNumber parse_padic(const std::string& text, const PrimeContext& ctx, int precision) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");
    if (s.rfind("p^", 0) == 0) {
        auto star = s.find('*');
        std::string expo = star == std::string::npos ? s.substr(2) : s.substr(2, star - 2);
        long long k = 0;
        try {
            k = std::stoll(expo);
        } catch (...) {
            throw ParseError("bad exponent in '" + text + "'");
        }
        Rational u = star == std::string::npos ? Rational(1) : parse_rational(s.substr(star + 1));
        Rational pk(pow_int(Int(ctx.p), std::abs(k)));
        Rational v = k >= 0 ? Rational(u * pk) : Rational(u / pk);
        return PAdicNumber::from_rational(v, ctx, precision);
    }
    return PAdicNumber::from_rational(parse_rational(s), ctx, precision);
}

}  // namespace qpembed
