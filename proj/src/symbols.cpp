#include "qpembed/symbols.hpp"

namespace qpembed {

namespace {

// Rows and columns indexed 1, lambda, p, lambda*p.
constexpr std::array<std::array<int, 4>, 4> kTableP1 = {{
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
}};

constexpr std::array<std::array<int, 4>, 4> kTableP3 = {{
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, -1, 1},
    {1, -1, 1, -1},
}};

}  // namespace

std::string class_token(SquareClass c) {
    switch (c) {
        case SquareClass::One: return "1";
        case SquareClass::Lambda: return "l";
        case SquareClass::P: return "p";
        case SquareClass::LambdaP: return "lp";
    }
    throw UsageError("bad square class");
}

SquareClass class_from_token(const std::string& token) {
    if (token == "1") return SquareClass::One;
    if (token == "l") return SquareClass::Lambda;
    if (token == "p") return SquareClass::P;
    if (token == "lp") return SquareClass::LambdaP;
    throw ParseError("unknown square class token: '" + token + "'");
}

Rational class_representative(SquareClass c, const PrimeContext& ctx) {
    switch (c) {
        case SquareClass::One: return Rational(1);
        case SquareClass::Lambda: return Rational(ctx.lambda);
        case SquareClass::P: return Rational(ctx.p);
        case SquareClass::LambdaP: return Rational(Int(ctx.lambda) * ctx.p);
    }
    throw UsageError("bad square class");
}

SquareClass classify(const PAdicNumber& x) {
    if (x.is_zero()) throw ZeroHasNoClass("classify: zero has no square class");
    int odd_val = static_cast<int>(((x.valuation() % 2) + 2) % 2);
    int nonres = legendre(Int(x.leading_digit()), x.context()) == 1 ? 0 : 1;
    return static_cast<SquareClass>((odd_val << 1) | nonres);
}

SquareClass classify(const Rational& x, const PrimeContext& ctx) {
    if (x == 0) throw ZeroHasNoClass("classify: zero has no square class");
    // class(a/b) = class(a*b)
    Int ab = rat_num(x) * rat_den(x);
    Int p(ctx.p);
    long long v = int_valuation(ab, p);
    int odd_val = static_cast<int>(v % 2);
    int nonres = legendre(ab / pow_int(p, v), ctx) == 1 ? 0 : 1;
    return static_cast<SquareClass>((odd_val << 1) | nonres);
}

SquareClass minus_one_class(const PrimeContext& ctx) {
    return ctx.p % 4 == 1 ? SquareClass::One : SquareClass::Lambda;
}

const std::array<std::array<int, 4>, 4>& hilbert_table(int residue_index) {
    return residue_index == 0 ? kTableP1 : kTableP3;
}

int hilbert(SquareClass a, SquareClass b, const PrimeContext& ctx) {
    const auto& t = hilbert_table(ctx.p % 4 == 1 ? 0 : 1);
    return t[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

int hilbert_general(const Rational& a, const Rational& b, const PrimeContext& ctx) {
    if (a == 0 || b == 0) throw UsageError("hilbert symbol needs nonzero arguments");
    return hilbert(classify(a, ctx), classify(b, ctx), ctx);
}

}  // namespace qpembed
