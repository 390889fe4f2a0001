#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpembed/symbols.hpp"
#include "support/gen.hpp"

using namespace qpembed;

namespace {
const SquareClass kAll[] = {SquareClass::One, SquareClass::Lambda, SquareClass::P,
                            SquareClass::LambdaP};
}

TEST_CASE("classify") {
    auto c7 = make_context(7);
    CHECK(classify(Rational(9), c7) == SquareClass::One);
    Rational p3l(Int(7) * 7 * 7 * c7.lambda);
    CHECK(classify(p3l, c7) == SquareClass::LambdaP);
    // -1 is a nonresidue exactly when p = 3 mod 4
    CHECK(classify(Rational(-1), c7) == SquareClass::Lambda);
    CHECK(classify(Rational(-1), make_context(3)) == SquareClass::Lambda);
    CHECK(classify(Rational(-1), make_context(5)) == SquareClass::One);
    CHECK(classify(Rational(-1), make_context(13)) == SquareClass::One);
    CHECK_THROWS_AS(classify(Rational(0), c7), ZeroHasNoClass);

    // PAdicNumber route agrees with the rational route
    auto c5 = make_context(5);
    for (long long v : {50, -18, 7, 12, 125, 10}) {
        CHECK(classify(PAdicNumber::from_integer(v, c5)) == classify(Rational(v), c5));
    }
}

TEST_CASE("classify is a group homomorphism") {
    std::mt19937_64 rng(411);
    for (long long p : {5, 7}) {
        auto ctx = make_context(p);
        for (int i = 0; i < 300; ++i) {
            Rational x = testgen::nonzero_rational(rng);
            Rational y = testgen::nonzero_rational(rng);
            CHECK(classify(Rational(x * y), ctx) == classify(x, ctx) * classify(y, ctx));
        }
    }
}

TEST_CASE("hilbert tables") {
    auto c5 = make_context(5);
    auto c7 = make_context(7);
    CHECK(hilbert(SquareClass::Lambda, SquareClass::P, c5) == -1);
    CHECK(hilbert(SquareClass::P, SquareClass::P, c7) == -1);
    CHECK(hilbert(SquareClass::P, SquareClass::P, c5) == 1);
    CHECK(hilbert(SquareClass::P, SquareClass::LambdaP, c7) == 1);
    for (auto a : kAll) {
        CHECK(hilbert(SquareClass::One, a, c5) == 1);
        CHECK(hilbert(SquareClass::One, a, c7) == 1);
    }
}

TEST_CASE("symmetry and bimultiplicativity, both residue classes") {
    for (long long p : {5, 7}) {
        auto ctx = make_context(p);
        for (auto a : kAll)
            for (auto b : kAll) CHECK(hilbert(a, b, ctx) == hilbert(b, a, ctx));
        for (auto a : kAll)
            for (auto b : kAll)
                for (auto c : kAll)
                    CHECK(hilbert(a * b, c, ctx) == hilbert(a, c, ctx) * hilbert(b, c, ctx));
    }
}

TEST_CASE("hilbert_general") {
    auto c5 = make_context(5);
    // square-class invariance
    Rational a(Int(4) * c5.lambda), b(Int(9) * c5.p);
    CHECK(hilbert_general(a, b, c5) == hilbert(SquareClass::Lambda, SquareClass::P, c5));
    CHECK(hilbert_general(Rational(5), Rational(10), c5) == -1);  // (p, lp), p = 1 mod 4
    for (long long p : {3, 5, 7, 13}) {
        auto ctx = make_context(p);
        Rational lam(ctx.lambda);
        CHECK(hilbert_general(lam, lam, ctx) == 1);
    }
    CHECK_THROWS_AS(hilbert_general(Rational(0), Rational(1), c5), UsageError);
}

TEST_CASE("tokens") {
    CHECK(class_token(SquareClass::LambdaP) == "lp");
    CHECK(class_from_token("l") == SquareClass::Lambda);
    CHECK_THROWS_AS(class_from_token("x"), ParseError);
    auto c7 = make_context(7);
    for (auto c : kAll) CHECK(classify(class_representative(c, c7), c7) == c);
}
