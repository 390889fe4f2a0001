#pragma once

#include <array>
#include <string>

#include "qpembed/padic.hpp"

namespace qpembed {

// The four cosets of Q_p^x modulo squares for odd p.  Encoded so that the
// group law is xor: bit 0 = nonresidue unit, bit 1 = odd valuation.
enum class SquareClass : int { One = 0, Lambda = 1, P = 2, LambdaP = 3 };

inline SquareClass operator*(SquareClass a, SquareClass b) {
    return static_cast<SquareClass>(static_cast<int>(a) ^ static_cast<int>(b));
}

// "1" | "l" | "p" | "lp"
std::string class_token(SquareClass c);
SquareClass class_from_token(const std::string& token);

// Canonical representative as a rational: 1, lambda, p, lambda*p.
Rational class_representative(SquareClass c, const PrimeContext& ctx);

SquareClass classify(const PAdicNumber& x);              // throws ZeroHasNoClass
SquareClass classify(const Rational& x, const PrimeContext& ctx);

// Class of -1: One when p = 1 mod 4, Lambda when p = 3 mod 4.
SquareClass minus_one_class(const PrimeContext& ctx);

// Table lookup dispatched on p mod 4.
int hilbert(SquareClass a, SquareClass b, const PrimeContext& ctx);
int hilbert_general(const Rational& a, const Rational& b, const PrimeContext& ctx);

// Raw table access for the fixture tests: residue_index 0 for p = 1 mod 4,
// 1 for p = 3 mod 4.
const std::array<std::array<int, 4>, 4>& hilbert_table(int residue_index);

}  // namespace qpembed
