#pragma once

#include "qpembed/forms.hpp"

namespace qpembed {

struct OracleConfig {
    int modulus_exponent = 6;  // residue search window p^m
    int sample_count = 200;
    unsigned long long rng_seed = 0;
};

// Brute-force solvability of a x^2 + b y^2 = 1 over Q_p.  Positives carry
// a simple-root Hensel certificate (a unit square residue); refutations
// exhaust the finite search space given by the valuation case split.
// Deliberately independent of the Hilbert tables and of Euler-criterion
// Legendre: quadratic residues come from an enumerated square table.
int hilbert_oracle(const Rational& a, const Rational& b, const PrimeContext& ctx,
                   const OracleConfig& cfg = {});

// Does the nondegenerate form represent `value`?  Complete for rank <= 2;
// for higher ranks positives are certified by search and refutation is
// reported as Inconclusive.
bool represents_oracle(const DiagonalForm& f, const Rational& value, const PrimeContext& ctx,
                       const OracleConfig& cfg = {});

// Same contract as forms::invariants, recomputed from oracle primitives.
FormInvariants invariants_oracle(const DiagonalForm& f, const OracleConfig& cfg = {});

}  // namespace qpembed
