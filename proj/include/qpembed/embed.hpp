#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpembed/forms.hpp"

namespace qpembed {

enum class TargetFamily { Euclidean, Lorentzian };

std::string family_token(TargetFamily f);           // "euclid" | "lorentz"
TargetFamily family_from_token(const std::string&);

// diag(1^n) or diag(1^(n-1), lambda); the lambda entry is last.
struct TargetSpace {
    TargetFamily family;
    int n;

    TargetSpace(TargetFamily fam, int dim);
    bool operator==(const TargetSpace&) const = default;
};

DiagonalForm target_form(TargetFamily family, int n, const PrimeContext& ctx);
DiagonalForm target_form(const TargetSpace& t, const PrimeContext& ctx);

// Nondegenerate query equivalent to the original degenerate one: the
// zero part trades for hyperbolic planes, shrinking the target by 2k and
// possibly switching family (p = 3 mod 4, dispatch on the parity of k).
struct ReducedQuery {
    DiagonalForm s;            // nondegenerate part of the source
    TargetFamily family;       // family of the reduced target
    int m = 0;                 // reduced target dimension (may be 0)
    bool feasible = true;      // false: the zero part alone cannot fit
    std::optional<int> k_bound;  // isotropic-dimension cap that applied, if any
};

struct EmbedDecision {
    bool embeds = false;
    std::string reason;  // INVARIANT_MATCH, COMPLEMENT_EXISTS, NO_COMPLEMENT, ...
    std::optional<ReducedQuery> reduced;
};

ReducedQuery reduce_degenerate(const DiagonalForm& f, const TargetSpace& t);

// Complement enumeration over canonical forms; m may be 0.
EmbedDecision embeds_nondegenerate(const DiagonalForm& s, TargetFamily family, int m);

EmbedDecision decide(const DiagonalForm& f, const TargetSpace& t);

int min_dimension(const DiagonalForm& f, TargetFamily family);

// Largest k with decide(diag(0^k), t) true.
int max_isotropic_dim(const TargetSpace& t, const PrimeContext& ctx);

// --- independent verification route ------------------------------------

// Witt index from the invariants alone, by repeatedly splitting hyperbolic
// planes.  Used by tests and the errata report, not by decide().
int witt_index(const FormInvariants& inv, const PrimeContext& ctx);

// Direct criterion: the forced complement class of S in the target is
// realizable and its Witt index is at least zero_count.
bool decide_by_invariants(const DiagonalForm& f, const TargetSpace& t);

// --- Hensel constants ----------------------------------------------------

// p = 3 mod 4: a^2+b^2 = -1 (a representative of the lambda class),
// a^2+b^2+c^2 = p, a^2+b^2+d^2 = lambda p, a^2+b^2+e^2 = 0.
// p = 1 mod 4: A^2+B^2 = lambda, C^2+D^2 = p, E^2+F^2 = lambda p,
// G^2+H^2 = 0 with G = i H.
struct HenselConstants {
    PrimeContext ctx;
    int precision;
    // p = 3 mod 4 slots (a..e); e is exactly 1
    PAdicNumber a, b, c, d, e;
    // p = 1 mod 4 slots (A..H)
    PAdicNumber A, B, C, D, E, F, G, H;
    // sqrt(-lambda); used for Lorentzian isotropic rows when p = 3 mod 4
    PAdicNumber sqrt_minus_lambda;
};

HenselConstants hensel_constants(const PrimeContext& ctx, int precision = 0);

// --- witnesses -----------------------------------------------------------

struct Witness {
    std::vector<std::vector<PAdicNumber>> rows;  // one per source basis vector
    int precision = 0;                           // Gram check modulus exponent
};

// Explicit coordinates: isotropic rows first, then one row per nonzero
// diagonal entry, verified against the target Gram form before returning.
Witness witness(const DiagonalForm& f, const TargetSpace& t, int precision = 20,
                unsigned long long seed = 0);

// B_T(u, v) for the target diagonal; helper shared with tests.
PAdicNumber target_dot(const TargetSpace& t, const std::vector<PAdicNumber>& u,
                       const std::vector<PAdicNumber>& v, const PrimeContext& ctx);

}  // namespace qpembed
