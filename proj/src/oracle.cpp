#include "qpembed/oracle.hpp"

#include <vector>

namespace qpembed {

namespace {

// Quadratic residues mod p by squaring every residue; independent of the
// Euler-criterion path in the padic module.
std::vector<bool> square_table(const PrimeContext& ctx) {
    std::vector<bool> sq(static_cast<size_t>(ctx.p), false);
    for (long long r = 1; r < ctx.p; ++r) sq[static_cast<size_t>(r * r % ctx.p)] = true;
    return sq;
}

long long rational_vp(const Rational& q, const PrimeContext& ctx) {
    Int p(ctx.p);
    return int_valuation(rat_num(q), p) - int_valuation(rat_den(q), p);
}

Rational p_power(const PrimeContext& ctx, long long e) {
    Int pk = pow_int(Int(ctx.p), e >= 0 ? e : -e);
    return e >= 0 ? Rational(pk) : Rational(Int(1), pk);
}

// Residue mod p of a p-free rational.
long long unit_residue(const Rational& q, const PrimeContext& ctx) {
    Int p(ctx.p);
    Int n = mod_reduce(rat_num(q), p);
    Int d = mod_reduce(rat_den(q), p);
    return static_cast<long long>(n * mod_inverse(d, p) % p);
}

// Is w a square in Q_p (zero counts as a square)?  This is itself the
// Hensel certificate: a unit square residue lifts to an exact root.
bool square_in_qp(const Rational& w, const PrimeContext& ctx, const std::vector<bool>& sq) {
    if (w == 0) return true;
    long long v = rational_vp(w, ctx);
    if (((v % 2) + 2) % 2 != 0) return false;
    Rational u = w / p_power(ctx, v);
    return sq[static_cast<size_t>(unit_residue(u, ctx))];
}

// Solvability of a x^2 + b y^2 = 1 over Q_p for nonzero rationals.
//
// After dividing squares out of a and b their valuations are 0 or 1, and
// a short case split bounds where solutions can live:
//   (0,0): some solution has x, y in Z_p with a unit coordinate, so
//          scanning one coordinate mod p^2 and solving the other by a
//          square test is exhaustive;
//   (0,1)/(1,0): the unit-coefficient coordinate is forced to be a unit
//          and the other lies in Z_p: same scan;
//   (1,1): writing x = X/p, y = Y/p reduces to u X^2 + v Y^2 = p, which
//          is solvable iff -uv is a residue mod p.
bool solvable_unit_circle(Rational a, Rational b, const PrimeContext& ctx,
                          const std::vector<bool>& sq) {
    Int p(ctx.p);
    long long va = rational_vp(a, ctx), vb = rational_vp(b, ctx);
    long long ra = ((va % 2) + 2) % 2, rb = ((vb % 2) + 2) % 2;
    a /= p_power(ctx, va - ra);
    b /= p_power(ctx, vb - rb);
    va = ra;
    vb = rb;

    if (va == 1 && vb == 1) {
        Rational uv = (a / Rational(p)) * (b / Rational(p));
        long long r = unit_residue(-uv, ctx);
        return r != 0 && sq[static_cast<size_t>(r)];
    }

    long long window = ctx.p * ctx.p;
    // scan y, solve for x
    if (va == 0) {
        for (long long s = 0; s < window; ++s) {
            Rational w = (Rational(1) - b * s * s) / a;
            if (square_in_qp(w, ctx, sq)) return true;
        }
    }
    // scan x, solve for y
    if (vb == 0) {
        for (long long s = 0; s < window; ++s) {
            Rational w = (Rational(1) - a * s * s) / b;
            if (square_in_qp(w, ctx, sq)) return true;
        }
    }
    return false;
}

}  // namespace

int hilbert_oracle(const Rational& a, const Rational& b, const PrimeContext& ctx,
                   const OracleConfig& cfg) {
    if (a == 0 || b == 0) throw UsageError("hilbert_oracle: arguments must be nonzero");
    if (cfg.modulus_exponent < 2)
        throw Inconclusive("hilbert_oracle: search window p^m needs m >= 2");
    auto sq = square_table(ctx);
    return solvable_unit_circle(a, b, ctx, sq) ? 1 : -1;
}

namespace {

bool represents_small(const DiagonalForm& f, const Rational& value, const PrimeContext& ctx,
                      const std::vector<bool>& sq) {
    auto reps = f.representatives();
    if (f.rank() == 1) return square_in_qp(value / reps[0], ctx, sq);
    // rank 2: c1 x^2 + c2 y^2 = t is (c1/t) x^2 + (c2/t) y^2 = 1
    return solvable_unit_circle(reps[0] / value, reps[1] / value, ctx, sq);
}

}  // namespace

bool represents_oracle(const DiagonalForm& f, const Rational& value, const PrimeContext& ctx,
                       const OracleConfig& cfg) {
    if (value == 0) throw UsageError("represents_oracle: value must be nonzero");
    if (f.zero_count() != 0 || f.rank() == 0)
        throw UsageError("represents_oracle: form must be nondegenerate");
    if (cfg.modulus_exponent < 2)
        throw Inconclusive("represents_oracle: search window p^m needs m >= 2");
    auto sq = square_table(ctx);
    if (f.rank() <= 2) return represents_small(f, value, ctx, sq);

    // rank >= 3: fix trailing coordinates on a grid and recurse; positives
    // are certified, refutation would need an unbounded search
    auto classes = f.classes();
    SquareClass last = classes.back();
    classes.pop_back();
    DiagonalForm head(ctx, 0, classes);
    Rational c = class_representative(last, ctx);
    long long window = ctx.p * ctx.p;
    for (int scale = 0; scale >= -1; --scale) {
        Rational denom(pow_int(Int(ctx.p), -scale));
        for (long long g = 0; g < window; ++g) {
            Rational x(g);
            x /= denom;
            Rational rest = value - c * x * x;
            if (rest == 0) return true;
            if (f.rank() - 1 <= 2) {
                if (represents_small(head, rest, ctx, sq)) return true;
            } else {
                try {
                    if (represents_oracle(head, rest, ctx, cfg)) return true;
                } catch (const Inconclusive&) {
                }
            }
        }
    }
    throw Inconclusive("represents_oracle: no certificate within budget for rank >= 3");
}

FormInvariants invariants_oracle(const DiagonalForm& f, const OracleConfig& cfg) {
    const auto& ctx = f.context();
    auto sq = square_table(ctx);
    FormInvariants inv;
    inv.dim = f.dim();
    inv.rank = f.rank();

    // discriminant recomputed from the representative product
    Rational prod(1);
    for (auto c : f.classes()) prod *= class_representative(c, ctx);
    long long v = f.rank() == 0 ? 0 : rational_vp(prod, ctx);
    int odd = static_cast<int>(((v % 2) + 2) % 2);
    int nonres = 0;
    if (f.rank() > 0) {
        Rational u = prod / Rational(pow_int(Int(ctx.p), v));
        nonres = sq[static_cast<size_t>(unit_residue(u, ctx))] ? 0 : 1;
    }
    inv.disc = static_cast<SquareClass>((odd << 1) | nonres);

    int hasse = 1;
    auto reps = f.representatives();
    for (int i = 0; i < f.rank(); ++i)
        for (int j = i + 1; j < f.rank(); ++j) hasse *= hilbert_oracle(reps[i], reps[j], ctx, cfg);
    inv.hasse = hasse;
    return inv;
}

}  // namespace qpembed
