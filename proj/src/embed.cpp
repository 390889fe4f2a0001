#include "qpembed/embed.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qpembed {

std::string family_token(TargetFamily f) {
    return f == TargetFamily::Euclidean ? "euclid" : "lorentz";
}

TargetFamily family_from_token(const std::string& s) {
    if (s == "euclid") return TargetFamily::Euclidean;
    if (s == "lorentz") return TargetFamily::Lorentzian;
    throw ParseError("unknown target family: '" + s + "'");
}

TargetSpace::TargetSpace(TargetFamily fam, int dim) : family(fam), n(dim) {
    if (dim < 1) throw UsageError("target dimension must be >= 1");
}

DiagonalForm target_form(TargetFamily family, int n, const PrimeContext& ctx) {
    if (n < 0) throw UsageError("negative target dimension");
    std::vector<SquareClass> cs;
    if (family == TargetFamily::Euclidean) {
        cs.assign(static_cast<size_t>(n), SquareClass::One);
    } else if (n >= 1) {
        cs.assign(static_cast<size_t>(n - 1), SquareClass::One);
        cs.push_back(SquareClass::Lambda);
    }
    return {ctx, 0, std::move(cs)};
}

DiagonalForm target_form(const TargetSpace& t, const PrimeContext& ctx) {
    return target_form(t.family, t.n, ctx);
}

// ---------------------------------------------------------------------------
// Degenerate reduction and the decision procedure

ReducedQuery reduce_degenerate(const DiagonalForm& f, const TargetSpace& t) {
    const auto& ctx = f.context();
    int k = f.zero_count();
    int n = t.n;
    ReducedQuery rq{f.nondegenerate_part(), t.family, n, true, std::nullopt};
    if (k == 0) return rq;

    int m = n - 2 * k;
    bool p1 = ctx.p % 4 == 1;
    bool k_even = k % 2 == 0;

    // Family of the orthogonal complement of k hyperbolic planes in the
    // target.  For p = 1 mod 4 the hyperbolic plane has square
    // discriminant, so the family never changes; for p = 3 mod 4 each
    // plane contributes a lambda factor and the family flips with the
    // parity of k.
    if (p1)
        rq.family = t.family;
    else if (t.family == TargetFamily::Euclidean)
        rq.family = k_even ? TargetFamily::Euclidean : TargetFamily::Lorentzian;
    else
        rq.family = k_even ? TargetFamily::Lorentzian : TargetFamily::Euclidean;
    rq.m = m;

    // The dimension-zero Lorentzian residue is no form at all (its class
    // would need discriminant lambda); these are exactly the stated
    // side constraints k <= (n-2)/2.
    if (m < 0) {
        rq.feasible = false;
    } else if (m == 0 && rq.family == TargetFamily::Lorentzian) {
        rq.feasible = false;
        rq.k_bound = (n - 2) / 2;
    }
    return rq;
}

EmbedDecision embeds_nondegenerate(const DiagonalForm& s, TargetFamily family, int m) {
    const auto& ctx = s.context();
    EmbedDecision dec;
    int rank = s.rank();
    if (m < 0 || rank > m) {
        dec.embeds = false;
        dec.reason = "RANK_EXCEEDS_TARGET";
        return dec;
    }
    DiagonalForm t = target_form(family, m, ctx);
    if (rank == m) {
        dec.embeds = equivalent(s, t);
        dec.reason = dec.embeds ? "INVARIANT_MATCH" : "INVARIANT_MISMATCH";
        return dec;
    }
    for (const auto& c : canonical_forms(m - rank, ctx)) {
        if (equivalent(direct_sum(s, c), t)) {
            dec.embeds = true;
            dec.reason = "COMPLEMENT_EXISTS:" + to_dsl(c);
            return dec;
        }
    }
    dec.embeds = false;
    dec.reason = "NO_COMPLEMENT";
    return dec;
}

EmbedDecision decide(const DiagonalForm& f, const TargetSpace& t) {
    ReducedQuery rq = reduce_degenerate(f, t);
    if (!rq.feasible) {
        EmbedDecision dec;
        dec.embeds = false;
        dec.reason = "ISOTROPIC_BOUND_EXCEEDED";
        dec.reduced = rq;
        return dec;
    }
    EmbedDecision dec = embeds_nondegenerate(rq.s, rq.family, rq.m);
    dec.reduced = rq;
    return dec;
}

int min_dimension(const DiagonalForm& f, TargetFamily family) {
    int start = std::max(1, f.dim());
    int limit = 2 * f.dim() + 8;
    for (int n = start; n <= limit; ++n)
        if (decide(f, TargetSpace(family, n)).embeds) return n;
    throw VerificationFailed("min_dimension: no embedding within the guaranteed bound");
}

int max_isotropic_dim(const TargetSpace& t, const PrimeContext& ctx) {
    int k = 0;
    while (decide(DiagonalForm(ctx, k + 1, {}), t).embeds) ++k;
    return k;
}

// ---------------------------------------------------------------------------
// Invariant-arithmetic route (verification path)

namespace {

bool isotropic_by_invariants(int rank, SquareClass d, int h, const PrimeContext& ctx) {
    SquareClass c = minus_one_class(ctx);
    if (rank >= 5) return true;
    if (rank <= 1) return false;
    if (rank == 2) return d == c;
    if (rank == 3) return h == hilbert(c, d * c, ctx);
    // rank 4: anisotropic exactly for the quaternionic class
    return !(d == SquareClass::One && h == -hilbert(c, c, ctx));
}

bool realizable(int rank, SquareClass d, int h, const PrimeContext& ctx) {
    if (rank < 0) return false;
    if (rank == 0) return d == SquareClass::One && h == 1;
    if (rank == 1) return h == 1;
    if (rank == 2) return !(d == minus_one_class(ctx) && h == -1);
    return true;
}

}  // namespace

int witt_index(const FormInvariants& inv, const PrimeContext& ctx) {
    int rank = inv.rank;
    SquareClass d = inv.disc;
    int h = inv.hasse;
    SquareClass c = minus_one_class(ctx);
    int idx = 0;
    while (isotropic_by_invariants(rank, d, h, ctx)) {
        d = d * c;
        h = h * hilbert(c, d, ctx);
        rank -= 2;
        ++idx;
    }
    return idx;
}

bool decide_by_invariants(const DiagonalForm& f, const TargetSpace& t) {
    const auto& ctx = f.context();
    FormInvariants is = invariants(f.nondegenerate_part());
    FormInvariants it = invariants(target_form(t, ctx));
    int m = t.n - is.rank;
    if (m < 0) return false;
    SquareClass dc = it.disc * is.disc;
    int hc = it.hasse * is.hasse * hilbert(is.disc, dc, ctx);
    if (!realizable(m, dc, hc, ctx)) return false;
    FormInvariants comp{m, m, dc, hc};
    return witt_index(comp, ctx) >= f.zero_count();
}

// ---------------------------------------------------------------------------
// Hensel constants

namespace {

// Least x0 in [0, p) with x0^2 = target mod p and x0 <= (p-1)/2.
Int base_root(const Int& target, const PrimeContext& ctx) {
    Int r = mod_reduce(target, ctx.p);
    for (long long x = 0; x <= (ctx.p - 1) / 2; ++x)
        if (mod_reduce(Int(x) * x - r, ctx.p) == 0) return Int(x);
    throw NotASquare("base_root: no square root mod p");
}

PAdicNumber lift_sqrt_of(const Int& value, const PrimeContext& ctx, int prec) {
    // root of x^2 - value
    return hensel_lift({-value, Int(0), Int(1)}, base_root(value, ctx), ctx, prec);
}

}  // namespace

HenselConstants hensel_constants(const PrimeContext& ctx, int precision) {
    int prec = precision > 0 ? precision : ctx.default_precision;
    PrimeContext wctx = ctx;
    wctx.default_precision = prec;
    HenselConstants hc;
    hc.ctx = wctx;
    hc.precision = prec;
    Int p(ctx.p), lam(ctx.lambda);

    auto zero = PAdicNumber::zero(wctx, prec);
    hc.a = hc.b = hc.c = hc.d = hc.e = zero;
    hc.A = hc.B = hc.C = hc.D = hc.E = hc.F = hc.G = hc.H = zero;
    hc.sqrt_minus_lambda = zero;

    if (ctx.p % 4 == 3) {
        // base residues: first (a0, b0) with a0^2 + b0^2 = -1 mod p
        long long a0 = -1, b0 = -1;
        for (long long x = 0; x < ctx.p && a0 < 0; ++x) {
            Int w = mod_reduce(Int(-1) - Int(x) * x, p);
            if (w == 0) continue;
            if (legendre(w, ctx) == 1) {
                a0 = x;
                b0 = static_cast<long long>(base_root(w, ctx));
            }
        }
        Int s = Int(a0) * a0 + Int(b0) * b0;  // the lambda-class value a^2 + b^2
        hc.a = PAdicNumber::from_integer(a0, wctx, prec);
        hc.b = PAdicNumber::from_integer(b0, wctx, prec);
        hc.c = lift_sqrt_of(p - s, wctx, prec);
        hc.d = lift_sqrt_of(lam * p - s, wctx, prec);
        hc.e = lift_sqrt_of(-s, wctx, prec);
        hc.sqrt_minus_lambda = lift_sqrt_of(-lam, wctx, prec);
    } else {
        // A^2 + B^2 = lambda
        long long a0 = -1;
        for (long long x = 0; x < ctx.p && a0 < 0; ++x) {
            Int w = mod_reduce(lam - Int(x) * x, p);
            if (w != 0 && legendre(w, ctx) == 1) a0 = x;
        }
        hc.A = PAdicNumber::from_integer(a0, wctx, prec);
        hc.B = lift_sqrt_of(lam - Int(a0) * a0, wctx, prec);
        hc.D = PAdicNumber::from_integer(1, wctx, prec);
        hc.C = lift_sqrt_of(p - 1, wctx, prec);
        hc.F = PAdicNumber::from_integer(1, wctx, prec);
        hc.E = lift_sqrt_of(lam * p - 1, wctx, prec);
        hc.H = PAdicNumber::from_integer(1, wctx, prec);
        hc.G = lift_sqrt_of(Int(-1), wctx, prec);
    }
    return hc;
}

// ---------------------------------------------------------------------------
// Witness construction
//
// All coordinates are exact rationals.  Irrational ingredients (the
// sum-of-squares constants and square roots found during the search) are
// frozen to their p-adic representatives at working precision, so that
// every later dot product is exact; the final Gram check against the
// source form modulo p^precision is therefore a plain rational identity.

namespace {

Rational target_entry(const TargetSpace& t, const PrimeContext& ctx, int i) {
    if (t.family == TargetFamily::Lorentzian && i == t.n - 1) return Rational(ctx.lambda);
    return Rational(1);
}

Rational dot_exact(const TargetSpace& t, const PrimeContext& ctx, const std::vector<Rational>& u,
                   const std::vector<Rational>& v) {
    Rational acc(0);
    for (int i = 0; i < t.n; ++i) {
        if (u[i] == 0 || v[i] == 0) continue;
        acc += target_entry(t, ctx, i) * u[i] * v[i];
    }
    return acc;
}

Rational dot_representative(const TargetSpace& t, const PrimeContext& ctx,
                            const std::vector<PAdicNumber>& u,
                            const std::vector<PAdicNumber>& v) {
    Rational acc(0);
    for (int i = 0; i < t.n; ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        acc += target_entry(t, ctx, i) * u[i].representative() * v[i].representative();
    }
    return acc;
}

// Valuation with v(0) = +infinity (a large sentinel).
long long rational_valuation(const Rational& q, const PrimeContext& ctx) {
    if (q == 0) return 1LL << 40;
    Int p(ctx.p);
    return int_valuation(rat_num(q), p) - int_valuation(rat_den(q), p);
}

class WitnessBuilder {
public:
    WitnessBuilder(const DiagonalForm& f, const TargetSpace& t, int precision,
                   unsigned long long seed)
        : f_(f), t_(t), ctx_(f.context()), precision_(precision), rng_(seed) {
        work_prec_ = precision + 16;
        wctx_ = ctx_;
        wctx_.default_precision = work_prec_;
    }

    Witness build() {
        consts_ = hensel_constants(wctx_, work_prec_);
        place_isotropic_rows();
        build_slots();
        place_value_rows();
        verify();
        Witness w;
        w.precision = precision_;
        for (const auto& row : rows_) {
            std::vector<PAdicNumber> out;
            for (const auto& x : row) out.push_back(PAdicNumber::from_rational(x, wctx_));
            w.rows.push_back(std::move(out));
        }
        return w;
    }

private:
    struct Slot {
        std::vector<Rational> vec;
        Rational q;
    };

    std::vector<Rational> zero_row() const {
        return std::vector<Rational>(static_cast<size_t>(t_.n), Rational(0));
    }

    void place_isotropic_rows() {
        int k = f_.zero_count();
        if (ctx_.p % 4 == 1) {
            // (G,H) pairs on fresh coordinate pairs within the 1-block
            Rational g = consts_.G.representative(), h = consts_.H.representative();
            for (int i = 0; i < k; ++i) {
                auto row = zero_row();
                row[free_] = g;
                row[free_ + 1] = h;
                free_ += 2;
                rows_.push_back(std::move(row));
            }
            return;
        }
        int rest = k;
        if (t_.family == TargetFamily::Lorentzian && k % 2 == 1) {
            // pair the lambda coordinate with one 1-coordinate
            auto row = zero_row();
            row[free_] = consts_.sqrt_minus_lambda.representative();
            row[t_.n - 1] = 1;
            free_ += 1;
            lambda_used_ = true;
            rows_.push_back(std::move(row));
            --rest;
        }
        Rational a = consts_.a.representative();
        Rational b = consts_.b.representative();
        Rational e = consts_.e.representative();
        for (int i = 0; i + 1 < rest; i += 2) {
            // (a,b,e,0) and (-b,a,0,e): two orthogonal isotropic rows per
            // block of four 1-coordinates
            auto r1 = zero_row();
            auto r2 = zero_row();
            r1[free_] = a;
            r1[free_ + 1] = b;
            r1[free_ + 2] = e;
            r2[free_] = -b;
            r2[free_ + 1] = a;
            r2[free_ + 3] = e;
            free_ += 4;
            rows_.push_back(std::move(r1));
            rows_.push_back(std::move(r2));
        }
        if (rest % 2 == 1) {
            // leftover (a,b,e) in three coordinates; the complement line
            // (b,-a,0) carries the lambda-class slot of the residue
            auto r = zero_row();
            r[free_] = a;
            r[free_ + 1] = b;
            r[free_ + 2] = e;
            rows_.push_back(std::move(r));
            Slot s;
            s.vec = zero_row();
            s.vec[free_] = b;
            s.vec[free_ + 1] = -a;
            s.q = a * a + b * b;
            extra_slots_.push_back(std::move(s));
            free_ += 3;
        }
    }

    void build_slots() {
        int one_limit = t_.family == TargetFamily::Lorentzian ? t_.n - 1 : t_.n;
        for (int c = free_; c < one_limit; ++c) {
            Slot s;
            s.vec = zero_row();
            s.vec[c] = 1;
            s.q = 1;
            slots_.push_back(std::move(s));
        }
        if (t_.family == TargetFamily::Lorentzian && !lambda_used_) {
            Slot s;
            s.vec = zero_row();
            s.vec[t_.n - 1] = 1;
            s.q = ctx_.lambda;
            slots_.push_back(std::move(s));
        }
        for (auto& s : extra_slots_) slots_.push_back(std::move(s));
        extra_slots_.clear();
    }

    long long draw() { return static_cast<long long>(rng_() % 19) - 9; }

    bool square_in_qp(const Rational& w) const {
        return classify(w, ctx_) == SquareClass::One;
    }

    Rational frozen_sqrt(const Rational& w) const {
        return PAdicNumber::from_rational(w, wctx_, work_prec_).sqrt().representative();
    }

    // p-adic representative at working precision: keeps rational growth
    // bounded while preserving every Gram identity modulo p^precision.
    Rational snap(const Rational& q) const {
        if (q == 0) return q;
        return PAdicNumber::from_rational(q, wctx_, work_prec_).representative();
    }

    // Rescales the slot vector so that Q(vec) has valuation 0 or 1; keeps
    // the representation search well conditioned.
    bool normalize_slot(Slot& s) const {
        if (s.q == 0) return false;
        long long v = rational_valuation(s.q, ctx_);
        long long t = v >= 0 ? v / 2 : (v - 1) / 2;
        if (t == 0) return true;
        Rational scale = t > 0 ? Rational(Int(1), pow_int(Int(ctx_.p), t))
                               : Rational(pow_int(Int(ctx_.p), -t));
        for (auto& c : s.vec)
            if (c != 0) c = snap(c * scale);
        s.q = dot_exact(t_, ctx_, s.vec, s.vec);
        if (s.q == 0) return false;
        long long nv = rational_valuation(s.q, ctx_);
        return nv == 0 || nv == 1;
    }

    void place_value_rows() {
        for (SquareClass c : f_.classes()) {
            Rational repv = class_representative(c, ctx_);
            if (slots_.empty()) throw VerificationFailed("witness: no slots left");

            // an exact slot match gives coordinate-style rows
            bool matched = false;
            for (size_t j = 0; j < slots_.size(); ++j) {
                if (slots_[j].q == repv) {
                    rows_.push_back(slots_[j].vec);
                    slots_.erase(slots_.begin() + static_cast<long>(j));
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
            represent_value(repv);
        }
    }

    void represent_value(const Rational& rep) {
        const int budget = 64;
        size_t d = slots_.size();
        for (int attempt = 0; attempt < budget; ++attempt) {
            // coefficients for every slot; odd attempts scale the draw by
            // 1/p and an occasional factor of p mixes valuation classes,
            // so every valuation shape of the slot basis is reachable
            Rational scale = attempt % 2 == 0 ? Rational(1) : Rational(Int(1), Int(ctx_.p));
            std::vector<Rational> alpha(d, Rational(0));
            for (size_t j = 0; j < d; ++j) {
                Rational a = Rational(draw()) * scale;
                if (rng_() % 8 == 0) a *= ctx_.p;
                alpha[j] = a;
            }
            // try each slot as the one solved by a square root
            size_t solved = d;
            for (size_t j = 0; j < d && solved == d; ++j) {
                Rational rest = rep;
                for (size_t l = 0; l < d; ++l)
                    if (l != j) rest -= alpha[l] * alpha[l] * slots_[l].q;
                Rational w = rest / slots_[j].q;
                if (w == 0 || square_in_qp(w)) {
                    alpha[j] = w == 0 ? Rational(0) : frozen_sqrt(w);
                    solved = j;
                }
            }
            if (solved == d) continue;

            auto x = zero_row();
            for (size_t j = 0; j < d; ++j) {
                if (alpha[j] == 0) continue;
                for (int cidx = 0; cidx < t_.n; ++cidx) x[cidx] += alpha[j] * slots_[j].vec[cidx];
            }
            for (auto& c : x) c = snap(c);
            // Exact value of Q(x); equals rep modulo p^(work precision)
            // but not exactly, since the square root was frozen.
            Rational qx = dot_exact(t_, ctx_, x, x);
            if (qx == 0 || rational_valuation(qx - rep, ctx_) < precision_ + 10) continue;

            size_t pivot = d;
            long long best = 1 << 30;
            for (size_t j = 0; j < d; ++j) {
                if (alpha[j] == 0) continue;
                long long v = rational_valuation(alpha[j] * alpha[j] * slots_[j].q, ctx_);
                if (v < best) {
                    best = v;
                    pivot = j;
                }
            }
            if (pivot == d) continue;

            std::vector<Slot> next;
            bool ok = true;
            for (size_t j = 0; j < d && ok; ++j) {
                if (j == pivot) continue;
                std::vector<Rational> v = slots_[j].vec;
                Rational coeff = dot_exact(t_, ctx_, v, x) / qx;
                if (coeff != 0)
                    for (int cidx = 0; cidx < t_.n; ++cidx) v[cidx] -= coeff * x[cidx];
                for (const auto& z : next) {
                    Rational proj = dot_exact(t_, ctx_, v, z.vec) / z.q;
                    if (proj == 0) continue;
                    for (int cidx = 0; cidx < t_.n; ++cidx) v[cidx] -= proj * z.vec[cidx];
                }
                for (auto& c : v) c = snap(c);
                Rational qv = dot_exact(t_, ctx_, v, v);
                Slot s{std::move(v), std::move(qv)};
                if (s.q == 0 || !normalize_slot(s)) {
                    ok = false;
                    break;
                }
                next.push_back(std::move(s));
            }
            if (!ok) continue;

            rows_.push_back(std::move(x));
            slots_ = std::move(next);
            return;
        }
        throw RetryBudgetExhausted("witness: representation step exceeded retry budget");
    }

    void verify() const {
        int k = f_.zero_count();
        auto reps = f_.nondegenerate_part().representatives();
        if (rows_.size() != static_cast<size_t>(f_.dim()))
            throw VerificationFailed("witness: wrong number of rows");

        for (size_t i = 0; i < rows_.size(); ++i) {
            for (size_t j = i; j < rows_.size(); ++j) {
                Rational got = dot_exact(t_, ctx_, rows_[i], rows_[j]);
                Rational want(0);
                if (i == j && i >= static_cast<size_t>(k)) want = reps[i - k];
                Rational diff = got - want;
                if (diff == 0) continue;
                if (rational_valuation(diff, ctx_) < precision_)
                    throw VerificationFailed("witness: Gram entry mismatch at (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }

        // independence: the rational coordinate matrix has full row rank
        auto m = rows_;
        size_t rank = 0;
        for (size_t col = 0; col < static_cast<size_t>(t_.n) && rank < m.size(); ++col) {
            size_t piv = rank;
            while (piv < m.size() && m[piv][col] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[rank], m[piv]);
            for (size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rational fct = m[r][col] / m[rank][col];
                for (size_t c2 = col; c2 < static_cast<size_t>(t_.n); ++c2)
                    m[r][c2] -= fct * m[rank][c2];
            }
            ++rank;
        }
        if (rank != m.size()) throw VerificationFailed("witness: rows are dependent");
    }

    DiagonalForm f_;
    TargetSpace t_;
    PrimeContext ctx_;
    PrimeContext wctx_;
    int precision_;
    int work_prec_;
    std::mt19937_64 rng_;
    HenselConstants consts_{};
    std::vector<std::vector<Rational>> rows_;
    std::vector<Slot> slots_;
    std::vector<Slot> extra_slots_;
    int free_ = 0;
    bool lambda_used_ = false;
};

}  // namespace

PAdicNumber target_dot(const TargetSpace& t, const std::vector<PAdicNumber>& u,
                       const std::vector<PAdicNumber>& v, const PrimeContext& ctx) {
    Rational r = dot_representative(t, ctx, u, v);
    return PAdicNumber::from_rational(r, ctx, ctx.default_precision);
}

Witness witness(const DiagonalForm& f, const TargetSpace& t, int precision,
                unsigned long long seed) {
    if (precision < 4) throw UsageError("witness precision must be >= 4");
    if (!decide(f, t).embeds) throw UsageError("witness: the space does not embed");
    WitnessBuilder b(f, t, precision, seed);
    return b.build();
}

}  // namespace qpembed
