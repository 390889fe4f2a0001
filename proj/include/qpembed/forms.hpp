#pragma once

#include <vector>

#include "qpembed/symbols.hpp"

namespace qpembed {

// Symmetric Gram matrix over exact rationals.
class GramForm {
public:
    GramForm(const PrimeContext& ctx, std::vector<std::vector<Rational>> matrix);

    const PrimeContext& context() const { return ctx_; }
    int dim() const { return static_cast<int>(m_.size()); }
    const std::vector<std::vector<Rational>>& matrix() const { return m_; }

private:
    PrimeContext ctx_;
    std::vector<std::vector<Rational>> m_;
};

// diag(0^k) + diag(c_1, ..., c_r) with each c_i a square class.
class DiagonalForm {
public:
    DiagonalForm(const PrimeContext& ctx, int zero_count, std::vector<SquareClass> classes);

    static DiagonalForm empty(const PrimeContext& ctx) { return {ctx, 0, {}}; }

    const PrimeContext& context() const { return ctx_; }
    int zero_count() const { return zero_count_; }
    const std::vector<SquareClass>& classes() const { return classes_; }
    int rank() const { return static_cast<int>(classes_.size()); }
    int dim() const { return zero_count_ + rank(); }
    bool degenerate() const { return zero_count_ > 0; }

    DiagonalForm nondegenerate_part() const { return {ctx_, 0, classes_}; }

    // Exact representative values of the diagonal, nonzero entries first.
    std::vector<Rational> representatives() const;

    bool operator==(const DiagonalForm& rhs) const;

private:
    PrimeContext ctx_;
    int zero_count_;
    std::vector<SquareClass> classes_;
};

struct FormInvariants {
    int dim = 0;
    int rank = 0;
    SquareClass disc = SquareClass::One;  // of the nondegenerate part
    int hasse = 1;

    bool operator==(const FormInvariants&) const = default;
};

DiagonalForm diagonalize(const GramForm& g);
FormInvariants invariants(const DiagonalForm& f);
DiagonalForm canonical(const DiagonalForm& f);
bool equivalent(const DiagonalForm& f1, const DiagonalForm& f2);
DiagonalForm direct_sum(const DiagonalForm& f1, const DiagonalForm& f2);

// The canonical representatives of the given rank (4, 7 or 8 forms for
// ranks 1-3; rank > 3 prefixes diag(1^(rank-3)) to the rank-3 list).
std::vector<DiagonalForm> canonical_forms(int rank, const PrimeContext& ctx);

// Form DSL: `diag(1,l,p,lp,0^2)`; tokens 1|l|p|lp|0, `tok^k` repetition,
// plus arbitrary rational entries like `diag(3/4,-2)` classified on parse.
DiagonalForm parse_form(const std::string& text, const PrimeContext& ctx);
std::string to_dsl(const DiagonalForm& f);

}  // namespace qpembed
