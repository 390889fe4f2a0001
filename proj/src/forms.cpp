#include "qpembed/forms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qpembed {

GramForm::GramForm(const PrimeContext& ctx, std::vector<std::vector<Rational>> matrix)
    : ctx_(ctx), m_(std::move(matrix)) {
    size_t n = m_.size();
    for (const auto& row : m_)
        if (row.size() != n) throw UsageError("Gram matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m_[i][j] != m_[j][i]) throw UsageError("Gram matrix must be symmetric");
}

DiagonalForm::DiagonalForm(const PrimeContext& ctx, int zero_count,
                           std::vector<SquareClass> classes)
    : ctx_(ctx), zero_count_(zero_count), classes_(std::move(classes)) {
    if (zero_count_ < 0) throw UsageError("negative zero multiplicity");
}

std::vector<Rational> DiagonalForm::representatives() const {
    std::vector<Rational> out;
    for (auto c : classes_) out.push_back(class_representative(c, ctx_));
    for (int i = 0; i < zero_count_; ++i) out.emplace_back(0);
    return out;
}

bool DiagonalForm::operator==(const DiagonalForm& rhs) const {
    return ctx_.p == rhs.ctx_.p && zero_count_ == rhs.zero_count_ && classes_ == rhs.classes_;
}

DiagonalForm diagonalize(const GramForm& g) {
    const auto& ctx = g.context();
    int n = g.dim();
    auto d = g.matrix();

    // Symmetric Gaussian elimination; congruence transforms preserve the
    // equivalence class, so any pivot choice gives the same result.
    auto add_row_col = [&](int dst, int src) {
        for (int c = 0; c < n; ++c) d[dst][c] += d[src][c];
        for (int r = 0; r < n; ++r) d[r][dst] += d[r][src];
    };
    auto swap_row_col = [&](int i, int j) {
        std::swap(d[i], d[j]);
        for (int r = 0; r < n; ++r) std::swap(d[r][i], d[r][j]);
    };

    int zero_count = 0;
    std::vector<SquareClass> classes;
    for (int i = 0; i < n; ++i) {
        int pivot = -1;
        for (int j = i; j < n && pivot < 0; ++j)
            if (d[j][j] != 0) pivot = j;
        if (pivot < 0) {
            int pr = -1, pc = -1;
            for (int r = i; r < n && pr < 0; ++r)
                for (int c = r + 1; c < n; ++c)
                    if (d[r][c] != 0) {
                        pr = r;
                        pc = c;
                        break;
                    }
            if (pr < 0) {
                zero_count = n - i;
                break;
            }
            add_row_col(pr, pc);  // makes d[pr][pr] = 2*d[pr][pc] != 0
            pivot = pr;
        }
        if (pivot != i) swap_row_col(i, pivot);
        Rational piv = d[i][i];
        for (int r = i + 1; r < n; ++r) {
            if (d[r][i] == 0) continue;
            Rational f = d[r][i] / piv;
            for (int c = 0; c < n; ++c) d[r][c] -= f * d[i][c];
            for (int c = 0; c < n; ++c) d[c][r] -= f * d[c][i];
        }
        classes.push_back(classify(piv, ctx));
    }
    return {ctx, zero_count, std::move(classes)};
}

FormInvariants invariants(const DiagonalForm& f) {
    FormInvariants inv;
    inv.dim = f.dim();
    inv.rank = f.rank();
    SquareClass disc = SquareClass::One;
    int hasse = 1;
    const auto& cs = f.classes();
    for (size_t i = 0; i < cs.size(); ++i) {
        disc = disc * cs[i];
        for (size_t j = i + 1; j < cs.size(); ++j) hasse *= hilbert(cs[i], cs[j], f.context());
    }
    inv.disc = disc;
    inv.hasse = hasse;
    return inv;
}

namespace {

std::vector<std::vector<SquareClass>> canonical_tokens(int rank, const PrimeContext& ctx) {
    using C = SquareClass;
    const C o = C::One, l = C::Lambda, p = C::P, lp = C::LambdaP;
    bool p1 = ctx.p % 4 == 1;
    switch (rank) {
        case 0:
            return {{}};
        case 1:
            return {{o}, {l}, {p}, {lp}};
        case 2:
            if (p1)
                return {{o, o}, {o, l}, {o, p}, {o, lp}, {l, p}, {l, lp}, {p, lp}};
            return {{o, o}, {p, p}, {o, l}, {o, p}, {o, lp}, {l, p}, {l, lp}};
        case 3:
            if (p1)
                return {{o, o, o}, {l, p, lp}, {o, o, l}, {o, o, p},
                        {o, o, lp}, {o, l, p},  {o, l, lp}, {o, p, lp}};
            return {{o, o, o}, {o, p, p}, {o, o, p},  {p, p, p},
                    {o, l, p}, {o, o, lp}, {p, p, l}, {o, p, lp}};
        default:
            throw UsageError("canonical_tokens: rank must be 0..3");
    }
}

}  // namespace

std::vector<DiagonalForm> canonical_forms(int rank, const PrimeContext& ctx) {
    std::vector<DiagonalForm> out;
    if (rank <= 3) {
        for (auto& t : canonical_tokens(rank, ctx)) out.emplace_back(ctx, 0, t);
        return out;
    }
    for (auto& t : canonical_tokens(3, ctx)) {
        std::vector<SquareClass> cs(static_cast<size_t>(rank - 3), SquareClass::One);
        cs.insert(cs.end(), t.begin(), t.end());
        out.emplace_back(ctx, 0, std::move(cs));
    }
    return out;
}

DiagonalForm canonical(const DiagonalForm& f) {
    const auto& ctx = f.context();
    FormInvariants want = invariants(f);
    int r = f.rank();
    if (r == 0) return {ctx, f.zero_count(), {}};
    for (const auto& cand : canonical_forms(r, ctx)) {
        FormInvariants have = invariants(cand);
        if (have.disc == want.disc && have.hasse == want.hasse)
            return {ctx, f.zero_count(), cand.classes()};
    }
    throw UsageError("canonical: no representative found (unreachable)");
}

bool equivalent(const DiagonalForm& f1, const DiagonalForm& f2) {
    if (f1.context().p != f2.context().p) throw UsageError("forms use different primes");
    return f1.zero_count() == f2.zero_count() && invariants(f1) == invariants(f2);
}

DiagonalForm direct_sum(const DiagonalForm& f1, const DiagonalForm& f2) {
    if (f1.context().p != f2.context().p) throw UsageError("forms use different primes");
    std::vector<SquareClass> cs = f1.classes();
    cs.insert(cs.end(), f2.classes().begin(), f2.classes().end());
    return {f1.context(), f1.zero_count() + f2.zero_count(), std::move(cs)};
}

// ---------------------------------------------------------------------------
// DSL

DiagonalForm parse_form(const std::string& text, const PrimeContext& ctx) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("diag(", 0) != 0 || s.back() != ')')
        throw ParseError("form must look like diag(...): '" + text + "'");
    std::string body = s.substr(5, s.size() - 6);

    int zero_count = 0;
    std::vector<SquareClass> classes;
    if (body.empty()) return {ctx, 0, {}};

    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty entry in '" + text + "'");
        std::string tok = item;
        long long reps = 1;
        auto caret = item.find('^');
        if (caret != std::string::npos) {
            tok = item.substr(0, caret);
            try {
                reps = std::stoll(item.substr(caret + 1));
            } catch (...) {
                throw ParseError("bad repetition in '" + item + "'");
            }
            if (reps < 0) throw ParseError("negative repetition in '" + item + "'");
        }
        for (long long i = 0; i < reps; ++i) {
            if (tok == "0") {
                ++zero_count;
            } else if (tok == "1" || tok == "l" || tok == "p" || tok == "lp") {
                classes.push_back(class_from_token(tok));
            } else {
                Rational q = parse_rational(tok);
                if (q == 0)
                    ++zero_count;
                else
                    classes.push_back(classify(q, ctx));
            }
        }
    }
    return {ctx, zero_count, std::move(classes)};
}

std::string to_dsl(const DiagonalForm& f) {
    std::ostringstream os;
    os << "diag(";
    const auto& cs = f.classes();
    bool first = true;
    size_t i = 0;
    while (i < cs.size()) {
        size_t j = i;
        while (j < cs.size() && cs[j] == cs[i]) ++j;
        if (!first) os << ",";
        first = false;
        os << class_token(cs[i]);
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    if (f.zero_count() > 0) {
        if (!first) os << ",";
        first = false;
        os << "0";
        if (f.zero_count() > 1) os << "^" << f.zero_count();
    }
    os << ")";
    return os.str();
}

}  // namespace qpembed
