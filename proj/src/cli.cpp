#include "qpembed/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qpembed/json_io.hpp"
#include "qpembed/oracle.hpp"

namespace qpembed {

namespace {

struct Request {
    long long prime = 0;
    std::vector<std::string> forms;
    std::string gram_path;
    std::string target;
    int precision = 0;  // 0: use default resolution
    unsigned long long seed = 0;
    bool want_witness = false;
    std::string output = "json";
};

int default_precision_from_env() {
    if (const char* env = std::getenv("PADIC_DEFAULT_PRECISION")) {
        try {
            int v = std::stoi(env);
            if (v >= 4) return v;
        } catch (...) {
        }
        throw UsageError("PADIC_DEFAULT_PRECISION must be an integer >= 4");
    }
    return 32;
}

PrimeContext context_for(const Request& r) {
    int prec = r.precision > 0 ? r.precision : default_precision_from_env();
    return make_context(r.prime, prec);
}

DiagonalForm load_form(const Request& r, const PrimeContext& ctx, size_t index = 0) {
    if (!r.gram_path.empty()) {
        std::ifstream in(r.gram_path);
        if (!in) throw UsageError("cannot open Gram file: " + r.gram_path);
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad Gram JSON: ") + e.what());
        }
        return diagonalize(gram_from_json(j, ctx));
    }
    if (index >= r.forms.size()) throw UsageError("missing --form");
    return parse_form(r.forms[index], ctx);
}

TargetSpace parse_target(const std::string& s, bool need_dim) {
    auto colon = s.find(':');
    std::string fam = colon == std::string::npos ? s : s.substr(0, colon);
    TargetFamily family = family_from_token(fam);
    if (colon == std::string::npos) {
        if (need_dim) throw UsageError("target needs a dimension, e.g. " + fam + ":4");
        return {family, 1};
    }
    int n = 0;
    try {
        n = std::stoi(s.substr(colon + 1));
    } catch (...) {
        throw ParseError("bad target dimension in '" + s + "'");
    }
    if (n < 1) throw UsageError("target dimension must be >= 1");
    return {family, n};
}

void emit(const Json& j, const Request& r, std::ostream& out) {
    if (r.output == "text") {
        for (const auto& [key, value] : j.items()) {
            out << key << ": ";
            if (value.is_string())
                out << value.get<std::string>();
            else
                out << value.dump();
            out << "\n";
        }
        return;
    }
    out << j.dump() << "\n";
}

int cmd_classify(const Request& r, std::ostream& out) {
    auto ctx = context_for(r);
    SquareClass c;
    if (!r.forms.empty() && r.forms[0].rfind("diag(", 0) != 0) {
        c = classify(parse_rational(r.forms[0]), ctx);
    } else {
        DiagonalForm f = load_form(r, ctx);
        if (f.rank() != 1 || f.zero_count() != 0)
            throw UsageError("classify expects a single nonzero entry");
        c = f.classes()[0];
    }
    Json j;
    j["prime"] = r.prime;
    j["class"] = class_token(c);
    emit(j, r, out);
    return 0;
}

int cmd_invariants(const Request& r, std::ostream& out) {
    auto ctx = context_for(r);
    DiagonalForm f = load_form(r, ctx);
    FormInvariants inv = invariants(f);
    Json j;
    j["prime"] = r.prime;
    j["form"] = to_dsl(f);
    j["zero_count"] = f.zero_count();
    j.update(invariants_to_json(inv));
    j["canonical"] = to_dsl(canonical(f));
    emit(j, r, out);
    return 0;
}

int cmd_equivalent(const Request& r, std::ostream& out) {
    auto ctx = context_for(r);
    if (r.forms.size() != 2) throw UsageError("equivalent needs --form given twice");
    DiagonalForm f1 = parse_form(r.forms[0], ctx);
    DiagonalForm f2 = parse_form(r.forms[1], ctx);
    Json j;
    j["prime"] = r.prime;
    j["lhs"] = form_to_json(f1);
    j["rhs"] = form_to_json(f2);
    j["equivalent"] = equivalent(f1, f2);
    emit(j, r, out);
    return 0;
}

Json decision_record(const Request& r, const PrimeContext& ctx, const DiagonalForm& f,
                     const TargetSpace& t, const EmbedDecision& dec,
                     const std::optional<int>& min_n) {
    Json j;
    j["prime"] = r.prime;
    j["form"] = to_dsl(f);
    j["target"] = target_token(t);
    j["embeds"] = dec.embeds;
    if (min_n)
        j["min_n"] = *min_n;
    else
        j["min_n"] = nullptr;
    j["reason"] = dec.reason;
    if (dec.reduced)
        j["reduced"] = reduced_to_json(*dec.reduced);
    else
        j["reduced"] = nullptr;
    int wprec = r.precision > 0 ? r.precision : 20;
    if (dec.embeds && r.want_witness) {
        Witness w = witness(f, t, wprec, r.seed);
        j["witness"] = witness_to_json(w);
        j["precision"] = w.precision;
    } else {
        j["witness"] = nullptr;
        j["precision"] = r.want_witness ? wprec : ctx.default_precision;
    }
    return j;
}

int cmd_embed(const Request& r, std::ostream& out, bool force_witness) {
    Request req = r;
    if (force_witness) req.want_witness = true;
    auto ctx = context_for(req);
    DiagonalForm f = load_form(req, ctx);
    TargetSpace t = parse_target(req.target, true);
    EmbedDecision dec = decide(f, t);
    emit(decision_record(req, ctx, f, t, dec, std::nullopt), req, out);
    return 0;
}

int cmd_min_dim(const Request& r, std::ostream& out) {
    auto ctx = context_for(r);
    DiagonalForm f = load_form(r, ctx);
    TargetSpace probe = parse_target(r.target, false);
    int n = min_dimension(f, probe.family);
    TargetSpace t(probe.family, n);
    EmbedDecision dec = decide(f, t);
    emit(decision_record(r, ctx, f, t, dec, n), r, out);
    return 0;
}

int cmd_isotropic_max(const Request& r, std::ostream& out) {
    auto ctx = context_for(r);
    TargetSpace t = parse_target(r.target, true);
    int k = max_isotropic_dim(t, ctx);
    Json j;
    j["prime"] = r.prime;
    j["target"] = target_token(t);
    j["max_k"] = k;
    int wprec = r.precision > 0 ? r.precision : 20;
    if (r.want_witness && k > 0) {
        Witness w = witness(DiagonalForm(ctx, k, {}), t, wprec, r.seed);
        j["witness"] = witness_to_json(w);
        j["precision"] = w.precision;
    } else {
        j["witness"] = nullptr;
        j["precision"] = r.want_witness ? wprec : ctx.default_precision;
    }
    emit(j, r, out);
    return 0;
}

int cmd_constants(const Request& r, std::ostream& out) {
    auto ctx = context_for(r);
    int prec = r.precision > 0 ? r.precision : ctx.default_precision;
    HenselConstants hc = hensel_constants(ctx, prec);
    Json cs;
    auto put = [&](const char* name, const PAdicNumber& x) {
        if (!x.is_zero()) cs[name] = x.digit_string();
    };
    bool ok = true;
    // identities hold modulo p^prec; checked over exact representatives
    auto sq = [](const PAdicNumber& x) {
        Rational r = x.representative();
        return Rational(r * r);
    };
    auto check = [&](const Rational& diff) {
        if (diff == 0) return;
        Int p(ctx.p);
        long long v = int_valuation(rat_num(diff), p) - int_valuation(rat_den(diff), p);
        if (v < prec) ok = false;
    };
    if (ctx.p % 4 == 3) {
        put("a", hc.a);
        put("b", hc.b);
        put("c", hc.c);
        put("d", hc.d);
        put("e", hc.e);
        Rational s = sq(hc.a) + sq(hc.b);
        check(s + sq(hc.c) - ctx.p);
        check(s + sq(hc.d) - Rational(Int(ctx.lambda) * ctx.p));
        check(s + sq(hc.e));
    } else {
        put("A", hc.A);
        put("B", hc.B);
        put("C", hc.C);
        put("D", hc.D);
        put("E", hc.E);
        put("F", hc.F);
        put("G", hc.G);
        put("H", hc.H);
        check(sq(hc.A) + sq(hc.B) - ctx.lambda);
        check(sq(hc.C) + sq(hc.D) - ctx.p);
        check(sq(hc.E) + sq(hc.F) - Rational(Int(ctx.lambda) * ctx.p));
        check(sq(hc.G) + sq(hc.H));
    }
    if (!ok) throw VerificationFailed("hensel constants failed their defining identities");
    Json j;
    j["prime"] = r.prime;
    j["residue_class"] = static_cast<int>(ctx.p % 4);
    j["lambda"] = ctx.lambda;
    j["precision"] = prec;
    j["constants"] = cs;
    j["identities_checked"] = true;
    emit(j, r, out);
    return 0;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int run_single(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open batch file: " << path << "\n";
        return 2;
    }
    int status = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto args = split_line(line);
        if (args.empty() || args[0][0] == '#') continue;
        int rc = run_single(args, out, err);
        if (rc != 0) status = rc;
    }
    return status;
}

int run_single(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact p-adic quadratic form classification and embedding"};
    app.require_subcommand(1);

    Request r;
    auto add_common = [&](CLI::App* sub, bool needs_form, bool needs_target) {
        sub->add_option("--prime", r.prime, "odd prime p")->required();
        auto* fo = sub->add_option("--form", r.forms, "form DSL, e.g. diag(1,l,p,lp,0^2)");
        sub->add_option("--gram", r.gram_path, "path to Gram JSON {\"n\":..,\"m\":[[..]]}")
            ->excludes(fo);
        auto* to = sub->add_option("--target", r.target, "euclid[:N] | lorentz[:N]");
        if (needs_target) to->required();
        sub->add_option("--precision", r.precision, "unit digits / witness modulus exponent");
        sub->add_option("--seed", r.seed, "witness search seed");
        sub->add_flag("--witness", r.want_witness, "attach a verified witness basis");
        sub->add_option("--output", r.output, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
        (void)needs_form;
    };

    auto* c_classify = app.add_subcommand("classify", "square class of a value");
    add_common(c_classify, true, false);
    auto* c_inv = app.add_subcommand("invariants", "dimension, discriminant, Hasse sign");
    add_common(c_inv, true, false);
    auto* c_equiv = app.add_subcommand("equivalent", "equivalence of two forms");
    add_common(c_equiv, true, false);
    auto* c_embed = app.add_subcommand("embed", "decide an isometric embedding");
    add_common(c_embed, true, true);
    auto* c_min = app.add_subcommand("min-dim", "least target dimension that embeds");
    add_common(c_min, true, true);
    auto* c_wit = app.add_subcommand("witness", "decision plus witness basis");
    add_common(c_wit, true, true);
    auto* c_iso = app.add_subcommand("isotropic-max", "largest totally isotropic dimension");
    add_common(c_iso, false, true);
    auto* c_const = app.add_subcommand("constants", "sum-of-squares lifting constants");
    add_common(c_const, false, false);

    std::vector<const char*> argv;
    argv.push_back("qpembed");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::ostringstream os;
            app.exit(e, os, os);
            out << os.str();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(r, out);
        if (c_inv->parsed()) return cmd_invariants(r, out);
        if (c_equiv->parsed()) return cmd_equivalent(r, out);
        if (c_embed->parsed()) return cmd_embed(r, out, false);
        if (c_min->parsed()) return cmd_min_dim(r, out);
        if (c_wit->parsed()) return cmd_embed(r, out, true);
        if (c_iso->parsed()) return cmd_isotropic_max(r, out);
        if (c_const->parsed()) return cmd_constants(r, out);
        err << "no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailed& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const RetryBudgetExhausted& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() >= 2 && args[0] == "--batch") return run_batch(args[1], out, err);
    return run_single(args, out, err);
}

}  // namespace qpembed
