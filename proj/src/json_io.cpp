#include "qpembed/json_io.hpp"

namespace qpembed {

Json form_to_json(const DiagonalForm& f) {
    Json j;
    j["k"] = f.zero_count();
    Json cs = Json::array();
    for (auto c : f.classes()) cs.push_back(class_token(c));
    j["classes"] = cs;
    j["dsl"] = to_dsl(f);
    return j;
}

DiagonalForm form_from_json(const Json& j, const PrimeContext& ctx) {
    if (j.contains("dsl")) return parse_form(j["dsl"].get<std::string>(), ctx);
    int k = j.value("k", 0);
    std::vector<SquareClass> cs;
    for (const auto& t : j.at("classes")) cs.push_back(class_from_token(t.get<std::string>()));
    return {ctx, k, std::move(cs)};
}

Json invariants_to_json(const FormInvariants& inv) {
    Json j;
    j["dim"] = inv.dim;
    j["rank"] = inv.rank;
    j["disc"] = class_token(inv.disc);
    j["hasse"] = inv.hasse;
    return j;
}

namespace {

Rational entry_to_rational(const Json& e) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long long>());
    throw ParseError("Gram entries must be integers or strings like \"3/4\"");
}

}  // namespace

GramForm gram_from_json(const Json& j, const PrimeContext& ctx) {
    int n = j.at("n").get<int>();
    const auto& rows = j.at("m");
    if (static_cast<int>(rows.size()) != n) throw ParseError("Gram matrix has wrong row count");
    std::vector<std::vector<Rational>> m;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ParseError("Gram matrix has wrong column count");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(entry_to_rational(e));
        m.push_back(std::move(r));
    }
    return {ctx, std::move(m)};
}

Json witness_to_json(const Witness& w) {
    Json rows = Json::array();
    for (const auto& row : w.rows) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.digit_string());
        rows.push_back(r);
    }
    return rows;
}

Json reduced_to_json(const ReducedQuery& rq) {
    Json j;
    j["form"] = to_dsl(rq.s);
    j["target"] = family_token(rq.family) + ":" + std::to_string(rq.m);
    j["feasible"] = rq.feasible;
    if (rq.k_bound)
        j["k_bound"] = *rq.k_bound;
    else
        j["k_bound"] = nullptr;
    return j;
}

std::string target_token(const TargetSpace& t) {
    return family_token(t.family) + ":" + std::to_string(t.n);
}

}  // namespace qpembed
