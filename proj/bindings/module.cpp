#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qpembed/embed.hpp"
#include "qpembed/json_io.hpp"
#include "qpembed/oracle.hpp"

namespace py = pybind11;
using namespace qpembed;

namespace {

Rational rational_from_string(const std::string& s) { return parse_rational(s); }

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_qpembed, m) {
    m.doc() = "exact p-adic quadratic form classification and embedding decisions";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_ArithmeticError);
    py::register_exception<NotASquare>(m, "NotASquare", PyExc_ArithmeticError);
    py::register_exception<NotASimpleRoot>(m, "NotASimpleRoot", PyExc_ArithmeticError);
    py::register_exception<ZeroHasNoClass>(m, "ZeroHasNoClass", PyExc_ValueError);
    py::register_exception<VerificationFailed>(m, "VerificationFailed", PyExc_RuntimeError);
    py::register_exception<RetryBudgetExhausted>(m, "RetryBudgetExhausted", PyExc_RuntimeError);
    py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);

    py::class_<PrimeContext>(m, "PrimeContext")
        .def_readonly("p", &PrimeContext::p)
        .def_readonly("lam", &PrimeContext::lambda)
        .def_readonly("default_precision", &PrimeContext::default_precision)
        .def("__repr__", [](const PrimeContext& c) {
            return "PrimeContext(p=" + std::to_string(c.p) +
                   ", lambda=" + std::to_string(c.lambda) + ")";
        });
    m.def("make_context", &make_context, py::arg("p"), py::arg("default_precision") = 32);

    py::enum_<SquareClass>(m, "SquareClass")
        .value("ONE", SquareClass::One)
        .value("LAMBDA", SquareClass::Lambda)
        .value("P", SquareClass::P)
        .value("LAMBDA_P", SquareClass::LambdaP);
    m.def("class_token", &class_token);

    py::class_<PAdicNumber>(m, "PAdicNumber")
        .def_static(
            "from_fraction",
            [](long long num, long long den, const PrimeContext& ctx, int precision) {
                return PAdicNumber::from_rational(Int(num), Int(den), ctx, precision);
            },
            py::arg("num"), py::arg("den") = 1, py::arg("ctx"), py::arg("precision") = 0)
        .def_static(
            "parse",
            [](const std::string& s, const PrimeContext& ctx, int precision) {
                return parse_padic(s, ctx, precision);
            },
            py::arg("text"), py::arg("ctx"), py::arg("precision") = 0)
        .def_property_readonly("is_zero", &PAdicNumber::is_zero)
        .def_property_readonly("valuation",
                               [](const PAdicNumber& x) { return x.is_zero() ? 0 : x.valuation(); })
        .def_property_readonly("precision", &PAdicNumber::precision)
        .def("digits", &PAdicNumber::digits)
        .def("is_square", &PAdicNumber::is_square)
        .def("sqrt", &PAdicNumber::sqrt)
        .def("inverse", &PAdicNumber::inverse)
        .def("same_value", &PAdicNumber::same_value)
        .def("__add__", [](const PAdicNumber& a, const PAdicNumber& b) { return a + b; })
        .def("__sub__", [](const PAdicNumber& a, const PAdicNumber& b) { return a - b; })
        .def("__mul__", [](const PAdicNumber& a, const PAdicNumber& b) { return a * b; })
        .def("__truediv__", [](const PAdicNumber& a, const PAdicNumber& b) { return a / b; })
        .def("__neg__", [](const PAdicNumber& a) { return -a; })
        .def("__str__", &PAdicNumber::to_string)
        .def("digit_string", &PAdicNumber::digit_string);

    m.def(
        "legendre",
        [](long long u, const PrimeContext& ctx) { return legendre(Int(u), ctx); },
        py::arg("u"), py::arg("ctx"));
    m.def(
        "hensel_lift",
        [](const std::vector<long long>& coeffs, long long x0, const PrimeContext& ctx,
           int precision) {
            std::vector<Int> cs(coeffs.begin(), coeffs.end());
            return hensel_lift(cs, Int(x0), ctx, precision);
        },
        py::arg("coeffs"), py::arg("x0"), py::arg("ctx"), py::arg("precision") = 0);

    m.def(
        "classify",
        [](const std::string& value, const PrimeContext& ctx) {
            return classify(rational_from_string(value), ctx);
        },
        py::arg("value"), py::arg("ctx"));
    m.def("hilbert", py::overload_cast<SquareClass, SquareClass, const PrimeContext&>(&hilbert),
          py::arg("a"), py::arg("b"), py::arg("ctx"));
    m.def(
        "hilbert_general",
        [](const std::string& a, const std::string& b, const PrimeContext& ctx) {
            return hilbert_general(rational_from_string(a), rational_from_string(b), ctx);
        },
        py::arg("a"), py::arg("b"), py::arg("ctx"));

    py::class_<DiagonalForm>(m, "DiagonalForm")
        .def_property_readonly("zero_count", &DiagonalForm::zero_count)
        .def_property_readonly("rank", &DiagonalForm::rank)
        .def_property_readonly("dim", &DiagonalForm::dim)
        .def_property_readonly("classes", &DiagonalForm::classes)
        .def("__eq__", [](const DiagonalForm& a, const DiagonalForm& b) { return a == b; })
        .def("__repr__", [](const DiagonalForm& f) { return to_dsl(f); });

    m.def("parse_form", &parse_form, py::arg("dsl"), py::arg("ctx"));
    m.def("to_dsl", &to_dsl);
    m.def(
        "diagonalize",
        [](const std::vector<std::vector<std::string>>& matrix, const PrimeContext& ctx) {
            std::vector<std::vector<Rational>> rows;
            for (const auto& r : matrix) {
                std::vector<Rational> row;
                for (const auto& e : r) row.push_back(rational_from_string(e));
                rows.push_back(std::move(row));
            }
            return diagonalize(GramForm(ctx, std::move(rows)));
        },
        py::arg("matrix"), py::arg("ctx"),
        "diagonalizes a symmetric matrix of exact rationals given as strings");

    py::class_<FormInvariants>(m, "FormInvariants")
        .def_readonly("dim", &FormInvariants::dim)
        .def_readonly("rank", &FormInvariants::rank)
        .def_readonly("disc", &FormInvariants::disc)
        .def_readonly("hasse", &FormInvariants::hasse)
        .def("__repr__", [](const FormInvariants& i) {
            return "FormInvariants(dim=" + std::to_string(i.dim) +
                   ", rank=" + std::to_string(i.rank) + ", disc=" + class_token(i.disc) +
                   ", hasse=" + std::to_string(i.hasse) + ")";
        });
    m.def("invariants", &invariants);
    m.def("canonical", &canonical);
    m.def("equivalent", &equivalent);
    m.def("direct_sum", &direct_sum);

    py::enum_<TargetFamily>(m, "TargetFamily")
        .value("EUCLIDEAN", TargetFamily::Euclidean)
        .value("LORENTZIAN", TargetFamily::Lorentzian);

    py::class_<TargetSpace>(m, "TargetSpace")
        .def(py::init<TargetFamily, int>(), py::arg("family"), py::arg("n"))
        .def_readonly("family", &TargetSpace::family)
        .def_readonly("n", &TargetSpace::n)
        .def("__repr__", [](const TargetSpace& t) { return target_token(t); });

    py::class_<ReducedQuery>(m, "ReducedQuery")
        .def_readonly("s", &ReducedQuery::s)
        .def_readonly("family", &ReducedQuery::family)
        .def_readonly("m", &ReducedQuery::m)
        .def_readonly("feasible", &ReducedQuery::feasible)
        .def_readonly("k_bound", &ReducedQuery::k_bound);

    py::class_<EmbedDecision>(m, "EmbedDecision")
        .def_readonly("embeds", &EmbedDecision::embeds)
        .def_readonly("reason", &EmbedDecision::reason)
        .def_readonly("reduced", &EmbedDecision::reduced)
        .def("__repr__", [](const EmbedDecision& d) {
            return std::string("EmbedDecision(embeds=") + (d.embeds ? "True" : "False") +
                   ", reason=" + d.reason + ")";
        });

    m.def("reduce_degenerate", &reduce_degenerate);
    m.def("decide", &decide);
    m.def("min_dimension", &min_dimension);
    m.def("max_isotropic_dim", &max_isotropic_dim);
    m.def("decide_by_invariants", &decide_by_invariants);

    py::class_<Witness>(m, "Witness")
        .def_readonly("rows", &Witness::rows)
        .def_readonly("precision", &Witness::precision);
    m.def("witness", &witness, py::arg("f"), py::arg("t"), py::arg("precision") = 20,
          py::arg("seed") = 0);
    m.def("target_dot", &target_dot);

    py::class_<HenselConstants>(m, "HenselConstants")
        .def_readonly("precision", &HenselConstants::precision)
        .def_readonly("a", &HenselConstants::a)
        .def_readonly("b", &HenselConstants::b)
        .def_readonly("c", &HenselConstants::c)
        .def_readonly("d", &HenselConstants::d)
        .def_readonly("e", &HenselConstants::e)
        .def_readonly("A", &HenselConstants::A)
        .def_readonly("B", &HenselConstants::B)
        .def_readonly("C", &HenselConstants::C)
        .def_readonly("D", &HenselConstants::D)
        .def_readonly("E", &HenselConstants::E)
        .def_readonly("F", &HenselConstants::F)
        .def_readonly("G", &HenselConstants::G)
        .def_readonly("H", &HenselConstants::H);
    m.def("hensel_constants", &hensel_constants, py::arg("ctx"), py::arg("precision") = 0);

    py::class_<OracleConfig>(m, "OracleConfig")
        .def(py::init<>())
        .def_readwrite("modulus_exponent", &OracleConfig::modulus_exponent)
        .def_readwrite("sample_count", &OracleConfig::sample_count)
        .def_readwrite("rng_seed", &OracleConfig::rng_seed);
    m.def(
        "hilbert_oracle",
        [](const std::string& a, const std::string& b, const PrimeContext& ctx,
           const OracleConfig& cfg) {
            return hilbert_oracle(rational_from_string(a), rational_from_string(b), ctx, cfg);
        },
        py::arg("a"), py::arg("b"), py::arg("ctx"), py::arg("cfg") = OracleConfig{});

    m.attr("__all__") = py::make_tuple(
        "make_context", "PrimeContext", "SquareClass", "PAdicNumber", "legendre", "hensel_lift",
        "classify", "hilbert", "hilbert_general", "DiagonalForm", "parse_form", "to_dsl",
        "diagonalize", "FormInvariants", "invariants", "canonical", "equivalent", "direct_sum",
        "TargetFamily", "TargetSpace", "EmbedDecision", "ReducedQuery", "reduce_degenerate",
        "decide", "min_dimension", "max_isotropic_dim", "decide_by_invariants", "Witness",
        "witness", "target_dot", "HenselConstants", "hensel_constants", "OracleConfig",
        "hilbert_oracle");

    (void)rational_to_string;
}
