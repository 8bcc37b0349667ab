#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hypersum/denominators.hpp"
#include "hypersum/dispersion.hpp"
#include "hypersum/expr.hpp"
#include "hypersum/format.hpp"
#include "hypersum/gcd_convergence.hpp"
#include "hypersum/json_io.hpp"
#include "hypersum/pipelines.hpp"

namespace py = pybind11;
using namespace hypersum;
using nlohmann::json;

namespace {

// Results cross the boundary as plain dicts, built from the same JSON the CLI prints.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

RatFunc nonzero_ratio(const std::string& text) {
    RatFunc r = parse_ratfunc(text);
    if (r.is_zero()) throw std::invalid_argument("the ratio must be nonzero");
    return r;
}

LinearRecurrence recurrence(const std::vector<std::string>& coeffs, const std::string& rhs) {
    LinearRecurrence rec;
    for (const auto& c : coeffs) rec.coeffs.push_back(parse_poly(c));
    rec.rhs = parse_poly(rhs);
    validate(rec);
    return rec;
}

py::object parse_expr(const std::string& text) { return to_py(to_json(parse_ratfunc(text))); }

py::object dispersion_of(const std::string& a, const std::string& b) {
    const Poly pa = parse_poly(a);
    const Poly pb = parse_poly(b);
    if (pa.is_zero() || pb.is_zero()) throw std::invalid_argument("dispersion needs nonzero polynomials");
    return to_py(to_json(dispersion(pa, pb)));
}

py::object denominator(const std::string& p0, const std::string& pd, int order, const std::string& method) {
    const Poly a = parse_poly(p0);
    const Poly b = parse_poly(pd);
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("p0 and pd must be nonzero");
    json out;
    if (method == "explicit") {
        const GcdLimit seq = gcd_limit(a, b, order);
        out = {{"N", seq.k0}, {"denominator", to_json(universal_denominator(a, b, order))},
               {"gcd_sequence", to_json(seq)}};
    } else if (method == "abramov") {
        const AbramovTrace t = abramov_reduce(a, b, order);
        out = {{"N", t.N}, {"denominator", to_json(t.denominator)}, {"trace", to_json(t)}};
    } else if (method == "gp") {
        if (order != 1) throw std::invalid_argument("method 'gp' applies to order-1 equations only");
        const GPTrace t = gp_reduce(b, -a);
        out = {{"N", t.N}, {"denominator", to_json(t.u)}, {"trace", to_json(t)}};
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }
    return to_py(out);
}

py::object gosper_of(const std::string& ratio) {
    const auto cert = gosper(nonzero_ratio(ratio));
    if (!cert) return py::none();
    return to_py({{"k0", cert->gcd_sequence.k0},
                  {"g", to_json(cert->g_used)},
                  {"f", to_json(cert->f_used)},
                  {"y", to_json(cert->y)},
                  {"verified", verify_gosper(*cert)}});
}

py::object gp_rep(const std::string& ratio) {
    const RatFunc r = nonzero_ratio(ratio);
    const GosperRep rep = gp_rep_from_trace(r.num(), r.den());
    json out = to_json(rep);
    out["gp_check"] = to_json(check_gp_rep(rep));
    return to_py(out);
}

py::object rational_solve_of(const std::vector<std::string>& coeffs, const std::string& rhs) {
    const RationalSolveResult res = rational_solve(recurrence(coeffs, rhs));
    const auto particular = res.particular();
    json hom = json::array();
    for (const auto& h : res.homogeneous()) hom.push_back(to_json(h));
    return to_py({{"N", res.N},
                  {"denominator", to_json(res.denominator)},
                  {"particular", particular ? to_json(*particular) : json(nullptr)},
                  {"homogeneous", std::move(hom)}});
}

}  // namespace

PYBIND11_MODULE(_hypersum, m) {
    m.doc() = "Exact universal denominators, Gosper summation and rational solutions of recurrences";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<EvalError> eval_error(m, "EvalError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const EvalError& e) {
            py::set_error(eval_error, e.what());
        }
    });

    m.def("parse", &parse_expr, py::arg("text"), "Parse an expression in n into a reduced rational function.");
    m.def("format", [](const std::string& text) { return format(parse_ratfunc(text)); }, py::arg("text"),
          "Canonical text of an expression.");
    m.def("dispersion", &dispersion_of, py::arg("a"), py::arg("b"));
    m.def("denominator", &denominator, py::arg("p0"), py::arg("pd"), py::arg("order"),
          py::arg("method") = "explicit");
    m.def("gosper", &gosper_of, py::arg("ratio"), "Certificate dict, or None when no antidifference exists.");
    m.def("gp_rep", &gp_rep, py::arg("ratio"));
    m.def("rational_solve", &rational_solve_of, py::arg("coeffs"), py::arg("rhs") = "0");
    m.def("verify_gosper",
          [](const std::string& ratio, const std::string& y) {
              return verify_gosper(nonzero_ratio(ratio), parse_ratfunc(y));
          },
          py::arg("ratio"), py::arg("y"));
    m.def("verify_rational",
          [](const std::vector<std::string>& coeffs, const std::string& y, const std::string& rhs) {
              return verify_rational(recurrence(coeffs, rhs), parse_ratfunc(y));
          },
          py::arg("coeffs"), py::arg("y"), py::arg("rhs") = "0");
}
