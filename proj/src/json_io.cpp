#include "hypersum/json_io.hpp"

#include "hypersum/format.hpp"

namespace hypersum {

using nlohmann::json;

namespace {

json poly_list(const std::vector<Poly>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(to_json(p));
    return arr;
}

}  // namespace

json to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
    return {{"pretty", format(p)}, {"coeffs", std::move(coeffs)}};
}

json to_json(const RatFunc& r) {
    return {{"pretty", format(r)}, {"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const SolutionSet& s) {
    json out{{"degree_bound", s.degree_bound},
             {"has_solution", s.has_solution()},
             {"homogeneous_basis", poly_list(s.homogeneous_basis)}};
    out["particular"] = s.particular ? to_json(*s.particular) : json(nullptr);
    return out;
}

json to_json(const DispersionResult& d) {
    json witnesses = json::array();
    for (const auto& w : d.witnesses) witnesses.push_back({{"shift", w.shift}, {"gcd", to_json(w.common_factor)}});
    return {{"value", d.value}, {"witnesses", std::move(witnesses)}};
}

json to_json(const GcdLimit& g) {
    return {{"k0", g.k0}, {"limit", to_json(g.limit)}, {"trace", poly_list(g.trace)}};
}

json to_json(const AbramovTrace& t) {
    return {{"N", t.N},
            {"d_list", poly_list(t.d_list)},
            {"A0", to_json(t.A0)},
            {"B0", to_json(t.B0)},
            {"denominator", to_json(t.denominator)}};
}

json to_json(const GPTrace& t) {
    return {{"N", t.N},
            {"delta_list", poly_list(t.delta_list)},
            {"a_final", to_json(t.a_final)},
            {"b_final", to_json(t.b_final)},
            {"u", to_json(t.u)}};
}

json to_json(const GosperRep& rep) {
    return {{"c", to_json(rep.c)}, {"a", to_json(rep.anum)}, {"b", to_json(rep.bden)}};
}

json to_json(const RepCheck& check) {
    json out{{"ok", check.ok}};
    if (!check.ok) {
        out["failed_condition"] = check.failed_condition;
        out["failing_shift"] = check.failing_shift ? json(*check.failing_shift) : json(nullptr);
        out["witness"] = to_json(check.witness);
    }
    return out;
}

Poly poly_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

}  // namespace hypersum
