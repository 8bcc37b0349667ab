#include "hypersum/denominators.hpp"

#include <stdexcept>

#include "hypersum/dispersion.hpp"
#include "hypersum/gcd_convergence.hpp"

namespace hypersum {

namespace {

void require_reduced_ratio(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("ratio polynomials must be nonzero");
    if (gcd(a, b).degree() > 0) throw std::invalid_argument("ratio polynomials must be coprime");
}

bool identity_holds(const GosperRep& rep) {
    return rep.ratio_num * rep.bden * rep.c == rep.ratio_den * rep.anum * shift(rep.c, 1);
}

// Moves the leading coefficient of bden into anum.
GosperRep normalized(GosperRep rep) {
    const Rational lead = rep.bden.leading();
    rep.anum *= 1 / lead;
    rep.bden *= 1 / lead;
    return rep;
}

RepCheck failure(std::string condition, Poly witness = {}, std::optional<long> h = std::nullopt) {
    RepCheck out;
    out.ok = false;
    out.failed_condition = std::move(condition);
    out.witness = std::move(witness);
    out.failing_shift = h;
    return out;
}

}  // namespace

AbramovTrace abramov_reduce(const Poly& p0, const Poly& pd, int order) {
    if (order < 1) throw std::invalid_argument("recurrence order must be positive");
    AbramovTrace out;
    out.N = shift_dispersion(p0, pd, order);
    Poly a = shift(pd, -static_cast<long>(order));
    Poly b = p0;
    for (long i = out.N; i >= 0; --i) {
        Poly d = gcd(a, shift(b, i));
        a = exact_quotient(a, d);
        b = exact_quotient(b, shift(d, -i));
        out.denominator *= falling_product(d, static_cast<int>(i) + 1);
        out.d_list.push_back(std::move(d));
    }
    out.A0 = std::move(a);
    out.B0 = std::move(b);
    return out;
}

GPTrace gp_reduce(const Poly& a, const Poly& b) {
    require_reduced_ratio(a, b);
    GPTrace out;
    out.N = shift_dispersion(b, a, 1);
    Poly ai = a;
    Poly bi = b;
    for (long i = 1; i <= out.N + 1; ++i) {
        Poly delta = gcd(ai, shift(bi, i));
        ai = exact_quotient(ai, delta);
        bi = exact_quotient(bi, shift(delta, -i));
        out.u *= falling_product(shift(delta, -1L), static_cast<int>(i));
        out.delta_list.push_back(std::move(delta));
    }
    out.a_final = std::move(ai);
    out.b_final = std::move(bi);
    return out;
}

GosperRep gosper_rep_from_abramov(const Poly& a, const Poly& b) {
    require_reduced_ratio(a, b);
    const AbramovTrace trace = abramov_reduce(b, a, 1);
    GosperRep rep = normalized({a, b, trace.denominator, shift(trace.A0, 1), trace.B0});
    if (!identity_holds(rep)) throw std::logic_error("Abramov representation does not reproduce the ratio");
    return rep;
}

GosperRep gp_rep_from_trace(const Poly& a, const Poly& b) {
    const GPTrace trace = gp_reduce(a, b);
    GosperRep rep = normalized({a, b, trace.u, trace.a_final, trace.b_final});
    if (!identity_holds(rep)) throw std::logic_error("GP representation does not reproduce the ratio");
    return rep;
}

RepCheck check_gosper_rep(const GosperRep& rep) {
    if (rep.ratio_num.is_zero() || rep.ratio_den.is_zero() || rep.c.is_zero() || rep.anum.is_zero() ||
        rep.bden.is_zero())
        return failure("well-formed");
    if (!identity_holds(rep)) return failure("identity");
    const DispersionResult dis = dispersion(rep.anum, rep.bden);
    if (dis.value >= 0) {
        const auto& first = dis.witnesses.front();
        return failure("gcd(a(n),b(n+h))", first.common_factor, first.shift);
    }
    return {};
}

RepCheck check_gp_rep(const GosperRep& rep) {
    RepCheck base = check_gosper_rep(rep);
    if (!base) return base;
    if (!rep.c.is_monic() || !rep.bden.is_monic()) return failure("monic c and b");
    if (Poly g = gcd(shift(rep.c, 1), rep.bden); g.degree() > 0) return failure("gcd(c(n+1),b(n))", g);
    if (Poly g = gcd(rep.c, rep.anum); g.degree() > 0) return failure("gcd(c(n),a(n))", g);
    return {};
}

}  // namespace hypersum
