#include "hypersum/pipelines.hpp"

#include <stdexcept>

namespace hypersum {

LinearRecurrence gosper_key_equation(const RatFunc& ratio, const Poly& g) {
    const Poly& a = ratio.num();
    const Poly& b = ratio.den();
    const Poly g1 = shift(g, 1L);
    LinearRecurrence rec;
    rec.coeffs = {-(b * g1), a * g};
    rec.rhs = b * g * g1;
    return rec;
}

std::optional<GosperCertificate> gosper(const RatFunc& ratio) {
    if (ratio.is_zero()) throw std::domain_error("Gosper's algorithm needs a nonzero ratio");
    // Order-1 equation a(n) y(n+1) - b(n) y(n) = b(n): p1 = a, p0 = -b. Signs
    // do not affect the monic gcds, so b stands in for p0.
    GcdLimit seq = gcd_limit(ratio.den(), ratio.num(), 1);
    const Poly g = seq.limit;

    const SolutionSet sols = poly_solutions(gosper_key_equation(ratio, g));
    if (!sols.has_solution()) return std::nullopt;

    GosperCertificate cert{ratio, RatFunc::reduce(*sols.particular, g), g, *sols.particular, std::move(seq)};
    return cert;
}

std::optional<RatFunc> RationalSolveResult::particular() const {
    if (!numerator_solutions.particular) return std::nullopt;
    return RatFunc::reduce(*numerator_solutions.particular, denominator);
}

std::vector<RatFunc> RationalSolveResult::homogeneous() const {
    std::vector<RatFunc> out;
    out.reserve(numerator_solutions.homogeneous_basis.size());
    for (const auto& f : numerator_solutions.homogeneous_basis) out.push_back(RatFunc::reduce(f, denominator));
    return out;
}

LinearRecurrence clear_denominator(const LinearRecurrence& rec, const Poly& g) {
    const std::size_t terms = rec.coeffs.size();
    std::vector<Poly> shifted;
    shifted.reserve(terms);
    for (std::size_t j = 0; j < terms; ++j) shifted.push_back(shift(g, static_cast<long>(j)));

    LinearRecurrence out;
    out.coeffs.reserve(terms);
    for (std::size_t m = 0; m < terms; ++m) {
        Poly c = rec.coeffs[m];
        for (std::size_t j = 0; j < terms && !c.is_zero(); ++j) {
            if (j != m) c *= shifted[j];
        }
        out.coeffs.push_back(std::move(c));
    }
    out.rhs = rec.rhs;
    for (const auto& s : shifted) {
        if (out.rhs.is_zero()) break;
        out.rhs *= s;
    }
    return out;
}

RationalSolveResult rational_solve(const LinearRecurrence& rec) {
    validate(rec);
    const int d = rec.order();
    RationalSolveResult out;
    out.N = shift_dispersion(rec.coeffs.front(), rec.coeffs.back(), d);
    out.denominator = universal_denominator(rec.coeffs.front(), rec.coeffs.back(), d);
    out.cleared = clear_denominator(rec, out.denominator);
    out.numerator_solutions = poly_solutions(out.cleared);
    return out;
}

bool verify_gosper(const RatFunc& ratio, const RatFunc& y) {
    // a(n) f(n+1) g(n) - b(n) f(n) g(n+1) = b(n) g(n) g(n+1) with y = f/g.
    const Poly& a = ratio.num();
    const Poly& b = ratio.den();
    const Poly& f = y.num();
    const Poly& g = y.den();
    const Poly f1 = shift(f, 1L);
    const Poly g1 = shift(g, 1L);
    return a * f1 * g - b * f * g1 == b * g * g1;
}

bool verify_gosper(const GosperCertificate& cert) {
    if (!verify_gosper(cert.ratio, cert.y)) return false;
    if (cert.g_used.is_zero()) return false;
    return RatFunc::reduce(cert.f_used, cert.g_used) == cert.y;
}

bool verify_rational(const LinearRecurrence& rec, const RatFunc& y) {
    if (rec.coeffs.empty()) return false;
    const LinearRecurrence cleared = clear_denominator(rec, y.den());
    return apply(cleared, y.num()) == cleared.rhs;
}

}  // namespace hypersum
