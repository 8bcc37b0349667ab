#include "hypersum/difference_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypersum/dispersion.hpp"
#include "hypersum/linear_algebra.hpp"

namespace hypersum {

namespace {

Integer binomial(unsigned long m, unsigned long j) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), m, j);
    return out;
}

Poly from_vector(const std::vector<Rational>& v) { return Poly(v); }

}  // namespace

void validate(const LinearRecurrence& rec) {
    if (rec.coeffs.size() < 2) throw std::invalid_argument("recurrence order must be at least 1");
    if (rec.coeffs.front().is_zero()) throw std::invalid_argument("trailing coefficient p_0 must be nonzero");
    if (rec.coeffs.back().is_zero()) throw std::invalid_argument("leading coefficient p_d must be nonzero");
}

Poly apply(const LinearRecurrence& rec, const Poly& f) {
    Poly out;
    for (std::size_t m = 0; m < rec.coeffs.size(); ++m) {
        if (rec.coeffs[m].is_zero()) continue;
        out += rec.coeffs[m] * shift(f, static_cast<long>(m));
    }
    return out;
}

LinearRecurrence remove_content(const LinearRecurrence& rec) {
    Poly g = rec.rhs;
    for (const auto& q : rec.coeffs) {
        if (!q.is_zero()) g = g.is_zero() ? monic(q) : gcd(g, q);
    }
    if (g.is_zero() || g.degree() == 0) return rec;
    LinearRecurrence out;
    out.coeffs.reserve(rec.coeffs.size());
    for (const auto& q : rec.coeffs) out.coeffs.push_back(exact_quotient(q, g));
    out.rhs = exact_quotient(rec.rhs, g);
    return out;
}

std::vector<Poly> delta_coeffs(const LinearRecurrence& rec) {
    const std::size_t d = rec.coeffs.size();
    std::vector<Poly> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t m = j; m < d; ++m) out[j] += rec.coeffs[m] * Rational(binomial(m, j));
    }
    return out;
}

long degree_bound(const LinearRecurrence& rec) {
    validate(rec);
    const std::vector<Poly> qs = delta_coeffs(rec);

    bool found = false;
    long b_star = 0;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        if (qs[j].is_zero()) continue;
        const long v = qs[j].degree() - static_cast<long>(j);
        if (!found || v > b_star) b_star = v;
        found = true;
    }
    // p_0 != 0 forces some q*_j != 0.
    if (!found) throw std::logic_error("operator vanished in the difference basis");

    Poly phi;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        if (qs[j].is_zero() || qs[j].degree() - static_cast<long>(j) != b_star) continue;
        phi += falling_product(Poly::variable(), static_cast<int>(j)) * qs[j].leading();
    }

    long bound = -1;
    if (!rec.rhs.is_zero()) bound = std::max(bound, rec.rhs.degree() - b_star);
    for (const Integer& z : integer_roots(phi)) {
        if (z >= 0 && z.fits_slong_p()) bound = std::max(bound, z.get_si());
    }
    return bound;
}

SolutionSet poly_solutions(const LinearRecurrence& input) {
    validate(input);
    const LinearRecurrence rec = remove_content(input);

    SolutionSet out;
    out.degree_bound = degree_bound(rec);
    if (out.degree_bound < 0) {
        if (rec.rhs.is_zero()) out.particular = Poly();
        return out;
    }

    const auto unknowns = static_cast<std::size_t>(out.degree_bound) + 1;
    std::vector<Poly> images;
    images.reserve(unknowns);
    int top = rec.rhs.degree();
    for (std::size_t j = 0; j < unknowns; ++j) {
        images.push_back(apply(rec, Poly::monomial(1, static_cast<int>(j))));
        top = std::max(top, images.back().degree());
    }
    if (top < 0) top = 0;

    const auto eqs = static_cast<std::size_t>(top) + 1;
    Matrix a(eqs, unknowns);
    std::vector<Rational> rhs(eqs);
    for (std::size_t j = 0; j < unknowns; ++j) {
        for (std::size_t i = 0; i < eqs; ++i) a(i, j) = images[j].coeff(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < eqs; ++i) rhs[i] = rec.rhs.coeff(static_cast<int>(i));

    AffineSolution sol = solve_linear(std::move(a), std::move(rhs));
    if (sol.particular) out.particular = from_vector(*sol.particular);
    for (const auto& v : sol.nullspace) out.homogeneous_basis.push_back(from_vector(v));
    return out;
}

bool contains(const SolutionSet& set, const Poly& f) {
    if (!set.particular) return false;
    const Poly diff = f - *set.particular;
    if (set.homogeneous_basis.empty()) return diff.is_zero();

    int top = diff.degree();
    for (const auto& b : set.homogeneous_basis) top = std::max(top, b.degree());
    if (top < 0) return true;
    const auto eqs = static_cast<std::size_t>(top) + 1;
    Matrix a(eqs, set.homogeneous_basis.size());
    std::vector<Rational> rhs(eqs);
    for (std::size_t j = 0; j < set.homogeneous_basis.size(); ++j) {
        for (std::size_t i = 0; i < eqs; ++i) a(i, j) = set.homogeneous_basis[j].coeff(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < eqs; ++i) rhs[i] = diff.coeff(static_cast<int>(i));
    return solve_linear(std::move(a), std::move(rhs)).particular.has_value();
}

}  // namespace hypersum
