#pragma once

#include <optional>
#include <vector>

#include "hypersum/difference_solver.hpp"
#include "hypersum/gcd_convergence.hpp"
#include "hypersum/ratfunc.hpp"

namespace hypersum {

/// Witness that z_n = y(n) t_n solves z_{n+1} - z_n = t_n for a term with
/// ratio t_{n+1}/t_n = ratio, i.e. ratio(n) y(n+1) - y(n) = 1.
struct GosperCertificate {
    RatFunc ratio;
    RatFunc y;
    /// Denominator used in the key equation and the polynomial solved for;
    /// y = f_used / g_used after reduction, but the pair need not be coprime.
    Poly g_used;
    Poly f_used;
    /// Stabilized gcd sequence for the ratio (k0 and G_1..G_{k0+1}).
    GcdLimit gcd_sequence;
};

/// Key equation a(n)g(n)f(n+1) - b(n)g(n+1)f(n) = b(n)g(n)g(n+1) for r = a/b.
LinearRecurrence gosper_key_equation(const RatFunc& ratio, const Poly& g);

/// Gosper's algorithm driven by the limit of the gcd sequence. Returns
/// std::nullopt when t_n has no hypergeometric antidifference.
/// Throws std::domain_error for the zero ratio.
std::optional<GosperCertificate> gosper(const RatFunc& ratio);

/// Rational solutions y = f / G of sum p_m(n) y(n+m) = p(n).
struct RationalSolveResult {
    long N = -1;
    Poly denominator = Poly::constant(1);
    /// Recurrence for the numerator f after clearing denominators.
    LinearRecurrence cleared;
    SolutionSet numerator_solutions;

    bool has_solution() const { return numerator_solutions.has_solution(); }
    /// particular / G, reduced.
    std::optional<RatFunc> particular() const;
    /// basis_i / G, reduced.
    std::vector<RatFunc> homogeneous() const;
};

/// Cleared recurrence: coefficients p_m(n) prod_{j != m} g(n+j) and
/// right-hand side p(n) prod_j g(n+j).
LinearRecurrence clear_denominator(const LinearRecurrence& rec, const Poly& g);

RationalSolveResult rational_solve(const LinearRecurrence& rec);

bool verify_gosper(const RatFunc& ratio, const RatFunc& y);
bool verify_gosper(const GosperCertificate& cert);

/// Checks sum p_m(n) y(n+m) = p(n) as a polynomial identity.
bool verify_rational(const LinearRecurrence& rec, const RatFunc& y);

}  // namespace hypersum
