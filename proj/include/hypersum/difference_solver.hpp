#pragma once

#include <optional>
#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

/// sum_{m=0}^{d} coeffs[m](n) * f(n+m) = rhs(n), with coeffs[0] and
/// coeffs[d] nonzero and d >= 1.
struct LinearRecurrence {
    std::vector<Poly> coeffs;
    Poly rhs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Throws std::invalid_argument unless order >= 1 and both end coefficients
/// are nonzero.
void validate(const LinearRecurrence& rec);

/// Left-hand side applied to a polynomial: sum coeffs[m](n) f(n+m).
Poly apply(const LinearRecurrence& rec, const Poly& f);

/// Divides every coefficient and the right-hand side by their common gcd.
LinearRecurrence remove_content(const LinearRecurrence& rec);

/// Polynomial solutions: particular + span(homogeneous_basis).
struct SolutionSet {
    /// Absent iff there is no polynomial solution.
    std::optional<Poly> particular;
    /// Monic, strictly increasing degrees, each with zero coefficient at the
    /// leading degree of every other basis element.
    std::vector<Poly> homogeneous_basis;
    long degree_bound = -1;

    bool has_solution() const { return particular.has_value(); }
};

/// q*_j = sum_{m >= j} binom(m, j) q_m, the coefficients of the operator
/// rewritten in powers of the forward difference.
std::vector<Poly> delta_coeffs(const LinearRecurrence& rec);

/// Upper bound on the degree of any polynomial solution, or -1 when only the
/// zero polynomial can possibly solve the homogeneous part and rhs != 0
/// cannot be matched.
long degree_bound(const LinearRecurrence& rec);

/// Undetermined coefficients up to degree_bound, solved exactly.
SolutionSet poly_solutions(const LinearRecurrence& rec);

/// True iff f = particular + sum t_i basis_i for some rational t_i.
bool contains(const SolutionSet& set, const Poly& f);

}  // namespace hypersum
