#pragma once

#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
/// A constant c against b of degree m gives c^m.
/// Throws std::domain_error if either input is zero.
Rational resultant(const Poly& a, const Poly& b);

/// R(h) = Res_n(a(n), b(n + h)) as a polynomial in h, recovered from
/// deg(a)*deg(b) + 1 scalar resultants at h = 0, 1, 2, ...
Poly shifted_resultant(const Poly& a, const Poly& b);

/// All integer roots of p, ascending. Throws std::domain_error for p = 0.
std::vector<Integer> integer_roots(const Poly& p);

struct DispersionWitness {
    long shift;
    /// Monic gcd(a(n), b(n + shift)), degree >= 1.
    Poly common_factor;
};

struct DispersionResult {
    /// Largest k >= 0 with deg gcd(a(n), b(n+k)) >= 1, or -1.
    long value = -1;
    /// Every such k, ascending.
    std::vector<DispersionWitness> witnesses;
};

/// dis(a, b). Throws std::domain_error if either input is zero.
DispersionResult dispersion(const Poly& a, const Poly& b);

}  // namespace hypersum
