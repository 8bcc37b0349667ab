#pragma once

#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

/// Limit of the gcd sequence
///
///   G_k(n) = gcd( p0(n) p0(n+1) ... p0(n+k-1),  pd(n-d) pd(n-d-1) ... pd(n-d-k+1) )
///
/// for an order-d recurrence with trailing coefficient p0 and leading
/// coefficient pd. The sequence is a divisibility chain that stops growing
/// once k exceeds N = dis(pd(n-d), p0(n)), so G_{N+1} is its limit.
struct GcdLimit {
    /// N = dis(pd(n-d), p0(n)); -1 when the two never share a shifted factor.
    long k0 = -1;
    /// G_{k0+1}, or 1 when k0 = -1. Always monic.
    Poly limit = Poly::constant(1);
    /// G_1, ..., G_{k0+1}. Empty when k0 = -1.
    std::vector<Poly> trace;
};

/// N = dis(pd(n - d), p0(n)).
long shift_dispersion(const Poly& p0, const Poly& pd, int order);

/// G_k for k >= 1, built from scratch.
Poly gcd_term(const Poly& p0, const Poly& pd, int order, int k);

/// G_1, ..., G_{N+1} built incrementally; the limit is the last entry.
GcdLimit gcd_limit(const Poly& p0, const Poly& pd, int order);

/// gcd([p0(n+N)]^{falling N+1}, [pd(n-d)]^{falling N+1}), or 1 when N = -1.
/// A universal denominator for rational solutions of any recurrence whose
/// trailing and leading coefficients are p0 and pd. Requires order >= 1.
Poly universal_denominator(const Poly& p0, const Poly& pd, int order);

}  // namespace hypersum
