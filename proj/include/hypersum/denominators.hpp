#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

/// State of Abramov's loop for an order-d recurrence with end coefficients
/// p0 and pd. Starting from A_{N+1} = pd(n-d), B_{N+1} = p0(n), for
/// i = N down to 0:
///
///   d_i = gcd(A_{i+1}(n), B_{i+1}(n+i)),  A_i = A_{i+1} / d_i,  B_i = B_{i+1} / d_i(n-i)
///
/// and the denominator is prod_i [d_i(n)]^{falling i+1}.
struct AbramovTrace {
    long N = -1;
    /// d_N, d_{N-1}, ..., d_0 (all monic).
    std::vector<Poly> d_list;
    Poly A0;
    Poly B0;
    Poly denominator = Poly::constant(1);
};

/// Petkovsek's GP loop on a reduced ratio a/b. Starting from a_0 = a,
/// b_0 = b, for i = 1 up to N+1:
///
///   delta_i = gcd(a_{i-1}(n), b_{i-1}(n+i)),  a_i = a_{i-1} / delta_i,  b_i = b_{i-1} / delta_i(n-i)
///
/// and u = prod_i [delta_i(n-1)]^{falling i}.
struct GPTrace {
    long N = -1;
    /// delta_1, ..., delta_{N+1} (all monic).
    std::vector<Poly> delta_list;
    Poly a_final;
    Poly b_final;
    Poly u = Poly::constant(1);
};

/// r(n) = (anum(n) / bden(n)) * (c(n+1) / c(n)) for r = ratio_num / ratio_den.
///
/// c and bden are monic; any scalar sits in anum.
struct GosperRep {
    Poly ratio_num;
    Poly ratio_den;
    Poly c;
    Poly anum;
    Poly bden;
};

/// Outcome of a representation check. On failure, names the violated
/// condition and carries a witness.
struct RepCheck {
    bool ok = true;
    std::string failed_condition;
    /// Smallest offending h for the "for all h >= 0" coprimality condition.
    std::optional<long> failing_shift;
    /// Nontrivial common factor that breaks a coprimality condition.
    Poly witness;

    explicit operator bool() const { return ok; }
};

AbramovTrace abramov_reduce(const Poly& p0, const Poly& pd, int order);

/// Requires a, b nonzero and coprime (std::invalid_argument otherwise).
GPTrace gp_reduce(const Poly& a, const Poly& b);

/// Gosper representation read off Abramov's loop on the order-1 equation
/// with p1 = a, p0 = b: c = G, anum = A0(n+1), bden = B0(n).
GosperRep gosper_rep_from_abramov(const Poly& a, const Poly& b);

/// GP representation: c = u, anum = a_{N+1}, bden = b_{N+1}.
GosperRep gp_rep_from_trace(const Poly& a, const Poly& b);

/// The representation identity and gcd(anum(n), bden(n+h)) = 1 for all h >= 0.
RepCheck check_gosper_rep(const GosperRep& rep);

/// check_gosper_rep plus gcd(c(n+1), bden(n)) = 1, gcd(c(n), anum(n)) = 1
/// and monic c, bden.
RepCheck check_gp_rep(const GosperRep& rep);

}  // namespace hypersum
