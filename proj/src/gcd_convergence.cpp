#include "hypersum/gcd_convergence.hpp"

#include <stdexcept>

#include "hypersum/dispersion.hpp"

namespace hypersum {

namespace {

void require_nonzero(const Poly& p0, const Poly& pd) {
    if (p0.is_zero() || pd.is_zero()) throw std::domain_error("recurrence end coefficients must be nonzero");
}

void require_order(int order, int minimum) {
    if (order < minimum) throw std::invalid_argument("recurrence order out of range");
}

}  // namespace

long shift_dispersion(const Poly& p0, const Poly& pd, int order) {
    require_nonzero(p0, pd);
    require_order(order, 0);
    return dispersion(shift(pd, -static_cast<long>(order)), p0).value;
}

Poly gcd_term(const Poly& p0, const Poly& pd, int order, int k) {
    require_nonzero(p0, pd);
    require_order(order, 0);
    if (k < 1) throw std::invalid_argument("gcd_term requires k >= 1");
    Poly rising = Poly::constant(1);
    Poly falling = Poly::constant(1);
    for (int j = 0; j < k; ++j) {
        rising *= shift(p0, static_cast<long>(j));
        falling *= shift(pd, -static_cast<long>(order) - j);
    }
    return gcd(rising, falling);
}

GcdLimit gcd_limit(const Poly& p0, const Poly& pd, int order) {
    GcdLimit out;
    out.k0 = shift_dispersion(p0, pd, order);
    if (out.k0 < 0) return out;

    Poly rising = Poly::constant(1);
    Poly falling = Poly::constant(1);
    for (long j = 0; j <= out.k0; ++j) {
        rising *= shift(p0, j);
        falling *= shift(pd, -static_cast<long>(order) - j);
        out.trace.push_back(gcd(rising, falling));
    }
    out.limit = out.trace.back();
    return out;
}

Poly universal_denominator(const Poly& p0, const Poly& pd, int order) {
    require_order(order, 1);
    const long big_n = shift_dispersion(p0, pd, order);
    if (big_n < 0) return Poly::constant(1);
    const int len = static_cast<int>(big_n) + 1;
    return gcd(falling_product(shift(p0, big_n), len), falling_product(shift(pd, -static_cast<long>(order)), len));
}

}  // namespace hypersum
