#include "hypersum/ratfunc.hpp"

#include <stdexcept>

namespace hypersum {

RatFunc RatFunc::reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    const Poly g = gcd(num, den);
    Poly n = exact_quotient(num, g);
    Poly d = exact_quotient(den, g);
    const Rational lead = d.leading();
    n *= 1 / lead;
    d *= 1 / lead;
    return RatFunc(std::move(n), std::move(d));
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    return *this = reduce(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
    return *this = reduce(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    return *this = reduce(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
    return *this = reduce(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc shift(const RatFunc& r, long k) { return RatFunc::reduce(shift(r.num(), k), shift(r.den(), k)); }

}  // namespace hypersum
