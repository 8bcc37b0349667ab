#pragma once

#include "hypersum/poly.hpp"

namespace hypersum {

/// Reduced rational function num/den: gcd(num, den) = 1, den monic, and the
/// zero function is 0/1. Every scalar factor lives in the numerator.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    /// Polynomial embedded as p/1.
    RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}  // NOLINT(google-explicit-constructor)

    /// Reduces num/den. Throws std::domain_error when den is zero.
    static RatFunc reduce(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    /// Throws std::domain_error when rhs is zero.
    RatFunc& operator/=(const RatFunc& rhs);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(RatFunc a) {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// r(n + k).
RatFunc shift(const RatFunc& r, long k);

}  // namespace hypersum
