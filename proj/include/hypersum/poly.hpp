#pragma once

#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum {

/// Dense univariate polynomial over the rationals in the variable n.
///
/// Index i of the coefficient vector holds the coefficient of n^i. The
/// representation is canonical: there is never a zero at the highest index,
/// and the zero polynomial is the empty vector.
class Poly {
public:
    /// Degree of the zero polynomial. Compares below every real degree.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int power);
    /// The polynomial n.
    static Poly variable();
    /// c * prod (n - r) over the given roots.
    static Poly from_roots(std::span<const Rational> roots, const Rational& c = 1);

    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    /// Leading coefficient. Zero for the zero polynomial.
    Rational leading() const;
    /// Coefficient of n^i; zero when i is outside the stored range.
    Rational coeff(int i) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.
/// Throws std::domain_error when b is zero.
DivRem divrem(const Poly& a, const Poly& b);

/// Quotient of a division known to be exact. Throws std::logic_error if a
/// remainder is left over.
Poly exact_quotient(const Poly& a, const Poly& b);

/// True iff d divides a (d nonzero).
bool divides(const Poly& d, const Poly& a);

/// a divided by its leading coefficient; zero stays zero.
Poly monic(const Poly& a);

/// Monic greatest common divisor; gcd(x, 0) = monic(x).
/// Throws std::domain_error when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// a(n + k).
Poly shift(const Poly& a, const Rational& k);
inline Poly shift(const Poly& a, long k) { return shift(a, Rational(k)); }

/// Falling product f(n) f(n-1) ... f(n-k+1); the constant 1 when k = 0.
Poly falling_product(const Poly& f, int k);

Poly pow(const Poly& a, unsigned e);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
/// Newton divided differences; the xs must be distinct.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Primitive integer polynomial with the same roots: denominators cleared,
/// integer content removed, positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

}  // namespace hypersum
