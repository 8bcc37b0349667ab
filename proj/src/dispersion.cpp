#include "hypersum/dispersion.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypersum {

namespace {

Rational rational_pow(const Rational& base, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

Integer ceil_root(const Integer& x, unsigned long k) {
    Integer r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    Integer check;
    mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
    if (check < x) ++r;
    return r;
}

// Integer bound on the modulus of every root (Fujiwara's bound, rounded up).
Integer root_modulus_bound(const std::vector<Integer>& c) {
    const std::size_t m = c.size() - 1;
    const Integer lead = abs(c[m]);
    Integer best = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        Integer num = abs(c[m - i]);
        if (i == m) num = (num + 1) / 2;
        Integer ratio = (num + lead - 1) / lead;
        Integer r = ceil_root(ratio, i);
        if (r > best) best = r;
    }
    return 2 * best + 1;
}

Integer eval(const std::vector<Integer>& c, const Integer& x) {
    Integer acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

constexpr unsigned long kScanLimit = 2'000'000;

}  // namespace

Rational resultant(const Poly& a_in, const Poly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) throw std::domain_error("resultant of a zero polynomial");
    Poly a = a_in;
    Poly b = b_in;
    Rational acc = 1;
    for (;;) {
        const int m = a.degree();
        const int n = b.degree();
        if (m == 0) return acc * rational_pow(a.leading(), n);
        if (n == 0) return acc * rational_pow(b.leading(), m);
        // prod b(alpha) = prod r(alpha) over the roots of a, with r = b mod a.
        Poly r = divrem(b, a).remainder;
        if (r.is_zero()) return 0;
        const int dr = r.degree();
        acc *= rational_pow(a.leading(), n - dr);
        if ((static_cast<long>(m) * dr) % 2 != 0) acc = -acc;
        b = std::move(a);
        a = std::move(r);
    }
}

Poly shifted_resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of a zero polynomial");
    const int points = std::max(a.degree(), 0) * std::max(b.degree(), 0) + 1;
    std::vector<Rational> hs;
    std::vector<Rational> values;
    hs.reserve(static_cast<std::size_t>(points));
    values.reserve(static_cast<std::size_t>(points));
    for (int h = 0; h < points; ++h) {
        hs.emplace_back(h);
        values.push_back(resultant(a, shift(b, static_cast<long>(h))));
    }
    return interpolate(hs, values);
}

std::vector<Integer> integer_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("integer roots of the zero polynomial");
    std::vector<Integer> c = primitive_integer_coeffs(p);

    std::vector<Integer> roots;
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0) ++zeros;
    if (zeros > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    }
    if (c.size() <= 1) return roots;

    const Integer trailing = abs(c.front());
    auto test = [&](const Integer& k) {
        if (eval(c, k) == 0) roots.push_back(k);
        if (eval(c, -k) == 0) roots.push_back(-k);
    };

    const Integer bound = root_modulus_bound(c);
    Integer sqrt_trailing;
    mpz_sqrt(sqrt_trailing.get_mpz_t(), trailing.get_mpz_t());

    if (bound <= kScanLimit && bound <= sqrt_trailing) {
        // Divisors of the trailing coefficient that lie inside the root bound.
        const unsigned long limit = std::min(bound, trailing).get_ui();
        for (unsigned long k = 1; k <= limit; ++k) {
            if (mpz_divisible_ui_p(trailing.get_mpz_t(), k)) test(Integer(k));
        }
    } else if (sqrt_trailing <= kScanLimit) {
        const unsigned long limit = sqrt_trailing.get_ui();
        for (unsigned long k = 1; k <= limit; ++k) {
            if (!mpz_divisible_ui_p(trailing.get_mpz_t(), k)) continue;
            const Integer kk(k);
            test(kk);
            const Integer other = trailing / kk;
            if (other != kk) test(other);
        }
    } else {
        throw std::runtime_error("integer root search space too large");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

DispersionResult dispersion(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("dispersion of a zero polynomial");
    DispersionResult result;
    if (a.degree() == 0 || b.degree() == 0) return result;

    const Poly r = shifted_resultant(a, b);
    if (r.is_zero()) throw std::logic_error("shifted resultant vanished identically");
    for (const Integer& k : integer_roots(r)) {
        if (k < 0) continue;
        if (!k.fits_slong_p()) throw std::overflow_error("dispersion exceeds the supported shift range");
        const long shift_k = k.get_si();
        // Candidates are confirmed by an explicit gcd.
        Poly g = gcd(a, shift(b, shift_k));
        if (g.degree() >= 1) result.witnesses.push_back({shift_k, std::move(g)});
    }
    if (!result.witnesses.empty()) result.value = result.witnesses.back().shift;
    return result;
}

}  // namespace hypersum
