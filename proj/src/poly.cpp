#include "hypersum/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypersum {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
    if (power < 0) throw std::invalid_argument("negative monomial power");
    std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

Poly Poly::variable() { return monomial(1, 1); }

Poly Poly::from_roots(std::span<const Rational> roots, const Rational& c) {
    Poly result = constant(c);
    for (const auto& r : roots) result *= Poly{-r, 1};
    return result;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::degree() const {
    if (coeffs_.empty()) return kZeroDegree;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
}

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const Rational inv_lead = 1 / b.leading();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("exact polynomial division left a remainder");
    return q;
}

bool divides(const Poly& d, const Poly& a) { return divrem(a, d).remainder.is_zero(); }

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a * (1 / a.leading());
}

namespace {

using ZPoly = std::vector<Integer>;

void make_primitive(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return;
    Integer content = 0;
    for (const auto& c : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content == 1) break;
    }
    if (p.back() < 0) content = -content;
    if (content == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Remainder of a by b up to a nonzero integer factor, made primitive.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t offset = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[offset + j] -= la * b[j];
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    make_primitive(a);
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(1);
    // Primitive remainder sequence over the integers; coefficients stay small
    // without the rational normalization of a monic sequence.
    ZPoly x = primitive_integer_coeffs(a);
    ZPoly y = primitive_integer_coeffs(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_remainder(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = Rational(x[i], x.back());
    for (auto& c : out) c.canonicalize();
    return Poly(std::move(out));
}

Poly shift(const Poly& a, const Rational& k) {
    if (k == 0 || a.is_constant()) return a;
    const Poly step{k, 1};
    Poly acc;
    auto cs = a.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= step;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly falling_product(const Poly& f, int k) {
    if (k < 0) throw std::invalid_argument("falling product of negative length");
    Poly acc = Poly::constant(1);
    for (int j = 0; j < k; ++j) acc *= shift(f, -static_cast<long>(j));
    return acc;
}

Poly pow(const Poly& a, unsigned e) {
    Poly result = Poly::constant(1);
    Poly base = a;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t m = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    Poly result;
    for (std::size_t i = m; i-- > 0;) {
        result *= Poly{-xs[i], 1};
        result += Poly::constant(dd[i]);
    }
    return result;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content == 0) return out;
    if (out.back() < 0) content = -content;
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

}  // namespace hypersum
