#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace oracle {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Rational determinant(Mat m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Rank of a matrix, and whether augmenting with column b raises it.
std::pair<int, bool> rank_and_consistent(Mat m, std::vector<Rational> b) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            b[i] -= f * b[r];
        }
        ++r;
    }
    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i) consistent = consistent && b[i] == 0;
    return {static_cast<int>(r), consistent};
}

Rational power(const Rational& x, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

// Rows: sample points x; columns: basis monomials n^0..n^D applied through the
// recurrence by pointwise evaluation.
std::pair<Mat, std::vector<Rational>> point_system(const hypersum::LinearRecurrence& rec, int max_degree) {
    int top = rec.rhs.is_zero() ? 0 : rec.rhs.degree();
    for (const auto& q : rec.coeffs) top = std::max(top, q.is_zero() ? 0 : q.degree());
    const int samples = top + max_degree + 8;
    Mat m;
    std::vector<Rational> b;
    for (int s = 0; s < samples; ++s) {
        const Rational x = s - samples / 2;
        std::vector<Rational> row(static_cast<std::size_t>(max_degree) + 1);
        for (int j = 0; j <= max_degree; ++j) {
            Rational acc = 0;
            for (std::size_t mm = 0; mm < rec.coeffs.size(); ++mm)
                acc += rec.coeffs[mm](x) * power(x + static_cast<long>(mm), j);
            row[static_cast<std::size_t>(j)] = acc;
        }
        m.push_back(std::move(row));
        b.push_back(rec.rhs(x));
    }
    return {std::move(m), std::move(b)};
}

}  // namespace

Rational sylvester_resultant(const Poly& a, const Poly& b) {
    const int m = a.degree();
    const int n = b.degree();
    if (m < 0 || n < 0) throw std::domain_error("sylvester_resultant of zero polynomial");
    const auto size = static_cast<std::size_t>(m + n);
    if (size == 0) return 1;
    Mat s(size, std::vector<Rational>(size));
    for (int row = 0; row < n; ++row) {
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] = a.coeff(m - i);
    }
    for (int row = 0; row < m; ++row) {
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] = b.coeff(n - i);
    }
    return determinant(std::move(s));
}

long brute_dispersion(const Poly& a, const Poly& b, long max_k) {
    long best = -1;
    for (long k = 0; k <= max_k; ++k) {
        if (hypersum::gcd(a, hypersum::shift(b, k)).degree() >= 1) best = k;
    }
    return best;
}

bool has_poly_solution_up_to(const hypersum::LinearRecurrence& rec, int max_degree) {
    if (max_degree < 0) return rec.rhs.is_zero();
    auto [m, b] = point_system(rec, max_degree);
    return rank_and_consistent(std::move(m), std::move(b)).second;
}

int homogeneous_dimension_up_to(const hypersum::LinearRecurrence& rec, int max_degree) {
    if (max_degree < 0) return 0;
    auto [m, b] = point_system(rec, max_degree);
    std::fill(b.begin(), b.end(), Rational(0));
    return max_degree + 1 - rank_and_consistent(std::move(m), std::move(b)).first;
}

bool gosper_identity_at_points(const hypersum::RatFunc& r, const hypersum::RatFunc& y, int points) {
    int checked = 0;
    for (long x = -50; checked < points && x < 1000; ++x) {
        const Rational xx = x;
        const Rational rd = r.den()(xx);
        const Rational yd0 = y.den()(xx);
        const Rational yd1 = y.den()(xx + 1);
        if (rd == 0 || yd0 == 0 || yd1 == 0) continue;
        const Rational lhs = r.num()(xx) / rd * (y.num()(xx + 1) / yd1) - y.num()(xx) / yd0;
        if (lhs != 1) return false;
        ++checked;
    }
    return checked == points;
}

Poly from_roots(const std::vector<Rational>& roots, const Rational& lead) {
    Poly p = Poly::constant(lead);
    for (const auto& r : roots) p *= Poly{-r, 1};
    return p;
}

Rational Rng::nonzero_rational(long max_num, long max_den) {
    long num = 0;
    while (num == 0) num = integer(-max_num, max_num);
    return hypersum::make_rational(num, integer(1, max_den));
}

Poly Rng::dense_poly(int deg, long max_num, long max_den) {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = hypersum::make_rational(integer(-max_num, max_num), integer(1, max_den));
    c[static_cast<std::size_t>(deg)] = nonzero_rational(max_num, max_den);
    return Poly(std::move(c));
}

Poly Rng::rooted_poly(int deg, long lo, long hi) {
    std::vector<Rational> roots;
    for (int i = 0; i < deg; ++i) roots.emplace_back(integer(lo, hi));
    return from_roots(roots, nonzero_rational(5, 3));
}

Poly Rng::random_factor() {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
    if (u < 0.15) return Poly{hypersum::make_rational(2 * integer(-6, 5) + 1, 2) * -1, 1};
    if (u < 0.27) {
        const Poly lin{-integer(-4, 4), 1};
        return lin * lin + Poly::constant(1);
    }
    return Poly{-integer(-6, 6), 1};
}

PlantedPair planted_pair(Rng& rng) {
    PlantedPair out;
    out.order = static_cast<int>(rng.integer(1, 3));
    const int deg0 = static_cast<int>(rng.integer(1, 5));
    const int degd = static_cast<int>(rng.integer(1, 5));

    std::vector<Poly> factors0;
    out.p0 = Poly::constant(rng.nonzero_rational(4, 3));
    while (out.p0.degree() < deg0) {
        Poly f = rng.random_factor();
        if (out.p0.degree() + f.degree() > deg0) continue;
        out.p0 *= f;
        factors0.push_back(std::move(f));
    }
    out.p0_factors = factors0;

    out.pd = Poly::constant(rng.nonzero_rational(4, 3));
    const int planted = static_cast<int>(rng.integer(1, 3));
    for (int i = 0; i < planted && out.pd.degree() < degd; ++i) {
        const Poly& f = factors0[static_cast<std::size_t>(rng.integer(0, static_cast<long>(factors0.size()) - 1))];
        if (out.pd.degree() + f.degree() > degd) continue;
        // pd(n - d) then contains f(n + k).
        const long k = rng.integer(0, 8);
        Poly planted_factor = hypersum::shift(f, k + out.order);
        out.pd *= planted_factor;
        out.pd_factors.push_back(std::move(planted_factor));
    }
    while (out.pd.degree() < degd) {
        Poly f = rng.random_factor();
        if (out.pd.degree() + f.degree() > degd) continue;
        out.pd *= f;
        out.pd_factors.push_back(std::move(f));
    }
    return out;
}

namespace {

using FactorCount = std::vector<std::pair<Poly, int>>;

void add_factor(FactorCount& counts, const Poly& f) {
    for (auto& [g, c] : counts) {
        if (g == f) {
            ++c;
            return;
        }
    }
    counts.emplace_back(f, 1);
}

int count_of(const FactorCount& counts, const Poly& f) {
    for (const auto& [g, c] : counts) {
        if (g == f) return c;
    }
    return 0;
}

}  // namespace

Poly gcd_term_by_factors(const PlantedPair& pp, int k) {
    FactorCount rising;
    FactorCount falling;
    for (int j = 0; j < k; ++j) {
        for (const auto& f : pp.p0_factors) add_factor(rising, hypersum::shift(f, static_cast<long>(j)));
        for (const auto& f : pp.pd_factors) add_factor(falling, hypersum::shift(f, -static_cast<long>(pp.order) - j));
    }
    Poly g = Poly::constant(1);
    for (const auto& [f, c] : rising) {
        const int e = std::min(c, count_of(falling, f));
        for (int i = 0; i < e; ++i) g *= f;
    }
    return g;
}

long dispersion_by_factors(const PlantedPair& pp, long max_k) {
    long best = -1;
    for (const auto& fd : pp.pd_factors) {
        const Poly lhs = hypersum::shift(fd, -static_cast<long>(pp.order));
        for (const auto& f0 : pp.p0_factors) {
            for (long k = 0; k <= max_k; ++k) {
                if (hypersum::shift(f0, k) == lhs) best = std::max(best, k);
            }
        }
    }
    return best;
}

std::pair<Poly, Poly> planted_coprime_ratio(Rng& rng) {
    for (;;) {
        PlantedPair pp = planted_pair(rng);
        // Order-1 framing: a plays pd, b plays p0, so a(n - 1) meets b(n + k).
        Poly a = hypersum::shift(pp.pd, static_cast<long>(pp.order) - 1);
        Poly b = pp.p0;
        const Poly g = hypersum::gcd(a, b);
        a = hypersum::exact_quotient(a, g);
        b = hypersum::exact_quotient(b, g);
        if (a.degree() + b.degree() >= 1) return {a, b};
    }
}

}  // namespace oracle
