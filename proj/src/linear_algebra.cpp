#include "hypersum/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace hypersum {

AffineSolution solve_linear(Matrix a, std::vector<Rational> rhs) {
    if (rhs.size() != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
            std::swap(rhs[p], rhs[r]);
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
            rhs[i] -= f * rhs[r];
        }
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    AffineSolution out;
    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i) {
        if (rhs[i] != 0) {
            consistent = false;
            break;
        }
    }
    if (consistent) {
        std::vector<Rational> x(cols);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rhs[i];
        out.particular = std::move(x);
    }
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, f);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace hypersum
