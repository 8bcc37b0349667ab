#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Solution space of A x = b: x = particular + sum t_i * nullspace[i].
struct AffineSolution {
    /// Absent when the system is inconsistent. Free variables are zero.
    std::optional<std::vector<Rational>> particular;
    /// One vector per free column, ordered by column. Vector i has a 1 in its
    /// free column, 0 in every other free column, and no entry beyond it.
    std::vector<std::vector<Rational>> nullspace;
};

/// Exact Gauss-Jordan elimination. rhs.size() must equal a.rows().
AffineSolution solve_linear(Matrix a, std::vector<Rational> rhs);

}  // namespace hypersum
