#pragma once

#include <string>
#include <string_view>

#include "hypersum/difference_solver.hpp"
#include "hypersum/ratfunc.hpp"

namespace hypersum {

/// Descending powers with exact coefficients, e.g. "3*n^2 - 1/2*n + 5".
/// The output parses back to the same polynomial.
std::string format(const Poly& p, std::string_view var = "n");

/// "num" for polynomials, otherwise "(num)/(den)" with den monic.
std::string format(const RatFunc& r);

/// Multi-line summary of a polynomial solution set.
std::string format(const SolutionSet& s);

}  // namespace hypersum
