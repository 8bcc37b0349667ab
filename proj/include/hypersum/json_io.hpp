#pragma once

#include <json.hpp>

#include "hypersum/denominators.hpp"
#include "hypersum/difference_solver.hpp"
#include "hypersum/dispersion.hpp"
#include "hypersum/gcd_convergence.hpp"
#include "hypersum/pipelines.hpp"

namespace hypersum {

// Polynomials serialize as {"pretty": "...", "coeffs": ["num/den", ...]}
// with coefficients in ascending degree.

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFunc& r);
nlohmann::json to_json(const SolutionSet& s);
nlohmann::json to_json(const DispersionResult& d);
nlohmann::json to_json(const GcdLimit& g);
nlohmann::json to_json(const AbramovTrace& t);
nlohmann::json to_json(const GPTrace& t);
nlohmann::json to_json(const GosperRep& rep);
nlohmann::json to_json(const RepCheck& check);

/// Inverse of to_json(const Poly&); reads "coeffs".
Poly poly_from_json(const nlohmann::json& j);

}  // namespace hypersum
