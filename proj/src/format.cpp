#include "hypersum/format.hpp"

#include <sstream>

namespace hypersum {

std::string format(const Poly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string power;
        if (i >= 1) {
            power = std::string(var);
            if (i > 1) power += "^" + std::to_string(i);
        }
        if (i == 0) {
            out += to_display_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += to_display_string(mag) + "*" + power;
        }
    }
    return out;
}

std::string format(const RatFunc& r) {
    if (r.is_polynomial()) return format(r.num());
    return "(" + format(r.num()) + ")/(" + format(r.den()) + ")";
}

std::string format(const SolutionSet& s) {
    std::ostringstream os;
    if (!s.particular) {
        os << "no polynomial solution (degree bound " << s.degree_bound << ")";
        return os.str();
    }
    os << "particular: " << format(*s.particular) << "\n";
    os << "homogeneous basis:";
    if (s.homogeneous_basis.empty()) os << " (none)";
    for (const auto& b : s.homogeneous_basis) os << "\n  " << format(b);
    return os.str();
}

}  // namespace hypersum
