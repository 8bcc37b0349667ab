#include "hypersum/rational.hpp"

#include <stdexcept>
#include <string>

namespace hypersum {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return to_fraction_string(q);
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

}  // namespace hypersum
