#include "lghodge/rational.hpp"

#include "lghodge/errors.hpp"

#include <cctype>

namespace lgh {

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    for (std::size_t i = begin; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty rational literal");
    std::string s = text.substr(begin, end - begin + 1);

    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::size_t num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, num_digits, num.size()))
        throw ParseError("malformed rational literal: '" + text + "'");

    if (slash == std::string::npos) return Rational(Int(num));

    std::string den = s.substr(slash + 1);
    if (!all_digits(den, 0, den.size()))
        throw ParseError("malformed rational literal: '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    return Rational(Int(num)) / Rational(d);
}

std::string format_rational(const Rational& value) {
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace lgh
