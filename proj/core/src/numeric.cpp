#include "tracegen/numeric.hpp"

#include <cctype>

#include "tracegen/errors.hpp"

namespace tracegen {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty())
        throw input_error("empty number");
    bool negative = false;
    size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw input_error("malformed number '" + std::string(text) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw input_error("malformed number '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? -value : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw input_error("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    size_t dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty())
            throw input_error("malformed number '" + std::string(text) + "'");
        BigInt num = parse_integer(whole.empty() ? std::string_view("0") : whole);
        bool negative = !whole.empty() && whole[0] == '-';
        BigInt den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw input_error("malformed number '" + std::string(text) + "'");
            num = num * 10 + (negative ? -(c - '0') : (c - '0'));
            den *= 10;
        }
        return Rational(num, den);
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
    return q.str();
}

} // namespace tracegen
