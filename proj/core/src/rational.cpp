#include "arbblock/rational.hpp"

#include "arbblock/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace arbblock {

namespace {

bool parse_integer(std::string_view text, long long& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) return false;
    long long value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        value = value * 10 + (text[i] - '0');
    }
    out = neg ? -value : value;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto fail = [&] { throw input_error("malformed rational literal: '" + std::string(text) + "'"); };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        long long num = 0, den = 0;
        if (!parse_integer(text.substr(0, slash), num)) fail();
        if (!parse_integer(text.substr(slash + 1), den)) fail();
        if (den == 0) fail();
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) fail();
        long long num = 0;
        bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") {
            num = 0;
        } else if (!parse_integer(head, num)) {
            fail();
        }
        long long scale = 1;
        long long frac_value = 0;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
            frac_value = frac_value * 10 + (c - '0');
            scale *= 10;
        }
        Rational magnitude(std::llabs(num), 1);
        magnitude += Rational(frac_value, scale);
        return neg || num < 0 ? -magnitude : magnitude;
    }
    long long value = 0;
    if (!parse_integer(text, value)) fail();
    return Rational(value, 1);
}

std::string format_rational(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

} // namespace arbblock
