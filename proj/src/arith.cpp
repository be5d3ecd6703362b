#include "wmin/arith.hpp"

#include <cctype>

namespace wmin {

std::string format_rational(const Rational& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_bigint(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = s.size();
    while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
    s = s.substr(i, j - i);
    if (s.empty()) throw Error("parse error", "empty integer");
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw Error("parse error", std::string(s));
    for (std::size_t t = k; t < s.size(); ++t)
        if (!std::isdigit(static_cast<unsigned char>(s[t]))) throw Error("parse error", std::string(s));
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(s));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw Error("parse error", "zero denominator");
    return Rational(parse_bigint(s.substr(0, slash)), den);
}

std::string format_tuple(std::span<const Int> xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a && (a > 0) == (b > 0)) q += 1;
    return q;
}

}  // namespace wmin
