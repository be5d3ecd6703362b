#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wmin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Int = std::int64_t;

// Thrown for precondition violations and hypothesis failures. `code` is a short
// machine-readable tag ("quasismoothness violated", "alpha <= 0", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail = {})
        : std::runtime_error(detail.empty() ? code : code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Int gcd_of(std::span<const Int> xs) {
    Int g = 0;
    for (Int x : xs) g = std::gcd(g, x);
    return g;
}

inline Int mod_pos(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline BigInt product(std::span<const Int> xs) {
    BigInt p = 1;
    for (Int x : xs) p *= x;
    return p;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

// "p/q" in lowest terms, integers without a denominator.
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view s);

std::string format_tuple(std::span<const Int> xs);

// ceil(a/b) for b > 0
BigInt ceil_div(const BigInt& a, const BigInt& b);

}  // namespace wmin
