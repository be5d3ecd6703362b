#include "wmin/cyclic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace wmin {

std::string to_string(SingClass c) {
    switch (c) {
        case SingClass::noncanonical: return "noncanonical";
        case SingClass::canonical_strict: return "canonical";
        case SingClass::terminal: return "terminal";
    }
    return "?";
}

CyclicQuotientType::CyclicQuotientType(Int r, std::vector<Int> residues) : r_(r), residues_(std::move(residues)) {
    if (r_ < 1) throw Error("invalid type", "index must be positive");
    for (Int& a : residues_) a = mod_pos(a, r_);
}

bool CyclicQuotientType::is_transverse() const {
    if (r_ == 1) return false;
    return std::any_of(residues_.begin(), residues_.end(), [](Int a) { return a == 0; });
}

std::string CyclicQuotientType::str() const { return "1/" + std::to_string(r_) + format_tuple(residues_); }

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Int read_int(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw Error("parse error", "expected integer in '" + std::string(s) + "'");
    return std::stoll(std::string(s.substr(start, i - start)));
}

void expect(std::string_view s, std::size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw Error("parse error", std::string("expected '") + c + "' in '" + std::string(s) + "'");
    ++i;
}

bool try_consume(std::string_view s, std::size_t& i, std::string_view tok) {
    skip_ws(s, i);
    if (s.substr(i, tok.size()) == tok) {
        i += tok.size();
        return true;
    }
    return false;
}

bool consume_times(std::string_view s, std::size_t& i) {
    return try_consume(s, i, "×") || try_consume(s, i, "x") || try_consume(s, i, "*");
}

}  // namespace

CyclicQuotientType CyclicQuotientType::parse(std::string_view s) {
    std::size_t i = 0;
    Int one = read_int(s, i);
    if (one != 1) throw Error("parse error", "type must start with 1/");
    expect(s, i, '/');
    Int r = read_int(s, i);
    expect(s, i, '(');
    std::vector<Int> res;
    res.push_back(read_int(s, i));
    while (try_consume(s, i, ",")) res.push_back(read_int(s, i));
    expect(s, i, ')');
    skip_ws(s, i);
    if (i != s.size()) throw Error("parse error", "trailing text in '" + std::string(s) + "'");
    return CyclicQuotientType(r, std::move(res));
}

CyclicQuotientType normalize_type(const CyclicQuotientType& t) {
    const Int r = t.index();
    if (r == 1) return CyclicQuotientType(1, std::vector<Int>(t.dim(), 0));
    std::vector<Int> best;
    std::vector<Int> cur(t.dim());
    for (Int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        for (std::size_t i = 0; i < t.dim(); ++i) cur[i] = (u * t.residues()[i]) % r;
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    }
    return CyclicQuotientType(r, best);
}

bool same_type(const CyclicQuotientType& a, const CyclicQuotientType& b) {
    return a.index() == b.index() && a.dim() == b.dim() && normalize_type(a) == normalize_type(b);
}

Int min_age_numerator(const CyclicQuotientType& t) {
    const Int r = t.index();
    Int best = std::numeric_limits<Int>::max();
    for (Int k = 1; k < r; ++k) {
        Int s = 0;
        for (Int a : t.residues()) s += (k * a) % r;
        best = std::min(best, s);
    }
    return best;
}

namespace {

SingClass classify_by_age(const CyclicQuotientType& t) {
    if (t.is_smooth()) return SingClass::terminal;
    Int m = min_age_numerator(t);
    if (m > t.index()) return SingClass::terminal;
    if (m == t.index()) return SingClass::canonical_strict;
    return SingClass::noncanonical;
}

}  // namespace

SingClass reid_tai(const CyclicQuotientType& t) {
    if (t.is_transverse()) throw Error("transverse type", "Reid-Tai on " + t.str() + " needs isolated residues");
    return classify_by_age(t);
}

SingClass classify_transverse(const CyclicQuotientType& t) { return classify_by_age(t); }

Int nabla(const CyclicQuotientType& t) {
    if (t.index() <= 1) throw Error("invalid type", "nabla needs r > 1");
    if (t.is_transverse()) throw Error("transverse type", "nabla on " + t.str());
    return min_age_numerator(t) - t.index();
}

bool is_isolated(const CyclicQuotientType& t) {
    for (Int a : t.residues())
        if (std::gcd(a, t.index()) != 1) return false;
    return true;
}

BasketPair basket_pair(const CyclicQuotientType& t) {
    const Int r = t.index();
    if (t.dim() != 3) throw Error("invalid type", "basket pairs are defined for 3-dimensional types");
    if (r == 1) throw Error("invalid type", "smooth point has no basket pair");
    if (reid_tai(t) != SingClass::terminal) throw Error("not terminal", t.str());
    for (Int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::vector<Int> v;
        for (Int a : t.residues()) v.push_back((u * a) % r);
        auto one = std::find(v.begin(), v.end(), 1);
        if (one == v.end()) continue;
        v.erase(one);
        auto minus = std::find(v.begin(), v.end(), r - 1);
        if (minus == v.end()) continue;
        v.erase(minus);
        Int b = v.front();
        return {std::min(b, r - b), r};
    }
    throw Error("internal", "terminal type " + t.str() + " is not of the form 1/r(1,-1,b)");
}

void Basket::add(BasketPair p, Int mult) {
    if (mult <= 0) return;
    items_[p] += mult;
}

void Basket::merge(const Basket& other, Int times) {
    for (const auto& [p, m] : other.items_) add(p, m * times);
}

Int Basket::total() const {
    Int s = 0;
    for (const auto& [p, m] : items_) s += m;
    return s;
}

std::string Basket::str() const {
    std::string out = "[";
    bool first = true;
    for (const auto& [p, m] : items_) {
        if (!first) out += ",";
        first = false;
        out += "(" + std::to_string(p.b) + "," + std::to_string(p.r) + ")";
        if (m != 1) out += "×" + std::to_string(m);
    }
    return out + "]";
}

Basket Basket::parse(std::string_view s) {
    Basket out;
    std::size_t i = 0;
    bool bracketed = try_consume(s, i, "[");
    skip_ws(s, i);
    auto at_end = [&] {
        skip_ws(s, i);
        return i >= s.size() || (bracketed && s[i] == ']');
    };
    while (!at_end()) {
        Int mult = 1;
        skip_ws(s, i);
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            mult = read_int(s, i);
            if (!consume_times(s, i)) throw Error("parse error", "expected × in basket '" + std::string(s) + "'");
        }
        expect(s, i, '(');
        Int b = read_int(s, i);
        expect(s, i, ',');
        Int r = read_int(s, i);
        expect(s, i, ')');
        if (consume_times(s, i)) mult *= read_int(s, i);
        out.add({b, r}, mult);
        if (!try_consume(s, i, ",")) break;
    }
    if (bracketed) expect(s, i, ']');
    skip_ws(s, i);
    if (i != s.size()) throw Error("parse error", "trailing text in basket '" + std::string(s) + "'");
    return out;
}

}  // namespace wmin
