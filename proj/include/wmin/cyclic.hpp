#pragma once

#include "wmin/arith.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wmin {

enum class SingClass { noncanonical, canonical_strict, terminal };
std::string to_string(SingClass c);

// 1/r(a_1,...,a_n). Residues are reduced into [0, r) on construction; r = 1
// is the smooth marker.
class CyclicQuotientType {
public:
    CyclicQuotientType() = default;
    CyclicQuotientType(Int r, std::vector<Int> residues);

    Int index() const { return r_; }
    const std::vector<Int>& residues() const { return residues_; }
    std::size_t dim() const { return residues_.size(); }
    bool is_smooth() const { return r_ == 1; }
    // A zero residue marks the transverse type of a singular curve.
    bool is_transverse() const;
    std::string str() const;
    static CyclicQuotientType parse(std::string_view s);

    bool operator==(const CyclicQuotientType&) const = default;

private:
    Int r_ = 1;
    std::vector<Int> residues_;
};

CyclicQuotientType normalize_type(const CyclicQuotientType& t);
bool same_type(const CyclicQuotientType& a, const CyclicQuotientType& b);

// min over k = 1..r-1 of sum_i (k a_i mod r); the age minimum times r.
Int min_age_numerator(const CyclicQuotientType& t);

SingClass reid_tai(const CyclicQuotientType& t);
// Same age test but accepts zero residues (transverse types of curves).
SingClass classify_transverse(const CyclicQuotientType& t);
Int nabla(const CyclicQuotientType& t);
bool is_isolated(const CyclicQuotientType& t);

struct BasketPair {
    Int b = 1;
    Int r = 2;
    auto operator<=>(const BasketPair& o) const {
        if (auto c = r <=> o.r; c != 0) return c;
        return b <=> o.b;
    }
    bool operator==(const BasketPair&) const = default;
};

BasketPair basket_pair(const CyclicQuotientType& t);

class Basket {
public:
    void add(BasketPair p, Int mult = 1);
    void merge(const Basket& other, Int times = 1);
    const std::map<BasketPair, Int>& items() const { return items_; }
    Int total() const;
    bool empty() const { return items_.empty(); }
    // "[(1,2)×7,(1,3)]"; the parser also accepts the "7×(1,2), (1,3)" style
    std::string str() const;
    static Basket parse(std::string_view s);

    bool operator==(const Basket&) const = default;

private:
    std::map<BasketPair, Int> items_;
};

}  // namespace wmin
