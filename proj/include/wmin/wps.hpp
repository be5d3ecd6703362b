#pragma once

#include "wmin/arith.hpp"

#include <span>
#include <string>
#include <vector>

namespace wmin {

// Ordered weight vector of a weighted projective space. Order is meaningful
// (coordinates are referred to by index), so nothing here sorts.
class Weights {
public:
    Weights() = default;
    explicit Weights(std::vector<Int> entries);
    Weights(std::initializer_list<Int> entries) : Weights(std::vector<Int>(entries)) {}

    const std::vector<Int>& entries() const { return entries_; }
    std::span<const Int> span() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    Int operator[](std::size_t i) const { return entries_[i]; }
    Int sum() const;
    std::vector<Int> sorted() const;
    std::string str() const { return format_tuple(entries_); }

    bool operator==(const Weights&) const = default;

private:
    std::vector<Int> entries_;
};

class WeightedHypersurface {
public:
    WeightedHypersurface(Weights w, Int degree);

    const Weights& weights() const { return weights_; }
    Int degree() const { return degree_; }
    Int amplitude() const { return degree_ - weights_.sum(); }
    int dimension() const { return static_cast<int>(weights_.size()) - 2; }
    std::string str() const;

    bool operator==(const WeightedHypersurface&) const = default;

private:
    Weights weights_;
    Int degree_;
};

using MonomialExponent = std::vector<Int>;

bool is_well_formed_space(std::span<const Int> w);
inline bool is_well_formed_space(const Weights& w) { return is_well_formed_space(w.span()); }
bool is_well_formed_hypersurface(const WeightedHypersurface& h);
bool is_quasismooth_general(const WeightedHypersurface& h);

// true iff some monomial in the given weights has degree m (m >= 0)
bool has_monomial(std::span<const Int> w, Int m);
BigInt count_monomials(std::span<const Int> w, Int m);
// Lexicographically decreasing exponent vectors.
std::vector<MonomialExponent> enumerate_monomials(std::span<const Int> w, Int m);

Rational self_intersection(const WeightedHypersurface& h);

struct PlaneSystem {
    Int a, b, c, d;
    bool operator==(const PlaneSystem&) const = default;
};
PlaneSystem well_formize_plane(Int a, Int b, Int c, Int d);

}  // namespace wmin
