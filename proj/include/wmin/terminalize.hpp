#pragma once

#include "wmin/cyclic.hpp"

#include <array>
#include <vector>

namespace wmin {

using LatticePoint = std::array<Int, 3>;  // numerators over the type's index r

// Simplicial cone in N = Z^3 + Z (a_1,a_2,a_3)/r, generators stored scaled by r.
struct ToricCone {
    Int r = 1;
    std::vector<Int> lattice_residues;  // the a_i defining N
    std::array<LatticePoint, 3> generators{};
    Int index = 1;  // lattice multiplicity

    static ToricCone positive_octant(const CyclicQuotientType& t);
};

// Lattice multiplicity of the cone spanned by scaled generators.
Int cone_index(const ToricCone& c);
CyclicQuotientType cone_quotient_type(const ToricCone& c);

std::vector<LatticePoint> age_one_points(const CyclicQuotientType& t);

struct TerminalLeaf {
    ToricCone cone;
    CyclicQuotientType type;
};

struct TerminalizationRecord {
    Int r = 1;
    std::vector<LatticePoint> age_one_points;
    Int rho_contribution = 0;
    Basket basket;
    std::vector<TerminalLeaf> leaves;
};

// Fan obtained from the positive octant by successive star subdivisions at
// points of S. Exposed so that tests can drive arbitrary insertion orders.
class StarFan {
public:
    explicit StarFan(const CyclicQuotientType& t);

    const std::vector<LatticePoint>& points() const { return points_; }  // e1,e2,e3 then S
    std::size_t s_count() const { return points_.size() - 3; }
    // Star-subdivide every cone containing S point number `s` (0-based in S).
    void insert(std::size_t s);
    bool inserted(std::size_t s) const { return used_[s]; }
    // Cones as sorted triples of point indices, sorted.
    std::vector<std::array<std::size_t, 3>> cones() const;
    ToricCone cone(const std::array<std::size_t, 3>& c) const;

private:
    Int r_;
    std::vector<Int> residues_;
    std::vector<LatticePoint> points_;
    std::vector<char> used_;
    std::vector<std::array<std::size_t, 3>> cones_;
};

TerminalizationRecord terminalize_type(const CyclicQuotientType& t);
// Collects leaves/basket of a fully subdivided fan.
TerminalizationRecord record_from_fan(const CyclicQuotientType& t, const StarFan& fan);

}  // namespace wmin
