#pragma once

#include "wmin/cyclic.hpp"
#include "wmin/wps.hpp"

#include <array>
#include <optional>
#include <vector>

namespace wmin {

struct StratumLocation {
    enum class Kind { vertex, edge };
    Kind kind = Kind::vertex;
    std::size_t i = 0;
    std::size_t j = 0;  // unused for vertices

    bool operator==(const StratumLocation&) const = default;
};

enum class StratumKind { isolated_points, curve };

struct SingularStratum {
    StratumLocation location;
    StratumKind kind = StratumKind::isolated_points;
    Int count = 1;  // number of points; 1 for curves
    CyclicQuotientType type;
    // Coordinate line through the stratum. For a vertex P_i it is P_iP_j with
    // j the eliminated coordinate (a monomial x_i^m x_j exists).
    std::array<std::size_t, 2> line{};
    // Weight indices of the local coordinates, aligned with type.residues().
    std::vector<std::size_t> local;

    std::string str() const;
};

struct SingularLocus {
    std::vector<SingularStratum> strata;
    bool has_non_isolated() const;
};

// All j != i with a_i | d - a_j and d > a_j, ascending.
std::vector<std::size_t> vertex_eliminations(const WeightedHypersurface& h, std::size_t i);
std::optional<SingularStratum> vertex_stratum(const WeightedHypersurface& h, std::size_t i, std::size_t j);
std::optional<CyclicQuotientType> vertex_type(const WeightedHypersurface& h, std::size_t i);
std::optional<SingularStratum> edge_strata(const WeightedHypersurface& h, std::size_t i, std::size_t j);
// gcd of every weight triple is 1; without it X is singular along a curve.
bool triple_gcd_condition(const WeightedHypersurface& h);
SingularLocus singular_locus(const WeightedHypersurface& h);

std::vector<CyclicQuotientType> lift_singular_locus(const WeightedHypersurface& h3, Int alpha);

}  // namespace wmin
