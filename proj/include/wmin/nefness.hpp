#pragma once

#include "wmin/blowup.hpp"
#include "wmin/cyclic.hpp"
#include "wmin/wps.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wmin {

// ---- irreducibility of general plane curves ----

struct PencilWitness {
    MonomialExponent g1, g2;  // exponents in the well-formed plane variables
    Int k = 0;
};

struct IrreducibilityVerdict {
    enum class Kind { irreducible, reducible, inconclusive };
    Kind kind = Kind::inconclusive;
    PlaneSystem plane{};  // after well-formization
    std::optional<PencilWitness> witness;
    bool shortcut = false;  // decided by one of the two shortcut monomial patterns
    std::string reason;
};

std::string to_string(IrreducibilityVerdict::Kind k);

IrreducibilityVerdict plane_curve_irreducible(Int a, Int b, Int c, Int d);
// Same verdict without the shortcut patterns; used to cross-check them.
IrreducibilityVerdict plane_curve_irreducible_exhaustive(Int a, Int b, Int c, Int d);
// Whether a shortcut pattern applies to the (already well-formed) system.
bool irreducibility_shortcut(const PlaneSystem& p);

// ---- nefness after one weighted blow-up ----

struct CenterGeometry {
    std::array<std::size_t, 2> line{};   // weight indices spanning the line through the center
    std::vector<std::size_t> local;      // local coordinates, aligned with type and weights
    CyclicQuotientType type;             // as found in the singular locus
    std::vector<Int> blowup_weights;     // e_i = u * type residue (mod r) for one unit u
};

// Units u for which u * residues reduces to positive e with sum e < r and
// gcd(e) = 1, ordered by sum then lexicographically.
std::vector<std::vector<Int>> blowup_weight_candidates(const CyclicQuotientType& t);

struct NefnessQuery {
    WeightedHypersurface hypersurface;
    CenterGeometry center;
    std::size_t pivot = 0;  // position in center.local
    bool waive_condition4 = false;  // diagnostic only: log (4) but do not let it fail

    // local coordinates first (b_1..b_n), then the two line coordinates
    std::vector<std::size_t> permutation() const;
};

struct ConditionEntry {
    int id = 0;
    std::string statement;  // instantiated inequality, e.g. "(1) j=1: 7*3 >= 3*1  [21 >= 3]"
    bool holds = false;
};

struct NefnessCertificate {
    enum class Verdict { nef, failed, inconclusive };
    Verdict verdict = Verdict::failed;
    int failed_condition = 0;
    std::string reason;
    std::vector<ConditionEntry> log;
    std::optional<int> numerical_kodaira_lower;
    std::vector<std::size_t> permutation;
    std::size_t pivot = 0;

    bool nef() const { return verdict == Verdict::nef; }
};

std::string to_string(NefnessCertificate::Verdict v);
nlohmann::json certificate_json(const NefnessCertificate& c);

NefnessCertificate check_nefness(const NefnessQuery& q);

// ---- two centers ----

struct TwoPointQuery {
    WeightedHypersurface hypersurface;
    CenterGeometry first;   // Q_1: line (x_{n+1}, x_{n+2})
    CenterGeometry second;  // Q_2: line (x_n, x_{n+2}); shares x_{n+2} with the first line

    // b_1..b_{n-1} shared local coordinates, then x_n, x_{n+1}, x_{n+2}
    std::vector<std::size_t> permutation() const;
};

// Cross-multiplied third condition:
//   alpha d r1 e_n r2 f_n >= b_n b_{n+1} b_{n+2} ((r1 - sum e) r2 f_n + (r2 - sum f) r1 e_n)
struct IntegerInequality {
    BigInt lhs, rhs;
    bool holds() const { return lhs >= rhs; }
};
IntegerInequality two_point_volume_condition(Int alpha, Int d, Int bn, Int bn1, Int bn2, Int r1, Int sum_e, Int en,
                                             Int r2, Int sum_f, Int fn);
// alpha d r e_k >= b_k b_{n+1} b_{n+2} (r - sum e)
IntegerInequality one_point_volume_condition(Int alpha, Int d, Int bk, Int bn1, Int bn2, Int r, Int sum_e, Int ek);

NefnessCertificate check_nefness_two_points(const TwoPointQuery& q);

}  // namespace wmin
