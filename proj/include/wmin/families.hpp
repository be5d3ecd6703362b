#pragma once

#include "wmin/locus.hpp"
#include "wmin/nefness.hpp"
#include "wmin/pipeline.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wmin {

// ---- Kodaira dimension 2 families ----

enum class FamilyKind { six_r, three_r_plus_3k, four_r_plus_2k };
std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);  // "6r", "3r+3k", "4r+2k"

struct ResidueCondition {
    Int modulus = 1;
    std::vector<Int> allowed;
};

struct FamilySpec {
    std::string table;  // table label in the data file
    int no = 0;
    FamilyKind kind = FamilyKind::six_r;
    Int a = 1, b = 1;
    Int c = 0;  // 6r only
    Int k = 0;  // 3r+3k and 4r+2k only
    Int r_greater_than = 0;
    std::vector<ResidueCondition> conditions;   // the printed conditions column
    std::vector<ResidueCondition> corrections;  // extra restrictions the printed column misses
    std::string correction_note;
    std::optional<Int> listed_alpha_offset;  // as printed, alpha = r - offset

    std::string id() const { return table + "." + std::to_string(no); }
    bool admits(Int r, bool with_corrections = false) const;
    // alpha = r - alpha_offset(), from the degree and weights
    Int alpha_offset() const;
    std::vector<Int> blowup_weights() const;
    Int degree(Int r) const;
    std::vector<Int> weights(Int r) const;
};

FamilySpec family_from_json(const nlohmann::json& j);
std::vector<FamilySpec> load_families(const std::string& path);

struct FamilyInstance {
    WeightedHypersurface hypersurface;
    CyclicQuotientType center;  // 1/r(e)
    std::vector<Int> blowup_weights;
    std::array<std::size_t, 2> line{};
};

std::optional<FamilyInstance> family_instance(const FamilySpec& spec, Int r, bool with_corrections = false);

struct FamilyCheck {
    explicit FamilyCheck(ConstructionOutcome o) : outcome(std::move(o)) {}

    ConstructionOutcome outcome;
    bool volume_zero = false;
    bool b_weight_matches = false;
    bool charts_canonical = false;
    // false when the member is not well-formed, not quasismooth, or has a
    // weight triple with a common factor, i.e. outside the standing hypotheses
    bool in_scope = true;
    std::string problem;  // empty when everything holds

    bool ok() const { return problem.empty(); }
};

// Runs the construction on the instance and checks Vol = 0, nu = 2 and that
// the designated centre and weights were used.
FamilyCheck verify_family_member(const FamilySpec& spec, Int r, bool with_corrections = false);

// ---- dimension lifts ----

enum class LiftClass { terminal, canonical, not_guaranteed };
std::string to_string(LiftClass c);

struct LiftResult {
    explicit LiftResult(WeightedHypersurface h) : lifted(std::move(h)) {}

    WeightedHypersurface lifted;
    int n = 0;
    LiftClass guaranteed = LiftClass::not_guaranteed;  // from min(alpha + nabla)
    std::optional<Int> min_alpha_plus_nabla;           // empty for smooth X
    SingClass exact = SingClass::terminal;             // Reid-Tai on the lifted points
    std::optional<Rational> volume;                    // K^n = d / prod a, when canonical or better
    std::optional<Int> p_g_lower;                      // alpha - 1
};

LiftResult lift_hypersurface(const WeightedHypersurface& h3);

struct AddOneWeightResult {
    WeightedHypersurface lifted;
    CenterGeometry center;  // on the lifted hypersurface, weights (1, e)
    NefnessCertificate certificate;
    Rational base_volume;
    Rational volume;
    int n = 0;   // dimension of the lifted hypersurface
    int nu = 0;  // numerical Kodaira dimension of the blown-up lift
    BigInt p_g;  // monomials of degree alpha - 1
};

// Hypothesis violations throw Error("hypothesis violated", which).
AddOneWeightResult add_one_weight(const WeightedHypersurface& h, const CenterGeometry& center);
// Applies add_one_weight `times` times in a row.
std::vector<AddOneWeightResult> add_one_weight_iterated(const WeightedHypersurface& h, const CenterGeometry& center,
                                                        int times);

// ---- volume bounds ----

Rational bound_nm1(int n, Int p_g);
Rational bound_nm2(int n, Int p_g);
// Closed forms at the minimal p_g, as stated for canonical dimension n-1 / n-2.
Rational bound_nm1_closed(int n);
Rational bound_nm2_closed(int n);

struct VStarEntry {
    int n = 0;
    WeightedHypersurface hypersurface;
    Rational volume;
    Rational n_bound;  // N(n)
};

VStarEntry v_star_series(int n);

}  // namespace wmin
