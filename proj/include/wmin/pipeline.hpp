#pragma once

#include "wmin/blowup.hpp"
#include "wmin/cyclic.hpp"
#include "wmin/locus.hpp"
#include "wmin/nefness.hpp"
#include "wmin/wps.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wmin {

enum class KodairaClass { general_type, numerically_zero_volume };
std::string to_string(KodairaClass k);

// One entry of Sing(X~): a point type with multiplicity, or a curve.
struct SingularPointEntry {
    CyclicQuotientType type;
    Int count = 1;
    bool curve = false;
    std::string origin;  // "X" or "E<i>"
    SingClass cls = SingClass::terminal;
};

// The columns of the paper's tables. Missing optionals print as the markers
// below; this is also the schema of data/tables.json rows.
struct ReportRow {
    Int alpha = 0;
    Int deg = 0;
    std::vector<Int> weights;
    std::string b_weight;  // "1/13(3,4,5)"; two centres joined by " + "
    Rational vol;
    std::optional<BigInt> p_g;
    std::optional<BigInt> P2;
    BigInt chi;
    std::optional<Int> rho;
    std::optional<Basket> basket;
    std::optional<Rational> delta;

    bool operator==(const ReportRow&) const = default;
};

inline constexpr const char* kUnsupported = "unsupported";
inline constexpr const char* kNotComputed = "not computed";

nlohmann::json row_to_json(const ReportRow& r);
ReportRow row_from_json(const nlohmann::json& j);
std::string csv_header();
std::string row_to_csv(const ReportRow& r);
ReportRow row_from_csv(const std::string& line);
std::string md_header();
std::string row_to_md(const ReportRow& r);

struct MinimalModelReport {
    explicit MinimalModelReport(WeightedHypersurface h) : source(std::move(h)) {}

    WeightedHypersurface source;
    Int alpha = 0;
    std::vector<CenterGeometry> centers;
    std::vector<BlowUpRecord> blowups;
    std::vector<NefnessCertificate> certificates;  // everything tried, in order
    std::size_t chosen = 0;                        // index of the certificate used
    Rational volume;
    BigInt h0_k;      // monomials of degree alpha, i.e. h^0(X, K_X)
    BigInt P2_count;  // monomials of degree 2 alpha, whether or not the gate allows it as P2
    std::optional<BigInt> p_g, P2;
    BigInt chi;
    std::optional<Int> rho;
    std::optional<Basket> basket;
    std::optional<Rational> noether_delta;
    KodairaClass kodaira = KodairaClass::general_type;
    std::vector<SingularPointEntry> singularities;  // of the blown-up model
    bool isolated = true;

    ReportRow row() const;
};

nlohmann::json report_json(const MinimalModelReport& r);

struct ConstructionFailure {
    int stage = 0;
    std::string reason;
};

using ConstructionOutcome = std::variant<MinimalModelReport, ConstructionFailure>;

inline bool succeeded(const ConstructionOutcome& o) { return std::holds_alternative<MinimalModelReport>(o); }

struct ConstructionOptions {
    bool keep_certificates = true;
    bool allow_two_points = true;
    // Diagnostic: accept ill-formed P(e). Reports built this way are outside the criterion.
    bool waive_condition4 = false;
};

ConstructionOutcome run_construction(const WeightedHypersurface& h, const ConstructionOptions& opt = {});

Rational noether_delta(const Rational& volume, const BigInt& p_g);

// Canonical string of a centre with its blow-up weights, "1/r(e1,...,en)".
std::string b_weight_string(Int r, const std::vector<Int>& e);

}  // namespace wmin
