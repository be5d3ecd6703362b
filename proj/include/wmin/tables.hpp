#pragma once

#include "wmin/pipeline.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wmin {

struct ExpectedTable {
    std::string id;
    std::vector<std::string> verify;  // columns compared exactly
    std::vector<nlohmann::json> rows;
    std::string note;
};

struct ExpectedTables {
    int version = 0;
    std::map<std::string, ExpectedTable> tables;

    const ExpectedTable& at(const std::string& id) const;
    const nlohmann::json& row(const std::string& ref) const;  // "C.10"
};

ExpectedTables load_tables(const std::string& path);
ExpectedTables parse_tables(const nlohmann::json& j);

struct CellDiff {
    std::string column, expected, actual;
};

struct RowCheck {
    std::string table, no;
    std::string subject;  // the hypersurface examined
    std::vector<CellDiff> diffs;
    std::string error;  // construction failure or exception
    std::vector<std::string> notes;  // caveats on a passing row, or diagnostics on a failing one
    nlohmann::json actual;

    bool ok() const { return diffs.empty() && error.empty(); }
};

// Canonical string of one column of an actual row, for exact comparison.
std::string row_cell(const ReportRow& r, const std::string& column);
// Same normalisation applied to a value from the data file.
std::string expected_cell(const nlohmann::json& row, const std::string& column);

RowCheck verify_row(const ExpectedTables& all, const ExpectedTable& t, const nlohmann::json& row);
std::vector<RowCheck> verify_table(const ExpectedTables& all, const std::string& id);

// Dimension and volume data of a lifted n-fold (Table X / D style rows).
struct HigherDimRow {
    int n = 0;
    std::vector<Int> weights;
    Int deg = 0;
    Rational vol;
    Int can_dim = 0;
    std::optional<Rational> bound;
    std::string method;  // "lift" or "add_one_weight"
};

HigherDimRow higher_dim_from_base(const WeightedHypersurface& base);

}  // namespace wmin
