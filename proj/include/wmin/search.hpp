#pragma once

#include "wmin/pipeline.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace wmin {

struct SearchRange {
    Int alpha_min = 1, alpha_max = 10;
    Int d_min = 10, d_max = 100;
    Int weight_max = 60;

    void validate() const;  // throws Error("invalid range", ...)
};

// Keys alpha_min, alpha_max, d_min, d_max, weight_max; missing keys keep `base`.
SearchRange range_from_json(const nlohmann::json& j, SearchRange base = {});
// "alpha=1..3,deg=10..40,wmax=30"; a single number sets both ends.
SearchRange parse_range_keys(const std::string& spec, SearchRange base = {});

struct SearchStats {
    std::size_t candidates = 0;  // sorted 5-tuples with amplitude in range
    std::size_t not_well_formed = 0;
    std::size_t not_quasismooth = 0;
    std::map<int, std::size_t> failed_at_stage;  // construction failures by step
    std::size_t successes = 0;

    nlohmann::json to_json() const;
};

struct SearchResult {
    std::vector<MinimalModelReport> successes;  // ordered by (degree, weights)
    SearchStats stats;
};

// Runs the construction over every sorted weight tuple in range. The output
// does not depend on `jobs`; jobs <= 0 means hardware concurrency.
SearchResult search(const SearchRange& range, int jobs = 0);

}  // namespace wmin
