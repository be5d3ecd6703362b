#pragma once

#include "wmin/cyclic.hpp"
#include "wmin/wps.hpp"

#include <optional>
#include <vector>

namespace wmin {

struct BlowUpRecord {
    CyclicQuotientType center;
    std::vector<Int> weights;          // e_1..e_n
    Rational discrepancy_coeff;        // (r - sum e) / r
    std::vector<CyclicQuotientType> charts;  // chart i: 1/e_i(-e_1,..,r,..,-e_n)
    std::vector<Int> exceptional_weights;

    Int weight_sum() const;
    // (r - sum e)^n / (r prod e)
    Rational volume_correction() const;
};

// Blow up `center` with its own residues as weights, or with `override`
// (only the (1, e_1..e_n) choice of the add-one-weight lift needs that).
BlowUpRecord blow_up(const CyclicQuotientType& center, const std::optional<std::vector<Int>>& override = std::nullopt,
                     bool require_positive_discrepancy = false);

bool exceptional_well_formed(std::span<const Int> weights);

// Rejects ill-formed exceptional spaces unless `allow_ill_formed`.
Rational volume_after_blowups(const Rational& kn_before, const std::vector<BlowUpRecord>& records, int n,
                              bool allow_ill_formed = false);

}  // namespace wmin
