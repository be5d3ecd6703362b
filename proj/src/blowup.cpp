#include "wmin/blowup.hpp"

namespace wmin {

Int BlowUpRecord::weight_sum() const {
    Int s = 0;
    for (Int e : weights) s += e;
    return s;
}

Rational BlowUpRecord::volume_correction() const {
    const Int r = center.index();
    BigInt num = boost::multiprecision::pow(BigInt(r - weight_sum()), static_cast<unsigned>(weights.size()));
    return Rational(num, BigInt(r) * product(weights));
}

BlowUpRecord blow_up(const CyclicQuotientType& center, const std::optional<std::vector<Int>>& override,
                     bool require_positive_discrepancy) {
    BlowUpRecord rec;
    rec.center = center;
    rec.weights = override ? *override : center.residues();
    if (rec.weights.size() != center.dim() && !override)
        throw Error("invalid blow-up", "weights must match the center dimension");
    for (Int e : rec.weights)
        if (e <= 0) throw Error("invalid blow-up", "weights must be positive");
    if (gcd_of(rec.weights) != 1) throw Error("invalid blow-up", "weights must have gcd 1");
    const Int r = center.index();
    if (require_positive_discrepancy && rec.weight_sum() >= r)
        throw Error("sum e >= r", "no positive discrepancy at " + center.str());
    rec.discrepancy_coeff = Rational(BigInt(r - rec.weight_sum()), BigInt(r));
    rec.exceptional_weights = rec.weights;
    const std::size_t n = rec.weights.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Int ei = rec.weights[i];
        std::vector<Int> res(n);
        for (std::size_t j = 0; j < n; ++j) res[j] = (j == i) ? r : -rec.weights[j];
        if (ei == 1) std::fill(res.begin(), res.end(), 0);
        rec.charts.emplace_back(ei, std::move(res));
    }
    return rec;
}

bool exceptional_well_formed(std::span<const Int> weights) { return is_well_formed_space(weights); }

Rational volume_after_blowups(const Rational& kn_before, const std::vector<BlowUpRecord>& records, int n,
                              bool allow_ill_formed) {
    Rational v = kn_before;
    for (const auto& rec : records) {
        if (!allow_ill_formed && !exceptional_well_formed(rec.exceptional_weights))
            throw Error("ill-formed exceptional space", "P" + format_tuple(rec.exceptional_weights));
        if (static_cast<int>(rec.weights.size()) != n) throw Error("dimension mismatch", "blow-up record vs n");
        v -= rec.volume_correction();
    }
    return v;
}

}  // namespace wmin
