#include "wmin/wps.hpp"

#include <algorithm>
#include <array>

namespace wmin {

Weights::Weights(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 3) throw Error("invalid weights", "need at least 3 entries");
    for (Int a : entries_)
        if (a < 1) throw Error("invalid weights", "entries must be positive");
}

Int Weights::sum() const {
    Int s = 0;
    for (Int a : entries_) s += a;
    return s;
}

std::vector<Int> Weights::sorted() const {
    auto v = entries_;
    std::sort(v.begin(), v.end());
    return v;
}

WeightedHypersurface::WeightedHypersurface(Weights w, Int degree) : weights_(std::move(w)), degree_(degree) {
    if (degree_ < 1) throw Error("invalid hypersurface", "degree must be positive");
}

std::string WeightedHypersurface::str() const {
    return "X" + std::to_string(degree_) + " in P" + weights_.str();
}

bool is_well_formed_space(std::span<const Int> w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        Int g = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i) g = std::gcd(g, w[j]);
        if (g != 1) return false;
    }
    return true;
}

bool is_well_formed_hypersurface(const WeightedHypersurface& h) {
    const auto& w = h.weights().entries();
    if (!is_well_formed_space(w)) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            Int g = 0;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (k != i && k != j) g = std::gcd(g, w[k]);
            if (h.degree() % g != 0) return false;
        }
    return true;
}

namespace {

void close_under(std::vector<char>& reach, Int a) {
    for (std::size_t p = static_cast<std::size_t>(a); p < reach.size(); ++p)
        if (reach[p - a]) reach[p] = 1;
}

}  // namespace

bool has_monomial(std::span<const Int> w, Int m) {
    if (m < 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(m) + 1, 0);
    reach[0] = 1;
    for (Int a : w) close_under(reach, a);
    return reach[m];
}

bool is_quasismooth_general(const WeightedHypersurface& h) {
    const auto& w = h.weights().entries();
    const Int d = h.degree();
    for (Int a : w)
        if (a == d) return true;

    // A subset containing a weight dividing d carries a pure power, so only
    // subsets of the non-dividing indices need real work.
    std::vector<std::size_t> hard;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (d % w[i] != 0) hard.push_back(i);
    const std::size_t k = hard.size();
    if (k == 0) return true;
    if (k > 24) throw Error("unsupported", "too many non-dividing weights for subset enumeration");

    const std::size_t full = std::size_t{1} << k;
    std::vector<std::vector<char>> reach(full);
    reach[0].assign(static_cast<std::size_t>(d) + 1, 0);
    reach[0][0] = 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        reach[mask] = reach[mask & (mask - 1)];
        close_under(reach[mask], w[hard[low]]);
        if (reach[mask][d]) continue;

        // The |I| monomials x_I^M x_e need pairwise distinct external
        // indices e; the slots are interchangeable, so a maximum matching
        // reduces to counting admissible e.
        std::vector<char> inside(w.size(), 0);
        for (std::size_t t = 0; t < k; ++t)
            if (mask >> t & 1) inside[hard[t]] = 1;
        std::size_t need = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t have = 0;
        for (std::size_t e = 0; e < w.size() && have < need; ++e)
            if (!inside[e] && w[e] <= d && reach[mask][d - w[e]]) ++have;
        if (have < need) return false;
    }
    return true;
}

BigInt count_monomials(std::span<const Int> w, Int m) {
    if (m < 0) return 0;
    std::vector<BigInt> dp(static_cast<std::size_t>(m) + 1, 0);
    dp[0] = 1;
    for (Int a : w)
        for (std::size_t p = static_cast<std::size_t>(a); p < dp.size(); ++p) dp[p] += dp[p - a];
    return dp[m];
}

namespace {

void enumerate_rec(std::span<const Int> w, std::size_t i, Int left, MonomialExponent& cur,
                   std::vector<MonomialExponent>& out) {
    if (i + 1 == w.size()) {
        if (left % w[i] == 0) {
            cur[i] = left / w[i];
            out.push_back(cur);
        }
        return;
    }
    for (Int e = left / w[i]; e >= 0; --e) {
        cur[i] = e;
        enumerate_rec(w, i + 1, left - e * w[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<MonomialExponent> enumerate_monomials(std::span<const Int> w, Int m) {
    std::vector<MonomialExponent> out;
    if (m < 0) return out;
    if (w.empty()) {
        if (m == 0) out.emplace_back();
        return out;
    }
    MonomialExponent cur(w.size(), 0);
    enumerate_rec(w, 0, m, cur, out);
    return out;
}

Rational self_intersection(const WeightedHypersurface& h) {
    return Rational(BigInt(h.degree()), product(h.weights().span()));
}

PlaneSystem well_formize_plane(Int a, Int b, Int c, Int d) {
    if (a < 1 || b < 1 || c < 1 || d < 1) throw Error("invalid plane system");
    std::array<Int, 3> w{a, b, c};
    bool changed = true;
    while (changed) {
        changed = false;
        Int g = gcd_of(w);
        if (g > 1) {
            if (d % g != 0) throw Error("degree not transportable", "common weight factor does not divide degree");
            for (Int& x : w) x /= g;
            d /= g;
        }
        for (int i = 0; i < 3; ++i) {
            Int& x = w[(i + 1) % 3];
            Int& y = w[(i + 2) % 3];
            Int q = std::gcd(x, y);
            if (q == 1) continue;
            if (d % q != 0)
                throw Error("degree not transportable",
                            "gcd " + std::to_string(q) + " of two weights does not divide " + std::to_string(d));
            x /= q;
            y /= q;
            d /= q;
            changed = true;
        }
    }
    return {w[0], w[1], w[2], d};
}

}  // namespace wmin
