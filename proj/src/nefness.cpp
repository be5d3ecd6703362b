#include "wmin/nefness.hpp"

#include <algorithm>
#include <set>

namespace wmin {

std::string to_string(IrreducibilityVerdict::Kind k) {
    switch (k) {
        case IrreducibilityVerdict::Kind::irreducible: return "irreducible";
        case IrreducibilityVerdict::Kind::reducible: return "reducible";
        case IrreducibilityVerdict::Kind::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(NefnessCertificate::Verdict v) {
    switch (v) {
        case NefnessCertificate::Verdict::nef: return "nef";
        case NefnessCertificate::Verdict::failed: return "failed";
        case NefnessCertificate::Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

MonomialExponent power(const MonomialExponent& g, Int k) {
    MonomialExponent out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] * k;
    return out;
}

MonomialExponent times(const MonomialExponent& a, const MonomialExponent& b) {
    MonomialExponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Whether the monomial set is {g1^i g2^(k-i)} for some k > 1 dividing d.
std::optional<PencilWitness> find_pencil(const std::vector<MonomialExponent>& mons, Int d) {
    if (mons.size() < 3) return std::nullopt;
    const Int k = static_cast<Int>(mons.size()) - 1;
    if (d % k != 0) return std::nullopt;
    std::set<MonomialExponent> all(mons.begin(), mons.end());
    auto divisible = [k](const MonomialExponent& m) {
        return std::all_of(m.begin(), m.end(), [k](Int x) { return x % k == 0; });
    };
    for (std::size_t s = 0; s < mons.size(); ++s) {
        if (!divisible(mons[s])) continue;
        for (std::size_t t = s + 1; t < mons.size(); ++t) {
            if (!divisible(mons[t])) continue;
            MonomialExponent g1(mons[s].size()), g2(mons[t].size());
            for (std::size_t v = 0; v < g1.size(); ++v) {
                g1[v] = mons[s][v] / k;
                g2[v] = mons[t][v] / k;
            }
            std::set<MonomialExponent> gen;
            for (Int i = 0; i <= k; ++i) gen.insert(times(power(g1, i), power(g2, k - i)));
            if (gen == all) return PencilWitness{g1, g2, k};
        }
    }
    return std::nullopt;
}

IrreducibilityVerdict decide(Int a, Int b, Int c, Int d, bool allow_shortcut) {
    IrreducibilityVerdict v;
    try {
        v.plane = well_formize_plane(a, b, c, d);
    } catch (const Error& e) {
        v.kind = IrreducibilityVerdict::Kind::inconclusive;
        v.plane = {a, b, c, d};
        v.reason = e.what();
        return v;
    }
    const std::array<Int, 3> w{v.plane.a, v.plane.b, v.plane.c};
    auto mons = enumerate_monomials(w, v.plane.d);
    if (mons.size() < 2) {
        v.kind = IrreducibilityVerdict::Kind::inconclusive;
        v.reason = "fewer than two monomials of degree " + std::to_string(v.plane.d);
        return v;
    }
    for (std::size_t var = 0; var < 3; ++var) {
        bool in_all = std::all_of(mons.begin(), mons.end(), [var](const MonomialExponent& m) { return m[var] > 0; });
        if (in_all) {
            v.kind = IrreducibilityVerdict::Kind::inconclusive;
            v.reason = "all monomials share a variable";
            return v;
        }
    }
    if (allow_shortcut && irreducibility_shortcut(v.plane)) {
        v.kind = IrreducibilityVerdict::Kind::irreducible;
        v.shortcut = true;
        return v;
    }
    if (auto wit = find_pencil(mons, v.plane.d)) {
        v.kind = IrreducibilityVerdict::Kind::reducible;
        v.witness = wit;
        v.reason = "monomials form a pencil of degree " + std::to_string(v.plane.d / wit->k);
        return v;
    }
    v.kind = IrreducibilityVerdict::Kind::irreducible;
    return v;
}

}  // namespace

bool irreducibility_shortcut(const PlaneSystem& p) {
    const std::array<Int, 3> w{p.a, p.b, p.c};
    auto mons = enumerate_monomials(w, p.d);
    // three two-variable monomials with both exponents positive, one per pair
    bool pair_hit[3] = {false, false, false};
    for (const auto& m : mons) {
        for (std::size_t z = 0; z < 3; ++z) {
            std::size_t x = (z + 1) % 3, y = (z + 2) % 3;
            if (m[z] == 0 && m[x] > 0 && m[y] > 0) pair_hit[z] = true;
        }
    }
    if (pair_hit[0] && pair_hit[1] && pair_hit[2]) return true;
    // a pure power x^m1 together with y^m2 z^m3, gcd(m1, m2, m3) = 1
    for (const auto& pure : mons) {
        for (std::size_t x = 0; x < 3; ++x) {
            std::size_t y = (x + 1) % 3, z = (x + 2) % 3;
            if (pure[y] != 0 || pure[z] != 0) continue;
            for (const auto& other : mons)
                if (other[x] == 0 && std::gcd(pure[x], std::gcd(other[y], other[z])) == 1) return true;
        }
    }
    return false;
}

IrreducibilityVerdict plane_curve_irreducible(Int a, Int b, Int c, Int d) { return decide(a, b, c, d, true); }

IrreducibilityVerdict plane_curve_irreducible_exhaustive(Int a, Int b, Int c, Int d) {
    return decide(a, b, c, d, false);
}

std::vector<std::vector<Int>> blowup_weight_candidates(const CyclicQuotientType& t) {
    const Int r = t.index();
    std::vector<std::vector<Int>> out;
    for (Int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::vector<Int> e;
        Int s = 0;
        bool ok = true;
        for (Int a : t.residues()) {
            Int x = (u * a) % r;
            if (x == 0) ok = false;
            e.push_back(x);
            s += x;
        }
        if (!ok || s >= r || gcd_of(e) != 1) continue;
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int sx = 0, sy = 0;
        for (Int v : x) sx += v;
        for (Int v : y) sy += v;
        if (sx != sy) return sx < sy;
        return x < y;
    });
    return out;
}

std::vector<std::size_t> NefnessQuery::permutation() const {
    std::vector<std::size_t> p = center.local;
    p.push_back(center.line[0]);
    p.push_back(center.line[1]);
    return p;
}

namespace {

std::string ineq(const BigInt& lhs, const BigInt& rhs) { return "[" + lhs.str() + " >= " + rhs.str() + "]"; }

Int sum_of(const std::vector<Int>& v) {
    Int s = 0;
    for (Int x : v) s += x;
    return s;
}

void validate_center(const WeightedHypersurface& h, const CenterGeometry& c, const char* label) {
    const std::size_t n = c.local.size();
    if (c.type.dim() != n || c.blowup_weights.size() != n)
        throw Error("invalid center", std::string(label) + ": local coordinates and weights disagree in length");
    const Int r = c.type.index();
    if (sum_of(c.blowup_weights) >= r) throw Error("sum e >= r", std::string(label) + " " + c.type.str());
    for (Int e : c.blowup_weights)
        if (e <= 0) throw Error("invalid center", "blow-up weights must be positive");
    if (gcd_of(c.blowup_weights) != 1) throw Error("invalid center", "blow-up weights must have gcd 1");
    bool same_action = false;
    for (Int u = 1; u < r && !same_action; ++u) {
        if (std::gcd(u, r) != 1) continue;
        same_action = true;
        for (std::size_t i = 0; i < n; ++i)
            if (mod_pos(u * c.type.residues()[i] - c.blowup_weights[i], r) != 0) same_action = false;
    }
    if (!same_action) throw Error("invalid center", "blow-up weights are not a generator of the local action");
    const auto& w = h.weights();
    const std::array<Int, 2> lw{w[c.line[0]], w[c.line[1]]};
    if (!has_monomial(lw, h.degree()))
        throw Error("center not on coordinate line", "the line meets X in a curve, not finitely many points");
}

ConditionEntry irreducibility_entry(int id, Int a, Int b, Int c, Int d, IrreducibilityVerdict& out) {
    out = plane_curve_irreducible(a, b, c, d);
    ConditionEntry ent;
    ent.id = id;
    ent.statement = "(" + std::to_string(id) + ") general C_" + std::to_string(d) + " in P(" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ") ~ C_" + std::to_string(out.plane.d) + " in P(" +
                    std::to_string(out.plane.a) + "," + std::to_string(out.plane.b) + "," +
                    std::to_string(out.plane.c) + "): " + to_string(out.kind) +
                    (out.reason.empty() ? "" : " (" + out.reason + ")");
    ent.holds = out.kind == IrreducibilityVerdict::Kind::irreducible;
    return ent;
}

void conclude(NefnessCertificate& cert, int n, const IrreducibilityVerdict& irr, int irr_id) {
    cert.verdict = NefnessCertificate::Verdict::nef;
    for (const auto& ent : cert.log) {
        if (ent.holds) continue;
        if (ent.id == irr_id && irr.kind == IrreducibilityVerdict::Kind::inconclusive) {
            if (cert.verdict == NefnessCertificate::Verdict::nef) {
                cert.verdict = NefnessCertificate::Verdict::inconclusive;
                cert.failed_condition = ent.id;
                cert.reason = "irreducibility undecided: " + irr.reason;
            }
            continue;
        }
        cert.verdict = NefnessCertificate::Verdict::failed;
        cert.failed_condition = ent.id;
        cert.reason = ent.statement;
        break;
    }
    if (cert.nef()) cert.numerical_kodaira_lower = n - 1;
}

}  // namespace

IntegerInequality one_point_volume_condition(Int alpha, Int d, Int bk, Int bn1, Int bn2, Int r, Int sum_e, Int ek) {
    return {BigInt(alpha) * d * r * ek, BigInt(bk) * bn1 * bn2 * (r - sum_e)};
}

IntegerInequality two_point_volume_condition(Int alpha, Int d, Int bn, Int bn1, Int bn2, Int r1, Int sum_e, Int en,
                                             Int r2, Int sum_f, Int fn) {
    BigInt lhs = BigInt(alpha) * d * r1 * en * r2 * fn;
    BigInt rhs = BigInt(bn) * bn1 * bn2 * (BigInt(r1 - sum_e) * r2 * fn + BigInt(r2 - sum_f) * r1 * en);
    return {lhs, rhs};
}

NefnessCertificate check_nefness(const NefnessQuery& q) {
    const auto& h = q.hypersurface;
    const auto& c = q.center;
    const Int alpha = h.amplitude();
    if (alpha <= 0) throw Error("alpha <= 0", h.str());
    validate_center(h, c, "center");
    const std::size_t n = c.local.size();
    if (q.pivot >= n) throw Error("invalid pivot", "pivot must index a local coordinate");

    const auto& w = h.weights();
    const Int r = c.type.index();
    const Int se = sum_of(c.blowup_weights);
    const Int d = h.degree();
    const Int bl0 = w[c.line[0]], bl1 = w[c.line[1]];

    NefnessCertificate cert;
    cert.permutation = q.permutation();
    cert.pivot = q.pivot;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == q.pivot) continue;
        const Int bj = w[c.local[j]], ej = c.blowup_weights[j];
        BigInt lhs = BigInt(alpha) * ej, rhs = BigInt(bj) * (r - se);
        cert.log.push_back({1,
                            "(1) j=" + std::to_string(j + 1) + ": " + std::to_string(alpha) + "*" + std::to_string(ej) +
                                " >= " + std::to_string(bj) + "*(" + std::to_string(r) + "-" + std::to_string(se) +
                                ") " + ineq(lhs, rhs),
                            lhs >= rhs});
    }
    const Int bk = w[c.local[q.pivot]], ek = c.blowup_weights[q.pivot];
    auto v2 = one_point_volume_condition(alpha, d, bk, bl0, bl1, r, se, ek);
    cert.log.push_back({2,
                        "(2) k=" + std::to_string(q.pivot + 1) + ": " + std::to_string(alpha) + "*" + std::to_string(d) +
                            "*" + std::to_string(r) + "*" + std::to_string(ek) + " >= " + std::to_string(bk) + "*" +
                            std::to_string(bl0) + "*" + std::to_string(bl1) + "*(" + std::to_string(r) + "-" +
                            std::to_string(se) + ") " + ineq(v2.lhs, v2.rhs),
                        v2.holds()});
    IrreducibilityVerdict irr;
    cert.log.push_back(irreducibility_entry(3, bk, bl0, bl1, d, irr));
    bool wf = exceptional_well_formed(c.blowup_weights);
    std::string s4 = "(4) P" + format_tuple(c.blowup_weights) + (wf ? " is" : " is not") + " well-formed";
    if (!wf && q.waive_condition4) s4 += " (waived)";
    cert.log.push_back({4, s4, wf || q.waive_condition4});
    conclude(cert, static_cast<int>(n), irr, 3);
    return cert;
}

std::vector<std::size_t> TwoPointQuery::permutation() const {
    const auto& l1 = first.line;
    const auto& l2 = second.line;
    std::size_t s = 0, p = 0, q = 0;
    int shared = 0;
    for (std::size_t a : l1)
        for (std::size_t b : l2)
            if (a == b) {
                s = a;
                ++shared;
            }
    if (shared != 1) throw Error("invalid geometry", "the two lines must share exactly one coordinate");
    p = l1[0] == s ? l1[1] : l1[0];
    q = l2[0] == s ? l2[1] : l2[0];
    std::vector<std::size_t> out;
    for (std::size_t t : first.local)
        if (t != q) out.push_back(t);
    out.push_back(q);
    out.push_back(p);
    out.push_back(s);
    return out;
}

NefnessCertificate check_nefness_two_points(const TwoPointQuery& q) {
    const auto& h = q.hypersurface;
    const Int alpha = h.amplitude();
    if (alpha <= 0) throw Error("alpha <= 0", h.str());
    validate_center(h, q.first, "first center");
    validate_center(h, q.second, "second center");
    const auto perm = q.permutation();
    const std::size_t n = q.first.local.size();
    if (perm.size() != n + 2 || q.second.local.size() != n) throw Error("invalid geometry", "dimension mismatch");
    const std::size_t xq = perm[n - 1], xp = perm[n], xs = perm[n + 1];
    auto pos = [](const CenterGeometry& c, std::size_t idx) -> std::size_t {
        auto it = std::find(c.local.begin(), c.local.end(), idx);
        if (it == c.local.end()) throw Error("invalid geometry", "coordinate alignment of the two centers");
        return static_cast<std::size_t>(it - c.local.begin());
    };
    const auto& w = h.weights();
    const Int d = h.degree();
    const Int r1 = q.first.type.index(), r2 = q.second.type.index();
    const Int se = sum_of(q.first.blowup_weights), sf = sum_of(q.second.blowup_weights);

    NefnessCertificate cert;
    cert.permutation = perm;
    cert.pivot = n - 1;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Int bj = w[perm[j]];
        const Int ej = q.first.blowup_weights[pos(q.first, perm[j])];
        BigInt lhs = BigInt(alpha) * ej, rhs = BigInt(bj) * (r1 - se);
        cert.log.push_back({1, "(1) j=" + std::to_string(j + 1) + ": " + ineq(lhs, rhs), lhs >= rhs});
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Int bj = w[perm[j]];
        const Int fj = q.second.blowup_weights[pos(q.second, perm[j])];
        BigInt lhs = BigInt(alpha) * fj, rhs = BigInt(bj) * (r2 - sf);
        cert.log.push_back({2, "(2) j=" + std::to_string(j + 1) + ": " + ineq(lhs, rhs), lhs >= rhs});
    }
    const Int en = q.first.blowup_weights[pos(q.first, xq)];
    const Int fn = q.second.blowup_weights[pos(q.second, xp)];
    auto v3 = two_point_volume_condition(alpha, d, w[xq], w[xp], w[xs], r1, se, en, r2, sf, fn);
    cert.log.push_back({3, "(3) " + ineq(v3.lhs, v3.rhs), v3.holds()});
    IrreducibilityVerdict irr;
    cert.log.push_back(irreducibility_entry(4, w[xq], w[xp], w[xs], d, irr));
    bool wf = exceptional_well_formed(q.first.blowup_weights) && exceptional_well_formed(q.second.blowup_weights);
    cert.log.push_back({5, "(5) P" + format_tuple(q.first.blowup_weights) + ", P" +
                               format_tuple(q.second.blowup_weights) + (wf ? " well-formed" : " not well-formed"),
                        wf});
    conclude(cert, static_cast<int>(n), irr, 4);
    return cert;
}

nlohmann::json certificate_json(const NefnessCertificate& c) {
    nlohmann::json j;
    j["verdict"] = to_string(c.verdict);
    if (c.failed_condition) j["failed_condition"] = c.failed_condition;
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["pivot"] = c.pivot + 1;
    j["permutation"] = c.permutation;
    auto conds = nlohmann::json::array();
    for (const auto& e : c.log) conds.push_back({{"id", e.id}, {"statement", e.statement}, {"holds", e.holds}});
    j["conditions"] = conds;
    if (c.numerical_kodaira_lower) j["nu_lower"] = *c.numerical_kodaira_lower;
    return j;
}

}  // namespace wmin
