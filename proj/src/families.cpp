#include "wmin/families.hpp"

#include <algorithm>
#include <fstream>

namespace wmin {

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::six_r: return "6r";
        case FamilyKind::three_r_plus_3k: return "3r+3k";
        case FamilyKind::four_r_plus_2k: return "4r+2k";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
    if (s == "6r") return FamilyKind::six_r;
    if (s == "3r+3k") return FamilyKind::three_r_plus_3k;
    if (s == "4r+2k") return FamilyKind::four_r_plus_2k;
    throw Error("parse error", "unknown family kind '" + s + "'");
}

bool FamilySpec::admits(Int r, bool with_corrections) const {
    if (r <= r_greater_than) return false;
    auto holds = [&](const ResidueCondition& c) {
        return std::find(c.allowed.begin(), c.allowed.end(), mod_pos(r, c.modulus)) != c.allowed.end();
    };
    if (!std::all_of(conditions.begin(), conditions.end(), holds)) return false;
    return !with_corrections || std::all_of(corrections.begin(), corrections.end(), holds);
}

Int FamilySpec::alpha_offset() const { return kind == FamilyKind::six_r ? a + b + c : a + b + k; }

std::vector<Int> FamilySpec::blowup_weights() const {
    return {a, b, kind == FamilyKind::six_r ? c : k};
}

Int FamilySpec::degree(Int r) const {
    switch (kind) {
        case FamilyKind::six_r: return 6 * r;
        case FamilyKind::three_r_plus_3k: return 3 * r + 3 * k;
        case FamilyKind::four_r_plus_2k: return 4 * r + 2 * k;
    }
    return 0;
}

std::vector<Int> FamilySpec::weights(Int r) const {
    switch (kind) {
        case FamilyKind::six_r: return {a, b, c, 2 * r, 3 * r};
        case FamilyKind::three_r_plus_3k: return {a, b, r + k, 3 * k, r};
        case FamilyKind::four_r_plus_2k: return {a, b, 2 * r + k, 2 * k, r};
    }
    return {};
}

FamilySpec family_from_json(const nlohmann::json& j) {
    FamilySpec s;
    s.table = j.at("table").get<std::string>();
    s.no = j.at("no").get<int>();
    s.kind = parse_family_kind(j.at("kind").get<std::string>());
    s.a = j.at("a").get<Int>();
    s.b = j.at("b").get<Int>();
    if (s.kind == FamilyKind::six_r)
        s.c = j.at("c").get<Int>();
    else
        s.k = j.at("k").get<Int>();
    s.r_greater_than = j.at("r_greater_than").get<Int>();
    for (const auto& c : j.at("conditions"))
        s.conditions.push_back({c.at("mod").get<Int>(), c.at("allowed").get<std::vector<Int>>()});
    if (j.contains("corrections")) {
        for (const auto& c : j.at("corrections").at("conditions"))
            s.corrections.push_back({c.at("mod").get<Int>(), c.at("allowed").get<std::vector<Int>>()});
        s.correction_note = j.at("corrections").value("why", "");
    }
    if (j.contains("alpha_offset")) s.listed_alpha_offset = j.at("alpha_offset").get<Int>();
    return s;
}

std::vector<FamilySpec> load_families(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io error", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse error", path + ": " + e.what());
    }
    std::vector<FamilySpec> out;
    for (const auto& f : j.at("families")) out.push_back(family_from_json(f));
    return out;
}

std::optional<FamilyInstance> family_instance(const FamilySpec& spec, Int r, bool with_corrections) {
    if (!spec.admits(r, with_corrections)) return std::nullopt;
    FamilyInstance inst{WeightedHypersurface(Weights(spec.weights(r)), spec.degree(r)), {}, spec.blowup_weights(), {3, 4}};
    inst.center = CyclicQuotientType(r, inst.blowup_weights);
    return inst;
}

FamilyCheck verify_family_member(const FamilySpec& spec, Int r, bool with_corrections) {
    auto inst = family_instance(spec, r, with_corrections);
    if (!inst) throw Error("invalid argument", "r=" + std::to_string(r) + " violates the conditions of " + spec.id());
    const auto& h = inst->hypersurface;
    FamilyCheck chk(run_construction(h, {false, false}));
    chk.in_scope = is_well_formed_hypersurface(h) && is_quasismooth_general(h) && triple_gcd_condition(h);
    auto* rep = std::get_if<MinimalModelReport>(&chk.outcome);
    if (!rep) {
        const auto& f = std::get<ConstructionFailure>(chk.outcome);
        chk.problem = "construction failed at step " + std::to_string(f.stage) + ": " + f.reason;
        return chk;
    }
    chk.charts_canonical = true;
    chk.volume_zero = rep->volume == 0;
    // coordinates of equal weight are interchangeable, so compare (weight, e) pairs
    const auto& c = rep->centers.front();
    const auto& w = inst->hypersurface.weights();
    std::vector<std::pair<Int, Int>> got, want;
    for (std::size_t i = 0; i < 3; ++i) {
        got.emplace_back(w[c.local[i]], c.blowup_weights[i]);
        want.emplace_back(w[i], inst->blowup_weights[i]);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    chk.b_weight_matches = c.type.index() == r && got == want;
    if (!chk.volume_zero)
        chk.problem = "volume " + format_rational(rep->volume) + " is not 0";
    else if (rep->kodaira != KodairaClass::numerically_zero_volume)
        chk.problem = "kodaira class mismatch";
    else if (!chk.b_weight_matches)
        chk.problem = "blew up " + rep->row().b_weight + " instead of " + b_weight_string(r, inst->blowup_weights);
    return chk;
}

// ---- lifts ----

std::string to_string(LiftClass c) {
    switch (c) {
        case LiftClass::terminal: return "terminal";
        case LiftClass::canonical: return "canonical";
        case LiftClass::not_guaranteed: return "not_guaranteed";
    }
    return "?";
}

LiftResult lift_hypersurface(const WeightedHypersurface& h3) {
    const Int alpha = h3.amplitude();
    if (alpha <= 1) throw Error("alpha <= 1", h3.str() + " has amplitude " + std::to_string(alpha));
    auto locus = singular_locus(h3);
    if (locus.has_non_isolated()) throw Error("non-isolated locus", h3.str());
    std::vector<Int> w(static_cast<std::size_t>(alpha - 1), 1);
    for (Int x : h3.weights().entries()) w.push_back(x);
    LiftResult res(WeightedHypersurface(Weights(w), h3.degree()));
    res.n = static_cast<int>(alpha + 2);
    for (const auto& s : locus.strata) {
        Int v = alpha + nabla(s.type);
        if (!res.min_alpha_plus_nabla || v < *res.min_alpha_plus_nabla) res.min_alpha_plus_nabla = v;
    }
    if (!res.min_alpha_plus_nabla || *res.min_alpha_plus_nabla > 1)
        res.guaranteed = LiftClass::terminal;
    else if (*res.min_alpha_plus_nabla == 1)
        res.guaranteed = LiftClass::canonical;
    else
        res.guaranteed = LiftClass::not_guaranteed;
    res.exact = SingClass::terminal;
    for (const auto& t : lift_singular_locus(h3, alpha)) {
        auto c = reid_tai(t);
        if (c == SingClass::noncanonical || (c == SingClass::canonical_strict && res.exact == SingClass::terminal))
            res.exact = c;
    }
    if (res.exact != SingClass::noncanonical) {
        res.volume = self_intersection(h3);
        res.p_g_lower = alpha - 1;
    }
    return res;
}

AddOneWeightResult add_one_weight(const WeightedHypersurface& h, const CenterGeometry& center) {
    auto violated = [](const std::string& what) { return Error("hypothesis violated", what); };
    const std::size_t n = center.local.size();
    if (static_cast<std::size_t>(h.dimension()) != n) throw violated("center dimension differs from the hypersurface");
    const Int r = center.type.index();
    const auto& w = h.weights();
    const auto& e = center.blowup_weights;
    if (e.size() != n) throw violated("blow-up weights do not match the local coordinates");
    for (std::size_t i = 0; i < n; ++i)
        if (e[i] != mod_pos(w[center.local[i]], r))
            throw violated("e_" + std::to_string(i + 1) + " != weight mod r");
    Int se = 0;
    for (Int x : e) se += x;
    const Int alpha = h.amplitude();
    if (!(r - se > 1)) throw violated("r - sum e > 1");
    if (!(alpha >= r - se)) throw violated("alpha >= r - sum e");
    bool base_nef = false;
    for (std::size_t k = 0; k < n && !base_nef; ++k) base_nef = check_nefness({h, center, k}).nef();
    if (!base_nef) throw violated("the base does not satisfy the nefness criterion");

    std::vector<Int> w2{1};
    for (Int x : w.entries()) w2.push_back(x);
    AddOneWeightResult res{WeightedHypersurface(Weights(w2), h.degree()), {}, {}, {}, {}, 0, 0, 0};
    CenterGeometry c2;
    c2.line = {center.line[0] + 1, center.line[1] + 1};
    c2.local.push_back(0);
    for (auto i : center.local) c2.local.push_back(i + 1);
    std::vector<Int> res2{1};
    for (Int x : center.type.residues()) res2.push_back(x);
    c2.type = CyclicQuotientType(r, res2);
    c2.blowup_weights = {1};
    for (Int x : e) c2.blowup_weights.push_back(x);
    res.center = c2;
    res.n = static_cast<int>(n + 1);

    for (std::size_t k = 0; k <= n; ++k) {
        auto cert = check_nefness({res.lifted, c2, k});
        if (cert.nef()) {
            res.certificate = std::move(cert);
            break;
        }
        if (k == n) throw Error("internal", "lifted instance fails the nefness criterion: " + cert.reason);
    }

    auto base_rec = blow_up(CyclicQuotientType(r, e), std::nullopt, true);
    BigInt a_pow = boost::multiprecision::pow(BigInt(alpha), static_cast<unsigned>(n));
    res.base_volume = volume_after_blowups(Rational(a_pow) * self_intersection(h), {base_rec}, static_cast<int>(n));
    auto rec = blow_up(CyclicQuotientType(r, c2.blowup_weights), std::nullopt, true);
    BigInt a2_pow = boost::multiprecision::pow(BigInt(alpha - 1), static_cast<unsigned>(n + 1));
    res.volume =
        volume_after_blowups(Rational(a2_pow) * self_intersection(res.lifted), {rec}, static_cast<int>(n + 1));
    res.nu = (res.base_volume == 0 && alpha == r - se) ? static_cast<int>(n) : static_cast<int>(n + 1);
    res.p_g = count_monomials(res.lifted.weights().span(), alpha - 1);
    return res;
}

std::vector<AddOneWeightResult> add_one_weight_iterated(const WeightedHypersurface& h, const CenterGeometry& center,
                                                        int times) {
    std::vector<AddOneWeightResult> out;
    WeightedHypersurface cur = h;
    CenterGeometry c = center;
    for (int i = 0; i < times; ++i) {
        out.push_back(add_one_weight(cur, c));
        cur = out.back().lifted;
        c = out.back().center;
    }
    return out;
}

// ---- bounds ----

Rational bound_nm1(int n, Int p_g) {
    if (n < 3) throw Error("invalid argument", "n >= 3 required");
    if (p_g < n) throw Error("invalid argument", "canonical dimension n-1 needs p_g >= n");
    const BigInt m = p_g - n + 1;
    Rational first(2 * m, BigInt(n - 1));
    BigInt inner = BigInt(n - 1) * m - 1;
    Rational second(ceil_div(8 * inner, 3), BigInt(n - 1) * (n - 1));
    return std::max(first, second);
}

Rational bound_nm2(int n, Int p_g) {
    if (n < 3) throw Error("invalid argument", "n >= 3 required");
    if (p_g < n - 1) throw Error("invalid argument", "canonical dimension n-2 needs p_g >= n-1");
    if (n == 3) return Rational(1, 3);
    const BigInt q = p_g - n + 2;
    const BigInt m = n - 2;
    if (n <= 11) return Rational(q * q, m * (q * m + 1));
    return Rational(2 * (2 * m * q - 3), 3 * m * m * m);
}

Rational bound_nm1_closed(int n) {
    if (n < 3) throw Error("invalid argument", "n >= 3 required");
    if (n <= 5) return Rational(2, n - 1);
    return Rational(ceil_div(BigInt(8) * (n - 2), 3), BigInt(n - 1) * (n - 1));
}

Rational bound_nm2_closed(int n) {
    if (n < 3) throw Error("invalid argument", "n >= 3 required");
    if (n == 3) return Rational(1, 3);
    if (n <= 11) return Rational(1, (n - 1) * (n - 2));
    const BigInt m = n - 2;
    return Rational(BigInt(4 * n - 14), 3 * m * m * m);
}

VStarEntry v_star_series(int n) {
    if (n < 4) throw Error("invalid argument", "n >= 4 required");
    if (n % 3 == 0) throw Error("invalid argument", "the series is defined for n = 1, 2 mod 3 only");
    std::vector<Int> w(static_cast<std::size_t>(n), 1);
    Int d;
    if (n % 3 == 2) {
        const Int k = (n - 2) / 3;
        w.push_back(2 * (k + 1));
        w.push_back(5 * (k + 1));
        d = 10 * (k + 1);
    } else {
        const Int k = (n - 1) / 3;
        w.push_back(2 * k + 1);
        w.push_back(5 * k + 3);
        d = 10 * k + 6;
    }
    WeightedHypersurface h(Weights(w), d);
    Rational vol = Rational(boost::multiprecision::pow(BigInt(h.amplitude()), static_cast<unsigned>(n))) *
                   self_intersection(h);
    return {n, h, vol, bound_nm1(n, n)};
}

}  // namespace wmin
