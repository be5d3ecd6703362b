#include "wmin/pipeline.hpp"

#include "wmin/terminalize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wmin {

std::string to_string(KodairaClass k) {
    return k == KodairaClass::general_type ? "general_type" : "numerically_zero_volume";
}

std::string b_weight_string(Int r, const std::vector<Int>& e) { return "1/" + std::to_string(r) + format_tuple(e); }

Rational noether_delta(const Rational& volume, const BigInt& p_g) {
    if (p_g < 0) throw Error("invalid argument", "p_g must be non-negative");
    return volume - Rational(4, 3) * Rational(p_g) + Rational(10, 3);
}

namespace {

struct NoncanonicalPoint {
    const SingularStratum* stratum;
    std::vector<CenterGeometry> geometries;  // one per admissible line
};

std::vector<CenterGeometry> center_geometries(const WeightedHypersurface& h, const SingularStratum& s) {
    std::vector<CenterGeometry> out;
    auto push = [&](const SingularStratum& st) {
        CenterGeometry g;
        g.line = st.line;
        g.local = st.local;
        g.type = st.type;
        out.push_back(std::move(g));
    };
    if (s.location.kind == StratumLocation::Kind::vertex) {
        for (std::size_t j : vertex_eliminations(h, s.location.i))
            if (auto st = vertex_stratum(h, s.location.i, j)) push(*st);
    } else {
        push(s);
    }
    return out;
}

struct Step3Result {
    bool ok = true;
    std::string reason;
    std::vector<SingularPointEntry> chart_points;
};

Step3Result classify_charts(const std::vector<BlowUpRecord>& blowups) {
    Step3Result res;
    for (std::size_t b = 0; b < blowups.size(); ++b) {
        for (const auto& chart : blowups[b].charts) {
            if (chart.is_smooth()) continue;
            SingularPointEntry e;
            e.type = chart;
            e.origin = "E" + std::to_string(b + 1);
            e.cls = chart.is_transverse() ? classify_transverse(chart) : reid_tai(chart);
            e.curve = chart.is_transverse() || !is_isolated(chart);
            if (e.cls == SingClass::noncanonical) {
                res.ok = false;
                res.reason = "chart " + chart.str() + " on " + e.origin + " is not canonical";
                return res;
            }
            res.chart_points.push_back(e);
        }
    }
    return res;
}

// Merge equal entries so the list reads like the paper's Sing(X~).
std::vector<SingularPointEntry> merge_points(std::vector<SingularPointEntry> pts) {
    std::vector<SingularPointEntry> out;
    for (auto& p : pts) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SingularPointEntry& q) {
            return q.curve == p.curve && q.origin == p.origin && q.type == p.type;
        });
        if (it != out.end())
            it->count += p.count;
        else
            out.push_back(std::move(p));
    }
    return out;
}

struct Attempt {
    std::vector<CenterGeometry> centers;
    std::size_t certificate = 0;
};

}  // namespace

ConstructionOutcome run_construction(const WeightedHypersurface& h, const ConstructionOptions& opt) {
    using F = ConstructionFailure;
    if (h.dimension() != 3) return F{0, "only 3-folds are supported by the construction"};
    // Step 0
    if (!is_well_formed_hypersurface(h)) return F{0, "not well-formed"};
    if (!is_quasismooth_general(h)) return F{0, "not quasismooth"};
    const Int alpha = h.amplitude();
    if (alpha <= 0) return F{0, "alpha <= 0"};

    // Step 1
    SingularLocus locus;
    try {
        locus = singular_locus(h);
    } catch (const Error& e) {
        return F{1, e.what()};
    }
    std::vector<NoncanonicalPoint> bad;
    Int bad_points = 0;
    std::vector<SingularPointEntry> kept;
    for (const auto& s : locus.strata) {
        SingularPointEntry e;
        e.type = s.type;
        e.count = s.count;
        e.origin = "X";
        if (s.kind == StratumKind::curve) {
            e.curve = true;
            e.cls = classify_transverse(s.type);
            if (e.cls == SingClass::noncanonical) return F{1, "non-canonical singular curve " + s.str()};
            kept.push_back(e);
            continue;
        }
        e.cls = reid_tai(s.type);
        e.curve = !is_isolated(s.type);
        if (e.cls == SingClass::noncanonical) {
            bad.push_back({&s, center_geometries(h, s)});
            bad_points += s.count;
        } else {
            kept.push_back(e);
        }
    }
    if (bad_points == 0) return F{1, "no non-canonical singularity"};
    const bool two = bad_points == 2 && bad.size() == 2 && opt.allow_two_points;
    if (bad_points != 1 && !two)
        return F{1, std::to_string(bad_points) + " non-canonical singularities (exactly one required)"};

    // Step 2: collect certificates in search order
    std::vector<NefnessCertificate> certs;
    std::vector<Attempt> nef_attempts;
    bool any_candidate = false;
    auto record = [&](NefnessCertificate c, std::vector<CenterGeometry> centers) {
        if (c.nef()) nef_attempts.push_back({std::move(centers), certs.size()});
        certs.push_back(std::move(c));
    };
    if (bad_points == 1) {
        for (const auto& geom : bad[0].geometries) {
            for (const auto& e : blowup_weight_candidates(geom.type)) {
                any_candidate = true;
                CenterGeometry g = geom;
                g.blowup_weights = e;
                for (std::size_t k = 0; k < g.local.size(); ++k) {
                    NefnessQuery q{h, g, k, opt.waive_condition4};
                    record(check_nefness(q), {g});
                }
            }
        }
    } else {
        for (int order = 0; order < 2; ++order) {
            const auto& P = bad[order == 0 ? 0 : 1];
            const auto& Q = bad[order == 0 ? 1 : 0];
            for (const auto& g1 : P.geometries)
                for (const auto& g2 : Q.geometries) {
                    int shared = 0;
                    for (auto a : g1.line)
                        for (auto b : g2.line) shared += a == b;
                    if (shared != 1) continue;
                    for (const auto& e : blowup_weight_candidates(g1.type))
                        for (const auto& f : blowup_weight_candidates(g2.type)) {
                            any_candidate = true;
                            CenterGeometry a = g1, b = g2;
                            a.blowup_weights = e;
                            b.blowup_weights = f;
                            TwoPointQuery q{h, a, b};
                            NefnessCertificate c;
                            try {
                                c = check_nefness_two_points(q);
                            } catch (const Error&) {
                                continue;  // coordinates do not line up as the criterion needs
                            }
                            record(std::move(c), {a, b});
                        }
                }
        }
    }
    if (!any_candidate) return F{2, "no admissible blow-up weights (need e_i > 0, sum e < r, gcd 1)"};
    if (nef_attempts.empty()) {
        std::string why = certs.empty() ? "two-point geometry does not match" : certs.front().reason;
        return F{2, "no nefness certificate found; first attempt: " + why};
    }

    // Step 3: first nef certificate whose charts are canonical
    std::set<std::vector<std::vector<Int>>> seen;
    std::string step3_reason;
    for (const auto& att : nef_attempts) {
        std::vector<std::vector<Int>> key;
        for (const auto& c : att.centers) key.push_back(c.blowup_weights);
        if (!seen.insert(key).second) continue;
        std::vector<BlowUpRecord> blowups;
        for (const auto& c : att.centers)
            blowups.push_back(blow_up(CyclicQuotientType(c.type.index(), c.blowup_weights), std::nullopt, true));
        auto s3 = classify_charts(blowups);
        if (!s3.ok) {
            if (step3_reason.empty()) step3_reason = s3.reason;
            continue;
        }

        MinimalModelReport rep(h);
        rep.alpha = alpha;
        rep.centers = att.centers;
        rep.blowups = blowups;
        rep.chosen = att.certificate;
        const Rational base = Rational(BigInt(alpha) * alpha * alpha) * self_intersection(h);
        rep.volume = volume_after_blowups(base, blowups, 3, opt.waive_condition4);
        if (rep.volume < 0) throw Error("internal", "negative volume after a nef blow-up of " + h.str());
        rep.kodaira = rep.volume == 0 ? KodairaClass::numerically_zero_volume : KodairaClass::general_type;

        const auto& w = h.weights().span();
        rep.h0_k = count_monomials(w, alpha);
        rep.chi = 1 - rep.h0_k;
        // h^0(mK) equals the monomial count when m(r - sum e) < r for every centre
        auto gate = [&](Int m) {
            for (const auto& b : blowups)
                if (m * (b.center.index() - b.weight_sum()) >= b.center.index()) return false;
            return true;
        };
        if (gate(1)) rep.p_g = rep.h0_k;
        rep.P2_count = count_monomials(w, 2 * alpha);
        if (gate(2)) rep.P2 = rep.P2_count;
        if (rep.kodaira == KodairaClass::general_type && rep.p_g) rep.noether_delta = noether_delta(rep.volume, *rep.p_g);

        // Step 4
        std::vector<SingularPointEntry> all = kept;
        for (auto& p : s3.chart_points) all.push_back(p);
        rep.isolated = !locus.has_non_isolated();
        for (const auto& p : all)
            if (p.curve) rep.isolated = false;
        if (rep.isolated) {
            Int rho = 1 + static_cast<Int>(blowups.size());
            Basket basket;
            for (const auto& p : all) {
                if (p.type.is_smooth()) continue;
                if (p.cls == SingClass::terminal) {
                    basket.add(basket_pair(p.type), p.count);
                } else {
                    auto t = terminalize_type(p.type);
                    rho += p.count * t.rho_contribution;
                    basket.merge(t.basket, p.count);
                }
            }
            rep.rho = rho;
            rep.basket = basket;
        }
        rep.singularities = merge_points(std::move(all));
        if (opt.keep_certificates) {
            rep.certificates = std::move(certs);
        } else {
            rep.certificates = {certs[att.certificate]};
            rep.chosen = 0;
        }
        return rep;
    }
    return F{3, step3_reason};
}

// ---- report encodings ----

ReportRow MinimalModelReport::row() const {
    ReportRow r;
    r.alpha = alpha;
    r.deg = source.degree();
    r.weights = source.weights().entries();
    std::string bw;
    for (const auto& c : centers) {
        if (!bw.empty()) bw += " + ";
        bw += b_weight_string(c.type.index(), c.blowup_weights);
    }
    r.b_weight = bw;
    r.vol = volume;
    r.p_g = p_g;
    r.P2 = P2;
    r.chi = chi;
    r.rho = rho;
    r.basket = basket;
    r.delta = noether_delta;
    return r;
}

namespace {

std::string opt_big(const std::optional<BigInt>& v) { return v ? v->str() : kNotComputed; }

std::optional<BigInt> parse_opt_big(const std::string& s) {
    if (s == kNotComputed || s.empty()) return std::nullopt;
    return BigInt(s);
}

std::vector<Int> parse_tuple(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur += c;
        } else if (!cur.empty()) {
            out.push_back(std::stoll(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

nlohmann::json row_to_json(const ReportRow& r) {
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["deg"] = r.deg;
    j["weights"] = r.weights;
    j["b_weight"] = r.b_weight;
    j["vol"] = format_rational(r.vol);
    j["p_g"] = opt_big(r.p_g);
    j["P2"] = opt_big(r.P2);
    j["chi"] = r.chi.str();
    if (r.rho)
        j["rho"] = *r.rho;
    else
        j["rho"] = kUnsupported;
    j["basket"] = r.basket ? r.basket->str() : kUnsupported;
    j["delta"] = r.delta ? format_rational(*r.delta) : std::string(kNotComputed);
    return j;
}

ReportRow row_from_json(const nlohmann::json& j) {
    ReportRow r;
    r.alpha = j.at("alpha").get<Int>();
    r.deg = j.at("deg").get<Int>();
    r.weights = j.at("weights").get<std::vector<Int>>();
    r.b_weight = j.value("b_weight", "");
    auto str_of = [&](const char* key) -> std::string {
        const auto& v = j.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    r.vol = parse_rational(str_of("vol"));
    r.p_g = parse_opt_big(str_of("p_g"));
    r.P2 = parse_opt_big(str_of("P2"));
    r.chi = BigInt(str_of("chi"));
    if (j.at("rho").is_number_integer()) r.rho = j.at("rho").get<Int>();
    if (auto b = j.at("basket").get<std::string>(); b != kUnsupported) r.basket = Basket::parse(b);
    if (auto d = str_of("delta"); d != kNotComputed) r.delta = parse_rational(d);
    return r;
}

std::string csv_header() { return "alpha,deg,weights,b_weight,vol,p_g,P2,chi,rho,basket,delta"; }

std::string row_to_csv(const ReportRow& r) {
    std::ostringstream os;
    os << r.alpha << ',' << r.deg << ',' << csv_quote(format_tuple(r.weights)) << ',' << csv_quote(r.b_weight) << ','
       << format_rational(r.vol) << ',' << opt_big(r.p_g) << ',' << opt_big(r.P2) << ',' << r.chi << ','
       << (r.rho ? std::to_string(*r.rho) : kUnsupported) << ',' << csv_quote(r.basket ? r.basket->str() : kUnsupported)
       << ',' << (r.delta ? format_rational(*r.delta) : kNotComputed);
    return os.str();
}

ReportRow row_from_csv(const std::string& line) {
    auto f = csv_split(line);
    if (f.size() != 11) throw Error("parse error", "expected 11 CSV fields, got " + std::to_string(f.size()));
    ReportRow r;
    r.alpha = std::stoll(f[0]);
    r.deg = std::stoll(f[1]);
    r.weights = parse_tuple(f[2]);
    r.b_weight = f[3];
    r.vol = parse_rational(f[4]);
    r.p_g = parse_opt_big(f[5]);
    r.P2 = parse_opt_big(f[6]);
    r.chi = BigInt(f[7]);
    if (f[8] != kUnsupported) r.rho = std::stoll(f[8]);
    if (f[9] != kUnsupported) r.basket = Basket::parse(f[9]);
    if (f[10] != kNotComputed) r.delta = parse_rational(f[10]);
    return r;
}

std::string md_header() {
    return "| alpha | deg | weight | B-weight | Vol | p_g | P2 | chi | rho | basket | Delta |\n"
           "|---|---|---|---|---|---|---|---|---|---|---|";
}

std::string row_to_md(const ReportRow& r) {
    std::ostringstream os;
    os << "| " << r.alpha << " | " << r.deg << " | " << format_tuple(r.weights) << " | " << r.b_weight << " | "
       << format_rational(r.vol) << " | " << opt_big(r.p_g) << " | " << opt_big(r.P2) << " | " << r.chi << " | "
       << (r.rho ? std::to_string(*r.rho) : "-") << " | " << (r.basket ? r.basket->str() : "-") << " | "
       << (r.delta ? format_rational(*r.delta) : "-") << " |";
    return os.str();
}

nlohmann::json report_json(const MinimalModelReport& r) {
    auto j = row_to_json(r.row());
    j["hypersurface"] = r.source.str();
    j["kodaira_class"] = to_string(r.kodaira);
    j["isolated"] = r.isolated;
    if (!r.P2) j["P2_monomials"] = r.P2_count.str();  // ungated count, for comparison only
    auto sing = nlohmann::json::array();
    for (const auto& p : r.singularities)
        sing.push_back({{"type", p.type.str()},
                        {"count", p.count},
                        {"curve", p.curve},
                        {"origin", p.origin},
                        {"class", to_string(p.cls)}});
    j["singularities"] = sing;
    if (!r.certificates.empty()) j["certificate"] = certificate_json(r.certificates.at(r.chosen));
    j["certificates_tried"] = r.certificates.size();
    return j;
}

}  // namespace wmin
