// wmin: command-line front end for the minimal-model construction.
//
//   wmin verify [A Ap C C+ B X D]        compare against the embedded tables
//   wmin run 1,1,2,3,5 13                one hypersurface, full report
//   wmin search --range alpha=1,deg=10..18
//   wmin family 6r 3,4,5 13..13
//   wmin lift 1,1,10,14,35 70
//   wmin bounds 5 4
//   wmin table C
//
// Exit status: 0 success, 1 mismatch or failed construction, 2 usage error.

#include "wmin/families.hpp"
#include "wmin/search.hpp"
#include "wmin/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wmin;

namespace {

enum class Format { json, csv, md };

struct Globals {
    Format format = Format::md;
    std::string data_dir = WMIN_DATA_DIR;
    int jobs = 0;
};

std::vector<Int> parse_ints(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error("invalid argument", "not an integer list: '" + s + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error("invalid argument", "empty integer list");
    return out;
}

std::pair<Int, Int> parse_span(const std::string& s) {
    auto dots = s.find("..");
    auto lo = parse_ints(s.substr(0, dots));
    auto hi = dots == std::string::npos ? lo : parse_ints(s.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw Error("invalid argument", "bad range '" + s + "'");
    return {lo[0], hi[0]};
}

WeightedHypersurface parse_hypersurface(const std::string& weights, Int d) {
    auto w = parse_ints(weights);
    for (Int x : w)
        if (x <= 0) throw Error("invalid argument", "weights must be positive");
    if (d <= 0) throw Error("invalid argument", "degree must be positive");
    return WeightedHypersurface(Weights(std::move(w)), d);
}

void print_rows(const std::vector<ReportRow>& rows, Format f, std::ostream& os) {
    switch (f) {
        case Format::json: {
            auto arr = nlohmann::json::array();
            for (const auto& r : rows) arr.push_back(row_to_json(r));
            os << arr.dump(1) << "\n";
            break;
        }
        case Format::csv:
            os << csv_header() << "\n";
            for (const auto& r : rows) os << row_to_csv(r) << "\n";
            break;
        case Format::md:
            os << md_header() << "\n";
            for (const auto& r : rows) os << row_to_md(r) << "\n";
            break;
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---- verify ----

nlohmann::json check_json(const RowCheck& c) {
    auto diffs = nlohmann::json::array();
    for (const auto& d : c.diffs) diffs.push_back({{"column", d.column}, {"expected", d.expected}, {"actual", d.actual}});
    nlohmann::json j{{"table", c.table}, {"no", c.no}, {"subject", c.subject}, {"ok", c.ok()}, {"diffs", diffs}};
    if (!c.error.empty()) j["error"] = c.error;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

int cmd_verify(const Globals& g, std::vector<std::string> ids) {
    auto all = load_tables(g.data_dir + "/tables.json");
    if (ids.empty()) ids = {"A", "Ap", "C", "C+", "B", "X", "D"};
    std::vector<RowCheck> checks;
    for (const auto& id : ids) {
        auto rows = verify_table(all, id);
        checks.insert(checks.end(), rows.begin(), rows.end());
    }
    bool ok = std::all_of(checks.begin(), checks.end(), [](const RowCheck& c) { return c.ok(); });
    auto& os = std::cout;
    if (g.format == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& c : checks) arr.push_back(check_json(c));
        os << arr.dump(1) << "\n";
    } else if (g.format == Format::csv) {
        os << "table,no,subject,ok,column,expected,actual,detail\n";
        for (const auto& c : checks) {
            std::string head = c.table + "," + c.no + "," + csv_field(c.subject) + "," + (c.ok() ? "1" : "0") + ",";
            if (c.ok() && c.notes.empty()) os << head << ",,,\n";
            for (const auto& d : c.diffs) os << head << d.column << "," << csv_field(d.expected) << "," << csv_field(d.actual) << ",\n";
            if (!c.error.empty()) os << head << ",,," << csv_field(c.error) << "\n";
            for (const auto& n : c.notes) os << head << ",,," << csv_field("note: " + n) << "\n";
        }
    } else {
        std::string table;
        std::size_t pass = 0, count = 0;
        auto flush = [&] {
            if (!table.empty()) os << "  " << table << ": " << pass << "/" << count << " rows match\n";
        };
        for (const auto& c : checks) {
            if (c.table != table) {
                flush();
                table = c.table;
                pass = count = 0;
            }
            ++count;
            pass += c.ok();
            if (!c.ok()) {
                os << table << "." << c.no << "  " << c.subject << "  MISMATCH\n";
                for (const auto& d : c.diffs)
                    os << "    " << d.column << ": expected " << d.expected << ", got " << d.actual << "\n";
                if (!c.error.empty()) os << "    " << c.error << "\n";
            }
            for (const auto& n : c.notes) os << table << "." << c.no << "  note: " << n << "\n";
        }
        flush();
    }
    return ok ? 0 : 1;
}

// ---- run ----

int cmd_run(const Globals& g, const std::string& weights, Int d, bool all_certs, bool waive4) {
    auto h = parse_hypersurface(weights, d);
    ConstructionOptions opt;
    opt.keep_certificates = all_certs;
    opt.waive_condition4 = waive4;
    auto o = run_construction(h, opt);
    if (auto* f = std::get_if<ConstructionFailure>(&o)) {
        if (g.format == Format::json)
            std::cout << nlohmann::json{{"hypersurface", h.str()}, {"failed_at_step", f->stage}, {"reason", f->reason}}.dump(1)
                      << "\n";
        else
            std::cout << h.str() << ": step " << f->stage << " failed: " << f->reason << "\n";
        return 1;
    }
    const auto& rep = std::get<MinimalModelReport>(o);
    if (waive4) std::cerr << "warning: condition (4) waived; this report is diagnostic only\n";
    if (g.format == Format::json) {
        auto j = report_json(rep);
        if (all_certs) {
            auto arr = nlohmann::json::array();
            for (const auto& c : rep.certificates) arr.push_back(certificate_json(c));
            j["certificates"] = arr;
        }
        std::cout << j.dump(1) << "\n";
    } else {
        print_rows({rep.row()}, g.format, std::cout);
    }
    return 0;
}

// ---- search ----

int cmd_search(const Globals& g, const std::string& config, const std::string& keys) {
    SearchRange range;
    if (!config.empty()) {
        std::ifstream in(config);
        if (!in) throw Error("io error", "cannot open " + config);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error("parse error", config + ": " + e.what());
        }
        range = range_from_json(j, range);
    }
    if (!keys.empty()) range = parse_range_keys(keys, range);
    auto res = search(range, g.jobs);
    std::vector<ReportRow> rows;
    for (const auto& r : res.successes) rows.push_back(r.row());
    if (g.format == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        std::cout << nlohmann::json{{"rows", arr}, {"summary", res.stats.to_json()}}.dump(1) << "\n";
    } else {
        print_rows(rows, g.format, std::cout);
        std::cerr << "summary: " << res.stats.to_json().dump() << "\n";
    }
    return 0;
}

// ---- family ----

int cmd_family(const Globals& g, const std::string& kind, const std::string& params, const std::string& span,
               bool tabulated, bool corrected) {
    FamilySpec spec;
    spec.table = "cli";
    spec.kind = parse_family_kind(kind);
    auto p = parse_ints(params);
    if (p.size() != 3) throw Error("invalid argument", "family parameters are a,b,c (6r) or a,b,k");
    spec.a = p[0];
    spec.b = p[1];
    (spec.kind == FamilyKind::six_r ? spec.c : spec.k) = p[2];
    // a family given on the command line carries no residue conditions; r must exceed the offset
    spec.r_greater_than = spec.alpha_offset();
    if (tabulated || corrected) {
        bool found = false;
        auto fams = load_families(g.data_dir + "/families.json");
        for (const auto& f : fams)
            if (f.kind == spec.kind && f.blowup_weights() == spec.blowup_weights()) {
                spec = f;
                found = true;
                break;
            }
        if (!found) throw Error("invalid argument", "no tabulated family " + kind + " " + params);
    }
    auto [lo, hi] = parse_span(span);
    auto arr = nlohmann::json::array();
    bool ok = true;
    for (Int r = lo; r <= hi; ++r) {
        nlohmann::json j{{"r", r}};
        if (!spec.admits(r, corrected)) {
            j["status"] = "excluded";
            arr.push_back(j);
            continue;
        }
        auto inst = *family_instance(spec, r, corrected);
        j["hypersurface"] = inst.hypersurface.str();
        j["b_weight"] = b_weight_string(r, inst.blowup_weights);
        auto chk = verify_family_member(spec, r, corrected);
        if (const auto* rep = std::get_if<MinimalModelReport>(&chk.outcome)) j["vol"] = format_rational(rep->volume);
        j["in_scope"] = chk.in_scope;
        j["status"] = chk.ok() ? "ok" : "failed";
        if (!chk.ok()) j["problem"] = chk.problem;
        ok = ok && (chk.ok() || !chk.in_scope);
        arr.push_back(j);
    }
    if (g.format == Format::json) {
        std::cout << arr.dump(1) << "\n";
    } else {
        const bool md = g.format == Format::md;
        std::cout << (md ? "| r | hypersurface | B-weight | Vol | status |\n|---|---|---|---|---|\n"
                         : "r,hypersurface,b_weight,vol,status\n");
        for (const auto& j : arr) {
            std::vector<std::string> cells{std::to_string(j["r"].get<Int>()), j.value("hypersurface", ""),
                                           j.value("b_weight", ""), j.value("vol", ""),
                                           j["status"].get<std::string>() + (j.contains("problem") ? ": " + j["problem"].get<std::string>() : "")};
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (md)
                    std::cout << "| " << cells[i] << " ";
                else
                    std::cout << (i ? "," : "") << csv_field(cells[i]);
            }
            std::cout << (md ? "|\n" : "\n");
        }
    }
    return ok ? 0 : 1;
}

// ---- lift ----

int cmd_lift(const Globals& g, const std::string& weights, Int d) {
    auto h = parse_hypersurface(weights, d);
    auto lift = lift_hypersurface(h);
    nlohmann::json j{{"base", h.str()},
                     {"lifted", lift.lifted.str()},
                     {"n", lift.n},
                     {"guaranteed", to_string(lift.guaranteed)},
                     {"exact", to_string(lift.exact)}};
    j["min_alpha_plus_nabla"] = lift.min_alpha_plus_nabla ? nlohmann::json(*lift.min_alpha_plus_nabla) : nlohmann::json(nullptr);
    j["volume"] = lift.volume ? nlohmann::json(format_rational(*lift.volume)) : nlohmann::json(nullptr);
    if (lift.p_g_lower) j["p_g_lower"] = *lift.p_g_lower;
    if (lift.exact == SingClass::noncanonical) {
        // fall back to the weight-by-weight lift through the base's blow-up
        try {
            auto hd = higher_dim_from_base(h);
            j["add_one_weight"] = {{"n", hd.n},
                                   {"weights", hd.weights},
                                   {"volume", format_rational(hd.vol)},
                                   {"canonical_dimension", hd.can_dim}};
        } catch (const Error& e) {
            j["add_one_weight"] = {{"error", std::string(e.code()) + ": " + e.what()}};
        }
    }
    if (g.format == Format::json) {
        std::cout << j.dump(1) << "\n";
    } else {
        const bool md = g.format == Format::md;
        for (const auto& [k, v] : j.items()) {
            std::string val = v.is_string() ? v.get<std::string>() : v.dump();
            std::cout << (md ? "- " + k + ": " + val : k + "," + csv_field(val)) << "\n";
        }
    }
    return 0;
}

// ---- bounds ----

int cmd_bounds(const Globals& g, int n, Int p_g) {
    if (n < 3) throw Error("invalid argument", "n must be at least 3");
    nlohmann::json j{{"n", n}, {"p_g", p_g}};
    auto one = [&](const char* key, Int minimum, Rational (*f)(int, Int)) {
        nlohmann::json e;
        if (p_g >= minimum) {
            e = {{"p_g", p_g}, {"bound", format_rational(f(n, p_g))}};
        } else {
            // below the least p_g the case allows; report the bound at that least value
            e = {{"p_g", minimum}, {"bound", format_rational(f(n, minimum))}, {"note", "p_g raised to the minimum for this case"}};
        }
        j[key] = e;
    };
    one("canonical_dimension_n-1", n, bound_nm1);
    one("canonical_dimension_n-2", n - 1, bound_nm2);
    if (g.format == Format::json) {
        std::cout << j.dump(1) << "\n";
    } else {
        const bool md = g.format == Format::md;
        std::cout << (md ? "| case | p_g | bound | note |\n|---|---|---|---|\n" : "case,p_g,bound,note\n");
        for (const char* key : {"canonical_dimension_n-1", "canonical_dimension_n-2"}) {
            const auto& e = j[key];
            std::string cells[] = {key, std::to_string(e["p_g"].get<Int>()), e["bound"].get<std::string>(), e.value("note", "")};
            for (std::size_t i = 0; i < 4; ++i) std::cout << (md ? "| " + cells[i] + " " : (i ? "," : "") + csv_field(cells[i]));
            std::cout << (md ? "|\n" : "\n");
        }
    }
    return 0;
}

// ---- table ----

int cmd_table(const Globals& g, const std::string& id) {
    auto all = load_tables(g.data_dir + "/tables.json");
    const auto& t = all.at(id);
    if (g.format == Format::json) {
        std::cout << nlohmann::json{{"table", id}, {"verify", t.verify}, {"rows", t.rows}}.dump(1) << "\n";
        return 0;
    }
    std::vector<std::string> cols;
    for (const auto& r : t.rows)
        for (const auto& [k, v] : r.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    auto cell = [](const nlohmann::json& r, const std::string& k) -> std::string {
        if (!r.contains(k)) return "";
        const auto& v = r.at(k);
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
            return s + ")";
        }
        return v.is_null() ? "" : v.dump();
    };
    const bool md = g.format == Format::md;
    for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (md ? "| " + cols[i] + " " : (i ? "," : "") + cols[i]);
    std::cout << (md ? "|\n" : "\n");
    if (md) {
        for (std::size_t i = 0; i < cols.size(); ++i) std::cout << "|---";
        std::cout << "|\n";
    }
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            std::cout << (md ? "| " + cell(r, cols[i]) + " " : (i ? "," : "") + csv_field(cell(r, cols[i])));
        std::cout << (md ? "|\n" : "\n");
    }
    if (!t.note.empty()) std::cerr << "note: " << t.note << "\n";
    return 0;
}

bool usage_error(const Error& e) {
    std::string c = e.code();
    return c == "invalid argument" || c == "invalid range" || c == "unknown table" || c == "bad reference" ||
           c == "io error" || c == "parse error";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal models of weighted hypersurfaces via one weighted blow-up"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"md", Format::md}};
    app.add_option("--format", g.format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--data", g.data_dir, "directory holding tables.json and families.json");
    app.add_option("--jobs", g.jobs, "worker threads for search (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::vector<std::string> table_ids;
    auto* verify = app.add_subcommand("verify", "reproduce the embedded tables");
    verify->add_option("tables", table_ids, "A Ap C C+ B X D (default: all)");

    std::string weights;
    Int degree = 0;
    bool all_certs = false, waive4 = false;
    auto* run = app.add_subcommand("run", "run the construction on one hypersurface");
    run->add_option("weights", weights, "comma-separated weights")->required();
    run->add_option("degree", degree)->required();
    run->add_flag("--certificates", all_certs, "include every nefness certificate tried");
    run->add_flag("--waive-condition4", waive4, "diagnostic: accept blow-up weights with ill-formed P(e)");

    std::string config, range_keys;
    auto* srch = app.add_subcommand("search", "search weights and degrees for successful constructions");
    srch->add_option("--config", config, "JSON file overriding the search range");
    srch->add_option("--range", range_keys, "alpha=LO..HI,deg=LO..HI,wmax=N");

    std::string kind, params, span;
    bool tabulated = false, corrected = false;
    auto* fam = app.add_subcommand("family", "evaluate a Kodaira dimension 2 family over a range of r");
    fam->add_option("kind", kind, "6r, 3r+3k or 4r+2k")->required();
    fam->add_option("params", params, "a,b,c for 6r; a,b,k otherwise")->required();
    fam->add_option("r", span, "LO..HI")->required();
    fam->add_flag("--tabulated", tabulated, "restrict r by the tabulated conditions");
    fam->add_flag("--corrected", corrected, "as --tabulated, plus the corrections recorded in the data file");

    auto* lift = app.add_subcommand("lift", "lift a 3-fold to higher dimension by adding weights 1");
    lift->add_option("weights", weights)->required();
    lift->add_option("degree", degree)->required();

    int n = 0;
    Int p_g = 0;
    auto* bnd = app.add_subcommand("bounds", "volume lower bounds for canonical dimension n-1 and n-2");
    bnd->add_option("n", n)->required();
    bnd->add_option("p_g", p_g)->required();

    std::string table_id;
    auto* tbl = app.add_subcommand("table", "print an embedded table");
    tbl->add_option("id", table_id)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(g, table_ids);
        if (*run) return cmd_run(g, weights, degree, all_certs, waive4);
        if (*srch) return cmd_search(g, config, range_keys);
        if (*fam) return cmd_family(g, kind, params, span, tabulated, corrected);
        if (*lift) return cmd_lift(g, weights, degree);
        if (*bnd) return cmd_bounds(g, n, p_g);
        if (*tbl) return cmd_table(g, table_id);
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return usage_error(e) ? 2 : 1;
    }
    return 2;
}
