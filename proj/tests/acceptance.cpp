// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every failing item is on the known-failure list below
// (each one is a discrepancy in the published data, explained in the README),
// and 1 on any other failure, so regressions still break ctest.

#include "wmin/families.hpp"
#include "wmin/search.hpp"
#include "wmin/tables.hpp"
#include "wmin/terminalize.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace wmin;

namespace {

// Pinned tolerances. Everything else is exact.
const Rational kRatioTolerance(1, 20);  // |Vol/N(n) - 9/8| for the V* series, n >= 30
constexpr double kTableASeconds = 60.0;

const std::set<std::string> kKnownFailures = {
    "C+.3",        // violates condition (4) of the one-point criterion; see README
    "family 4.6",  // printed conditions admit r = 5 mod 6
    "family 7.4",  // printed conditions admit r = 3 mod 4
    "family 7.14", // printed conditions admit even r and r = 3 mod 4
    "family 7.15",
};

struct Outcome {
    std::vector<std::string> failures;  // item keys
    std::string summary;
};

const ExpectedTables& tables() {
    static const auto t = load_tables(WMIN_DATA_DIR "/tables.json");
    return t;
}

WeightedHypersurface hyp(const nlohmann::json& row) {
    return WeightedHypersurface(Weights(row.at("weights").get<std::vector<Int>>()), row.at("deg").get<Int>());
}

void verify_rows(const std::string& id, Outcome& o, int& ok, int& total) {
    for (const auto& c : verify_table(tables(), id)) {
        ++total;
        if (c.ok())
            ++ok;
        else
            o.failures.push_back(c.table + "." + c.no);
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int ok = 0, total = 0;
    verify_rows("A", o, ok, total);
    double s = seconds_since(t0);
    if (s >= kTableASeconds) o.failures.push_back("A runtime");
    char buf[160];
    std::snprintf(buf, sizeof buf, "Table A: %d/%d rows match alpha, Vol, P2, chi, rho, basket (%.1f s)", ok, total, s);
    o.summary = buf;
    return o;
}

Outcome criterion2() {
    Outcome o;
    int ok = 0, total = 0;
    verify_rows("Ap", o, ok, total);
    int unsupported = 0;
    for (const auto& row : tables().at("Ap").rows) {
        auto out = run_construction(hyp(row));
        if (!succeeded(out)) continue;  // already counted by verify_rows
        const auto& r = std::get<MinimalModelReport>(out);
        if (!r.rho) ++unsupported;
        else o.failures.push_back("Ap." + row.at("no").get<std::string>() + " rho");
    }
    o.summary = "Table Ap: " + std::to_string(ok) + "/" + std::to_string(total) + " rows match Vol, P2, chi; rho " +
                kUnsupported + " on " + std::to_string(unsupported) + " rows";
    return o;
}

Outcome criterion3() {
    Outcome o;
    int ok = 0, total = 0;
    verify_rows("C", o, ok, total);
    verify_rows("C+", o, ok, total);
    auto delta = [](const char* ref) -> std::string {
        auto out = run_construction(hyp(tables().row(ref)));
        if (!succeeded(out)) return "failed";
        const auto& d = std::get<MinimalModelReport>(out).noether_delta;
        return d ? format_rational(*d) : std::string("none");
    };
    std::string d7 = delta("C.7"), d10 = delta("C.10"), d11 = delta("C.11");
    if (d7 != "0") o.failures.push_back("C.7 delta");
    if (d11 != "0") o.failures.push_back("C.11 delta");
    if (d10 != "1/30") o.failures.push_back("C.10 delta");
    o.summary = "Tables C, C+: " + std::to_string(ok) + "/" + std::to_string(total) + " rows match; delta(C.7)=" + d7 +
                ", delta(C.10)=" + d10 + ", delta(C.11)=" + d11;
    for (const auto& c : verify_table(tables(), "C+"))
        for (const auto& n : c.notes) o.summary += "; " + c.table + "." + c.no + ": " + n;
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto res = search(SearchRange{}, 0);
    std::set<std::pair<Int, std::vector<Int>>> found;
    for (const auto& m : res.successes) found.insert({m.source.degree(), m.source.weights().sorted()});
    int hit = 0, total = 0;
    for (const auto& row : tables().at("A").rows) {
        auto w = row.at("weights").get<std::vector<Int>>();
        std::sort(w.begin(), w.end());
        ++total;
        if (found.count({row.at("deg").get<Int>(), w}))
            ++hit;
        else
            o.failures.push_back("search A." + row.at("no").get<std::string>());
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "search 1<=alpha<=10, 10<=d<=100, w<=60: %zu candidates, %zu successes, %d/%d Table A rows found (%.1f s)",
                  res.stats.candidates, res.stats.successes, hit, total, seconds_since(t0));
    o.summary = buf;
    return o;
}

Outcome criterion5() {
    Outcome o;
    int ok = 0, total = 0;
    verify_rows("B", o, ok, total);
    std::ostringstream s;
    s << "Table B: " << ok << "/" << total << " rows match";

    for (bool corrected : {false, true}) {
        std::map<std::string, int> bad;
        int members = 0, excluded = 0, failures = 0;
        for (const auto& f : load_families(WMIN_DATA_DIR "/families.json"))
            for (Int r = 1; r <= 200; ++r) {
                if (!f.admits(r, corrected)) continue;
                auto c = verify_family_member(f, r, corrected);
                if (!c.in_scope) {
                    ++excluded;
                    continue;
                }
                ++members;
                if (!c.ok()) {
                    ++failures;
                    ++bad[f.id()];
                }
            }
        s << "; families r<=200 with " << (corrected ? "corrected" : "printed") << " conditions: " << members
          << " members, " << failures << " fail";
        if (!bad.empty()) {
            s << " (";
            bool first = true;
            for (const auto& [id, n] : bad) {
                s << (first ? "" : ", ") << id << ": " << n;
                first = false;
                // printed conditions are what the criterion asks for; corrected ones must be clean
                o.failures.push_back(corrected ? "corrected family " + id : "family " + id);
            }
            s << ")";
        }
        s << ", " << excluded << " outside the standing hypotheses";
    }
    o.summary = s.str();
    return o;
}

Outcome criterion6() {
    Outcome o;
    int ok = 0, total = 0;
    verify_rows("X", o, ok, total);
    verify_rows("D", o, ok, total);
    std::vector<std::string> vols;
    for (const auto& row : tables().at("X").rows) {
        try {
            vols.push_back(format_rational(higher_dim_from_base(hyp(row)).vol));
        } catch (const Error&) {
            vols.push_back("error");
        }
    }
    const std::vector<std::string> want{"2/3", "1/2", "1/12", "1/70"};
    if (vols != want) o.failures.push_back("X volumes");
    auto b19 = bound_nm2(19, 18);
    if (b19 != Rational(62, 3 * 17 * 17 * 17)) o.failures.push_back("D n=19 bound");
    std::string v;
    for (const auto& x : vols) v += (v.empty() ? "" : ", ") + x;
    o.summary = "Tables X, D: " + std::to_string(ok) + "/" + std::to_string(total) + " rows match; X volumes " + v +
                "; n=19 bound " + format_rational(b19);
    return o;
}

void all_orders(const CyclicQuotientType& t, const StarFan& fan, std::set<std::vector<std::array<std::size_t, 3>>>& seen,
                std::set<std::string>& results) {
    if (!seen.insert(fan.cones()).second) return;
    bool done = true;
    for (std::size_t s = 0; s < fan.s_count(); ++s) {
        if (fan.inserted(s)) continue;
        done = false;
        StarFan next = fan;
        next.insert(s);
        all_orders(t, next, seen, results);
    }
    if (done) {
        auto rec = record_from_fan(t, fan);  // throws unless leaves are terminal and indices add up to r
        results.insert(rec.basket.str() + " rho=" + std::to_string(rec.rho_contribution));
    }
}

Outcome criterion7() {
    Outcome o;
    auto T = [](const char* s) { return CyclicQuotientType::parse(s); };
    if (terminalize_type(T("1/7(1,2,4)")).rho_contribution != 3) o.failures.push_back("rho 1/7(1,2,4)");
    if (terminalize_type(T("1/3(1,1,1)")).rho_contribution != 1) o.failures.push_back("rho 1/3(1,1,1)");
    auto b = terminalize_type(T("1/4(1,2,3)"));
    if (b.rho_contribution != 1 || b.basket != Basket::parse("2×(1,2)")) o.failures.push_back("1/4(1,2,3)");
    for (Int r = 3; r <= 99; r += 2)
        if (terminalize_type(CyclicQuotientType(r, {1, 1, r - 2})).rho_contribution != r / 2)
            o.failures.push_back("rho 1/" + std::to_string(r) + "(1,1," + std::to_string(r - 2) + ")");

    // Every order is explored once per class (units and permutations only relabel the lattice);
    // each type is then terminalized directly and must agree with its class.
    int types = 0, runs = 0;
    std::map<std::string, std::string> by_class;
    for (Int r = 2; r <= 30; ++r)
        for (Int a1 = 1; a1 < r; ++a1)
            for (Int a2 = a1; a2 < r; ++a2)
                for (Int a3 = a2; a3 < r; ++a3) {
                    CyclicQuotientType t(r, {a1, a2, a3});
                    if (!is_isolated(t) || reid_tai(t) != SingClass::canonical_strict) continue;
                    ++types;
                    try {
                        auto rep = normalize_type(t);
                        auto it = by_class.find(rep.str());
                        if (it == by_class.end()) {
                            std::set<std::vector<std::array<std::size_t, 3>>> seen;
                            std::set<std::string> results;
                            all_orders(rep, StarFan(rep), seen, results);
                            runs += static_cast<int>(seen.size());
                            if (results.size() != 1) o.failures.push_back("order " + rep.str());
                            it = by_class.emplace(rep.str(), results.empty() ? "" : *results.begin()).first;
                        }
                        auto direct = terminalize_type(t);
                        std::string got = direct.basket.str() + " rho=" + std::to_string(direct.rho_contribution);
                        if (got != it->second) o.failures.push_back("class " + t.str());
                    } catch (const Error& e) {
                        o.failures.push_back(t.str() + ": " + e.what());
                    }
                }
    o.summary = "terminalization: Example shapes rho 3 / floor(r/2) (odd r<=99) / 1, basket of 1/4(1,2,3) = " +
                b.basket.str() + "; " + std::to_string(types) + " canonical types r<=30 in " +
                std::to_string(by_class.size()) + " classes independent of subdivision order (" + std::to_string(runs) + " fans, leaf indices summing to r on each)";
    return o;
}

bool has_terminal_form(Int r, const std::vector<Int>& a) {
    for (Int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::vector<Int> v;
        for (Int x : a) v.push_back(mod_pos(u * x, r));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j && v[i] == 1 && v[j] == r - 1) return true;
    }
    return false;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(20240918);
    int n = 0;
    while (n < 10000) {
        Int r = std::uniform_int_distribution<Int>(2, 500)(rng);
        std::uniform_int_distribution<Int> ad(1, r - 1);
        std::vector<Int> a{ad(rng), ad(rng), ad(rng)};
        CyclicQuotientType t(r, a);
        if (!is_isolated(t)) continue;
        ++n;
        auto m = normalize_type(t);
        auto cls = reid_tai(t);
        bool good = reid_tai(m) == cls && nabla(m) == nabla(t) && (nabla(t) > 0) == (cls == SingClass::terminal) &&
                    (nabla(t) == 0) == (cls == SingClass::canonical_strict);
        if (good && cls == SingClass::terminal) good = basket_pair(t) == basket_pair(m);
        if (!good) o.failures.push_back("fuzz " + t.str());
    }
    int exhaustive = 0;
    for (Int r = 2; r <= 60; ++r)
        for (Int a = 1; a < r; ++a)
            for (Int b = a; b < r; ++b)
                for (Int c = b; c < r; ++c) {
                    if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1 || std::gcd(c, r) != 1) continue;
                    ++exhaustive;
                    CyclicQuotientType t(r, {a, b, c});
                    if ((reid_tai(t) == SingClass::terminal) != has_terminal_form(r, {a, b, c}))
                        o.failures.push_back("terminal form " + t.str());
                }
    o.summary = "classification: " + std::to_string(n) + " random isolated types (r<=500) invariant under normal form; " +
                std::to_string(exhaustive) + " types r<=60 agree with the 1/r(1,-1,b) form";
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (int n = 3; n <= 20; ++n) {
        Rational nm1 = n <= 5 ? Rational(2, n - 1) : Rational(ceil_div(8 * (n - 2), 3), (n - 1) * (n - 1));
        Rational nm2 = n == 3    ? Rational(1, 3)
                       : n <= 11 ? Rational(1, (n - 1) * (n - 2))
                                 : Rational(4 * n - 14, 3 * (n - 2) * (n - 2) * (n - 2));
        if (bound_nm1(n, n) != nm1) o.failures.push_back("nm1 n=" + std::to_string(n));
        if (bound_nm2(n, n - 1) != nm2) o.failures.push_back("nm2 n=" + std::to_string(n));
    }
    const Rational target(9, 8);
    Rational worst = 0;
    int checked = 0;
    for (int n = 30; n <= 200; ++n) {
        if (n % 3 == 0) continue;
        auto v = v_star_series(n);
        Rational dev = abs(v.volume / v.n_bound - target);
        worst = std::max(worst, dev);
        ++checked;
        if (dev > kRatioTolerance) o.failures.push_back("V* n=" + std::to_string(n));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", worst.convert_to<double>());
    o.summary = "bounds: closed forms hold for 3<=n<=20 at minimal p_g; V* ratio within 1/20 of 9/8 for " +
                std::to_string(checked) + " values 30<=n<=200 (max deviation " + buf + ")";
    return o;
}

}  // namespace

// With arguments, runs only the listed criteria: `acceptance 3 5`.
int main(int argc, char** argv) {
    std::set<std::size_t> only;
    for (int a = 1; a < argc; ++a) only.insert(static_cast<std::size_t>(std::atoi(argv[a])));
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9};
    std::vector<std::string> unexpected;
    bool any = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!only.empty() && !only.count(i + 1)) continue;
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
            o.summary = "aborted";
        }
        std::cout << (o.failures.empty() ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << o.summary;
        if (!o.failures.empty()) {
            std::cout << " | failing:";
            for (const auto& f : o.failures) std::cout << " " << f;
        }
        std::cout << std::endl;
        any = any || !o.failures.empty();
        for (const auto& f : o.failures)
            if (!kKnownFailures.count(f)) unexpected.push_back(f);
    }
    if (!unexpected.empty()) {
        std::cout << "unexpected failures:";
        for (const auto& f : unexpected) std::cout << " " << f;
        std::cout << std::endl;
        return 1;
    }
    std::cout << (any ? "all failures are known discrepancies in the published data" : "all criteria pass") << std::endl;
    return 0;
}
