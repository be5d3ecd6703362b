#include "wmin/locus.hpp"
#include "wmin/tables.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wmin;

namespace {

WeightedHypersurface H(std::vector<Int> w, Int d) { return WeightedHypersurface(Weights(std::move(w)), d); }
CyclicQuotientType T(const char* s) { return CyclicQuotientType::parse(s); }

std::vector<CyclicQuotientType> normalized_points(const SingularLocus& l) {
    std::vector<CyclicQuotientType> out;
    for (const auto& s : l.strata)
        for (Int c = 0; c < s.count; ++c) out.push_back(normalize_type(s.type));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.str() < b.str(); });
    return out;
}

std::vector<CyclicQuotientType> normalized(std::vector<CyclicQuotientType> v) {
    for (auto& t : v) t = normalize_type(t);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.str() < b.str(); });
    return v;
}

// Monomials x^p y^q of degree d in two weights, counted by hand.
Int binary_monomials(Int a, Int b, Int d) {
    Int n = 0;
    for (Int p = 0; p * a <= d; ++p)
        if ((d - p * a) % b == 0) ++n;
    return n;
}

std::vector<WeightedHypersurface> isolated_table_rows() {
    auto all = load_tables(WMIN_DATA_DIR "/tables.json");
    std::vector<WeightedHypersurface> out;
    for (const char* id : {"A", "C", "C+", "B"})
        for (const auto& r : all.at(id).rows)
            out.push_back(H(r.at("weights").get<std::vector<Int>>(), r.at("deg").get<Int>()));
    return out;
}

}  // namespace

TEST_CASE("vertex types") {
    auto x33 = H({3, 4, 5, 7, 13}, 33);
    CHECK(*vertex_type(x33, 4) == T("1/13(3,4,5)"));
    CHECK_FALSE(vertex_type(x33, 0));
    auto x70 = H({3, 5, 7, 13, 35}, 70);
    CHECK(same_type(*vertex_type(x70, 3), T("1/13(5,3,2)")));
    CHECK(same_type(*vertex_type(x70, 3), T("1/13(3,7,35)")));
}

TEST_CASE("edge strata") {
    auto x70 = H({3, 5, 7, 13, 35}, 70);
    auto e = *edge_strata(x70, 1, 4);
    CHECK(e.kind == StratumKind::isolated_points);
    CHECK(e.count == 2);
    CHECK(same_type(e.type, T("1/5(1,4,1)")));
    auto f = *edge_strata(x70, 2, 4);
    CHECK(f.count == 2);
    CHECK(same_type(f.type, T("1/7(1,4,2)")));
    CHECK_FALSE(edge_strata(x70, 0, 1));

    auto x21 = H({1, 2, 4, 5, 7}, 21);
    auto c = *edge_strata(x21, 1, 2);
    CHECK(c.kind == StratumKind::curve);
    CHECK(c.type.index() == 2);
    CHECK(c.type.is_transverse());
}

TEST_CASE("singular loci of worked examples") {
    auto x33 = singular_locus(H({3, 4, 5, 7, 13}, 33));
    CHECK(normalized_points(x33) ==
          normalized({T("1/4(3,3,1)"), T("1/5(3,4,1)"), T("1/7(6,1,5)"), T("1/13(3,4,5)")}));
    auto x70 = singular_locus(H({1, 1, 10, 14, 35}, 70));
    CHECK(normalized_points(x70) == normalized({T("1/2(1,1,1)"), T("1/5(1,1,4)"), T("1/7(1,1,3)")}));
    CHECK(singular_locus(H({1, 1, 1, 1, 1}, 5)).strata.empty());
    CHECK_FALSE(x33.has_non_isolated());
    CHECK(singular_locus(H({1, 2, 4, 5, 7}, 21)).has_non_isolated());
}

TEST_CASE("hypothesis and quasismoothness errors") {
    CHECK_THROWS_WITH_AS(singular_locus(H({1, 2, 24, 36, 5}, 72)), doctest::Contains("hypothesis violated"), Error);
    CHECK_THROWS_AS(singular_locus(H({1, 1, 1, 1, 1, 1}, 6)), Error);
    CHECK(triple_gcd_condition(H({3, 4, 5, 7, 13}, 33)));
    CHECK_FALSE(triple_gcd_condition(H({1, 2, 24, 36, 5}, 72)));
}

TEST_CASE("vertex types do not depend on the eliminated coordinate") {
    for (const auto& h : isolated_table_rows()) {
        for (std::size_t i = 0; i < 5; ++i) {
            auto js = vertex_eliminations(h, i);
            if (js.size() < 2) continue;
            auto first = vertex_stratum(h, i, js[0]);
            if (!first) continue;  // weight-1 vertex or not on X
            for (std::size_t j : js) {
                auto s = vertex_stratum(h, i, j);
                CAPTURE(h.str());
                REQUIRE(s);
                CHECK(same_type(s->type, first->type));
            }
        }
    }
}

TEST_CASE("edge point counts equal the interior roots of the binary form") {
    for (const auto& h : isolated_table_rows()) {
        const auto& w = h.weights();
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) {
                Int e = std::gcd(w[i], w[j]);
                if (e == 1 || h.degree() % e != 0) continue;
                auto s = edge_strata(h, i, j);
                Int roots = binary_monomials(w[i], w[j], h.degree()) - 1;
                CAPTURE(h.str());
                CAPTURE(i);
                CAPTURE(j);
                if (roots <= 0) {
                    CHECK((!s || s->count == 0));
                } else {
                    REQUIRE(s);
                    CHECK(s->count == roots);
                }
            }
    }
}

TEST_CASE("every Table A row has exactly one non-canonical point") {
    auto all = load_tables(WMIN_DATA_DIR "/tables.json");
    for (const auto& r : all.at("A").rows) {
        auto h = H(r.at("weights").get<std::vector<Int>>(), r.at("deg").get<Int>());
        Int bad = 0;
        for (const auto& s : singular_locus(h).strata)
            if (s.kind == StratumKind::isolated_points && !s.type.is_transverse() && reid_tai(s.type) == SingClass::noncanonical)
                bad += s.count;
        CAPTURE(h.str());
        CHECK(bad == 1);
    }
}

TEST_CASE("lifted singular locus") {
    auto lifted = lift_singular_locus(H({1, 1, 1, 3, 8}, 16), 2);
    auto base = singular_locus(H({1, 1, 1, 3, 8}, 16));
    Int points = 0;
    for (const auto& s : base.strata) points += s.count;
    CHECK(static_cast<Int>(lifted.size()) == points);
    for (const auto& t : lifted) CHECK(t.dim() == 4);

    auto x70 = lift_singular_locus(H({1, 1, 10, 14, 35}, 70), 9);
    bool seen = false;
    for (const auto& t : x70)
        if (t.index() == 7) {
            CHECK(same_type(t, CyclicQuotientType(7, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3})));
            seen = true;
        }
    CHECK(seen);
    CHECK(lift_singular_locus(H({1, 1, 1, 1, 1}, 7), 2).empty());
    CHECK_THROWS_AS(lift_singular_locus(H({1, 2, 4, 5, 7}, 21), 2), Error);
}
