#include "wmin/nefness.hpp"
#include "wmin/tables.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace wmin;

namespace {

WeightedHypersurface H(std::vector<Int> w, Int d) { return WeightedHypersurface(Weights(std::move(w)), d); }

CenterGeometry center(std::array<std::size_t, 2> line, std::vector<std::size_t> local, Int r, std::vector<Int> res,
                      std::vector<Int> e) {
    CenterGeometry g;
    g.line = line;
    g.local = std::move(local);
    g.type = CyclicQuotientType(r, std::move(res));
    g.blowup_weights = std::move(e);
    return g;
}

NefnessQuery x33(std::size_t pivot = 0) {
    return {H({3, 4, 5, 7, 13}, 33), center({3, 4}, {0, 1, 2}, 13, {3, 4, 5}, {3, 4, 5}), pivot};
}

NefnessQuery x70(std::size_t pivot = 2) {
    return {H({1, 1, 10, 14, 35}, 70), center({3, 4}, {0, 1, 2}, 7, {1, 1, 3}, {1, 1, 3}), pivot};
}

bool holds(const NefnessCertificate& c, int id) {
    return std::all_of(c.log.begin(), c.log.end(), [&](const ConditionEntry& e) { return e.id != id || e.holds; });
}

// Plane curve monomial degree under weights (a,b,c).
Int weighted_degree(const PlaneSystem& p, const MonomialExponent& m) { return p.a * m[0] + p.b * m[1] + p.c * m[2]; }

}  // namespace

TEST_CASE("irreducibility of plane curves") {
    auto a = plane_curve_irreducible(3, 7, 13, 33);
    CHECK(a.kind == IrreducibilityVerdict::Kind::irreducible);

    auto b = plane_curve_irreducible(10, 14, 35, 70);
    CHECK(b.kind == IrreducibilityVerdict::Kind::irreducible);
    CHECK(b.plane == PlaneSystem{1, 1, 1, 1});

    auto c = plane_curve_irreducible(1, 1, 3, 2);
    CHECK(c.kind == IrreducibilityVerdict::Kind::reducible);
    REQUIRE(c.witness);
    CHECK(c.witness->k == 2);
    CHECK(weighted_degree(c.plane, c.witness->g1) == 1);
    CHECK(weighted_degree(c.plane, c.witness->g2) == 1);

    // a single monomial cannot be decided either way
    CHECK(plane_curve_irreducible(2, 3, 5, 7).kind == IrreducibilityVerdict::Kind::inconclusive);
    // every monomial divisible by z: fixed component
    CHECK(plane_curve_irreducible(4, 6, 1, 5).kind == IrreducibilityVerdict::Kind::inconclusive);
}

TEST_CASE("shortcut verdicts agree with the exhaustive check") {
    for (Int a = 1; a <= 14; ++a)
        for (Int b = a; b <= 14; ++b)
            for (Int c = b; c <= 14; ++c)
                for (Int d = 1; d <= 45; ++d) {
                    auto fast = plane_curve_irreducible(a, b, c, d);
                    auto slow = plane_curve_irreducible_exhaustive(a, b, c, d);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(d);
                    REQUIRE(fast.kind == slow.kind);
                }
    auto all = load_tables(WMIN_DATA_DIR "/tables.json");
    for (const char* id : {"A", "Ap", "C", "C+", "B"})
        for (const auto& row : all.at(id).rows) {
            auto w = row.at("weights").get<std::vector<Int>>();
            Int d = row.at("deg").get<Int>();
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j)
                    for (std::size_t k = j + 1; k < w.size(); ++k) {
                        CAPTURE(id);
                        CAPTURE(w[i]);
                        CAPTURE(w[j]);
                        CAPTURE(w[k]);
                        CAPTURE(d);
                        CHECK(plane_curve_irreducible(w[i], w[j], w[k], d).kind ==
                              plane_curve_irreducible_exhaustive(w[i], w[j], w[k], d).kind);
                    }
        }
}

TEST_CASE("nef examples") {
    auto c = check_nefness(x33());
    CHECK(c.nef());
    CHECK(c.numerical_kodaira_lower == 2);
    CHECK(c.log.size() == 5);  // two of type (1), then (2), (3), (4)
    CHECK(c.log[2].statement.find("[1287 >= 273]") != std::string::npos);

    auto d = check_nefness(x70());
    CHECK(d.nef());
    CHECK(d.log[2].statement.find("[13230 >= 9800]") != std::string::npos);

    auto j = certificate_json(d);
    CHECK(j["verdict"] == "nef");
    CHECK(j["conditions"].size() == 5);
}

TEST_CASE("failing conditions are reported by number") {
    // pivot on a weight-1 coordinate: (1) for the weight-10 coordinate reads 9*3 >= 10*2
    CHECK(holds(check_nefness(x70(0)), 1));

    // 1/11(2,2,3) blown up with weights (2,2,3): P(2,2,3) is not well-formed
    NefnessQuery q{H({2, 2, 3, 11, 22}, 44), center({3, 4}, {0, 1, 2}, 11, {2, 2, 3}, {2, 2, 3}), 2};
    auto cert = check_nefness(q);
    CHECK_FALSE(holds(cert, 4));
    CHECK_FALSE(cert.nef());
    CHECK(cert.failed_condition != 0);
    q.waive_condition4 = true;
    auto waived = check_nefness(q);
    CHECK(holds(waived, 4));
    CHECK(waived.log.back().statement.find("waived") != std::string::npos);
}

TEST_CASE("precondition errors") {
    CHECK_THROWS_WITH_AS(check_nefness({H({1, 1, 1, 6, 9}, 18), center({3, 4}, {0, 1, 2}, 3, {1, 1, 1}, {1, 1, 1}), 0}),
                         doctest::Contains("alpha <= 0"), Error);
    auto q = x33();
    q.center.blowup_weights = {3, 4, 6};
    CHECK_THROWS_WITH_AS(check_nefness(q), doctest::Contains("sum e >= r"), Error);
    // 7a + 13b = 36 has no solution
    q = x33();
    q.hypersurface = H({3, 4, 5, 7, 13}, 36);
    CHECK_THROWS_WITH_AS(check_nefness(q), doctest::Contains("center not on coordinate line"), Error);
    CHECK_THROWS_AS(check_nefness(x33(7)), Error);
}

TEST_CASE("verdict is invariant under relabelling the local coordinates") {
    for (auto base : {x33(), x70()}) {
        for (std::size_t k = 0; k < 3; ++k) {
            base.pivot = k;
            auto ref = check_nefness(base).verdict;
            std::vector<std::size_t> p{0, 1, 2};
            do {
                NefnessQuery q = base;
                std::vector<Int> res, e;
                std::vector<std::size_t> loc;
                for (std::size_t i : p) {
                    loc.push_back(base.center.local[i]);
                    res.push_back(base.center.type.residues()[i]);
                    e.push_back(base.center.blowup_weights[i]);
                }
                q.center.local = loc;
                q.center.type = CyclicQuotientType(base.center.type.index(), res);
                q.center.blowup_weights = e;
                q.pivot = static_cast<std::size_t>(std::find(p.begin(), p.end(), k) - p.begin());
                CHECK(check_nefness(q).verdict == ref);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
}

TEST_CASE("blow-up weight candidates") {
    auto c = blowup_weight_candidates(CyclicQuotientType(13, {3, 4, 5}));
    REQUIRE_FALSE(c.empty());
    CHECK(c.front() == std::vector<Int>{3, 4, 5});
    for (const auto& e : c) {
        CHECK(std::accumulate(e.begin(), e.end(), Int{0}) < 13);
        CHECK(gcd_of(e) == 1);
    }
    CHECK(blowup_weight_candidates(CyclicQuotientType(2, {1, 1, 1})).empty());
}

TEST_CASE("two-point volume condition reduces to the one-point one") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> u(1, 30);
    for (int it = 0; it < 3000; ++it) {
        Int alpha = u(rng), d = u(rng) * 3, bn = u(rng), b1 = u(rng), b2 = u(rng);
        Int r = u(rng) + 2, en = std::min(u(rng), r - 1), se = en + u(rng) % std::max<Int>(1, r - en);
        if (se >= r) se = r - 1;
        Int r2 = u(rng) + 1, fn = u(rng);
        auto two = two_point_volume_condition(alpha, d, bn, b1, b2, r, se, en, r2, r2, fn);
        auto one = one_point_volume_condition(alpha, d, bn, b1, b2, r, se, en);
        CHECK(two.holds() == one.holds());
        CHECK(two.lhs == one.lhs * r2 * fn);
        CHECK(two.rhs == one.rhs * r2 * fn);
    }
}

TEST_CASE("two centers: X14 in P(1,1,2,4,5)") {
    // Q1 = P_4 = 1/4(1,1,1) on the line (x_2,x_4), Q2 = P_5 = 1/5(1,1,2) on (x_4,x_5)
    auto h = H({1, 1, 2, 4, 5}, 14);
    TwoPointQuery q{h, center({2, 3}, {0, 1, 4}, 4, {1, 1, 5}, {1, 1, 1}),
                    center({3, 4}, {0, 1, 2}, 5, {1, 1, 2}, {1, 1, 2})};
    CHECK(q.permutation() == std::vector<std::size_t>{0, 1, 4, 2, 3});
    auto c = check_nefness_two_points(q);
    CHECK(c.nef());
    CHECK(c.numerical_kodaira_lower == 2);

    // hand evaluation of the volume condition: 14/(5*2*4) >= 1/(4*1) + 1/(5*2), with equality
    Rational lhs(14, 5 * 2 * 4), rhs = Rational(4 - 3, 4 * 1) + Rational(5 - 4, 5 * 2);
    CHECK(lhs == rhs);
    auto v = two_point_volume_condition(1, 14, 5, 2, 4, 4, 3, 1, 5, 4, 2);
    CHECK(v.holds());
    CHECK(v.lhs == v.rhs);
    for (int id = 1; id <= 5; ++id) CHECK(holds(c, id));

    auto bad = q;
    bad.second.blowup_weights = {1, 1, 3};  // sum f = r2
    bad.second.type = CyclicQuotientType(5, {1, 1, 3});
    CHECK_THROWS_WITH_AS(check_nefness_two_points(bad), doctest::Contains("sum e >= r"), Error);

    auto apart = q;
    apart.second.line = {0, 1};
    CHECK_THROWS_AS(check_nefness_two_points(apart), Error);
}
