#include "wmin/terminalize.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wmin {

namespace {

using Mat = std::array<LatticePoint, 3>;  // rows are generators

Int det3(const Mat& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Coefficients lambda with sum_i lambda_i g_i = x, as numerators over det3(m).
std::array<Int, 3> cramer(const Mat& m, const LatticePoint& x) {
    std::array<Int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        Mat t = m;
        t[i] = x;
        out[i] = det3(t);
    }
    return out;
}

void require_3d(const CyclicQuotientType& t) {
    if (t.dim() != 3) throw Error("unsupported", "terminalization is implemented for 3-dimensional types");
}

}  // namespace

ToricCone ToricCone::positive_octant(const CyclicQuotientType& t) {
    require_3d(t);
    ToricCone c;
    c.r = t.index();
    c.lattice_residues = t.residues();
    for (int i = 0; i < 3; ++i) {
        c.generators[i] = {0, 0, 0};
        c.generators[i][i] = c.r;
    }
    c.index = cone_index(c);
    return c;
}

Int cone_index(const ToricCone& c) {
    Int d = det3(c.generators);
    if (d == 0) throw Error("degenerate cone", "generators are not linearly independent");
    d = d < 0 ? -d : d;
    if (d % (c.r * c.r) != 0) throw Error("invalid cone", "generators are not in the lattice");
    return d / (c.r * c.r);
}

CyclicQuotientType cone_quotient_type(const ToricCone& c) {
    const Int m = cone_index(c);
    if (m == 1) return CyclicQuotientType(1, {0, 0, 0});
    const Int det = det3(c.generators);
    // Generators of N: r*unit vectors and the residue vector, in scaled units.
    std::vector<LatticePoint> gens;
    for (int i = 0; i < 3; ++i) {
        LatticePoint e{0, 0, 0};
        e[i] = c.r;
        gens.push_back(e);
    }
    gens.push_back({c.lattice_residues[0], c.lattice_residues[1], c.lattice_residues[2]});
    // Each generator's coordinates in the cone basis, as numerators mod m.
    std::vector<std::array<Int, 3>> elems;
    for (const auto& g : gens) {
        auto lam = cramer(c.generators, g);
        std::array<Int, 3> num{};
        for (int i = 0; i < 3; ++i) {
            BigInt t = BigInt(lam[i]) * m;
            if (t % det != 0) throw Error("internal", "lattice element with unexpected denominator");
            num[i] = mod_pos(static_cast<Int>(t / det), m);
        }
        elems.push_back(num);
    }
    // Close under addition; the quotient N / N' has order m.
    std::set<std::array<Int, 3>> group{{0, 0, 0}};
    std::vector<std::array<Int, 3>> frontier{{0, 0, 0}};
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& g : elems) {
            std::array<Int, 3> y{(x[0] + g[0]) % m, (x[1] + g[1]) % m, (x[2] + g[2]) % m};
            if (group.insert(y).second) frontier.push_back(y);
        }
    }
    if (static_cast<Int>(group.size()) != m) throw Error("internal", "quotient group order differs from index");
    for (const auto& x : group) {
        Int g = std::gcd(m, std::gcd(x[0], std::gcd(x[1], x[2])));
        if (g == 1) return CyclicQuotientType(m, {x[0], x[1], x[2]});
    }
    throw Error("non-cyclic quotient", "cone of index " + std::to_string(m));
}

std::vector<LatticePoint> age_one_points(const CyclicQuotientType& t) {
    require_3d(t);
    const Int r = t.index();
    std::set<LatticePoint> pts;
    for (Int m = 1; m < r; ++m) {
        LatticePoint p{};
        Int s = 0;
        for (int i = 0; i < 3; ++i) {
            p[i] = (m * t.residues()[i]) % r;
            s += p[i];
        }
        // Points with a zero coordinate are kept: they lie on a face of the
        // octant and still have to become rays.
        if (s == r) pts.insert(p);
    }
    return {pts.begin(), pts.end()};
}

StarFan::StarFan(const CyclicQuotientType& t) : r_(t.index()), residues_(t.residues()) {
    require_3d(t);
    for (int i = 0; i < 3; ++i) {
        LatticePoint e{0, 0, 0};
        e[i] = r_;
        points_.push_back(e);
    }
    for (const auto& p : age_one_points(t)) points_.push_back(p);
    used_.assign(points_.size() - 3, 0);
    cones_.push_back({0, 1, 2});
}

void StarFan::insert(std::size_t s) {
    if (used_.at(s)) return;
    used_[s] = 1;
    const std::size_t pi = s + 3;
    const LatticePoint& p = points_[pi];
    std::vector<std::array<std::size_t, 3>> next;
    for (const auto& c : cones_) {
        Mat m{points_[c[0]], points_[c[1]], points_[c[2]]};
        Int det = det3(m);
        auto lam = cramer(m, p);
        bool inside = true;
        for (Int l : lam)
            if ((det > 0 && l < 0) || (det < 0 && l > 0)) inside = false;
        if (!inside) {
            next.push_back(c);
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            if (lam[i] == 0) continue;
            auto sub = c;
            sub[i] = pi;
            std::sort(sub.begin(), sub.end());
            next.push_back(sub);
        }
    }
    cones_ = std::move(next);
}

std::vector<std::array<std::size_t, 3>> StarFan::cones() const {
    auto out = cones_;
    std::sort(out.begin(), out.end());
    return out;
}

ToricCone StarFan::cone(const std::array<std::size_t, 3>& c) const {
    ToricCone tc;
    tc.r = r_;
    tc.lattice_residues = residues_;
    for (int i = 0; i < 3; ++i) tc.generators[i] = points_[c[i]];
    tc.index = cone_index(tc);
    return tc;
}

TerminalizationRecord record_from_fan(const CyclicQuotientType& t, const StarFan& fan) {
    TerminalizationRecord rec;
    rec.r = t.index();
    rec.age_one_points.assign(fan.points().begin() + 3, fan.points().end());
    rec.rho_contribution = static_cast<Int>(rec.age_one_points.size());
    Int volume = 0;
    for (const auto& c : fan.cones()) {
        TerminalLeaf leaf{fan.cone(c), {}};
        leaf.type = cone_quotient_type(leaf.cone);
        volume += leaf.cone.index;
        if (!leaf.type.is_smooth()) {
            if (reid_tai(leaf.type) != SingClass::terminal)
                throw Error("internal", "non-terminal leaf " + leaf.type.str() + " in terminalization of " + t.str());
            rec.basket.add(basket_pair(leaf.type));
        }
        rec.leaves.push_back(std::move(leaf));
    }
    if (volume != t.index()) throw Error("internal", "leaf indices do not add up to r for " + t.str());
    return rec;
}

TerminalizationRecord terminalize_type(const CyclicQuotientType& t) {
    require_3d(t);
    if (t.is_transverse()) throw Error("transverse type", "terminalization needs a point type");
    auto cls = reid_tai(t);
    if (cls == SingClass::noncanonical) throw Error("noncanonical", t.str() + " must be blown up, not terminalized");
    StarFan fan(t);
    // age_one_points is sorted, so inserting in index order always takes the
    // lexicographically smallest remaining point.
    for (std::size_t s = 0; s < fan.s_count(); ++s) fan.insert(s);
    return record_from_fan(t, fan);
}

}  // namespace wmin
