#include "wmin/locus.hpp"

#include <algorithm>

namespace wmin {

std::string SingularStratum::str() const {
    std::string where = location.kind == StratumLocation::Kind::vertex
                            ? "P" + std::to_string(location.i)
                            : "P" + std::to_string(location.i) + "P" + std::to_string(location.j);
    if (kind == StratumKind::curve) return "curve " + type.str() + " along " + where;
    return (count > 1 ? std::to_string(count) + "x" : std::string()) + type.str() + " at " + where;
}

bool SingularLocus::has_non_isolated() const {
    return std::any_of(strata.begin(), strata.end(), [](const SingularStratum& s) {
        return s.kind == StratumKind::curve || !is_isolated(s.type);
    });
}

namespace {

void require_threefold(const WeightedHypersurface& h) {
    if (h.weights().size() != 5) throw Error("unsupported", "singular locus is computed for 3-folds only");
}

void require_triple_gcd(const WeightedHypersurface& h) {
    const auto& w = h.weights().entries();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k)
                if (std::gcd(std::gcd(w[i], w[j]), w[k]) != 1)
                    throw Error("hypothesis violated", "weights " + std::to_string(w[i]) + "," + std::to_string(w[j]) +
                                                           "," + std::to_string(w[k]) + " share a factor");
}

std::vector<std::size_t> others(std::initializer_list<std::size_t> skip, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < n; ++t)
        if (std::find(skip.begin(), skip.end(), t) == skip.end()) out.push_back(t);
    return out;
}

CyclicQuotientType type_on(const WeightedHypersurface& h, Int r, const std::vector<std::size_t>& idx) {
    std::vector<Int> res;
    for (std::size_t t : idx) res.push_back(h.weights()[t]);
    return CyclicQuotientType(r, std::move(res));
}

}  // namespace

std::vector<std::size_t> vertex_eliminations(const WeightedHypersurface& h, std::size_t i) {
    const auto& w = h.weights().entries();
    const Int d = h.degree();
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i && d > w[j] && (d - w[j]) % w[i] == 0) out.push_back(j);
    return out;
}

std::optional<SingularStratum> vertex_stratum(const WeightedHypersurface& h, std::size_t i, std::size_t j) {
    require_threefold(h);
    const auto& w = h.weights().entries();
    if (w[i] == 1 || h.degree() % w[i] == 0) return std::nullopt;
    SingularStratum s;
    s.location = {StratumLocation::Kind::vertex, i, 0};
    s.line = {i, j};
    s.local = others({i, j}, w.size());
    s.type = type_on(h, w[i], s.local);
    return s;
}

std::optional<CyclicQuotientType> vertex_type(const WeightedHypersurface& h, std::size_t i) {
    require_threefold(h);
    const auto& w = h.weights().entries();
    if (h.degree() % w[i] == 0) return std::nullopt;
    auto js = vertex_eliminations(h, i);
    if (js.empty()) throw Error("quasismoothness violated", "no monomial x_i^m x_j at vertex " + std::to_string(i));
    if (w[i] == 1) return CyclicQuotientType(1, std::vector<Int>(3, 0));
    return vertex_stratum(h, i, js.front())->type;
}

std::optional<SingularStratum> edge_strata(const WeightedHypersurface& h, std::size_t i, std::size_t j) {
    require_threefold(h);
    const auto& w = h.weights().entries();
    const Int d = h.degree();
    const Int e = std::gcd(w[i], w[j]);
    if (e == 1) return std::nullopt;
    SingularStratum s;
    s.location = {StratumLocation::Kind::edge, std::min(i, j), std::max(i, j)};
    s.line = {s.location.i, s.location.j};
    auto rest = others({i, j}, w.size());
    if (d % e == 0) {
        BigInt cnt = BigInt(e) * d / (BigInt(w[i]) * w[j]);
        if (cnt == 0) return std::nullopt;
        s.kind = StratumKind::isolated_points;
        s.count = static_cast<Int>(cnt);
        s.local = rest;
        s.type = type_on(h, e, rest);
        return s;
    }
    for (std::size_t k : rest) {
        if (d > w[k] && (d - w[k]) % e == 0) {
            s.kind = StratumKind::curve;
            s.count = 1;
            s.local = {k};
            for (std::size_t t : rest)
                if (t != k) s.local.push_back(t);
            std::vector<Int> res{0, w[s.local[1]], w[s.local[2]]};
            s.type = CyclicQuotientType(e, res);
            return s;
        }
    }
    throw Error("quasismoothness violated", "edge curve without transverse chart");
}

bool triple_gcd_condition(const WeightedHypersurface& h) {
    try {
        require_triple_gcd(h);
    } catch (const Error&) {
        return false;
    }
    return true;
}

SingularLocus singular_locus(const WeightedHypersurface& h) {
    require_threefold(h);
    require_triple_gcd(h);
    SingularLocus out;
    const auto& w = h.weights().entries();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1 || h.degree() % w[i] == 0) continue;
        auto js = vertex_eliminations(h, i);
        if (js.empty())
            throw Error("quasismoothness violated", "no monomial x_i^m x_j at vertex " + std::to_string(i));
        auto s = vertex_stratum(h, i, js.front());
        // A zero residue means a_i divides another weight: the vertex is a
        // general point of the singular curve on that edge, recorded there.
        if (s->type.is_transverse()) continue;
        out.strata.push_back(*s);
    }
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (auto s = edge_strata(h, i, j)) out.strata.push_back(*s);
    return out;
}

std::vector<CyclicQuotientType> lift_singular_locus(const WeightedHypersurface& h3, Int alpha) {
    if (alpha < 2) throw Error("alpha < 2", "lift needs amplitude at least 2");
    auto locus = singular_locus(h3);
    if (locus.has_non_isolated()) throw Error("non-isolated locus", h3.str());
    std::vector<CyclicQuotientType> out;
    for (const auto& s : locus.strata) {
        std::vector<Int> res(static_cast<std::size_t>(alpha - 1), 1);
        res.insert(res.end(), s.type.residues().begin(), s.type.residues().end());
        for (Int c = 0; c < s.count; ++c) out.emplace_back(s.type.index(), res);
    }
    return out;
}

}  // namespace wmin
