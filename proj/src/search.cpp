#include "wmin/search.hpp"

#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

namespace wmin {

void SearchRange::validate() const {
    if (alpha_min < 1 || d_min < 1 || weight_max < 1) throw Error("invalid range", "bounds must be positive");
    if (alpha_min > alpha_max || d_min > d_max) throw Error("invalid range", "min exceeds max");
}

SearchRange range_from_json(const nlohmann::json& j, SearchRange base) {
    try {
        base.alpha_min = j.value("alpha_min", base.alpha_min);
        base.alpha_max = j.value("alpha_max", base.alpha_max);
        base.d_min = j.value("d_min", base.d_min);
        base.d_max = j.value("d_max", base.d_max);
        base.weight_max = j.value("weight_max", base.weight_max);
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid range", e.what());
    }
    base.validate();
    return base;
}

namespace {

Int to_int(const std::string& s) {
    Int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw Error("invalid range", "not an integer: '" + s + "'");
    return v;
}

std::pair<Int, Int> parse_interval(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        Int v = to_int(s);
        return {v, v};
    }
    return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

}  // namespace

SearchRange parse_range_keys(const std::string& spec, SearchRange base) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("invalid range", "expected key=value, got '" + item + "'");
        auto key = item.substr(0, eq);
        auto [lo, hi] = parse_interval(item.substr(eq + 1));
        if (key == "alpha") {
            base.alpha_min = lo;
            base.alpha_max = hi;
        } else if (key == "deg" || key == "d") {
            base.d_min = lo;
            base.d_max = hi;
        } else if (key == "wmax") {
            if (lo != hi) throw Error("invalid range", "wmax takes a single value");
            base.weight_max = lo;
        } else {
            throw Error("invalid range", "unknown key '" + key + "'");
        }
    }
    base.validate();
    return base;
}

nlohmann::json SearchStats::to_json() const {
    nlohmann::json stages = nlohmann::json::object();
    for (const auto& [s, n] : failed_at_stage) stages[std::to_string(s)] = n;
    return {{"candidates", candidates},
            {"not_well_formed", not_well_formed},
            {"not_quasismooth", not_quasismooth},
            {"failed_at_stage", stages},
            {"successes", successes}};
}

namespace {

struct DegreeBatch {
    std::vector<MinimalModelReport> found;
    SearchStats stats;
};

// Non-decreasing tuples w[pos..4] with entries in [lo, wmax] summing to rest.
template <class F>
void tuples(std::array<Int, 5>& w, std::size_t pos, Int lo, Int rest, Int wmax, F&& visit) {
    const Int slots = static_cast<Int>(5 - pos);
    if (slots == 1) {
        if (rest >= lo && rest <= wmax) {
            w[4] = rest;
            visit();
        }
        return;
    }
    for (Int a = lo; a * slots <= rest && a <= wmax; ++a) {
        w[pos] = a;
        tuples(w, pos + 1, a, rest - a, wmax, visit);
    }
}

DegreeBatch run_degree(const SearchRange& range, Int d) {
    DegreeBatch out;
    std::array<Int, 5> w{};
    // weight sums descending = alpha ascending; sort below restores tuple order
    for (Int alpha = range.alpha_min; alpha <= range.alpha_max; ++alpha) {
        const Int s = d - alpha;
        if (s < 5) continue;
        tuples(w, 0, 1, s, range.weight_max, [&] {
            ++out.stats.candidates;
            WeightedHypersurface h(Weights(std::vector<Int>(w.begin(), w.end())), d);
            if (!is_well_formed_hypersurface(h)) {
                ++out.stats.not_well_formed;
                return;
            }
            if (!is_quasismooth_general(h)) {
                ++out.stats.not_quasismooth;
                return;
            }
            auto o = run_construction(h, {false, true});
            if (auto* rep = std::get_if<MinimalModelReport>(&o)) {
                ++out.stats.successes;
                out.found.push_back(std::move(*rep));
            } else {
                ++out.stats.failed_at_stage[std::get<ConstructionFailure>(o).stage];
            }
        });
    }
    std::sort(out.found.begin(), out.found.end(), [](const auto& a, const auto& b) {
        return a.source.weights().entries() < b.source.weights().entries();
    });
    return out;
}

}  // namespace

SearchResult search(const SearchRange& range, int jobs) {
    range.validate();
    if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const std::size_t n = static_cast<std::size_t>(range.d_max - range.d_min + 1);
    std::vector<DegreeBatch> batches(n);
    std::atomic<std::size_t> next{0};
    // large degrees cost the most, hand them out first
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            const std::size_t slot = n - 1 - i;
            batches[slot] = run_degree(range, range.d_min + static_cast<Int>(slot));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SearchResult res;
    for (auto& b : batches) {
        auto& s = res.stats;
        s.candidates += b.stats.candidates;
        s.not_well_formed += b.stats.not_well_formed;
        s.not_quasismooth += b.stats.not_quasismooth;
        s.successes += b.stats.successes;
        for (const auto& [k, v] : b.stats.failed_at_stage) s.failed_at_stage[k] += v;
        for (auto& r : b.found) res.successes.push_back(std::move(r));
    }
    return res;
}

}  // namespace wmin
