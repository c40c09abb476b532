#ifndef XTALTEXT_SELECTION_HPP
#define XTALTEXT_SELECTION_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "xtaltext/dataset.hpp"
#include "xtaltext/rng.hpp"

namespace xtal {

enum class SelectionStrategy { condition, structure, condition_structure, random };

inline std::string to_string(SelectionStrategy s) {
    switch (s) {
        case SelectionStrategy::condition: return "condition";
        case SelectionStrategy::structure: return "structure";
        case SelectionStrategy::condition_structure: return "condition-structure";
        default: return "random";
    }
}

inline SelectionStrategy parse_strategy(const std::string& s) {
    if (s == "condition") return SelectionStrategy::condition;
    if (s == "structure") return SelectionStrategy::structure;
    if (s == "condition-structure") return SelectionStrategy::condition_structure;
    if (s == "random") return SelectionStrategy::random;
    throw ConfigError("unknown selection strategy '" + s + "'");
}

struct SelectionSpec {
    SelectionStrategy strategy = SelectionStrategy::random;
    std::size_t k = 3;
    std::uint64_t seed = 0;
};

struct SelectionResult {
    std::vector<std::string> ids;
    bool partial = false;  // filters could not supply k matches; backfilled
};

namespace detail {

struct RankedEntry {
    double score;
    std::string id;
    std::size_t index;
    bool matches_discrete;
};

/// Per-property standard deviation over the dataset, used to put continuous
/// condition fields on a common scale before summing their residuals.
inline double property_std(const DatasetIndex& idx, const std::string& name) {
    std::vector<double> xs;
    for (const auto& e : idx.entries) {
        if (auto v = e.numeric_value(name)) xs.push_back(*v);
    }
    if (xs.size() < 2) return 1.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size());
    const double sd = std::sqrt(var);
    return sd > 0.0 ? sd : 1.0;
}

/// Rank every entry: discrete fields decide `matches_discrete`, continuous
/// fields contribute |value - target| / dataset std to the score. Missing
/// continuous values rank last via an infinite score.
inline std::vector<RankedEntry> rank_by_condition(const DatasetIndex& idx,
                                                  const GenerationCondition& cond) {
    cond.validate();
    std::string anon;
    if (cond.pretty_formula) {
        anon = anonymized_formula(parse_formula(*cond.pretty_formula));
    }
    struct Continuous {
        std::string name;
        double target;
        double scale;
    };
    std::vector<Continuous> continuous;
    auto add = [&](const char* name, const std::optional<double>& t) {
        if (t) continuous.push_back({name, *t, property_std(idx, name)});
    };
    add("formation_energy", cond.formation_energy);
    add("band_gap", cond.band_gap);
    add("e_above_hull", cond.e_above_hull);

    std::vector<RankedEntry> ranked;
    ranked.reserve(idx.entries.size());
    for (std::size_t i = 0; i < idx.entries.size(); ++i) {
        const DatasetEntry& e = idx.entries[i];
        bool discrete_ok = true;
        if (cond.spacegroup_number &&
            (!e.spacegroup_number || *e.spacegroup_number != *cond.spacegroup_number)) {
            discrete_ok = false;
        }
        if (cond.pretty_formula &&
            anonymized_formula(parse_formula(e.pretty_formula)) != anon) {
            discrete_ok = false;
        }
        double score = 0.0;
        for (const auto& c : continuous) {
            if (auto v = e.numeric_value(c.name)) {
                score += std::abs(*v - c.target) / c.scale;
            } else {
                score = std::numeric_limits<double>::infinity();
                break;
            }
        }
        ranked.push_back({score, e.id, i, discrete_ok});
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.score != b.score) return a.score < b.score;
        return a.id < b.id;
    });
    return ranked;
}

inline void require_entries(const DatasetIndex& idx) {
    if (idx.entries.empty()) throw EmptyDatasetError("dataset has no entries");
}

/// k-1 entries nearest to `anchor` by structure-fingerprint distance, drawn
/// from `pool` (dataset indices), ties broken by id.
inline std::vector<std::size_t> nearest_by_fingerprint(const DatasetIndex& idx,
                                                       std::size_t anchor,
                                                       const std::vector<std::size_t>& pool,
                                                       std::size_t count) {
    struct Scored {
        double dist;
        std::string id;
        std::size_t index;
    };
    std::vector<Scored> scored;
    for (std::size_t i : pool) {
        if (i == anchor) continue;
        scored.push_back({fingerprint_distance(idx.entries[anchor].structure_fp,
                                               idx.entries[i].structure_fp),
                          idx.entries[i].id, i});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.id < b.id;
    });
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < scored.size() && out.size() < count; ++i) {
        out.push_back(scored[i].index);
    }
    return out;
}

}  // namespace detail

/// Condition strategy: discrete fields filter exactly, continuous fields rank
/// by summed normalized absolute difference; backfills (and marks partial)
/// when fewer than k entries match the discrete filters.
inline SelectionResult select_condition(const DatasetIndex& idx,
                                        const GenerationCondition& cond,
                                        std::size_t k, std::uint64_t /*seed*/ = 0) {
    detail::require_entries(idx);
    if (k < 1) throw Error("k must be at least 1");
    const auto ranked = detail::rank_by_condition(idx, cond);
    SelectionResult out;
    for (const auto& r : ranked) {
        if (r.matches_discrete && out.ids.size() < k) out.ids.push_back(r.id);
    }
    if (out.ids.size() < k) {
        out.partial = true;
        for (const auto& r : ranked) {
            if (out.ids.size() >= k) break;
            if (!r.matches_discrete) out.ids.push_back(r.id);
        }
    }
    return out;
}

/// Structure strategy: seeded anchor, then the k-1 fingerprint-nearest
/// neighbors; anchor first.
inline SelectionResult select_structure(const DatasetIndex& idx, std::size_t k,
                                        std::uint64_t seed) {
    detail::require_entries(idx);
    if (k < 1) throw Error("k must be at least 1");
    SplitMix64 rng(seed);
    const std::size_t anchor = rng.below(idx.entries.size());
    std::vector<std::size_t> pool(idx.entries.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    SelectionResult out;
    out.ids.push_back(idx.entries[anchor].id);
    for (std::size_t i : detail::nearest_by_fingerprint(idx, anchor, pool, k - 1)) {
        out.ids.push_back(idx.entries[i].id);
    }
    out.partial = out.ids.size() < k;
    return out;
}

/// Hybrid strategy: condition filter first (continuous fields keep the top
/// max(4k, 32) ranked), seeded anchor among the survivors, neighbors from the
/// survivor set; falls back to the whole dataset (partial) when survivors < k.
inline SelectionResult select_condition_structure(const DatasetIndex& idx,
                                                  const GenerationCondition& cond,
                                                  std::size_t k, std::uint64_t seed) {
    detail::require_entries(idx);
    if (k < 1) throw Error("k must be at least 1");
    const auto ranked = detail::rank_by_condition(idx, cond);
    const bool has_continuous =
        cond.formation_energy || cond.band_gap || cond.e_above_hull;
    const std::size_t keep = std::max<std::size_t>(4 * k, 32);
    std::vector<std::size_t> survivors;
    for (const auto& r : ranked) {
        if (!r.matches_discrete) continue;
        if (has_continuous && survivors.size() >= keep) break;
        survivors.push_back(r.index);
    }
    SelectionResult out;
    if (survivors.size() < k) {
        out.partial = true;
        survivors.clear();
        for (const auto& r : ranked) survivors.push_back(r.index);
    }
    SplitMix64 rng(seed);
    const std::size_t anchor = survivors[rng.below(survivors.size())];
    out.ids.push_back(idx.entries[anchor].id);
    for (std::size_t i : detail::nearest_by_fingerprint(idx, anchor, survivors, k - 1)) {
        out.ids.push_back(idx.entries[i].id);
    }
    if (out.ids.size() < k) out.partial = true;
    return out;
}

/// Seeded uniform sample without replacement.
inline SelectionResult select_random(const DatasetIndex& idx, std::size_t k,
                                     std::uint64_t seed) {
    detail::require_entries(idx);
    if (k < 1) throw Error("k must be at least 1");
    std::vector<std::size_t> pool(idx.entries.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    SplitMix64 rng(seed);
    SelectionResult out;
    while (!pool.empty() && out.ids.size() < k) {
        const std::size_t pick = rng.below(pool.size());
        out.ids.push_back(idx.entries[pool[pick]].id);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    out.partial = out.ids.size() < k;
    return out;
}

inline SelectionResult select_examples(const DatasetIndex& idx,
                                       const GenerationCondition& cond,
                                       const SelectionSpec& spec) {
    switch (spec.strategy) {
        case SelectionStrategy::condition:
            return select_condition(idx, cond, spec.k, spec.seed);
        case SelectionStrategy::structure:
            return select_structure(idx, spec.k, spec.seed);
        case SelectionStrategy::condition_structure:
            return select_condition_structure(idx, cond, spec.k, spec.seed);
        default:
            return select_random(idx, spec.k, spec.seed);
    }
}

}  // namespace xtal

#endif
