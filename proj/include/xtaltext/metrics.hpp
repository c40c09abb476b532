#ifndef XTALTEXT_METRICS_HPP
#define XTALTEXT_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "xtaltext/dataset.hpp"
#include "xtaltext/predictor.hpp"
#include "xtaltext/rng.hpp"
#include "xtaltext/sgs.hpp"

namespace xtal {

/// True iff no two atoms (periodic images included) sit closer than half the
/// sum of their covalent radii. Single-site cells check self-images.
inline bool structural_validity(const Crystal& c,
                                const ElementTable& table = ElementTable::builtin(),
                                int radius = 2) {
    std::vector<double> radii;
    radii.reserve(c.sites.size());
    for (const auto& s : c.sites) radii.push_back(table.get(s.element).covalent_radius);
    // shortest nonzero lattice translation bounds every self-image pair
    double self_image = std::numeric_limits<double>::infinity();
    for (int i = -radius; i <= radius; ++i) {
        for (int j = -radius; j <= radius; ++j) {
            for (int k = -radius; k <= radius; ++k) {
                if (i == 0 && j == 0 && k == 0) continue;
                self_image = std::min(
                    self_image,
                    norm(frac_to_cart(c.lattice, Vec3{double(i), double(j), double(k)})));
            }
        }
    }
    for (std::size_t i = 0; i < c.sites.size(); ++i) {
        if (self_image < 0.5 * (radii[i] + radii[i])) return false;
        for (std::size_t j = i + 1; j < c.sites.size(); ++j) {
            const double d =
                min_image_distance(c.lattice, c.sites[i].frac, c.sites[j].frac, radius);
            if (d < 0.5 * (radii[i] + radii[j])) return false;
        }
    }
    return true;
}

/// True iff some assignment of one common oxidation state per element makes
/// the composition charge-neutral. The exhaustive search caps at `cap`
/// combinations; a capped search returns false and sets *capped.
inline bool compositional_validity(const Composition& comp,
                                   const ElementTable& table = ElementTable::builtin(),
                                   std::uint64_t cap = 1000000,
                                   bool* capped = nullptr) {
    if (capped) *capped = false;
    if (comp.empty()) throw Error("empty composition");
    std::vector<int> counts;
    std::vector<const std::vector<int>*> states;
    for (const auto& [sym, n] : comp) {
        counts.push_back(n);
        states.push_back(&table.get(sym).oxidation_states);
        if (states.back()->empty()) return false;
    }
    std::uint64_t combos = 1;
    for (const auto* s : states) {
        combos *= s->size();
        if (combos > cap) {
            if (capped) *capped = true;
            return false;
        }
    }
    std::vector<std::size_t> pick(states.size(), 0);
    for (std::uint64_t n = 0; n < combos; ++n) {
        long long charge = 0;
        std::uint64_t rem = n;
        for (std::size_t i = 0; i < states.size(); ++i) {
            const std::size_t si = rem % states[i]->size();
            rem /= states[i]->size();
            charge += static_cast<long long>(counts[i]) * (*states[i])[si];
        }
        if (charge == 0) return true;
    }
    return false;
}

/// Reduced-composition equality against the condition's formula.
inline bool formula_success(const Crystal& c, const GenerationCondition& cond) {
    if (!cond.pretty_formula) throw Error("condition carries no formula");
    return reduced(composition(c)) == reduced(parse_formula(*cond.pretty_formula));
}

/// SGS outputs: declared symbol's number must equal the target and the
/// expanded crystal must verify under that group. XYZ outputs: verification
/// against the target group directly.
inline bool spacegroup_success(const Crystal& c, const std::optional<SgsRecord>& sgs,
                               const GenerationCondition& cond,
                               double eps = kTextSymEps) {
    if (!cond.spacegroup_number) throw Error("condition carries no spacegroup");
    if (sgs) {
        const SpaceGroup& g = load_space_group(sgs->hm_symbol);
        if (g.number != *cond.spacegroup_number) return false;
        return verify(c, g, eps);
    }
    return verify(c, load_space_group(*cond.spacegroup_number), eps);
}

struct SuccessRule {
    enum class Kind { exact_formula, spacegroup_verify, sign_match, abs_diff_below };
    Kind kind = Kind::exact_formula;
    double threshold = 0.0;  // abs_diff_below only

    static SuccessRule abs_diff_below(double t) {
        if (!(t > 0.0)) throw Error("threshold must be positive");
        return SuccessRule{Kind::abs_diff_below, t};
    }
};

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

inline bool numeric_property_success(double predicted, double target,
                                     const SuccessRule& rule) {
    if (!std::isfinite(predicted) || !std::isfinite(target)) {
        throw Error("success rules need finite inputs");
    }
    switch (rule.kind) {
        case SuccessRule::Kind::sign_match:
            return sign_of(predicted) == sign_of(target);
        case SuccessRule::Kind::abs_diff_below:
            return std::abs(predicted - target) < rule.threshold;
        default:
            throw Error("rule is not numeric");
    }
}

/// Exact W1 between empirical distributions: integral of |F_x - F_y| over the
/// merged support.
inline double wasserstein1(std::vector<double> xs, std::vector<double> ys) {
    if (xs.empty() || ys.empty()) throw Error("wasserstein1 needs non-empty samples");
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<double> support;
    support.reserve(xs.size() + ys.size());
    support.insert(support.end(), xs.begin(), xs.end());
    support.insert(support.end(), ys.begin(), ys.end());
    std::sort(support.begin(), support.end());
    double total = 0.0;
    std::size_t ix = 0, iy = 0;
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        while (ix < xs.size() && xs[ix] <= support[i]) ++ix;
        while (iy < ys.size() && ys[iy] <= support[i]) ++iy;
        const double fx = static_cast<double>(ix) / xs.size();
        const double fy = static_cast<double>(iy) / ys.size();
        total += std::abs(fx - fy) * (support[i + 1] - support[i]);
    }
    return total;
}

struct FingerprintPair {
    FingerprintVector structure;
    FingerprintVector composition;
};

struct CoverageThresholds {
    double structure = 0.4;
    double composition = 10.0;
};

/// Recall: fraction of reference items matched by some generated item under
/// both thresholds. Precision: fraction of generated items matching some
/// reference item.
inline std::pair<double, double> coverage(const std::vector<FingerprintPair>& generated,
                                          const std::vector<FingerprintPair>& reference,
                                          const CoverageThresholds& thresholds = {}) {
    if (generated.empty() || reference.empty()) {
        throw Error("coverage needs non-empty sets");
    }
    auto covers = [&](const FingerprintPair& g, const FingerprintPair& r) {
        return fingerprint_distance(g.structure, r.structure) < thresholds.structure &&
               fingerprint_distance(g.composition, r.composition) < thresholds.composition;
    };
    std::size_t covered_refs = 0;
    for (const auto& r : reference) {
        for (const auto& g : generated) {
            if (covers(g, r)) {
                ++covered_refs;
                break;
            }
        }
    }
    std::size_t covering_gens = 0;
    for (const auto& g : generated) {
        for (const auto& r : reference) {
            if (covers(g, r)) {
                ++covering_gens;
                break;
            }
        }
    }
    return {static_cast<double>(covered_refs) / reference.size(),
            static_cast<double>(covering_gens) / generated.size()};
}

/// One generation output under evaluation: the raw text, the parse result
/// (absent when rejected), and the condition it was generated against.
struct EvalSample {
    std::string raw;
    std::optional<Crystal> crystal;
    std::optional<SgsRecord> sgs;  // present for SGS-format outputs
    GenerationCondition condition;
};

struct MetricsConfig {
    std::size_t repetitions = 5;
    std::uint64_t seed = 0;
    double band_gap_threshold = 0.5;
    double symmetry_eps = kTextSymEps;
    CoverageThresholds coverage_thresholds;
    StructureFingerprintConfig structure_cfg;
    CompositionFingerprintConfig composition_cfg;
};

struct RateSummary {
    double mean = 0.0;
    double std_dev = 0.0;
    bool present = false;
};

struct MetricsReport {
    std::size_t parsed = 0;
    std::size_t rejected = 0;
    double structural_validity_rate = 0.0;
    double compositional_validity_rate = 0.0;
    double combined_validity_rate = 0.0;
    RateSummary formula_rate;
    RateSummary spacegroup_rate;
    RateSummary formation_energy_rate;
    RateSummary band_gap_rate;
    std::optional<double> coverage_recall;
    std::optional<double> coverage_precision;
    std::optional<double> wdist_density;
    std::optional<double> wdist_formation_energy;
    std::optional<double> wdist_n_el;  // absent for single-element datasets
    double atomic_overlap_rate = 0.0;
    double symmetry_adherence_rate = 0.0;
    std::optional<double> negative_formation_rate;

    nlohmann::json to_json() const {
        auto rate = [](const RateSummary& r) -> nlohmann::json {
            if (!r.present) return nullptr;
            return {{"mean", r.mean}, {"std", r.std_dev}};
        };
        auto opt = [](const std::optional<double>& v) -> nlohmann::json {
            if (!v) return nullptr;
            return *v;
        };
        return {
            {"counts", {{"parsed", parsed}, {"rejected", rejected}}},
            {"success_rate",
             {{"pretty_formula", rate(formula_rate)},
              {"space_group", rate(spacegroup_rate)},
              {"formation_energy", rate(formation_energy_rate)},
              {"band_gap", rate(band_gap_rate)}}},
            {"validity",
             {{"composition", compositional_validity_rate},
              {"structural", structural_validity_rate},
              {"valid", combined_validity_rate}}},
            {"coverage",
             {{"recall", opt(coverage_recall)}, {"precision", opt(coverage_precision)}}},
            {"property_distribution",
             {{"wdist_density", opt(wdist_density)},
              {"wdist_formation_energy", opt(wdist_formation_energy)},
              {"wdist_n_el", opt(wdist_n_el)}}},
            {"realism",
             {{"atomic_overlap_rate", atomic_overlap_rate},
              {"symmetry_adherence_rate", symmetry_adherence_rate},
              {"negative_formation_rate", opt(negative_formation_rate)}}}};
    }
};

namespace detail {

/// Mean/std of a per-sample success indicator over seeded bootstrap resamples.
/// `outcome(i)` returns success for sample i or nullopt when not applicable.
template <typename F>
inline RateSummary bootstrap_rate(std::size_t n, std::size_t repetitions,
                                  std::uint64_t seed, F&& outcome) {
    std::vector<std::optional<bool>> results(n);
    std::size_t applicable = 0;
    for (std::size_t i = 0; i < n; ++i) {
        results[i] = outcome(i);
        if (results[i]) ++applicable;
    }
    RateSummary summary;
    if (applicable == 0) return summary;
    summary.present = true;
    std::vector<double> rates;
    for (std::size_t r = 0; r < std::max<std::size_t>(repetitions, 1); ++r) {
        SplitMix64 rng(derive_seed(seed, r));
        std::size_t hits = 0, total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t pick = rng.below(n);
            if (results[pick]) {
                ++total;
                if (*results[pick]) ++hits;
            }
        }
        rates.push_back(total ? static_cast<double>(hits) / total : 0.0);
    }
    double mean = 0.0;
    for (double v : rates) mean += v;
    mean /= rates.size();
    double var = 0.0;
    for (double v : rates) var += (v - mean) * (v - mean);
    var /= rates.size();
    summary.mean = mean;
    summary.std_dev = std::sqrt(var);
    return summary;
}

}  // namespace detail

/// Full evaluation in the report layout of the external tables: success rates
/// with bootstrap mean/std, validity, coverage, property-distribution
/// distances, and realism rates.
inline MetricsReport evaluate_batch(const std::vector<EvalSample>& samples,
                                    const std::vector<DatasetEntry>& reference,
                                    const PropertyPredictor* predictor,
                                    const MetricsConfig& cfg = {}) {
    MetricsReport report;
    std::vector<const EvalSample*> parsed;
    for (const auto& s : samples) {
        if (s.crystal) {
            parsed.push_back(&s);
        } else {
            ++report.rejected;
        }
    }
    report.parsed = parsed.size();
    if (parsed.empty()) return report;

    // validity and realism over parsed samples
    std::size_t structural_ok = 0, compositional_ok = 0, both_ok = 0;
    std::size_t sym_applicable = 0, sym_ok = 0;
    std::size_t neg_applicable = 0, neg_hits = 0;
    std::vector<std::optional<bool>> sg_results(parsed.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const EvalSample& s = *parsed[i];
        const bool sv = structural_validity(*s.crystal);
        bool cv = false;
        try {
            cv = compositional_validity(composition(*s.crystal));
        } catch (const MissingElementDataError&) {
        }
        structural_ok += sv;
        compositional_ok += cv;
        both_ok += sv && cv;
        if (s.condition.spacegroup_number) {
            ++sym_applicable;
            sg_results[i] = spacegroup_success(*s.crystal, s.sgs, s.condition,
                                               cfg.symmetry_eps);
            sym_ok += *sg_results[i];
        }
        if (predictor && predictor->predicts().count("formation_energy")) {
            try {
                ++neg_applicable;
                neg_hits += predictor->evaluate(*s.crystal).at("formation_energy") < 0.0;
            } catch (const Error&) {
                --neg_applicable;
            }
        }
    }
    const double n = static_cast<double>(parsed.size());
    report.structural_validity_rate = structural_ok / n;
    report.compositional_validity_rate = compositional_ok / n;
    report.combined_validity_rate = both_ok / n;
    report.atomic_overlap_rate = 1.0 - report.structural_validity_rate;
    report.symmetry_adherence_rate =
        sym_applicable ? static_cast<double>(sym_ok) / sym_applicable : 0.0;
    if (neg_applicable) {
        report.negative_formation_rate = static_cast<double>(neg_hits) / neg_applicable;
    }

    // success rates with bootstrap mean/std; unparsed samples count as misses
    auto predicted_value = [&](const Crystal& c,
                               const std::string& name) -> std::optional<double> {
        if (!predictor || !predictor->predicts().count(name)) return std::nullopt;
        try {
            return predictor->evaluate(c).at(name);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    report.formula_rate = detail::bootstrap_rate(
        samples.size(), cfg.repetitions, derive_seed(cfg.seed, 1),
        [&](std::size_t i) -> std::optional<bool> {
            if (!samples[i].condition.pretty_formula) return std::nullopt;
            if (!samples[i].crystal) return false;
            return formula_success(*samples[i].crystal, samples[i].condition);
        });
    report.spacegroup_rate = detail::bootstrap_rate(
        samples.size(), cfg.repetitions, derive_seed(cfg.seed, 2),
        [&](std::size_t i) -> std::optional<bool> {
            if (!samples[i].condition.spacegroup_number) return std::nullopt;
            if (!samples[i].crystal) return false;
            return spacegroup_success(*samples[i].crystal, samples[i].sgs,
                                      samples[i].condition, cfg.symmetry_eps);
        });
    report.formation_energy_rate = detail::bootstrap_rate(
        samples.size(), cfg.repetitions, derive_seed(cfg.seed, 3),
        [&](std::size_t i) -> std::optional<bool> {
            if (!samples[i].condition.formation_energy) return std::nullopt;
            if (!samples[i].crystal) return false;
            const auto p = predicted_value(*samples[i].crystal, "formation_energy");
            if (!p) return std::nullopt;
            return numeric_property_success(*p, *samples[i].condition.formation_energy,
                                            SuccessRule{SuccessRule::Kind::sign_match, 0});
        });
    report.band_gap_rate = detail::bootstrap_rate(
        samples.size(), cfg.repetitions, derive_seed(cfg.seed, 4),
        [&](std::size_t i) -> std::optional<bool> {
            if (!samples[i].condition.band_gap) return std::nullopt;
            if (!samples[i].crystal) return false;
            const auto p = predicted_value(*samples[i].crystal, "band_gap");
            if (!p) return std::nullopt;
            return numeric_property_success(*p, *samples[i].condition.band_gap,
                                            SuccessRule::abs_diff_below(
                                                cfg.band_gap_threshold));
        });

    if (!reference.empty()) {
        // coverage over fingerprint pairs
        std::vector<FingerprintPair> gen_fps, ref_fps;
        for (const auto* s : parsed) {
            gen_fps.push_back(
                {structure_fingerprint(*s->crystal, cfg.structure_cfg),
                 composition_fingerprint(composition(*s->crystal), cfg.composition_cfg)});
        }
        for (const auto& e : reference) {
            ref_fps.push_back(
                {structure_fingerprint(e.crystal, cfg.structure_cfg),
                 composition_fingerprint(composition(e.crystal), cfg.composition_cfg)});
        }
        const auto [recall, precision] =
            coverage(gen_fps, ref_fps, cfg.coverage_thresholds);
        report.coverage_recall = recall;
        report.coverage_precision = precision;

        // property distributions
        std::vector<double> gen_density, ref_density, gen_nel, ref_nel;
        std::vector<double> gen_fe, ref_fe;
        std::set<std::string> ref_elements;
        for (const auto* s : parsed) {
            gen_density.push_back(density(*s->crystal));
            gen_nel.push_back(static_cast<double>(composition(*s->crystal).size()));
            if (auto v = predicted_value(*s->crystal, "formation_energy")) {
                gen_fe.push_back(*v);
            }
        }
        for (const auto& e : reference) {
            ref_density.push_back(density(e.crystal));
            ref_nel.push_back(static_cast<double>(composition(e.crystal).size()));
            for (const auto& [sym, cnt] : composition(e.crystal)) ref_elements.insert(sym);
            if (auto v = e.numeric_value("formation_energy")) ref_fe.push_back(*v);
        }
        report.wdist_density = wasserstein1(gen_density, ref_density);
        if (!gen_fe.empty() && !ref_fe.empty()) {
            report.wdist_formation_energy = wasserstein1(gen_fe, ref_fe);
        }
        if (ref_elements.size() > 1) {
            report.wdist_n_el = wasserstein1(gen_nel, ref_nel);
        }
    }
    return report;
}

}  // namespace xtal

#endif
