#ifndef XTALTEXT_INSTRUCTIONS_HPP
#define XTALTEXT_INSTRUCTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "xtaltext/prompts.hpp"
#include "xtaltext/selection.hpp"
#include "xtaltext/sgs.hpp"

namespace xtal {

struct InstructionRecord {
    std::string id;
    std::string task;  // "generation" | "property_prediction"
    std::size_t shots = 0;
    std::string prompt;
    std::string response;
    nlohmann::json metadata = nlohmann::json::object();
};

struct InstructionDataset {
    std::vector<InstructionRecord> records;
    nlohmann::json manifest = nlohmann::json::object();
};

inline nlohmann::json condition_to_json(const GenerationCondition& cond) {
    nlohmann::json j = nlohmann::json::object();
    if (cond.pretty_formula) j["pretty_formula"] = *cond.pretty_formula;
    if (cond.spacegroup_number) j["spacegroup_number"] = *cond.spacegroup_number;
    if (cond.formation_energy) j["formation_energy"] = *cond.formation_energy;
    if (cond.band_gap) j["band_gap"] = *cond.band_gap;
    if (cond.e_above_hull) j["e_above_hull"] = *cond.e_above_hull;
    return j;
}

inline GenerationCondition condition_from_json(const nlohmann::json& j) {
    GenerationCondition cond;
    if (j.contains("pretty_formula")) cond.pretty_formula = j["pretty_formula"].get<std::string>();
    if (j.contains("spacegroup_number")) cond.spacegroup_number = j["spacegroup_number"].get<int>();
    if (j.contains("formation_energy")) cond.formation_energy = j["formation_energy"].get<double>();
    if (j.contains("band_gap")) cond.band_gap = j["band_gap"].get<double>();
    if (j.contains("e_above_hull")) cond.e_above_hull = j["e_above_hull"].get<double>();
    return cond;
}

/// Condition carrying every property the entry knows about.
inline GenerationCondition full_condition(const DatasetEntry& entry) {
    GenerationCondition cond;
    if (!entry.pretty_formula.empty()) cond.pretty_formula = entry.pretty_formula;
    cond.spacegroup_number = entry.spacegroup_number;
    cond.formation_energy = entry.numeric_value("formation_energy");
    cond.band_gap = entry.numeric_value("band_gap");
    cond.e_above_hull = entry.numeric_value("e_above_hull");
    return cond;
}

inline std::string serialize_entry(const DatasetEntry& entry, TextFormat format) {
    const int group = entry.spacegroup_number.value_or(1);
    return serialize_structure(entry.crystal, format, load_space_group(group));
}

inline InstructionRecord build_zero_shot(const DatasetEntry& entry,
                                         const GenerationCondition& cond,
                                         TextFormat format) {
    InstructionRecord rec;
    rec.id = entry.id + "-z";
    rec.task = "generation";
    rec.shots = 0;
    rec.prompt = zero_shot_prompt(cond);
    rec.response = serialize_entry(entry, format);
    rec.metadata["condition"] = condition_to_json(cond);
    rec.metadata["format"] = to_string(format);
    return rec;
}

inline InstructionRecord build_few_shot(const DatasetEntry& entry,
                                        const GenerationCondition& cond,
                                        const std::vector<FewShotExample>& examples,
                                        TextFormat format) {
    if (examples.empty()) throw Error("few-shot record needs at least one example");
    InstructionRecord rec;
    rec.id = entry.id + "-f";
    rec.task = "generation";
    rec.shots = examples.size();
    rec.prompt = few_shot_prompt(cond, examples);
    rec.response = serialize_entry(entry, format);
    rec.metadata["condition"] = condition_to_json(cond);
    rec.metadata["format"] = to_string(format);
    return rec;
}

inline InstructionRecord build_property_prediction(const DatasetEntry& entry,
                                                   const std::string& property,
                                                   TextFormat format) {
    InstructionRecord rec;
    rec.id = entry.id + "-p-" + property;
    rec.task = "property_prediction";
    rec.shots = 0;
    rec.prompt = property_prediction_prompt(property, serialize_entry(entry, format));
    if (property == "pretty_formula") {
        if (entry.pretty_formula.empty()) {
            throw MissingPropertyError("entry '" + entry.id + "' has no formula");
        }
        rec.response = entry.pretty_formula;
    } else if (property == "spacegroup_number") {
        if (!entry.spacegroup_number) {
            throw MissingPropertyError("entry '" + entry.id + "' has no spacegroup");
        }
        rec.response = std::to_string(*entry.spacegroup_number);
    } else {
        property_display_name(property);  // rejects unknown names
        const auto v = entry.numeric_value(property);
        if (!v) {
            throw MissingPropertyError("entry '" + entry.id + "' lacks " + property);
        }
        rec.response = render_condition_number(*v);
    }
    rec.metadata["property"] = property;
    rec.metadata["format"] = to_string(format);
    return rec;
}

struct BuildConfig {
    TextFormat format = TextFormat::sgs;
    std::size_t shots = 3;
    // weights in strategy order: condition, structure, condition-structure, random
    std::array<double, 4> strategy_weights{1.0, 1.0, 1.0, 1.0};
    std::vector<std::string> properties;
    std::uint64_t seed = 0;
};

inline BuildConfig build_config_from_json(const nlohmann::json& j) {
    BuildConfig cfg;
    if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
    if (j.contains("shots")) cfg.shots = j["shots"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("properties")) {
        cfg.properties = j["properties"].get<std::vector<std::string>>();
    }
    if (j.contains("strategy_weights")) {
        const auto& w = j["strategy_weights"];
        cfg.strategy_weights = {w.value("condition", 0.0), w.value("structure", 0.0),
                                w.value("condition-structure", 0.0), w.value("random", 0.0)};
    }
    return cfg;
}

namespace detail {

inline SelectionStrategy draw_strategy(const std::array<double, 4>& weights,
                                       SplitMix64& rng) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("strategy weights must be non-negative");
        total += w;
    }
    if (total <= 0.0) throw ConfigError("strategy weights must not all be zero");
    double u = rng.uniform() * total;
    static const SelectionStrategy order[] = {
        SelectionStrategy::condition, SelectionStrategy::structure,
        SelectionStrategy::condition_structure, SelectionStrategy::random};
    for (int i = 0; i < 4; ++i) {
        if (u < weights[i] || i == 3) return order[i];
        u -= weights[i];
    }
    return SelectionStrategy::random;
}

inline DatasetIndex index_without(const DatasetIndex& idx, const std::string& id) {
    DatasetIndex out;
    out.rng_seed = idx.rng_seed;
    out.structure_cfg = idx.structure_cfg;
    out.composition_cfg = idx.composition_cfg;
    for (const auto& e : idx.entries) {
        if (e.id != id) out.entries.push_back(e);
    }
    return out;
}

}  // namespace detail

/// One zero-shot record, one few-shot record (seeded strategy mix, examples
/// drawn from the index excluding the entry itself) and one
/// property-prediction record per configured property, per entry. Entries
/// failing serialization are skipped and counted in the manifest.
inline InstructionDataset build_dataset(const DatasetIndex& idx, const BuildConfig& cfg) {
    InstructionDataset out;
    std::size_t skipped = 0;
    nlohmann::json task_counts = {{"generation", 0}, {"property_prediction", 0}};
    nlohmann::json strategy_counts = nlohmann::json::object();
    nlohmann::json shot_counts = nlohmann::json::object();
    for (std::size_t i = 0; i < idx.entries.size(); ++i) {
        const DatasetEntry& entry = idx.entries[i];
        const GenerationCondition cond = full_condition(entry);
        try {
            InstructionRecord rec = build_zero_shot(entry, cond, cfg.format);
            task_counts["generation"] = task_counts["generation"].get<int>() + 1;
            shot_counts["0"] = shot_counts.value("0", 0) + 1;
            out.records.push_back(std::move(rec));
        } catch (const Error&) {
            ++skipped;
            continue;  // the few-shot record would fail the same serialization
        }
        if (cfg.shots > 0 && idx.entries.size() > 1) {
            try {
                SplitMix64 rng(derive_seed(cfg.seed, i));
                SelectionSpec spec;
                spec.strategy = detail::draw_strategy(cfg.strategy_weights, rng);
                spec.k = std::min<std::size_t>(cfg.shots, idx.entries.size() - 1);
                spec.seed = rng.next();
                const DatasetIndex pool = detail::index_without(idx, entry.id);
                const SelectionResult sel = select_examples(pool, cond, spec);
                std::vector<FewShotExample> examples;
                for (const auto& id : sel.ids) {
                    const DatasetEntry* src = pool.by_id(id);
                    examples.push_back(FewShotExample{src->condition_like(cond),
                                                      serialize_entry(*src, cfg.format)});
                }
                InstructionRecord rec = build_few_shot(entry, cond, examples, cfg.format);
                rec.metadata["strategy"] = to_string(spec.strategy);
                rec.metadata["selection_seed"] = spec.seed;
                rec.metadata["source_ids"] = sel.ids;
                rec.metadata["partial"] = sel.partial;
                task_counts["generation"] = task_counts["generation"].get<int>() + 1;
                strategy_counts[to_string(spec.strategy)] =
                    strategy_counts.value(to_string(spec.strategy), 0) + 1;
                shot_counts[std::to_string(examples.size())] =
                    shot_counts.value(std::to_string(examples.size()), 0) + 1;
                out.records.push_back(std::move(rec));
            } catch (const Error&) {
                ++skipped;
            }
        }
        for (const auto& property : cfg.properties) {
            try {
                out.records.push_back(build_property_prediction(entry, property, cfg.format));
                task_counts["property_prediction"] =
                    task_counts["property_prediction"].get<int>() + 1;
            } catch (const Error&) {
                ++skipped;
            }
        }
    }
    out.manifest["record_count"] = out.records.size();
    out.manifest["skipped"] = skipped;
    out.manifest["tasks"] = task_counts;
    out.manifest["strategies"] = strategy_counts;
    out.manifest["shots"] = shot_counts;
    out.manifest["format"] = to_string(cfg.format);
    out.manifest["seed"] = cfg.seed;
    out.manifest["strategy_weights"] = {
        {"condition", cfg.strategy_weights[0]},
        {"structure", cfg.strategy_weights[1]},
        {"condition-structure", cfg.strategy_weights[2]},
        {"random", cfg.strategy_weights[3]}};
    out.manifest["properties"] = cfg.properties;
    return out;
}

inline std::string to_jsonl(const InstructionDataset& ds) {
    std::string out;
    for (const auto& rec : ds.records) {
        nlohmann::json j = {{"id", rec.id},     {"task", rec.task},
                            {"shots", rec.shots}, {"prompt", rec.prompt},
                            {"response", rec.response}, {"metadata", rec.metadata}};
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace xtal

#endif
