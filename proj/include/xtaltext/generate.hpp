#ifndef XTALTEXT_GENERATE_HPP
#define XTALTEXT_GENERATE_HPP

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "xtaltext/client.hpp"
#include "xtaltext/instructions.hpp"
#include "xtaltext/metrics.hpp"

namespace xtal {

struct GenerationTask {
    GenerationCondition condition;  // empty = unconditional
    TextFormat format = TextFormat::sgs;
    std::size_t shots = 0;
    SelectionSpec selection;
    std::size_t sample_count = 1;
    std::size_t max_attempts = 10;
    CompletionRequest request;  // prompt filled per sample

    void validate() const {
        if (sample_count < 1) throw ConfigError("sample_count must be at least 1");
        if (max_attempts < 1) throw ConfigError("max_attempts must be at least 1");
    }
};

struct SampleOutcome {
    std::size_t index = 0;
    std::string prompt;
    std::vector<std::string> attempts;  // every raw response, verbatim
    std::optional<Crystal> crystal;
    std::optional<SgsRecord> sgs;
    std::optional<std::string> failure_reason;
    std::vector<std::string> example_ids;
    GenerationCondition condition;

    std::size_t attempts_used() const { return attempts.size(); }
    const std::string& raw() const {
        static const std::string empty;
        return attempts.empty() ? empty : attempts.back();
    }
};

namespace detail {

inline SampleOutcome run_sample(const GenerationTask& task, ChatClient& client,
                                const DatasetIndex* idx, std::size_t i) {
    SampleOutcome out;
    out.index = i;
    out.condition = task.condition;
    if (task.shots > 0) {
        if (!idx) throw ConfigError("few-shot generation needs a dataset index");
        SelectionSpec spec = task.selection;
        spec.k = task.shots;
        spec.seed = derive_seed(task.selection.seed, i);
        const SelectionResult sel = select_examples(*idx, task.condition, spec);
        std::vector<FewShotExample> examples;
        for (const auto& id : sel.ids) {
            const DatasetEntry* e = idx->by_id(id);
            examples.push_back(FewShotExample{e->condition_like(task.condition),
                                              serialize_entry(*e, task.format)});
        }
        out.example_ids = sel.ids;
        out.prompt = few_shot_prompt(task.condition, examples);
    } else {
        out.prompt = zero_shot_prompt(task.condition);
    }
    CompletionRequest req = task.request;
    req.prompt = out.prompt;
    std::string reason = "no attempts made";
    for (std::size_t attempt = 0; attempt < task.max_attempts; ++attempt) {
        std::string raw;
        try {
            raw = client.complete(req);
        } catch (const Error& e) {
            reason = e.what();
            out.attempts.push_back("");
            continue;
        }
        out.attempts.push_back(raw);
        try {
            if (task.format == TextFormat::sgs) {
                SgsRecord rec = parse_sgs(raw);
                out.crystal = sgs_to_crystal(rec);
                out.sgs = std::move(rec);
            } else {
                out.crystal = parse_structure(raw, task.format);
            }
            return out;
        } catch (const Error& e) {
            reason = e.what();
        }
    }
    out.failure_reason = reason;
    return out;
}

}  // namespace detail

/// Reject-and-resample loop: each sample is prompted, completed, and parsed;
/// parse failures retry up to task.max_attempts. Outcomes are ordered by
/// sample index regardless of worker completion order.
inline std::vector<SampleOutcome> generate_structures(const GenerationTask& task,
                                                      ChatClient& client,
                                                      const DatasetIndex* idx = nullptr,
                                                      std::size_t workers = 1) {
    task.validate();
    std::vector<SampleOutcome> outcomes(task.sample_count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < task.sample_count; ++i) {
            outcomes[i] = detail::run_sample(task, client, idx, i);
        }
        return outcomes;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t count = std::min(workers, task.sample_count);
    for (std::size_t w = 0; w < count; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < task.sample_count;
                 i = next.fetch_add(1)) {
                outcomes[i] = detail::run_sample(task, client, idx, i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return outcomes;
}

inline EvalSample to_eval_sample(const SampleOutcome& outcome) {
    EvalSample s;
    s.raw = outcome.raw();
    s.crystal = outcome.crystal;
    s.sgs = outcome.sgs;
    s.condition = outcome.condition;
    return s;
}

inline std::string outcomes_to_jsonl(const std::vector<SampleOutcome>& outcomes) {
    std::string out;
    for (const auto& o : outcomes) {
        nlohmann::json j = {{"index", o.index},
                            {"prompt", o.prompt},
                            {"attempts", o.attempts},
                            {"attempts_used", o.attempts_used()},
                            {"parsed", o.crystal.has_value()},
                            {"condition", condition_to_json(o.condition)},
                            {"example_ids", o.example_ids}};
        if (o.failure_reason) j["failure_reason"] = *o.failure_reason;
        if (o.crystal) j["response"] = o.raw();
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace xtal

#endif
