#ifndef XTALTEXT_PREPROCESS_HPP
#define XTALTEXT_PREPROCESS_HPP

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "xtaltext/cif.hpp"
#include "xtaltext/dataset.hpp"
#include "xtaltext/sgs.hpp"

namespace xtal {

struct PreprocessConfig {
    std::string cif_dir;
    std::string properties_csv;
    std::string out_dir;          // one <id>.sgs per entry plus manifest.json
    std::size_t workers = 1;
    double symmetry_eps = kDefaultSymEps;
};

struct PreprocessResult {
    DatasetIndex index;
    nlohmann::json manifest;
};

namespace detail {

struct PreprocessedEntry {
    std::optional<DatasetEntry> entry;
    std::string sgs_text;
    bool p1_fallback = false;
    std::string failure;  // non-empty when the file could not be processed
};

inline PreprocessedEntry preprocess_one(const PropertyRow& row,
                                        const std::filesystem::path& cif_dir,
                                        double eps) {
    PreprocessedEntry out;
    try {
        const auto path = cif_dir / (row.id + ".cif");
        const CifDocument doc = parse_cif(read_text_file(path.string()));
        Crystal crystal = doc.to_crystal();
        std::optional<int> declared = doc.declared_group_number;
        if (!declared) declared = row.spacegroup_number;
        int group_number = 1;
        std::string sgs;
        if (declared) {
            try {
                sgs = serialize_sgs(crystal, load_space_group(*declared), eps);
                group_number = *declared;
            } catch (const Error&) {
                // verification failed; fall through to the P1 fallback
            }
        }
        if (sgs.empty()) {
            sgs = serialize_sgs(crystal, load_space_group(1), eps);
            group_number = 1;
            out.p1_fallback = declared.has_value();
        }
        DatasetEntry entry;
        entry.id = row.id;
        entry.crystal = std::move(crystal);
        entry.pretty_formula = row.pretty_formula;
        entry.spacegroup_number = group_number;
        entry.numeric = row.numeric;
        entry.p1_fallback = out.p1_fallback;
        out.sgs_text = std::move(sgs);
        out.entry = std::move(entry);
    } catch (const Error& e) {
        out.failure = e.what();
    } catch (const std::exception& e) {
        out.failure = e.what();
    }
    return out;
}

}  // namespace detail

/// One-time offline conversion: CIF corpus + property table -> SGS corpus and
/// a fingerprint-cached DatasetIndex. Structures that fail verification
/// against their declared group fall back to P1 and are flagged. Per-file
/// failures are recorded in the manifest, not fatal. Idempotent; the inputs
/// are never modified.
inline PreprocessResult preprocess(const PreprocessConfig& cfg) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(cfg.cif_dir)) {
        throw ConfigError("structure directory '" + cfg.cif_dir + "' is unreadable");
    }
    auto rows = parse_property_csv(read_text_file(cfg.properties_csv));
    std::sort(rows.begin(), rows.end(),
              [](const PropertyRow& a, const PropertyRow& b) { return a.id < b.id; });

    std::vector<detail::PreprocessedEntry> processed(rows.size());
    const std::size_t workers = std::max<std::size_t>(cfg.workers, 1);
    auto work = [&](std::atomic<std::size_t>& next) {
        for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            processed[i] = detail::preprocess_one(rows[i], cfg.cif_dir, cfg.symmetry_eps);
            if (processed[i].entry) {
                // fingerprints are part of the per-entry cost; cache them here
                // so index finalization stays cheap and single-threaded
                processed[i].entry->structure_fp =
                    structure_fingerprint(processed[i].entry->crystal);
                processed[i].entry->composition_fp =
                    composition_fingerprint(composition(processed[i].entry->crystal));
            }
        }
    };
    std::atomic<std::size_t> next{0};
    if (workers <= 1) {
        work(next);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < std::min(workers, rows.size()); ++w) {
            pool.emplace_back([&]() { work(next); });
        }
        for (auto& t : pool) t.join();
    }

    PreprocessResult result;
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json fallbacks = nlohmann::json::array();
    if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& p = processed[i];
        if (!p.entry) {
            failures.push_back({{"id", rows[i].id}, {"reason", p.failure}});
            continue;
        }
        if (p.p1_fallback) fallbacks.push_back(rows[i].id);
        if (!cfg.out_dir.empty()) {
            write_text_file((fs::path(cfg.out_dir) / (rows[i].id + ".sgs")).string(),
                            p.sgs_text + "\n");
        }
        result.index.entries.push_back(std::move(*p.entry));
    }
    result.index.finalize();
    result.manifest = {{"total", rows.size()},
                       {"converted", result.index.entries.size()},
                       {"p1_fallbacks", fallbacks},
                       {"failures", failures}};
    if (!cfg.out_dir.empty()) {
        write_text_file((fs::path(cfg.out_dir) / "manifest.json").string(),
                        result.manifest.dump(2) + "\n");
    }
    return result;
}

}  // namespace xtal

#endif
