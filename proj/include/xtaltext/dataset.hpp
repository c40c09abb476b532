#ifndef XTALTEXT_DATASET_HPP
#define XTALTEXT_DATASET_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xtaltext/crystal.hpp"
#include "xtaltext/fingerprint.hpp"

namespace xtal {

/// Target values for conditional generation. Property names follow the
/// property-table header; any subset may be set.
struct GenerationCondition {
    std::optional<std::string> pretty_formula;
    std::optional<int> spacegroup_number;
    std::optional<double> formation_energy;
    std::optional<double> band_gap;
    std::optional<double> e_above_hull;

    bool empty() const {
        return !pretty_formula && !spacegroup_number && !formation_energy &&
               !band_gap && !e_above_hull;
    }

    void validate() const {
        if (empty()) throw Error("condition needs at least one field");
        for (const auto& v : {formation_energy, band_gap, e_above_hull}) {
            if (v && !std::isfinite(*v)) {
                throw Error("condition targets must be finite");
            }
        }
        if (pretty_formula) parse_formula(*pretty_formula);  // throws when malformed
    }
};

struct DatasetEntry {
    std::string id;
    Crystal crystal;
    std::string pretty_formula;
    std::optional<int> spacegroup_number;
    std::map<std::string, double> numeric;  // formation_energy, band_gap, e_above_hull
    FingerprintVector structure_fp;
    FingerprintVector composition_fp;
    bool p1_fallback = false;  // set when preprocessing could not verify the declared group

    std::optional<double> numeric_value(const std::string& name) const {
        auto it = numeric.find(name);
        if (it == numeric.end()) return std::nullopt;
        return it->second;
    }

    /// Condition describing this entry, restricted to the fields of `like`.
    GenerationCondition condition_like(const GenerationCondition& like) const {
        GenerationCondition out;
        if (like.pretty_formula) out.pretty_formula = pretty_formula;
        if (like.spacegroup_number) out.spacegroup_number = spacegroup_number;
        if (like.formation_energy) out.formation_energy = numeric_value("formation_energy");
        if (like.band_gap) out.band_gap = numeric_value("band_gap");
        if (like.e_above_hull) out.e_above_hull = numeric_value("e_above_hull");
        return out;
    }
};

/// Read-only after construction; fingerprints are cached at build time so all
/// selection calls are pure reads.
struct DatasetIndex {
    std::vector<DatasetEntry> entries;  // sorted by id
    std::uint64_t rng_seed = 0;
    StructureFingerprintConfig structure_cfg;
    CompositionFingerprintConfig composition_cfg;

    const DatasetEntry* by_id(const std::string& id) const {
        for (const auto& e : entries) {
            if (e.id == id) return &e;
        }
        return nullptr;
    }

    void finalize() {
        std::sort(entries.begin(), entries.end(),
                  [](const DatasetEntry& a, const DatasetEntry& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].id == entries[i - 1].id) {
                throw Error("duplicate dataset id '" + entries[i].id + "'");
            }
        }
        for (auto& e : entries) {
            if (e.structure_fp.values.empty()) {
                e.structure_fp = structure_fingerprint(e.crystal, structure_cfg);
            }
            if (e.composition_fp.values.empty()) {
                e.composition_fp =
                    composition_fingerprint(composition(e.crystal), composition_cfg);
            }
        }
    }
};

/// One row of the property table CSV
/// (`id,pretty_formula,spacegroup_number,formation_energy,band_gap,e_above_hull`).
struct PropertyRow {
    std::string id;
    std::string pretty_formula;
    std::optional<int> spacegroup_number;
    std::map<std::string, double> numeric;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

inline std::vector<PropertyRow> parse_property_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty property table", 1);
    const auto header = detail::split_csv_line(line);
    const std::vector<std::string> expected = {"id",
                                               "pretty_formula",
                                               "spacegroup_number",
                                               "formation_energy",
                                               "band_gap",
                                               "e_above_hull"};
    if (header != expected) {
        throw ParseError("property table header must be "
                         "id,pretty_formula,spacegroup_number,formation_energy,"
                         "band_gap,e_above_hull",
                         1);
    }
    std::vector<PropertyRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != expected.size()) {
            throw ParseError("wrong field count in property row", lineno);
        }
        PropertyRow row;
        row.id = fields[0];
        row.pretty_formula = fields[1];
        if (row.id.empty()) throw ParseError("empty id", lineno);
        auto parse_num = [&](const std::string& s) -> std::optional<double> {
            if (s.empty()) return std::nullopt;
            try {
                std::size_t consumed = 0;
                const double v = std::stod(s, &consumed);
                if (consumed != s.size()) throw std::invalid_argument(s);
                return v;
            } catch (const std::exception&) {
                throw ParseError("malformed number '" + s + "'", lineno);
            }
        };
        if (auto v = parse_num(fields[2])) row.spacegroup_number = static_cast<int>(*v);
        if (auto v = parse_num(fields[3])) row.numeric["formation_energy"] = *v;
        if (auto v = parse_num(fields[4])) row.numeric["band_gap"] = *v;
        if (auto v = parse_num(fields[5])) row.numeric["e_above_hull"] = *v;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

}  // namespace xtal

#endif
