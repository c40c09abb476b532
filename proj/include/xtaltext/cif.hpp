#ifndef XTALTEXT_CIF_HPP
#define XTALTEXT_CIF_HPP

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xtaltext/crystal.hpp"
#include "xtaltext/symmetry.hpp"

namespace xtal {

/// Subset CIF document: cell, optional declared symmetry, atom sites.
struct CifDocument {
    LatticeParameters cell{1, 1, 1, 90, 90, 90};
    std::optional<int> declared_group_number;
    std::optional<std::string> declared_group_symbol;
    std::vector<std::string> symop_strings;
    std::vector<Site> sites;  // after symmetry expansion, wrapped
    std::map<std::string, std::string> extra_tags;

    Crystal to_crystal() const {
        Crystal c;
        c.lattice = lattice_matrix_from_parameters(cell);
        c.sites = sites;
        c.validate();
        return c;
    }
};

namespace detail {

struct CifToken {
    std::string text;
    std::size_t line;
};

inline std::vector<CifToken> tokenize_cif(const std::string& text) {
    std::vector<CifToken> tokens;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            if (line[i] == '#') break;
            if (line[i] == '\'' || line[i] == '"') {
                const char quote = line[i];
                std::size_t end = line.find(quote, i + 1);
                if (end == std::string::npos) {
                    throw ParseError("unterminated quoted value", lineno, i + 1);
                }
                tokens.push_back({line.substr(i + 1, end - i - 1), lineno});
                i = end + 1;
            } else {
                std::size_t end = i;
                while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
                tokens.push_back({line.substr(i, end - i), lineno});
                i = end;
            }
        }
    }
    return tokens;
}

inline double cif_number(const CifToken& tok) {
    // values may carry a standard uncertainty suffix like 4.123(5)
    std::string s = tok.text;
    if (auto paren = s.find('('); paren != std::string::npos) s = s.substr(0, paren);
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &consumed);
    } catch (const std::exception&) {
        throw ParseError("malformed number '" + tok.text + "'", tok.line);
    }
    if (consumed != s.size()) {
        throw ParseError("malformed number '" + tok.text + "'", tok.line);
    }
    return v;
}

inline bool is_tag(const std::string& t) { return !t.empty() && t[0] == '_'; }
inline bool is_loop(const std::string& t) { return t == "loop_"; }
inline bool is_block(const std::string& t) { return t.rfind("data_", 0) == 0; }

}  // namespace detail

/// Parse a single-block CIF subset: cell tags, optional symmetry declaration
/// and `_symmetry_equiv_pos_as_xyz` loop, and the `_atom_site_*` loop. If a
/// symmetry loop is present the sites are expanded by those operations.
inline CifDocument parse_cif(const std::string& text) {
    using namespace detail;
    const auto tokens = tokenize_cif(text);
    CifDocument doc;
    std::map<std::string, CifToken> tags;
    std::vector<std::vector<std::string>> loop_headers;
    std::vector<std::vector<CifToken>> loop_rows;  // flattened values per loop

    std::size_t i = 0;
    while (i < tokens.size()) {
        const auto& tok = tokens[i];
        if (is_block(tok.text)) {
            ++i;
        } else if (is_loop(tok.text)) {
            ++i;
            std::vector<std::string> headers;
            while (i < tokens.size() && is_tag(tokens[i].text)) {
                headers.push_back(tokens[i].text);
                ++i;
            }
            if (headers.empty()) {
                throw ParseError("loop_ without column tags", tok.line);
            }
            std::vector<CifToken> values;
            while (i < tokens.size() && !is_tag(tokens[i].text) &&
                   !is_loop(tokens[i].text) && !is_block(tokens[i].text)) {
                values.push_back(tokens[i]);
                ++i;
            }
            if (values.size() % headers.size() != 0) {
                throw ParseError("loop row length does not match its column count", tok.line);
            }
            loop_headers.push_back(std::move(headers));
            loop_rows.push_back(std::move(values));
        } else if (is_tag(tok.text)) {
            if (i + 1 >= tokens.size()) {
                throw ParseError("tag '" + tok.text + "' has no value", tok.line);
            }
            tags.emplace(tok.text, tokens[i + 1]);
            i += 2;
        } else {
            throw ParseError("unexpected token '" + tok.text + "'", tok.line);
        }
    }

    auto require = [&](const std::string& name) -> const CifToken& {
        auto it = tags.find(name);
        if (it == tags.end()) {
            throw ParseError("missing required tag " + name, 1);
        }
        return it->second;
    };
    doc.cell = LatticeParameters{
        cif_number(require("_cell_length_a")), cif_number(require("_cell_length_b")),
        cif_number(require("_cell_length_c")), cif_number(require("_cell_angle_alpha")),
        cif_number(require("_cell_angle_beta")), cif_number(require("_cell_angle_gamma"))};
    doc.cell.validate();

    static const std::vector<std::string> known = {
        "_cell_length_a",      "_cell_length_b",     "_cell_length_c",
        "_cell_angle_alpha",   "_cell_angle_beta",   "_cell_angle_gamma",
        "_symmetry_Int_Tables_number", "_space_group_IT_number",
        "_symmetry_space_group_name_H-M"};
    for (const auto& [name, value] : tags) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            doc.extra_tags[name] = value.text;
        }
    }
    for (const char* tag : {"_symmetry_Int_Tables_number", "_space_group_IT_number"}) {
        if (auto it = tags.find(tag); it != tags.end()) {
            doc.declared_group_number = static_cast<int>(cif_number(it->second));
        }
    }
    if (auto it = tags.find("_symmetry_space_group_name_H-M"); it != tags.end()) {
        doc.declared_group_symbol = it->second.text;
    }

    std::vector<Site> raw_sites;
    bool saw_atom_loop = false;
    for (std::size_t li = 0; li < loop_headers.size(); ++li) {
        const auto& headers = loop_headers[li];
        const auto& values = loop_rows[li];
        const std::size_t ncol = headers.size();
        auto col = [&](const std::string& name) -> std::ptrdiff_t {
            auto it = std::find(headers.begin(), headers.end(), name);
            return it == headers.end() ? -1 : it - headers.begin();
        };
        if (col("_symmetry_equiv_pos_as_xyz") >= 0) {
            const auto c = col("_symmetry_equiv_pos_as_xyz");
            for (std::size_t r = 0; r * ncol < values.size(); ++r) {
                doc.symop_strings.push_back(values[r * ncol + c].text);
            }
        } else if (col("_atom_site_fract_x") >= 0) {
            saw_atom_loop = true;
            const auto ct = col("_atom_site_type_symbol");
            const auto cl = col("_atom_site_label");
            const auto cx = col("_atom_site_fract_x");
            const auto cy = col("_atom_site_fract_y");
            const auto cz = col("_atom_site_fract_z");
            const auto co = col("_atom_site_occupancy");
            if ((ct < 0 && cl < 0) || cy < 0 || cz < 0) {
                throw ParseError("atom site loop lacks type/coordinate columns", 1);
            }
            for (std::size_t r = 0; r * ncol < values.size(); ++r) {
                const auto* row = &values[r * ncol];
                if (co >= 0) {
                    const double occ = cif_number(row[co]);
                    if (std::abs(occ - 1.0) > 1e-3) {
                        throw ParseError("partial occupancy is not supported", row[co].line);
                    }
                }
                std::string element = row[ct >= 0 ? ct : cl].text;
                // strip trailing label digits/charges: "O2-" or "Fe1" -> element
                while (!element.empty() &&
                       !std::isalpha(static_cast<unsigned char>(element.back()))) {
                    element.pop_back();
                }
                raw_sites.push_back(Site{
                    element,
                    wrap_fractional(Vec3{cif_number(row[cx]), cif_number(row[cy]),
                                         cif_number(row[cz])})});
            }
        }
    }
    if (!saw_atom_loop) {
        throw ParseError("missing _atom_site_* loop", 1);
    }
    if (raw_sites.empty()) {
        throw ParseError("atom site loop has no rows", 1);
    }

    if (!doc.symop_strings.empty()) {
        std::vector<SymOp> ops;
        for (const auto& s : doc.symop_strings) ops.push_back(parse_symop(s));
        for (const auto& site : raw_sites) {
            for (const auto& op : ops) {
                const Vec3 p = apply_op(op, site.frac);
                bool known = false;
                for (const auto& existing : doc.sites) {
                    if (existing.element == site.element &&
                        min_image_frac_distance(existing.frac, p) < 1e-3) {
                        known = true;
                        break;
                    }
                }
                if (!known) doc.sites.push_back(Site{site.element, p});
            }
        }
    } else {
        doc.sites = std::move(raw_sites);
    }
    return doc;
}

/// Emit a P1-setting CIF: every site explicit, one "x,y,z" op, 6-decimal
/// numbers. Re-parses to an equal document.
inline std::string write_cif(const Crystal& c,
                             std::optional<int> declared_group = std::nullopt,
                             const std::string& name = "xtaltext") {
    const LatticeParameters p = lattice_parameters_from_matrix(c.lattice);
    char buf[128];
    std::string out = "data_" + name + "\n";
    auto tag = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s %.6f\n", key, v);
        out += buf;
    };
    tag("_cell_length_a", p.a);
    tag("_cell_length_b", p.b);
    tag("_cell_length_c", p.c);
    tag("_cell_angle_alpha", p.alpha);
    tag("_cell_angle_beta", p.beta);
    tag("_cell_angle_gamma", p.gamma);
    if (declared_group) {
        out += "_symmetry_Int_Tables_number " + std::to_string(*declared_group) + "\n";
    }
    out += "loop_\n_symmetry_equiv_pos_as_xyz\n'x,y,z'\n";
    out += "loop_\n_atom_site_type_symbol\n_atom_site_fract_x\n_atom_site_fract_y\n"
           "_atom_site_fract_z\n_atom_site_occupancy\n";
    for (const auto& s : c.sites) {
        std::snprintf(buf, sizeof buf, "%s %.6f %.6f %.6f 1.0\n", s.element.c_str(),
                      s.frac[0], s.frac[1], s.frac[2]);
        out += buf;
    }
    return out;
}

}  // namespace xtal

#endif
