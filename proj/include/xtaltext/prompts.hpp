#ifndef XTALTEXT_PROMPTS_HPP
#define XTALTEXT_PROMPTS_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "xtaltext/dataset.hpp"

namespace xtal {

/// Render a numeric target: up to 4 decimal places, trailing zeros trimmed,
/// always at least one decimal (0 -> "0.0").
inline std::string render_condition_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s += '0';
    return s;
}

/// Human-readable property names used inside prompt sentences.
inline std::string property_display_name(const std::string& property) {
    if (property == "pretty_formula") return "chemical formula";
    if (property == "spacegroup_number") return "spacegroup number";
    if (property == "formation_energy") return "formation energy per atom";
    if (property == "band_gap") return "band gap";
    if (property == "e_above_hull") return "energy above the convex hull";
    throw MissingPropertyError("unknown property '" + property + "'");
}

/// Condition sentences in fixed field order, space-joined.
inline std::string render_condition(const GenerationCondition& cond) {
    cond.validate();
    std::vector<std::string> sentences;
    if (cond.pretty_formula) {
        sentences.push_back("The chemical formula is " + *cond.pretty_formula + ".");
    }
    if (cond.e_above_hull) {
        sentences.push_back("The energy above the convex hull is " +
                            render_condition_number(*cond.e_above_hull) + ".");
    }
    if (cond.spacegroup_number) {
        sentences.push_back("The spacegroup number is " +
                            std::to_string(*cond.spacegroup_number) + ".");
    }
    if (cond.formation_energy) {
        sentences.push_back("The formation energy per atom is " +
                            render_condition_number(*cond.formation_energy) + ".");
    }
    if (cond.band_gap) {
        sentences.push_back("The band gap is " +
                            render_condition_number(*cond.band_gap) + ".");
    }
    std::string out;
    for (const auto& s : sentences) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

namespace detail {

inline const char* count_word(std::size_t n) {
    static const char* words[] = {"one", "two", "three", "four", "five"};
    if (n < 1 || n > 5) throw Error("example count must lie in [1, 5]");
    return words[n - 1];
}

inline const char* ordinal_word(std::size_t i) {
    static const char* words[] = {"First", "Second", "Third", "Fourth", "Fifth"};
    return words[i];
}

}  // namespace detail

/// Zero-shot generation prompt; unconditional when the condition is empty.
inline std::string zero_shot_prompt(const GenerationCondition& cond) {
    std::string out = "Below is a description of a bulk material. ";
    if (!cond.empty()) out += render_condition(cond) + " ";
    out += "Generate the space group symbol, a description of the lengths and "
           "angles of the lattice vectors and then the element type and "
           "coordinates for each atom within the lattice:";
    return out;
}

struct FewShotExample {
    GenerationCondition condition;
    std::string crystal_text;
};

/// Few-shot generation prompt: count line, ordinal example blocks, then the
/// target condition and closing instruction.
inline std::string few_shot_prompt(const GenerationCondition& target,
                                   const std::vector<FewShotExample>& examples) {
    if (examples.empty()) throw Error("few-shot prompt needs at least one example");
    const std::size_t n = examples.size();
    std::string out = std::string("Below is ") + detail::count_word(n) +
                      " description of bulk materials.";
    for (std::size_t i = 0; i < n; ++i) {
        out += std::string("\n") + detail::ordinal_word(i) + " Example:";
        if (!examples[i].condition.empty()) {
            out += "\n" + render_condition(examples[i].condition);
        }
        out += "\n" + examples[i].crystal_text;
    }
    out += "\n";
    if (!target.empty()) out += render_condition(target) + " ";
    out += std::string("Based on the ") + detail::count_word(n) +
           (n == 1 ? " example" : " examples") +
           " provided, generate the space group symbol, a description of the "
           "lengths and angles of the lattice vectors, along with the element "
           "type and coordinates for each atom within the lattice:";
    return out;
}

/// Property-prediction prompt: masked property sentence followed by the
/// crystal text.
inline std::string property_prediction_prompt(const std::string& property,
                                              const std::string& crystal_text) {
    const std::string name = property_display_name(property);
    return "Below is a partial description of a bulk material where the " + name +
           " has been replaced with the string \"[MASK]\":\nThe " + name +
           " is [MASK].\n" + crystal_text + "\nGenerate the " + name +
           " that could replace [MASK] in the bulk material:";
}

}  // namespace xtal

#endif
