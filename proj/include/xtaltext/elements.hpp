#ifndef XTALTEXT_ELEMENTS_HPP
#define XTALTEXT_ELEMENTS_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "xtaltext/data/elements_inc.hpp"
#include "xtaltext/errors.hpp"

namespace xtal {

struct ElementData {
    std::string symbol;
    int atomic_number = 0;
    double mass_amu = 0.0;
    double covalent_radius = 0.0;  // angstrom
    double electronegativity = 0.0;
    std::vector<int> oxidation_states;
};

/// Single authority for per-element data. Symbols are case-sensitive
/// ("Co" is cobalt, "CO" is nothing).
class ElementTable {
public:
    static ElementTable from_text(const std::string& text) {
        ElementTable table;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            std::istringstream fields(line);
            ElementData e;
            std::string states;
            if (!(fields >> e.symbol >> e.atomic_number >> e.mass_amu >>
                  e.covalent_radius >> e.electronegativity >> states)) {
                throw ParseError("malformed element line", lineno);
            }
            std::istringstream ss(states);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                e.oxidation_states.push_back(std::stoi(tok));
            }
            table.by_symbol_.emplace(e.symbol, std::move(e));
        }
        return table;
    }

    /// The embedded table shipped with the library.
    static const ElementTable& builtin() {
        static const ElementTable table = from_text(data::kElementTableText);
        return table;
    }

    bool contains(const std::string& symbol) const {
        return by_symbol_.count(symbol) != 0;
    }

    const ElementData& get(const std::string& symbol) const {
        auto it = by_symbol_.find(symbol);
        if (it == by_symbol_.end()) {
            throw MissingElementDataError("no element data for '" + symbol + "'");
        }
        return it->second;
    }

    std::size_t size() const { return by_symbol_.size(); }

private:
    std::map<std::string, ElementData> by_symbol_;
};

}  // namespace xtal

#endif
