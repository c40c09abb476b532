#ifndef XTALTEXT_PREDICTOR_HPP
#define XTALTEXT_PREDICTOR_HPP

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "xtaltext/crystal.hpp"

namespace xtal {

/// Deterministic property surrogate; the extension point for a real model.
class PropertyPredictor {
public:
    virtual ~PropertyPredictor() = default;
    virtual std::set<std::string> predicts() const = 0;
    virtual std::map<std::string, double> evaluate(const Crystal& c) const = 0;
};

/// Reads `key,formation_energy,band_gap` rows; the key is the reduced formula
/// (alphabetical element order), which is all a bare crystal determines.
class LookupPredictor : public PropertyPredictor {
public:
    static std::string key_for(const Crystal& c) {
        return format_composition(reduced(composition(c)));
    }

    static LookupPredictor from_csv(const std::string& text) {
        LookupPredictor p;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (lineno == 1) {
                if (line != "key,formation_energy,band_gap") {
                    throw ParseError("predictor table header must be "
                                     "key,formation_energy,band_gap",
                                     1);
                }
                continue;
            }
            std::istringstream row(line);
            std::string key, fe, bg;
            if (!std::getline(row, key, ',') || !std::getline(row, fe, ',') ||
                !std::getline(row, bg, ',')) {
                throw ParseError("malformed predictor row", lineno);
            }
            try {
                p.values_[key] = {{"formation_energy", std::stod(fe)},
                                  {"band_gap", std::stod(bg)}};
            } catch (const std::exception&) {
                throw ParseError("malformed number in predictor row", lineno);
            }
        }
        return p;
    }

    std::set<std::string> predicts() const override {
        return {"formation_energy", "band_gap"};
    }

    std::map<std::string, double> evaluate(const Crystal& c) const override {
        auto it = values_.find(key_for(c));
        if (it == values_.end()) {
            throw MissingPropertyError("no predictor entry for '" + key_for(c) + "'");
        }
        return it->second;
    }

private:
    std::map<std::string, std::map<std::string, double>> values_;
};

/// Returns the same values for every crystal; test double.
class ConstantPredictor : public PropertyPredictor {
public:
    explicit ConstantPredictor(std::map<std::string, double> values)
        : values_(std::move(values)) {}

    std::set<std::string> predicts() const override {
        std::set<std::string> names;
        for (const auto& [k, v] : values_) names.insert(k);
        return names;
    }

    std::map<std::string, double> evaluate(const Crystal&) const override {
        return values_;
    }

private:
    std::map<std::string, double> values_;
};

}  // namespace xtal

#endif
