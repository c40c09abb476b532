// Shared test fixtures: reference structures with hand-checked expected text,
// plus a 20-structure corpus spanning 10 space groups.
#ifndef XTALTEXT_TESTS_FIXTURES_HPP
#define XTALTEXT_TESTS_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <xtaltext/xtaltext.hpp>

namespace fixtures {

inline xtal::Crystal make(int group, const xtal::LatticeParameters& lattice,
                          const std::vector<xtal::Site>& reps,
                          double eps = xtal::kDefaultSymEps) {
    return xtal::expand(xtal::load_space_group(group), reps, lattice, eps);
}

// Cmme cell, 24 atoms; expected SGS text is pinned in the tests
inline xtal::Crystal licuco3() {
    return make(67, {5.3, 6.3, 8.8, 90, 90, 90},
                {{"Li", {0.00, 0.25, 0.64}},
                 {"Cu", {0.25, 0.25, 0.00}},
                 {"C", {0.00, 0.25, 0.28}},
                 {"O", {0.22, 0.25, 0.21}},
                 {"O", {0.00, 0.25, 0.43}}});
}

inline const char* licuco3_sgs() {
    return "Cmme\n5.3 6.3 8.8\n90 90 90\nLi\n0.00 0.25 0.64\nCu\n0.25 0.25 0.00\n"
           "C\n0.00 0.25 0.28\nO\n0.22 0.25 0.21\nO\n0.00 0.25 0.43";
}

// P4/mmm cell with 5 atoms (multiplicities 1, 1, 2, 1)
inline xtal::Crystal mgagof() {
    return make(123, {4.2, 4.2, 4.2, 90, 90, 90},
                {{"Mg", {0.0, 0.0, 0.0}},
                 {"Ag", {0.5, 0.5, 0.5}},
                 {"O", {0.0, 0.5, 0.5}},
                 {"F", {0.5, 0.5, 0.0}}});
}

inline const char* mgagof_sgs() {
    return "P4/mmm\n4.2 4.2 4.2\n90 90 90\nMg\n0.00 0.00 0.00\nAg\n0.50 0.50 0.50\n"
           "O\n0.00 0.50 0.50\nF\n0.50 0.50 0.00";
}

inline xtal::Crystal bebaof() {
    return make(123, {4.9, 4.9, 4.9, 90, 90, 90},
                {{"Ba", {0.5, 0.5, 0.5}},
                 {"Be", {0.0, 0.0, 0.0}},
                 {"O", {0.0, 0.5, 0.5}},
                 {"F", {0.5, 0.5, 0.0}}});
}

inline xtal::Crystal zrmoon() {
    return make(123, {4.0, 4.0, 4.0, 90, 90, 90},
                {{"Zr", {0.0, 0.0, 0.0}},
                 {"Mo", {0.5, 0.5, 0.5}},
                 {"N", {0.5, 0.5, 0.0}},
                 {"O", {0.0, 0.5, 0.5}}});
}

inline xtal::Crystal ninaof() {
    return make(123, {4.2, 4.2, 4.2, 90, 90, 90},
                {{"Na", {0.5, 0.5, 0.5}},
                 {"Ni", {0.0, 0.0, 0.0}},
                 {"O", {0.0, 0.5, 0.5}},
                 {"F", {0.5, 0.5, 0.0}}});
}

// tetragonal cell used by the masked-property prompt fixture
inline const char* rbznp_sgs() {
    return "P4/mmm\n4.0 4.0 10.1\n90 90 90\nRb\n0.00 0.00 0.50\nZn\n0.00 0.50 0.16\n"
           "P\n0.50 0.50 0.28\nP\n0.00 0.00 0.00";
}

struct Spec {
    const char* id;
    const char* formula;
    int group;
    xtal::LatticeParameters lattice;
    std::vector<xtal::Site> reps;
};

inline const std::vector<Spec>& specs() {
    static const std::vector<Spec> all = {
        {"f01", "CaTiO3", 221, {4.0, 4.0, 4.0, 90, 90, 90},
         {{"Ca", {0, 0, 0}}, {"Ti", {0.5, 0.5, 0.5}}, {"O", {0.5, 0.5, 0}}}},
        {"f02", "CsCl", 221, {4.1, 4.1, 4.1, 90, 90, 90},
         {{"Cs", {0, 0, 0}}, {"Cl", {0.5, 0.5, 0.5}}}},
        {"f03", "NaCl", 225, {5.6, 5.6, 5.6, 90, 90, 90},
         {{"Na", {0, 0, 0}}, {"Cl", {0.5, 0.5, 0.5}}}},
        {"f04", "Cu", 225, {3.6, 3.6, 3.6, 90, 90, 90}, {{"Cu", {0, 0, 0}}}},
        {"f05", "W", 229, {3.2, 3.2, 3.2, 90, 90, 90}, {{"W", {0, 0, 0}}}},
        {"f06", "MgAgO2F", 123, {4.2, 4.2, 4.2, 90, 90, 90},
         {{"Mg", {0, 0, 0}}, {"Ag", {0.5, 0.5, 0.5}}, {"O", {0, 0.5, 0.5}},
          {"F", {0.5, 0.5, 0}}}},
        {"f07", "BeBaO2F", 123, {4.9, 4.9, 4.9, 90, 90, 90},
         {{"Ba", {0.5, 0.5, 0.5}}, {"Be", {0, 0, 0}}, {"O", {0, 0.5, 0.5}},
          {"F", {0.5, 0.5, 0}}}},
        {"f08", "ZrMoO2N", 123, {4.0, 4.0, 4.0, 90, 90, 90},
         {{"Zr", {0, 0, 0}}, {"Mo", {0.5, 0.5, 0.5}}, {"N", {0.5, 0.5, 0}},
          {"O", {0, 0.5, 0.5}}}},
        {"f09", "NiNaO2F", 123, {4.2, 4.2, 4.2, 90, 90, 90},
         {{"Na", {0.5, 0.5, 0.5}}, {"Ni", {0, 0, 0}}, {"O", {0, 0.5, 0.5}},
          {"F", {0.5, 0.5, 0}}}},
        {"f10", "LiCuCO3", 67, {5.3, 6.3, 8.8, 90, 90, 90},
         {{"Li", {0.00, 0.25, 0.64}}, {"Cu", {0.25, 0.25, 0.00}},
          {"C", {0.00, 0.25, 0.28}}, {"O", {0.22, 0.25, 0.21}},
          {"O", {0.00, 0.25, 0.43}}}},
        {"f11", "Mg", 194, {3.2, 3.2, 5.2, 90, 90, 120}, {{"Mg", {0, 0, 0}}}},
        {"f12", "C", 194, {2.5, 2.5, 6.7, 90, 90, 120}, {{"C", {0, 0, 0.25}}}},
        {"f13", "In", 139, {3.3, 3.3, 4.9, 90, 90, 90}, {{"In", {0, 0, 0}}}},
        {"f14", "MoSi2", 139, {3.2, 3.2, 7.9, 90, 90, 90},
         {{"Mo", {0, 0, 0}}, {"Si", {0, 0, 0.34}}}},
        {"f15", "Bi", 166, {4.5, 4.5, 11.8, 90, 90, 120}, {{"Bi", {0, 0, 0}}}},
        {"f16", "Al2O4", 2, {5.1, 5.4, 5.8, 85, 95, 100},
         {{"Al", {0.25, 0.31, 0.42}}, {"O", {0.11, 0.62, 0.17}},
          {"O", {0.41, 0.08, 0.77}}}},
        {"f17", "KBr", 1, {6.0, 6.1, 6.2, 89, 91, 92},
         {{"K", {0.10, 0.20, 0.30}}, {"Br", {0.60, 0.70, 0.80}}}},
        {"f18", "FeS", 62, {5.4, 3.4, 5.9, 90, 90, 90},
         {{"Fe", {0, 0, 0}}, {"S", {0.19, 0.25, 0.08}}}},
        {"f19", "MgO", 225, {4.2, 4.2, 4.2, 90, 90, 90},
         {{"Mg", {0, 0, 0}}, {"O", {0.5, 0.5, 0.5}}}},
        {"f20", "RbZn4P3", 123, {4.0, 4.0, 10.1, 90, 90, 90},
         {{"Rb", {0, 0, 0.5}}, {"Zn", {0, 0.5, 0.16}}, {"P", {0.5, 0.5, 0.28}},
          {"P", {0, 0, 0}}}},
    };
    return all;
}

/// The 20-structure corpus as dataset entries with distinct numeric
/// properties and cached fingerprints.
inline xtal::DatasetIndex make_index() {
    xtal::DatasetIndex idx;
    int i = 0;
    for (const auto& spec : specs()) {
        xtal::DatasetEntry e;
        e.id = spec.id;
        e.crystal = make(spec.group, spec.lattice, spec.reps);
        e.pretty_formula = spec.formula;
        e.spacegroup_number = spec.group;
        e.numeric["formation_energy"] = -0.5 - 0.07 * i;
        e.numeric["band_gap"] = 0.05 + 0.11 * i;
        e.numeric["e_above_hull"] = 0.01 * i;
        idx.entries.push_back(std::move(e));
        ++i;
    }
    idx.finalize();
    return idx;
}

/// Write the corpus as <id>.cif files plus the property table CSV; returns
/// the CSV path. `copies` repeats each structure with suffixed ids.
inline std::string write_corpus(const std::filesystem::path& dir, int copies = 1) {
    std::filesystem::create_directories(dir);
    const auto idx = make_index();
    std::string csv = "id,pretty_formula,spacegroup_number,formation_energy,"
                      "band_gap,e_above_hull\n";
    for (int copy = 0; copy < copies; ++copy) {
        for (const auto& e : idx.entries) {
            const std::string id =
                copies == 1 ? e.id : e.id + "c" + std::to_string(copy);
            xtal::write_text_file((dir / (id + ".cif")).string(),
                                  xtal::write_cif(e.crystal, e.spacegroup_number, id));
            csv += id + "," + e.pretty_formula + "," +
                   std::to_string(*e.spacegroup_number) + "," +
                   std::to_string(e.numeric.at("formation_energy")) + "," +
                   std::to_string(e.numeric.at("band_gap")) + "," +
                   std::to_string(e.numeric.at("e_above_hull")) + "\n";
        }
    }
    const std::string csv_path = (dir / "properties.csv").string();
    xtal::write_text_file(csv_path, csv);
    return csv_path;
}

}  // namespace fixtures

#endif
