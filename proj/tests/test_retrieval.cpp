#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"

using namespace xtal;

namespace {

Crystal random_p1(SplitMix64& rng, int sites) {
    std::vector<Site> reps;
    static const char* elements[] = {"Na", "Cl", "O", "Ti", "Ca"};
    for (int i = 0; i < sites; ++i) {
        reps.push_back(Site{elements[rng.below(5)],
                            {0.05 + 0.9 * rng.uniform(), 0.05 + 0.9 * rng.uniform(),
                             0.05 + 0.9 * rng.uniform()}});
    }
    LatticeParameters lat{4.0 + 4.0 * rng.uniform(), 4.0 + 4.0 * rng.uniform(),
                          4.0 + 4.0 * rng.uniform(), 90, 90, 90};
    Crystal c;
    c.lattice = lattice_matrix_from_parameters(lat);
    for (auto& r : reps) c.sites.push_back(r);
    return c;
}

}  // namespace

TEST_CASE("simple cubic cell: six equal nearest images normalize to 1") {
    const Crystal c = fixtures::make(1, {4, 4, 4, 90, 90, 90}, {{"Cu", {0, 0, 0}}});
    const FingerprintVector fp = structure_fingerprint(c);
    REQUIRE(fp.values.size() == 24);
    for (int d = 0; d < 6; ++d) CHECK(fp.values[d] == Catch::Approx(1.0));
    CHECK(fp.values[6] > 1.0);                      // 7th neighbor is a diagonal
    for (int d = 12; d < 24; ++d) CHECK(fp.values[d] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("structure fingerprint is scale-invariant") {
    SplitMix64 rng(5);
    const Crystal c = random_p1(rng, 4);
    Crystal scaled = c;
    for (auto& row : scaled.lattice.rows) row = 1.7 * row;
    const auto a = structure_fingerprint(c);
    const auto b = structure_fingerprint(scaled);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i] == Catch::Approx(b.values[i]).margin(1e-10));
    }
}

TEST_CASE("structure fingerprint is invariant under site permutation") {
    SplitMix64 rng(6);
    Crystal c = random_p1(rng, 5);
    Crystal shuffled = c;
    std::swap(shuffled.sites[0], shuffled.sites[3]);
    std::swap(shuffled.sites[1], shuffled.sites[4]);
    const auto a = structure_fingerprint(c);
    const auto b = structure_fingerprint(shuffled);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i] == Catch::Approx(b.values[i]).margin(1e-12));
    }
}

TEST_CASE("fingerprint distances require matching configurations") {
    const Crystal c = fixtures::mgagof();
    const auto s = structure_fingerprint(c);
    const auto comp = composition_fingerprint(composition(c));
    CHECK_THROWS_AS(fingerprint_distance(s, comp), ConfigError);
    StructureFingerprintConfig other;
    other.neighbor_count = 8;
    CHECK_THROWS_AS(fingerprint_distance(s, structure_fingerprint(c, other)),
                    ConfigError);
    CHECK(fingerprint_distance(s, s) == 0.0);
}

TEST_CASE("composition fingerprint: rock salt atomic-number statistics") {
    const auto fp = composition_fingerprint(parse_formula("NaCl"));
    REQUIRE(fp.values.size() == 16);
    CHECK(fp.values[0] == Catch::Approx(14.0));  // mean of 11 and 17
    CHECK(fp.values[1] == Catch::Approx(3.0));   // mean absolute deviation
    CHECK(fp.values[2] == Catch::Approx(11.0));  // min
    CHECK(fp.values[3] == Catch::Approx(17.0));  // max
}

TEST_CASE("composition fingerprint invariances") {
    const auto a = composition_fingerprint(parse_formula("CaTiO3"));
    const auto b = composition_fingerprint(parse_formula("Ca2Ti2O6"));
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i] == Catch::Approx(b.values[i]).margin(1e-12));
    }
    const auto single = composition_fingerprint(parse_formula("Cu"));
    for (std::size_t i = 1; i < single.values.size(); i += 4) {
        CHECK(single.values[i] == 0.0);  // all MAD dimensions vanish
    }
    CHECK_THROWS_AS(composition_fingerprint(Composition{{"Xx", 1}}),
                    MissingElementDataError);
}

TEST_CASE("condition selection ranks by absolute difference") {
    DatasetIndex idx = fixtures::make_index();
    GenerationCondition cond;
    cond.band_gap = idx.entries[3].numeric.at("band_gap") + 0.001;
    const auto result = select_condition(idx, cond, 2, 0);
    REQUIRE(result.ids.size() == 2);
    CHECK(result.ids[0] == idx.entries[3].id);
    CHECK_FALSE(result.partial);
}

TEST_CASE("discrete spacegroup filter matches exactly") {
    const DatasetIndex idx = fixtures::make_index();
    GenerationCondition cond;
    cond.spacegroup_number = 123;
    const auto result = select_condition(idx, cond, 4, 0);
    REQUIRE(result.ids.size() == 4);
    for (const auto& id : result.ids) {
        CHECK(*idx.by_id(id)->spacegroup_number == 123);
    }
    CHECK_FALSE(result.partial);
}

TEST_CASE("formula filter matches under anonymization") {
    const DatasetIndex idx = fixtures::make_index();
    GenerationCondition cond;
    cond.pretty_formula = "SrZrO3";  // anonymizes like CaTiO3 -> ABC3
    const auto result = select_condition(idx, cond, 1, 0);
    REQUIRE(result.ids.size() == 1);
    CHECK(result.ids[0] == "f01");
    CHECK_FALSE(result.partial);
}

TEST_CASE("insufficient matches backfill and mark the result partial") {
    const DatasetIndex idx = fixtures::make_index();
    GenerationCondition cond;
    cond.spacegroup_number = 229;  // only one fixture
    const auto result = select_condition(idx, cond, 3, 0);
    REQUIRE(result.ids.size() == 3);
    CHECK(result.partial);
    CHECK(result.ids[0] == "f05");
}

TEST_CASE("structure selection returns the anchor first, duplicates nearest") {
    DatasetIndex idx = fixtures::make_index();
    // duplicate f10, the only entry with its particular geometry
    DatasetEntry dup = *idx.by_id("f10");
    dup.id = "zdup";
    idx.entries.push_back(dup);
    std::sort(idx.entries.begin(), idx.entries.end(),
              [](const DatasetEntry& a, const DatasetEntry& b) { return a.id < b.id; });
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto result = select_structure(idx, 2, seed);
        REQUIRE(result.ids.size() == 2);
        if (result.ids[0] == "f10") CHECK(result.ids[1] == "zdup");
        if (result.ids[0] == "zdup") CHECK(result.ids[1] == "f10");
    }
    const auto one = select_structure(idx, 1, 7);
    CHECK(one.ids.size() == 1);
}

TEST_CASE("structure neighbors equal the exhaustive pairwise sort") {
    const DatasetIndex idx = fixtures::make_index();
    const auto result = select_structure(idx, 4, 11);
    REQUIRE(result.ids.size() == 4);
    const DatasetEntry* anchor = idx.by_id(result.ids[0]);
    struct Scored {
        double dist;
        std::string id;
    };
    std::vector<Scored> scored;
    for (const auto& e : idx.entries) {
        if (e.id == anchor->id) continue;
        scored.push_back({fingerprint_distance(anchor->structure_fp, e.structure_fp),
                          e.id});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.id < b.id;
    });
    for (int i = 0; i < 3; ++i) CHECK(result.ids[i + 1] == scored[i].id);
}

TEST_CASE("hybrid selection keeps the discrete filter when survivors suffice") {
    const DatasetIndex idx = fixtures::make_index();
    GenerationCondition cond;
    cond.spacegroup_number = 123;
    const auto result = select_condition_structure(idx, cond, 3, 17);
    REQUIRE(result.ids.size() == 3);
    CHECK_FALSE(result.partial);
    for (const auto& id : result.ids) {
        CHECK(*idx.by_id(id)->spacegroup_number == 123);
    }
    // fewer survivors than k: falls back to the full dataset, marked partial
    GenerationCondition rare;
    rare.spacegroup_number = 229;
    const auto fallback = select_condition_structure(idx, rare, 3, 17);
    CHECK(fallback.ids.size() == 3);
    CHECK(fallback.partial);
}

TEST_CASE("every strategy is deterministic given the seed") {
    const DatasetIndex idx = fixtures::make_index();
    GenerationCondition cond;
    cond.spacegroup_number = 123;
    cond.band_gap = 0.5;
    for (auto strategy : {SelectionStrategy::condition, SelectionStrategy::structure,
                          SelectionStrategy::condition_structure,
                          SelectionStrategy::random}) {
        SelectionSpec spec{strategy, 3, 77};
        const auto a = select_examples(idx, cond, spec);
        const auto b = select_examples(idx, cond, spec);
        CHECK(a.ids == b.ids);
        CHECK(a.partial == b.partial);
        CHECK(a.ids.size() == 3);
        std::set<std::string> unique(a.ids.begin(), a.ids.end());
        CHECK(unique.size() == 3);
    }
}

TEST_CASE("empty dataset raises the dedicated error") {
    DatasetIndex idx;
    GenerationCondition cond;
    cond.band_gap = 1.0;
    CHECK_THROWS_AS(select_condition(idx, cond, 1, 0), EmptyDatasetError);
    CHECK_THROWS_AS(select_structure(idx, 1, 0), EmptyDatasetError);
    CHECK_THROWS_AS(select_condition_structure(idx, cond, 1, 0), EmptyDatasetError);
    CHECK_THROWS_AS(select_random(idx, 1, 0), EmptyDatasetError);
}

TEST_CASE("random selection samples without replacement") {
    const DatasetIndex idx = fixtures::make_index();
    const auto result = select_random(idx, 5, 3);
    REQUIRE(result.ids.size() == 5);
    std::set<std::string> unique(result.ids.begin(), result.ids.end());
    CHECK(unique.size() == 5);
    CHECK(select_random(idx, 5, 3).ids == result.ids);
    CHECK(select_random(idx, 5, 4).ids != result.ids);
}
