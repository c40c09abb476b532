#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace xtal;

namespace {

GenerationCondition licuco3_condition() {
    GenerationCondition cond;
    cond.pretty_formula = "LiCuCO3";
    cond.e_above_hull = 0.0469;
    cond.spacegroup_number = 67;
    cond.formation_energy = -1.681;
    cond.band_gap = 1.7254;
    return cond;
}

GenerationCondition mgagof_condition() {
    GenerationCondition cond;
    cond.pretty_formula = "MgAgO2F";
    cond.spacegroup_number = 123;
    return cond;
}

std::vector<FewShotExample> reference_examples() {
    auto cond = [](const char* formula) {
        GenerationCondition c;
        c.pretty_formula = formula;
        c.spacegroup_number = 123;
        return c;
    };
    return {{cond("BeBaO2F"), serialize_sgs(fixtures::bebaof(), load_space_group(123))},
            {cond("ZrMoO2N"), serialize_sgs(fixtures::zrmoon(), load_space_group(123))},
            {cond("NiNaO2F"), serialize_sgs(fixtures::ninaof(), load_space_group(123))}};
}

std::size_t count_substr(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("numbers render with up to four trimmed decimals") {
    CHECK(render_condition_number(0.0) == "0.0");
    CHECK(render_condition_number(-1.681) == "-1.681");
    CHECK(render_condition_number(0.0469) == "0.0469");
    CHECK(render_condition_number(1.72540) == "1.7254");
    CHECK(render_condition_number(2.0) == "2.0");
    CHECK(render_condition_number(0.10000) == "0.1");
}

TEST_CASE("condition sentences follow the fixed field order") {
    CHECK(render_condition(licuco3_condition()) ==
          "The chemical formula is LiCuCO3. The energy above the convex hull is "
          "0.0469. The spacegroup number is 67. The formation energy per atom is "
          "-1.681. The band gap is 1.7254.");
    GenerationCondition sg;
    sg.spacegroup_number = 123;
    CHECK(render_condition(sg) == "The spacegroup number is 123.");
    GenerationCondition bg;
    bg.band_gap = 1.72540;
    CHECK(render_condition(bg) == "The band gap is 1.7254.");
    CHECK_THROWS_AS(render_condition(GenerationCondition{}), Error);
}

TEST_CASE("zero-shot prompt matches the reference text") {
    CHECK(zero_shot_prompt(licuco3_condition()) ==
          "Below is a description of a bulk material. The chemical formula is "
          "LiCuCO3. The energy above the convex hull is 0.0469. The spacegroup "
          "number is 67. The formation energy per atom is -1.681. The band gap is "
          "1.7254. Generate the space group symbol, a description of the lengths "
          "and angles of the lattice vectors and then the element type and "
          "coordinates for each atom within the lattice:");
    CHECK(zero_shot_prompt(GenerationCondition{}) ==
          "Below is a description of a bulk material. Generate the space group "
          "symbol, a description of the lengths and angles of the lattice vectors "
          "and then the element type and coordinates for each atom within the "
          "lattice:");
}

TEST_CASE("three-shot prompt matches the reference block") {
    const std::string prompt = few_shot_prompt(mgagof_condition(), reference_examples());
    const std::string expected =
        "Below is three description of bulk materials.\n"
        "First Example:\n"
        "The chemical formula is BeBaO2F. The spacegroup number is 123.\n"
        "P4/mmm\n4.9 4.9 4.9\n90 90 90\nBa\n0.50 0.50 0.50\nBe\n0.00 0.00 0.00\n"
        "O\n0.00 0.50 0.50\nF\n0.50 0.50 0.00\n"
        "Second Example:\n"
        "The chemical formula is ZrMoO2N. The spacegroup number is 123.\n"
        "P4/mmm\n4.0 4.0 4.0\n90 90 90\nZr\n0.00 0.00 0.00\nMo\n0.50 0.50 0.50\n"
        "N\n0.50 0.50 0.00\nO\n0.00 0.50 0.50\n"
        "Third Example:\n"
        "The chemical formula is NiNaO2F. The spacegroup number is 123.\n"
        "P4/mmm\n4.2 4.2 4.2\n90 90 90\nNa\n0.50 0.50 0.50\nNi\n0.00 0.00 0.00\n"
        "O\n0.00 0.50 0.50\nF\n0.50 0.50 0.00\n"
        "The chemical formula is MgAgO2F. The spacegroup number is 123. Based on "
        "the three examples provided, generate the space group symbol, a "
        "description of the lengths and angles of the lattice vectors, along with "
        "the element type and coordinates for each atom within the lattice:";
    CHECK(prompt == expected);
}

TEST_CASE("one-shot prompt spells the count and uses the singular") {
    const auto examples = reference_examples();
    const std::string prompt =
        few_shot_prompt(mgagof_condition(), {examples[0]});
    CHECK(prompt.rfind("Below is one description of bulk materials.", 0) == 0);
    CHECK(prompt.find("Based on the one example provided") != std::string::npos);
    CHECK(prompt.find("Second Example:") == std::string::npos);
}

TEST_CASE("example order changes the prompt") {
    auto examples = reference_examples();
    const std::string a = few_shot_prompt(mgagof_condition(), examples);
    std::swap(examples[0], examples[1]);
    const std::string b = few_shot_prompt(mgagof_condition(), examples);
    CHECK(a != b);
}

TEST_CASE("counts outside one..five are rejected") {
    auto examples = reference_examples();
    while (examples.size() < 6) examples.push_back(examples[0]);
    CHECK_THROWS_AS(few_shot_prompt(mgagof_condition(), examples), Error);
    CHECK_THROWS_AS(few_shot_prompt(mgagof_condition(), {}), Error);
}

TEST_CASE("masked property prompt matches the reference block") {
    const std::string prompt =
        property_prediction_prompt("e_above_hull", fixtures::rbznp_sgs());
    const std::string expected =
        "Below is a partial description of a bulk material where the energy above "
        "the convex hull has been replaced with the string \"[MASK]\":\n"
        "The energy above the convex hull is [MASK].\n"
        "P4/mmm\n4.0 4.0 10.1\n90 90 90\nRb\n0.00 0.00 0.50\nZn\n0.00 0.50 0.16\n"
        "P\n0.50 0.50 0.28\nP\n0.00 0.00 0.00\n"
        "Generate the energy above the convex hull that could replace [MASK] in "
        "the bulk material:";
    CHECK(prompt == expected);
    CHECK_THROWS_AS(property_prediction_prompt("color", "x"), MissingPropertyError);
}

TEST_CASE("zero-shot records pair the prompt with the serialized response") {
    const DatasetIndex idx = fixtures::make_index();
    const DatasetEntry& entry = *idx.by_id("f06");
    const auto rec = build_zero_shot(entry, mgagof_condition(), TextFormat::sgs);
    CHECK(rec.task == "generation");
    CHECK(rec.shots == 0);
    CHECK(rec.response == fixtures::mgagof_sgs());
    CHECK(count_substr(rec.prompt, "[MASK]") == 0);
    const auto xyz = build_zero_shot(entry, mgagof_condition(), TextFormat::xyz);
    CHECK(xyz.response.find("P4/mmm") == std::string::npos);
    CHECK(composition(parse_structure(xyz.response, TextFormat::xyz)) ==
          composition(entry.crystal));
}

TEST_CASE("property-prediction records render the masked value") {
    const DatasetIndex idx = fixtures::make_index();
    const DatasetEntry& entry = *idx.by_id("f06");
    const auto rec = build_property_prediction(entry, "e_above_hull", TextFormat::sgs);
    CHECK(rec.task == "property_prediction");
    CHECK(rec.response == render_condition_number(entry.numeric.at("e_above_hull")));
    // the reference template mentions the marker three times: the quoted
    // definition, the masked sentence, and the closing ask
    CHECK(count_substr(rec.prompt, "[MASK]") == 3);
    CHECK(count_substr(rec.prompt, "is [MASK].") == 1);  // masked value once
    const auto sg = build_property_prediction(entry, "spacegroup_number",
                                              TextFormat::sgs);
    CHECK(sg.response == "123");
    DatasetEntry bare = entry;
    bare.numeric.clear();
    CHECK_THROWS_AS(build_property_prediction(bare, "band_gap", TextFormat::sgs),
                    MissingPropertyError);
    CHECK_THROWS_AS(build_property_prediction(entry, "color", TextFormat::sgs),
                    MissingPropertyError);
}

TEST_CASE("dataset build emits the expected record counts") {
    DatasetIndex idx = fixtures::make_index();
    idx.entries.resize(10);
    BuildConfig cfg;
    cfg.properties = {"band_gap", "formation_energy"};
    cfg.seed = 5;
    const InstructionDataset ds = build_dataset(idx, cfg);
    CHECK(ds.records.size() == 40);  // 10 zero-shot + 10 few-shot + 20 prediction
    CHECK(ds.manifest["record_count"] == 40);
    CHECK(ds.manifest["tasks"]["generation"] == 20);
    CHECK(ds.manifest["tasks"]["property_prediction"] == 20);
}

TEST_CASE("degenerate strategy weights pin every few-shot record") {
    DatasetIndex idx = fixtures::make_index();
    BuildConfig cfg;
    cfg.strategy_weights = {0, 0, 0, 1};
    const InstructionDataset ds = build_dataset(idx, cfg);
    for (const auto& rec : ds.records) {
        if (rec.shots > 0) CHECK(rec.metadata["strategy"] == "random");
    }
}

TEST_CASE("few-shot records never cite their own target") {
    const DatasetIndex idx = fixtures::make_index();
    BuildConfig cfg;
    cfg.seed = 9;
    const InstructionDataset ds = build_dataset(idx, cfg);
    for (const auto& rec : ds.records) {
        if (rec.shots == 0) continue;
        const std::string target = rec.id.substr(0, rec.id.find('-'));
        for (const auto& src : rec.metadata["source_ids"]) {
            CHECK(src.get<std::string>() != target);
        }
    }
}

TEST_CASE("generation responses re-parse to the source composition") {
    const DatasetIndex idx = fixtures::make_index();
    BuildConfig cfg;
    const InstructionDataset ds = build_dataset(idx, cfg);
    for (const auto& rec : ds.records) {
        if (rec.task != "generation") continue;
        const std::string target = rec.id.substr(0, rec.id.find('-'));
        const Crystal back = parse_structure(rec.response, TextFormat::sgs);
        CHECK(composition(back) == composition(idx.by_id(target)->crystal));
        CHECK(count_substr(rec.prompt, "[MASK]") == 0);
    }
}

TEST_CASE("dataset build is byte-identical across runs") {
    const DatasetIndex idx = fixtures::make_index();
    BuildConfig cfg;
    cfg.properties = {"band_gap"};
    cfg.seed = 1234;
    const std::string a = to_jsonl(build_dataset(idx, cfg));
    const std::string b = to_jsonl(build_dataset(idx, cfg));
    CHECK(a == b);
    cfg.seed = 1235;
    CHECK(to_jsonl(build_dataset(idx, cfg)) != a);
}
