// Command-line front end: preprocess, tokenize, expand, build-dataset,
// select, generate, evaluate. Exit codes: 0 success, 1 usage error,
// 2 data error.
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include <xtaltext/xtaltext.hpp>

namespace {

struct ConditionFlags {
    std::string formula;
    int spacegroup = 0;
    double formation_energy = std::numeric_limits<double>::quiet_NaN();
    double band_gap = std::numeric_limits<double>::quiet_NaN();
    double e_above_hull = std::numeric_limits<double>::quiet_NaN();

    xtal::GenerationCondition to_condition() const {
        xtal::GenerationCondition cond;
        if (!formula.empty()) cond.pretty_formula = formula;
        if (spacegroup > 0) cond.spacegroup_number = spacegroup;
        if (std::isfinite(formation_energy)) cond.formation_energy = formation_energy;
        if (std::isfinite(band_gap)) cond.band_gap = band_gap;
        if (std::isfinite(e_above_hull)) cond.e_above_hull = e_above_hull;
        return cond;
    }
};

void add_condition_flags(CLI::App* cmd, ConditionFlags& flags) {
    cmd->add_option("--formula", flags.formula, "target chemical formula");
    cmd->add_option("--spacegroup", flags.spacegroup, "target space group number");
    cmd->add_option("--formation-energy", flags.formation_energy,
                    "target formation energy per atom");
    cmd->add_option("--band-gap", flags.band_gap, "target band gap");
    cmd->add_option("--e-above-hull", flags.e_above_hull,
                    "target energy above the convex hull");
}

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    return nlohmann::json::parse(xtal::read_text_file(path));
}

xtal::DatasetIndex load_index(const std::string& cif_dir, const std::string& csv,
                              std::size_t workers) {
    xtal::PreprocessConfig cfg;
    cfg.cif_dir = cif_dir;
    cfg.properties_csv = csv;
    cfg.workers = workers;
    return xtal::preprocess(cfg).index;
}

std::unique_ptr<xtal::ChatClient> make_client(const std::string& mock,
                                              const nlohmann::json& config,
                                              std::uint64_t seed,
                                              std::unique_ptr<xtal::ChatClient>& inner) {
    if (mock == "echo") return std::make_unique<xtal::EchoFirstExampleClient>();
    if (mock.rfind("corrupt:", 0) == 0) {
        const double p = std::stod(mock.substr(8));
        inner = std::make_unique<xtal::EchoFirstExampleClient>();
        return std::make_unique<xtal::CorruptClient>(*inner, p, seed);
    }
    if (!mock.empty()) throw xtal::ConfigError("unknown mock mode '" + mock + "'");
    xtal::EndpointConfig ep;
    const auto& endpoint = config.value("endpoint", nlohmann::json::object());
    ep.base_url = endpoint.value("base_url", "");
    ep.model = endpoint.value("model", "");
    ep.path = endpoint.value("path", ep.path);
    ep.api_key_env = endpoint.value("api_key_env", ep.api_key_env);
    const auto& gen = config.value("generation", nlohmann::json::object());
    ep.max_retries = gen.value("max_retries", ep.max_retries);
    ep.backoff_base_seconds = gen.value("backoff_base_seconds", ep.backoff_base_seconds);
    return std::make_unique<xtal::HttpChatClient>(ep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-group crystal text toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    std::string format_name = "sgs";
    std::size_t workers = 1;
    app.add_option("--config", config_path, "JSON config file")->configurable(false);
    app.add_option("--seed", seed, "random seed");
    app.add_option("--format", format_name, "text format: sgs or xyz")
        ->check(CLI::IsMember({"sgs", "xyz"}));
    app.add_option("--workers", workers, "worker thread count");

    // preprocess
    auto* pre = app.add_subcommand("preprocess", "convert a CIF corpus to SGS text");
    std::string cif_dir, properties_csv, out_dir;
    pre->add_option("--cifs", cif_dir, "directory of <id>.cif files")->required();
    pre->add_option("--properties", properties_csv, "property table CSV")->required();
    pre->add_option("--out", out_dir, "output directory")->required();

    // tokenize
    auto* tok = app.add_subcommand("tokenize", "print a structure file as text");
    std::string tokenize_input;
    int tokenize_group = 0;
    tok->add_option("file", tokenize_input, "input CIF file")->required();
    tok->add_option("--spacegroup", tokenize_group,
                    "space group number overriding the CIF declaration");

    // expand
    auto* exp = app.add_subcommand("expand", "expand SGS text to a CIF");
    std::string expand_input;
    exp->add_option("file", expand_input, "input SGS text file")->required();

    // build-dataset
    auto* build = app.add_subcommand("build-dataset", "emit the instruction dataset");
    std::string build_cifs, build_csv, build_out;
    build->add_option("--cifs", build_cifs, "directory of <id>.cif files")->required();
    build->add_option("--properties", build_csv, "property table CSV")->required();
    build->add_option("--out", build_out, "output prefix (<prefix>.jsonl + manifest)")
        ->required();

    // select
    auto* sel = app.add_subcommand("select", "print example ids for a condition");
    std::string sel_cifs, sel_csv, sel_strategy = "condition";
    std::size_t sel_k = 3;
    ConditionFlags sel_cond;
    sel->add_option("--cifs", sel_cifs, "directory of <id>.cif files")->required();
    sel->add_option("--properties", sel_csv, "property table CSV")->required();
    sel->add_option("--strategy", sel_strategy, "selection strategy")
        ->check(CLI::IsMember({"condition", "structure", "condition-structure", "random"}));
    sel->add_option("--k", sel_k, "shot count");
    add_condition_flags(sel, sel_cond);

    // generate
    auto* gen = app.add_subcommand("generate", "sample structures from a client");
    std::string gen_cifs, gen_csv, gen_out, gen_mock, gen_strategy = "condition";
    std::size_t gen_shots = 0, gen_samples = 1, gen_attempts = 10;
    ConditionFlags gen_cond;
    gen->add_option("--cifs", gen_cifs, "directory of <id>.cif files (few-shot)");
    gen->add_option("--properties", gen_csv, "property table CSV (few-shot)");
    gen->add_option("--out", gen_out, "output JSON-lines file")->required();
    gen->add_option("--mock", gen_mock, "mock client: echo or corrupt:<p>");
    gen->add_option("--shots", gen_shots, "in-context example count");
    gen->add_option("--strategy", gen_strategy, "selection strategy")
        ->check(CLI::IsMember({"condition", "structure", "condition-structure", "random"}));
    gen->add_option("--samples", gen_samples, "sample count");
    gen->add_option("--max-attempts", gen_attempts, "reject-and-resample cap");
    add_condition_flags(gen, gen_cond);

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "score generation outcomes");
    std::string eval_outcomes, eval_cifs, eval_csv, eval_out, eval_predictor;
    eval->add_option("--outcomes", eval_outcomes, "outcomes JSON-lines file")->required();
    eval->add_option("--cifs", eval_cifs, "reference CIF directory");
    eval->add_option("--properties", eval_csv, "reference property table CSV");
    eval->add_option("--out", eval_out, "report JSON output path")->required();
    eval->add_option("--predictor", eval_predictor,
                     "lookup predictor CSV (key,formation_energy,band_gap)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const xtal::TextFormat format = xtal::parse_format(format_name);
        const nlohmann::json config = load_config(config_path);

        if (*pre) {
            xtal::PreprocessConfig cfg;
            cfg.cif_dir = cif_dir;
            cfg.properties_csv = properties_csv;
            cfg.out_dir = out_dir;
            cfg.workers = workers;
            const auto result = xtal::preprocess(cfg);
            std::cout << result.manifest.dump(2) << "\n";
        } else if (*tok) {
            const auto doc = xtal::parse_cif(xtal::read_text_file(tokenize_input));
            const xtal::Crystal crystal = doc.to_crystal();
            int group = tokenize_group > 0 ? tokenize_group
                                           : doc.declared_group_number.value_or(1);
            std::cout << xtal::serialize_structure(crystal, format,
                                                   xtal::load_space_group(group))
                      << "\n";
        } else if (*exp) {
            const auto rec = xtal::parse_sgs(xtal::read_text_file(expand_input));
            const xtal::Crystal crystal = xtal::sgs_to_crystal(rec);
            const int group = xtal::load_space_group(rec.hm_symbol).number;
            std::cout << xtal::write_cif(crystal, group);
        } else if (*build) {
            const auto index = load_index(build_cifs, build_csv, workers);
            xtal::BuildConfig cfg = xtal::build_config_from_json(config);
            cfg.format = format;
            if (!app.get_option("--seed")->empty() || !config.contains("seed")) {
                cfg.seed = seed;
            }
            const auto dataset = xtal::build_dataset(index, cfg);
            xtal::write_text_file(build_out + ".jsonl", xtal::to_jsonl(dataset));
            xtal::write_text_file(build_out + ".manifest.json",
                                  dataset.manifest.dump(2) + "\n");
            std::cout << dataset.manifest.dump(2) << "\n";
        } else if (*sel) {
            const auto index = load_index(sel_cifs, sel_csv, workers);
            xtal::SelectionSpec spec;
            spec.strategy = xtal::parse_strategy(sel_strategy);
            spec.k = sel_k;
            spec.seed = seed;
            const auto result =
                xtal::select_examples(index, sel_cond.to_condition(), spec);
            for (const auto& id : result.ids) std::cout << id << "\n";
            if (result.partial) std::cerr << "warning: partial match, backfilled\n";
        } else if (*gen) {
            xtal::DatasetIndex index;
            if (gen_shots > 0) index = load_index(gen_cifs, gen_csv, workers);
            xtal::GenerationTask task;
            task.condition = gen_cond.to_condition();
            task.format = format;
            task.shots = gen_shots;
            task.selection.strategy = xtal::parse_strategy(gen_strategy);
            task.selection.seed = seed;
            task.sample_count = gen_samples;
            task.max_attempts = gen_attempts;
            const auto& sampling = config.value("sampling", nlohmann::json::object());
            task.request.temperature = sampling.value("temperature", 0.9);
            task.request.top_p = sampling.value("top_p", 0.9);
            std::unique_ptr<xtal::ChatClient> inner;
            auto client = make_client(gen_mock, config, seed, inner);
            const auto outcomes = xtal::generate_structures(
                task, *client, gen_shots > 0 ? &index : nullptr, workers);
            xtal::write_text_file(gen_out, xtal::outcomes_to_jsonl(outcomes));
            std::size_t ok = 0;
            for (const auto& o : outcomes) ok += o.crystal.has_value();
            std::cout << ok << "/" << outcomes.size() << " samples parsed\n";
        } else if (*eval) {
            std::vector<xtal::EvalSample> samples;
            std::istringstream in(xtal::read_text_file(eval_outcomes));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const auto j = nlohmann::json::parse(line);
                xtal::EvalSample s;
                s.condition = xtal::condition_from_json(j.value("condition",
                                                                nlohmann::json::object()));
                if (j.value("parsed", false)) {
                    s.raw = j.value("response", "");
                    if (format == xtal::TextFormat::sgs) {
                        xtal::SgsRecord rec = xtal::parse_sgs(s.raw);
                        s.crystal = xtal::sgs_to_crystal(rec);
                        s.sgs = std::move(rec);
                    } else {
                        s.crystal = xtal::parse_structure(s.raw, format);
                    }
                }
                samples.push_back(std::move(s));
            }
            std::vector<xtal::DatasetEntry> reference;
            if (!eval_cifs.empty() && !eval_csv.empty()) {
                reference = load_index(eval_cifs, eval_csv, workers).entries;
            }
            std::unique_ptr<xtal::LookupPredictor> predictor;
            if (!eval_predictor.empty()) {
                predictor = std::make_unique<xtal::LookupPredictor>(
                    xtal::LookupPredictor::from_csv(
                        xtal::read_text_file(eval_predictor)));
            }
            xtal::MetricsConfig cfg;
            cfg.seed = seed;
            const auto report =
                xtal::evaluate_batch(samples, reference, predictor.get(), cfg);
            xtal::write_text_file(eval_out, report.to_json().dump(2) + "\n");
            std::cout << report.to_json().dump(2) << "\n";
        }
    } catch (const xtal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
