#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace xtal;

namespace {

Crystal two_atoms(double separation, double cell = 10.0) {
    Crystal c;
    c.lattice = lattice_matrix_from_parameters({cell, cell, cell, 90, 90, 90});
    c.sites = {{"C", {0.1, 0.1, 0.1}},
               {"C", {0.1 + separation / cell, 0.1, 0.1}}};
    return c;
}

/// All-images oracle: every ordered site/image pair within a radius-2 box.
bool validity_oracle(const Crystal& c) {
    const ElementTable& t = ElementTable::builtin();
    for (std::size_t i = 0; i < c.sites.size(); ++i) {
        for (std::size_t j = 0; j < c.sites.size(); ++j) {
            const double rsum = 0.5 * (t.get(c.sites[i].element).covalent_radius +
                                       t.get(c.sites[j].element).covalent_radius);
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b) {
                    for (int k = -2; k <= 2; ++k) {
                        if (i == j && a == 0 && b == 0 && k == 0) continue;
                        const Vec3 d{c.sites[i].frac[0] - c.sites[j].frac[0] + a,
                                     c.sites[i].frac[1] - c.sites[j].frac[1] + b,
                                     c.sites[i].frac[2] - c.sites[j].frac[2] + k};
                        if (norm(frac_to_cart(c.lattice, d)) < rsum) return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Quadrature oracle for W1: integrate |F_x - F_y| over a fine merged grid.
double wasserstein_oracle(std::vector<double> xs, std::vector<double> ys) {
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<double> grid;
    grid.insert(grid.end(), xs.begin(), xs.end());
    grid.insert(grid.end(), ys.begin(), ys.end());
    std::sort(grid.begin(), grid.end());
    auto cdf = [](const std::vector<double>& v, double x) {
        std::size_t n = 0;
        while (n < v.size() && v[n] <= x) ++n;
        return static_cast<double>(n) / v.size();
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        total += std::abs(cdf(xs, grid[i]) - cdf(ys, grid[i])) * (grid[i + 1] - grid[i]);
    }
    return total;
}

}  // namespace

TEST_CASE("overlapping atoms fail structural validity") {
    CHECK_FALSE(structural_validity(two_atoms(0.1)));
    CHECK(structural_validity(two_atoms(2.0)));  // 2.0 >= 0.76 for carbon
    // one-atom cell: self-images at the lattice constant
    Crystal tiny;
    tiny.lattice = lattice_matrix_from_parameters({0.5, 0.5, 0.5, 90, 90, 90});
    tiny.sites = {{"C", {0, 0, 0}}};
    CHECK_FALSE(structural_validity(tiny));
    tiny.lattice = lattice_matrix_from_parameters({3.0, 3.0, 3.0, 90, 90, 90});
    CHECK(structural_validity(tiny));
}

TEST_CASE("structural validity matches the all-images oracle on random cells") {
    SplitMix64 rng(31337);
    static const char* elements[] = {"Na", "Cl", "O", "Ti", "Ca"};
    for (int trial = 0; trial < 100; ++trial) {
        Crystal c;
        c.lattice = lattice_matrix_from_parameters(
            {2.0 + 4.0 * rng.uniform(), 2.0 + 4.0 * rng.uniform(),
             2.0 + 4.0 * rng.uniform(), 90, 90, 90});
        for (int s = 0; s < 5; ++s) {
            c.sites.push_back(Site{elements[rng.below(5)],
                                   {rng.uniform(), rng.uniform(), rng.uniform()}});
        }
        CHECK(structural_validity(c) == validity_oracle(c));
    }
}

TEST_CASE("validity is invariant under permutation and wrapping") {
    SplitMix64 rng(7);
    Crystal c;
    c.lattice = lattice_matrix_from_parameters({4, 5, 6, 90, 90, 90});
    c.sites = {{"Na", {0.1, 0.2, 0.3}}, {"Cl", {0.6, 0.7, 0.8}},
               {"O", {0.3, 0.9, 0.5}}};
    const bool base = structural_validity(c);
    Crystal permuted = c;
    std::swap(permuted.sites[0], permuted.sites[2]);
    CHECK(structural_validity(permuted) == base);
    Crystal wrapped = c;
    wrapped.sites[1].frac = wrap_fractional(wrapped.sites[1].frac + Vec3{1, -1, 2});
    CHECK(structural_validity(wrapped) == base);
}

TEST_CASE("charge-neutral compositions validate; impossible ones do not") {
    CHECK(compositional_validity(parse_formula("NaCl")));
    CHECK(compositional_validity(parse_formula("TiO2")));
    CHECK(compositional_validity(parse_formula("CaTiO3")));
    CHECK_FALSE(compositional_validity(parse_formula("NaCl2")));
    bool capped = false;
    CHECK(compositional_validity(parse_formula("MgO"), ElementTable::builtin(),
                                 1000000, &capped));
    CHECK_FALSE(capped);
    // a one-combination cap trips the bound (Mn and S carry several states)
    compositional_validity(parse_formula("MnS2"), ElementTable::builtin(), 1,
                           &capped);
    CHECK(capped);
}

TEST_CASE("formula success compares reduced compositions") {
    GenerationCondition cond;
    cond.pretty_formula = "MgAgO2F";
    CHECK(formula_success(fixtures::mgagof(), cond));
    // a 2x supercell along c still succeeds via reduction
    const Crystal base = fixtures::mgagof();
    Crystal doubled;
    doubled.lattice = base.lattice;
    doubled.lattice.rows[2] = 2.0 * doubled.lattice.rows[2];
    for (const auto& s : base.sites) {
        const Vec3 f{s.frac[0], s.frac[1], s.frac[2] / 2.0};
        doubled.sites.push_back({s.element, f});
        doubled.sites.push_back({s.element, wrap_fractional(f + Vec3{0, 0, 0.5})});
    }
    CHECK(formula_success(doubled, cond));
    cond.pretty_formula = "MgAgOF";
    CHECK_FALSE(formula_success(fixtures::mgagof(), cond));
}

TEST_CASE("spacegroup success verifies rather than trusting the symbol") {
    GenerationCondition cond;
    cond.spacegroup_number = 123;
    const SgsRecord rec = parse_sgs(fixtures::mgagof_sgs());
    const Crystal c = sgs_to_crystal(rec);
    CHECK(spacegroup_success(c, rec, cond));
    GenerationCondition wrong;
    wrong.spacegroup_number = 221;
    CHECK_FALSE(spacegroup_success(c, rec, wrong));
    // matching symbol but broken orbit closure
    SgsRecord broken = rec;
    broken.representatives[2].frac = {0.13, 0.57, 0.42};
    Crystal bc;
    bc.lattice = lattice_matrix_from_parameters(broken.lattice);
    for (const auto& r : broken.representatives) bc.sites.push_back(r);
    CHECK_FALSE(spacegroup_success(bc, broken, cond));
    // XYZ output: verification against the target group directly
    CHECK(spacegroup_success(c, std::nullopt, cond));
}

TEST_CASE("numeric success rules: sign match and threshold") {
    const SuccessRule sign{SuccessRule::Kind::sign_match, 0};
    CHECK(numeric_property_success(-0.2, -1.681, sign));
    CHECK_FALSE(numeric_property_success(0.2, -1.681, sign));
    CHECK(numeric_property_success(0.0, 0.0, sign));
    CHECK_FALSE(numeric_property_success(0.1, 0.0, sign));
    const SuccessRule gap = SuccessRule::abs_diff_below(0.5);
    CHECK(numeric_property_success(1.3, 1.0, gap));
    CHECK_FALSE(numeric_property_success(1.6, 1.0, gap));
    CHECK_THROWS_AS(SuccessRule::abs_diff_below(0.0), Error);
}

TEST_CASE("wasserstein basics") {
    CHECK(wasserstein1({1, 2, 3}, {1, 2, 3}) == 0.0);
    CHECK(wasserstein1({1, 2, 3}, {1.5, 2.5, 3.5}) == Catch::Approx(0.5));
    CHECK(wasserstein1({0}, {3}) == Catch::Approx(3.0));
    CHECK_THROWS_AS(wasserstein1({}, {1.0}), Error);
}

TEST_CASE("wasserstein matches the quadrature oracle on random samples") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> xs(2 + rng.below(20)), ys(2 + rng.below(25));
        for (auto& v : xs) v = 10.0 * rng.uniform() - 5.0;
        for (auto& v : ys) v = 10.0 * rng.uniform() - 5.0;
        CHECK(wasserstein1(xs, ys) ==
              Catch::Approx(wasserstein_oracle(xs, ys)).margin(1e-12));
    }
}

TEST_CASE("wasserstein is a metric on the tested inputs") {
    SplitMix64 rng(405);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> xs(5), ys(7), zs(6);
        for (auto& v : xs) v = rng.uniform();
        for (auto& v : ys) v = rng.uniform();
        for (auto& v : zs) v = rng.uniform();
        const double dxy = wasserstein1(xs, ys);
        const double dyx = wasserstein1(ys, xs);
        CHECK(dxy == Catch::Approx(dyx).margin(1e-12));
        CHECK(dxy + wasserstein1(ys, zs) >= wasserstein1(xs, zs) - 1e-12);
    }
    std::vector<double> same{0.4, 0.1, 0.7};
    CHECK(wasserstein1(same, {0.1, 0.4, 0.7}) == 0.0);
}

TEST_CASE("coverage on identical and disjoint sets") {
    const DatasetIndex idx = fixtures::make_index();
    std::vector<FingerprintPair> fps;
    for (const auto& e : idx.entries) {
        fps.push_back({e.structure_fp, e.composition_fp});
    }
    const auto [recall, precision] = coverage(fps, fps);
    CHECK(recall == 1.0);
    CHECK(precision == 1.0);
    CoverageThresholds zero{0.0, 0.0};
    const auto [r0, p0] = coverage({fps[0]}, {fps[1]}, zero);
    CHECK(r0 == 0.0);
    CHECK(p0 == 0.0);
    // half of the reference duplicated into generated with tight thresholds
    std::vector<FingerprintPair> half(fps.begin(), fps.begin() + 10);
    const auto [rh, ph] = coverage(half, fps, CoverageThresholds{1e-9, 1e-9});
    CHECK(rh == Catch::Approx(0.5));
    CHECK(ph == 1.0);
}

TEST_CASE("coverage is monotone in the thresholds") {
    const DatasetIndex idx = fixtures::make_index();
    std::vector<FingerprintPair> gen, ref;
    for (std::size_t i = 0; i < idx.entries.size(); ++i) {
        (i % 2 ? gen : ref)
            .push_back({idx.entries[i].structure_fp, idx.entries[i].composition_fp});
    }
    double last_recall = 0.0, last_precision = 0.0;
    for (double t : {0.01, 0.1, 0.5, 2.0, 50.0}) {
        const auto [r, p] = coverage(gen, ref, CoverageThresholds{t, 10 * t});
        CHECK(r >= last_recall);
        CHECK(p >= last_precision);
        last_recall = r;
        last_precision = p;
    }
}

TEST_CASE("self-evaluation yields perfect validity, coverage and distances") {
    const DatasetIndex idx = fixtures::make_index();
    std::vector<EvalSample> samples;
    for (const auto& e : idx.entries) {
        EvalSample s;
        s.crystal = e.crystal;
        GenerationCondition cond;
        cond.pretty_formula = e.pretty_formula;
        s.condition = cond;
        samples.push_back(std::move(s));
    }
    MetricsConfig cfg;
    cfg.seed = 3;
    const MetricsReport report = evaluate_batch(samples, idx.entries, nullptr, cfg);
    CHECK(report.parsed == idx.entries.size());
    CHECK(report.rejected == 0);
    CHECK(report.structural_validity_rate == 1.0);
    CHECK(report.compositional_validity_rate > 0.0);
    REQUIRE(report.coverage_recall.has_value());
    CHECK(*report.coverage_recall == 1.0);
    CHECK(*report.coverage_precision == 1.0);
    REQUIRE(report.wdist_density.has_value());
    CHECK(*report.wdist_density == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(report.formula_rate.present);
    CHECK(report.formula_rate.mean == 1.0);
    CHECK(report.formula_rate.std_dev == 0.0);
}

TEST_CASE("one invalid sample in ten moves the overlap rate to 0.1") {
    const DatasetIndex idx = fixtures::make_index();
    std::vector<EvalSample> samples;
    for (int i = 0; i < 9; ++i) {
        EvalSample s;
        s.crystal = idx.entries[i].crystal;
        samples.push_back(std::move(s));
    }
    EvalSample bad;
    bad.crystal = two_atoms(0.05);
    samples.push_back(std::move(bad));
    const MetricsReport report = evaluate_batch(samples, {}, nullptr, {});
    CHECK(report.atomic_overlap_rate == Catch::Approx(0.1));
}

TEST_CASE("reports are deterministic and single-element datasets omit N_el") {
    const DatasetIndex idx = fixtures::make_index();
    std::vector<EvalSample> samples;
    std::vector<DatasetEntry> reference;
    for (const auto& e : idx.entries) {
        if (composition(e.crystal).size() != 1) continue;
        EvalSample s;
        s.crystal = e.crystal;
        samples.push_back(std::move(s));
        reference.push_back(e);
    }
    // all-copper reference: N_el is reported as absent
    reference = {*idx.by_id("f04")};
    MetricsConfig cfg;
    cfg.seed = 11;
    const MetricsReport a = evaluate_batch(samples, reference, nullptr, cfg);
    const MetricsReport b = evaluate_batch(samples, reference, nullptr, cfg);
    CHECK_FALSE(a.wdist_n_el.has_value());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("predictor plumbing feeds the numeric success rules") {
    const DatasetIndex idx = fixtures::make_index();
    std::vector<EvalSample> samples;
    EvalSample s;
    s.crystal = idx.by_id("f03")->crystal;
    GenerationCondition cond;
    cond.formation_energy = -1.0;
    cond.band_gap = 1.0;
    s.condition = cond;
    samples.push_back(s);
    const ConstantPredictor good({{"formation_energy", -0.3}, {"band_gap", 1.3}});
    MetricsReport report = evaluate_batch(samples, {}, &good, {});
    CHECK(report.formation_energy_rate.mean == 1.0);
    CHECK(report.band_gap_rate.mean == 1.0);
    REQUIRE(report.negative_formation_rate.has_value());
    CHECK(*report.negative_formation_rate == 1.0);
    const ConstantPredictor off({{"formation_energy", 0.3}, {"band_gap", 1.6}});
    report = evaluate_batch(samples, {}, &off, {});
    CHECK(report.formation_energy_rate.mean == 0.0);
    CHECK(report.band_gap_rate.mean == 0.0);
}

TEST_CASE("lookup predictor reads the keyed table") {
    const auto p = LookupPredictor::from_csv(
        "key,formation_energy,band_gap\nClNa,-2.1,5.0\nO2Ti,-3.3,3.1\n");
    const DatasetIndex idx = fixtures::make_index();
    const auto vals = p.evaluate(idx.by_id("f03")->crystal);  // NaCl
    CHECK(vals.at("formation_energy") == Catch::Approx(-2.1));
    CHECK(vals.at("band_gap") == Catch::Approx(5.0));
    CHECK_THROWS_AS(p.evaluate(idx.by_id("f01")->crystal), MissingPropertyError);
    CHECK_THROWS_AS(LookupPredictor::from_csv("bad,header\n"), ParseError);
}
