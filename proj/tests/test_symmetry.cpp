#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"

using namespace xtal;

TEST_CASE("triplet notation parses and rejects malformed input") {
    const SymOp op = parse_symop("-y+x,z+1/3,1/2-x");
    CHECK(op.rot[0][0] == 1);
    CHECK(op.rot[0][1] == -1);
    CHECK(op.rot[1][2] == 1);
    CHECK(op.trans[1].twelfths == 4);
    CHECK(op.rot[2][0] == -1);
    CHECK(op.trans[2].twelfths == 6);
    CHECK_THROWS_AS(parse_symop("x,y"), ParseError);
    CHECK_THROWS_AS(parse_symop("x,y,q"), ParseError);
    CHECK_THROWS_AS(parse_symop("x,y,z+1/5"), ParseError);
    CHECK_THROWS_AS(parse_symop("x,y,-"), ParseError);
    CHECK_THROWS_AS(parse_symop("2x,y,z"), ParseError);  // not unimodular
}

TEST_CASE("all 230 groups load with validated axioms") {
    const SpaceGroupTable& table = SpaceGroupTable::builtin();
    for (int n = 1; n <= 230; ++n) {
        const SpaceGroup& g = table.by_number(n);
        CHECK(g.number == n);
        CHECK_FALSE(g.hm_symbol.empty());
        CHECK_FALSE(g.ops.empty());
    }
    CHECK_THROWS_AS(table.by_number(231), UnknownGroupError);
    CHECK_THROWS_AS(table.by_symbol("Xyzzy"), UnknownGroupError);
}

TEST_CASE("standard-setting op counts match known group orders") {
    CHECK(load_space_group(1).ops.size() == 1);
    CHECK(load_space_group("P1").number == 1);
    CHECK(load_space_group("P4/mmm").ops.size() == 16);
    CHECK(load_space_group("Pm-3m").ops.size() == 48);
    CHECK(load_space_group("Cmme").ops.size() == 16);
    CHECK(load_space_group(225).hm_symbol == "Fm-3m");
    CHECK(load_space_group(225).ops.size() == 192);
}

TEST_CASE("composition of ops stays in the group") {
    for (int n : {2, 14, 62, 123, 166, 194, 221, 227}) {
        const SpaceGroup& g = load_space_group(n);
        std::set<SymOp> members(g.ops.begin(), g.ops.end());
        for (const auto& a : g.ops) {
            for (const auto& b : g.ops) {
                CHECK(members.count(a.compose(b)) == 1);
            }
        }
    }
}

namespace {

/// Brute-force orbit: apply every op, wrap, dedup by fractional min-image.
std::vector<Vec3> orbit_oracle(const SpaceGroup& g, const Vec3& frac, double eps) {
    std::vector<Vec3> members;
    for (const auto& op : g.ops) {
        const Vec3 p = apply_op(op, wrap_fractional(frac));
        bool known = false;
        for (const auto& q : members) {
            if (min_image_frac_distance(p, q) < eps) known = true;
        }
        if (!known) members.push_back(p);
    }
    return members;
}

}  // namespace

TEST_CASE("orbit matches the brute-force oracle on random sites") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.below(230)) + 1;
        const SpaceGroup& g = load_space_group(n);
        const Vec3 f{rng.uniform(), rng.uniform(), rng.uniform()};
        const auto oracle = orbit_oracle(g, f, kDefaultSymEps);
        const WyckoffOrbit orb = orbit(g, Site{"C", f});
        REQUIRE(orb.multiplicity() == oracle.size());
        for (const auto& p : oracle) {
            bool found = false;
            for (const auto& q : orb.members) {
                if (min_image_frac_distance(p, q) < 1e-9) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("special positions collapse to the right multiplicities") {
    const SpaceGroup& g = load_space_group(123);
    CHECK(orbit(g, Site{"Mg", {0, 0, 0}}).multiplicity() == 1);
    CHECK(orbit(g, Site{"Ag", {0.5, 0.5, 0.5}}).multiplicity() == 1);
    CHECK(orbit(g, Site{"O", {0, 0.5, 0.5}}).multiplicity() == 2);
    CHECK(orbit(g, Site{"F", {0.5, 0.5, 0}}).multiplicity() == 1);
}

TEST_CASE("decompose recovers the generating orbits") {
    const Crystal c = fixtures::mgagof();
    REQUIRE(c.sites.size() == 5);
    const WyckoffDecomposition dec = decompose(c, load_space_group(123));
    REQUIRE(dec.orbits.size() == 4);
    std::vector<std::size_t> mults;
    for (const auto& orb : dec.orbits) mults.push_back(orb.multiplicity());
    CHECK(mults == std::vector<std::size_t>{1, 1, 2, 1});
}

TEST_CASE("the 24-atom Cmme cell decomposes into five orbits") {
    const Crystal c = fixtures::licuco3();
    CHECK(c.sites.size() == 24);
    const Composition comp = composition(c);
    CHECK(comp.at("Li") == 4);
    CHECK(comp.at("Cu") == 4);
    CHECK(comp.at("C") == 4);
    CHECK(comp.at("O") == 12);
    const WyckoffDecomposition dec = decompose(c, load_space_group(67));
    CHECK(dec.orbits.size() == 5);
}

TEST_CASE("verify accepts symmetric cells and rejects perturbed ones") {
    Crystal c = fixtures::mgagof();
    const SpaceGroup& g = load_space_group(123);
    CHECK(verify(c, g));
    // nudge one orbit member off its image
    for (auto& s : c.sites) {
        if (s.element == "O") {
            s.frac[0] += 0.05;
            break;
        }
    }
    CHECK_FALSE(verify(c, g));
    CHECK(verify(c, load_space_group(1)));  // everything is P1-symmetric
}

TEST_CASE("expand rejects colliding representatives of different elements") {
    CHECK_THROWS_AS(fixtures::make(123, {4, 4, 4, 90, 90, 90},
                                   {{"Mg", {0, 0, 0}}, {"Ag", {0, 0, 0}}}),
                    InvalidStructureError);
    CHECK_THROWS_AS(fixtures::make(123, {4, 4, 4, 90, 90, 90}, {}),
                    InvalidStructureError);
}

TEST_CASE("expand then decompose round-trips representative order") {
    for (const auto& spec : fixtures::specs()) {
        const Crystal c = fixtures::make(spec.group, spec.lattice, spec.reps);
        const WyckoffDecomposition dec = decompose(c, load_space_group(spec.group));
        REQUIRE(dec.orbits.size() == spec.reps.size());
        for (std::size_t i = 0; i < spec.reps.size(); ++i) {
            CHECK(dec.orbits[i].representative.element == spec.reps[i].element);
        }
    }
}
