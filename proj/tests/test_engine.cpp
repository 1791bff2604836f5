#include <cmath>

#include "doctest.h"
#include "replisim/invariants.hpp"
#include "replisim/simulation.hpp"
#include "support.hpp"

using namespace replisim;

TEST_CASE("seed strand encoding") {
    SUBCASE("single codon") {
        auto cs = encode_seed_strand("0", {10, 10}, std::numbers::pi / 2);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].type == CodonType::Type0);
        CHECK(cs[0].is_free());
        CHECK(cs[0].position == Vec2{10, 10});
    }
    SUBCASE("two codons") {
        auto cs = encode_seed_strand("01", {50, 50}, std::numbers::pi / 2);
        REQUIRE(cs.size() == 2);
        CHECK(cs[0].partner(FieldSlot::Red) == 1u);
        CHECK(cs[1].partner(FieldSlot::Blue) == 0u);
        CHECK_FALSE(cs[0].partner(FieldSlot::Blue));
        CHECK(cs[0].size(FieldSlot::Red) == FieldSize::Large);
        CHECK(cs[1].size(FieldSlot::Blue) == FieldSize::Large);
        CHECK(cs[0].size(FieldSlot::Vertical) == FieldSize::Large);
        // Bonded tips coincide.
        CHECK(testing::oracle_tip(cs[0], 0).x == doctest::Approx(testing::oracle_tip(cs[1], 1).x));
        CHECK(testing::oracle_tip(cs[0], 0).y == doctest::Approx(testing::oracle_tip(cs[1], 1).y));
        CHECK(std::hypot(cs[1].position.x - cs[0].position.x, cs[1].position.y - cs[0].position.y) ==
              doctest::Approx(14.0));
    }
    SUBCASE("eight codons read back") {
        auto cs = encode_seed_strand("00011001", {75, 75}, std::numbers::pi / 2);
        auto strands = extract_strands(cs);
        REQUIRE(strands.size() == 1);
        CHECK(strands[0].bits == "00011001");
        CHECK(strands[0].complete);
        CHECK(strands[0].codons.front() == 0u);
        CHECK(check_invariants({0, cs}, testing::quiet_config()).empty());
    }
    SUBCASE("invalid input") {
        CHECK_THROWS_AS(encode_seed_strand("0a1", {0, 0}, 0.0), ConfigError);
        CHECK_THROWS_AS(encode_seed_strand("", {0, 0}, 0.0), ConfigError);
    }
}

TEST_CASE("initial soup") {
    SUBCASE("empty") {
        SimulationConfig cfg = testing::quiet_config();
        CHECK(init_soup(cfg).codons.empty());
    }
    SUBCASE("spontaneous preset") {
        const SimulationConfig cfg = spontaneous_replication_config();
        const SimulationState s = init_soup(cfg);
        REQUIRE(s.codons.size() == 88);
        std::size_t t1 = 0;
        for (const Codon& c : s.codons) {
            CHECK(c.is_free());
            CHECK(cfg.bounds().contains(c.position));
            CHECK(c.angle > -std::numbers::pi);
            CHECK(c.angle <= std::numbers::pi);
            t1 += c.type == CodonType::Type1;
        }
        CHECK(t1 == 44);
        CHECK(init_soup(cfg) == s);
        SimulationConfig other = cfg;
        other.rng_seed = 2;
        CHECK_FALSE(init_soup(other) == s);
    }
    SUBCASE("seeded preset") {
        const SimulationState s = init_soup(seeded_replication_config());
        REQUIRE(s.codons.size() == 88);
        for (std::size_t i = 0; i < 80; ++i) CHECK(s.codons[i].is_free());
        CHECK(s.codons[80].partner(FieldSlot::Red) == 81u);
        std::vector<Codon> tail(s.codons.begin() + 80, s.codons.end());
        for (Codon& c : tail)
            for (auto& b : c.bond)
                if (b) *b -= 80;
        CHECK(decode_bits(tail, std::vector<CodonId>{0, 1, 2, 3, 4, 5, 6, 7}) == "00011001");
    }
    SUBCASE("seed longer than the container") {
        SimulationConfig cfg = seeded_replication_config();
        cfg.seed->bits = std::string(12, '0');
        CHECK_THROWS_AS(init_soup(cfg), ConfigError);
    }
}

TEST_CASE("stepping an empty world") {
    Engine e(testing::quiet_config(), SimulationState{});
    for (int k = 0; k < 5; ++k) CHECK(e.step().empty());
    CHECK(e.state().step == 5);
    CHECK(e.normalized_time() == doctest::Approx(0.75));
}

TEST_CASE("a lone codon coasts under viscosity") {
    const SimulationConfig cfg = testing::quiet_config();
    SimulationState s;
    s.codons.push_back(testing::make_codon(CodonType::Type0, {100, 200}, 0.0));
    s.codons[0].velocity = {1.0, 0.0};
    Engine e(cfg, s);
    const double q = std::pow(1.0 - 0.10, 0.15);  // surviving fraction per step
    double x = 100.0;
    for (int n = 1; n <= 200; ++n) {
        e.step();
        x += 0.15 * std::pow(q, n);
    }
    CHECK(e.state().codons[0].velocity.x == doctest::Approx(std::pow(q, 200)).epsilon(1e-12));
    CHECK(e.state().codons[0].position.x == doctest::Approx(x).epsilon(1e-12));
    CHECK(e.state().codons[0].position.y == 200.0);
}

TEST_CASE("runs are reproducible and hold invariants") {
    SimulationConfig cfg = seeded_replication_config();
    cfg.rng_seed = 11;
    Engine a(cfg), b(cfg);
    for (int k = 0; k < 2000; ++k) {
        const auto ea = a.step();
        const auto& eb = b.step();
        REQUIRE(ea == eb);
        if (k % 50 == 0) {
            CHECK(check_invariants(a.state(), cfg).empty());
            CHECK(check_bond_contact(a.state(), cfg).empty());
        }
    }
    CHECK(a.state() == b.state());
}

TEST_CASE("resuming from a copied state matches the uninterrupted run") {
    SimulationConfig cfg = spontaneous_replication_config();
    cfg.rng_seed = 5;
    Engine a(cfg);
    for (int k = 0; k < 300; ++k) a.step();
    Engine b(cfg, a.state());
    for (int k = 0; k < 300; ++k) {
        a.step();
        b.step();
    }
    CHECK(a.state() == b.state());
}

TEST_CASE("simulation adds strand events and metrics") {
    SimulationConfig cfg = testing::quiet_config();
    cfg.seed = SeedPlacement{"0110", {200, 200}, std::numbers::pi / 2};
    Simulation sim(cfg);
    const MetricsRow m0 = sim.metrics();
    CHECK(m0.step == 0);
    CHECK(m0.strands == 1);
    CHECK(m0.complete_strands == 1);
    CHECK(m0.free_codons == 0);
    sim.step();
    CHECK(sim.metrics().normalized_time == doctest::Approx(0.15));

    SimulationState s;
    s.codons.push_back(testing::make_codon(CodonType::Type0, {50, 50}, 0.0));
    CHECK(compute_metrics(s, 0.15, 7) == MetricsRow{0, 0.0, 1, 0, 0, 7});
}

TEST_CASE("stop condition ends the run after its step") {
    SimulationConfig cfg = testing::quiet_config();
    cfg.seed = SeedPlacement{"01", {200, 200}, std::numbers::pi / 2};
    cfg.stop_on = EventKind::SplitTriggered;
    cfg.metrics_every = 1;
    Simulation sim(cfg);
    // A single strand of two codons without vertical partners never splits.
    const RunResult r = run(sim, 50);
    CHECK_FALSE(r.stop_event);
    CHECK(r.steps == 50);
    CHECK(r.metrics.size() == 51);

    SimulationConfig c2 = testing::quiet_config();
    c2.stop_on = EventKind::SplitTriggered;
    SimulationState s;
    s.codons = testing::double_strand("01", {200, 200});
    Simulation sim2(c2, s, StrandTracker{}, 0);
    const RunResult r2 = run(sim2, 500);
    REQUIRE(r2.stop_event);
    CHECK(r2.steps == r2.stop_event->step);
    CHECK(r2.steps < 500);
}
