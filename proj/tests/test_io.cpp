#include <bit>
#include <cstring>
#include <limits>
#include <random>
#include <regex>
#include "json.hpp"

#include "doctest.h"
#include "replisim/io.hpp"
#include "replisim/render.hpp"
#include "support.hpp"

using namespace replisim;

namespace {

std::string config_error(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

bool bit_equal(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("config parsing") {
    SUBCASE("empty document gives defaults") {
        CHECK(parse_config("") == SimulationConfig{});
        CHECK(parse_config("{}") == SimulationConfig{});
    }
    SUBCASE("timestep changes the per-step fractions") {
        const SimulationConfig cfg = parse_config("timestep_duration: 0.075\n");
        const PhysicsParams p = cfg.physics();
        CHECK(p.linear_viscosity == doctest::Approx(1.0 - std::pow(0.9, 0.075)));
        CHECK(p.angular_spring_damping == doctest::Approx(1.0 - std::pow(0.01, 0.075)));
    }
    SUBCASE("fraction overrides") {
        const SimulationConfig cfg = parse_config("linear_viscosity: 0.25\n");
        CHECK(cfg.physics().linear_viscosity == 0.25);
    }
    SUBCASE("presets and seed block") {
        const SimulationConfig a = parse_config("preset: seeded_replication\n");
        CHECK(a == seeded_replication_config());
        const SimulationConfig b = parse_config("preset: spontaneous_replication\nfree_type0: 10\n");
        CHECK(b.free_type0 == 10);
        CHECK(b.free_type1 == 44);
        const SimulationConfig c = parse_config("seed:\n  bits: \"0110\"\n  angle: pi/4\n");
        REQUIRE(c.seed);
        CHECK(c.seed->bits == "0110");
        CHECK(c.seed->center == Vec2{75, 75});
        CHECK(c.seed->angle == doctest::Approx(std::numbers::pi / 4));
    }
    SUBCASE("per-colour values") {
        const SimulationConfig cfg = parse_config("angle_tolerance:\n  red: pi/16\n  blue: pi/16\narm_force: 2\n");
        CHECK(cfg.tolerances.angle_tolerance.red == doctest::Approx(std::numbers::pi / 16));
        CHECK(cfg.arm_force.green == 2.0);
        CHECK(cfg.arm_force.yellow == 2.0);
    }
    SUBCASE("a negative tolerance names its line and key") {
        const std::string err = config_error("rng_seed: 3\nangle_tolerance:\n  red: -1\n");
        CHECK(err.find("line 3") != std::string::npos);
        CHECK(err.find("angle_tolerance.red") != std::string::npos);
    }
    SUBCASE("rejections") {
        CHECK(config_error("no_such_key: 1\n").find("line 1") != std::string::npos);
        CHECK(config_error("no_such_key: 1\n").find("no_such_key") != std::string::npos);
        CHECK_FALSE(config_error("container_width: [1,\n").empty());
        CHECK(config_error("container_width: -5\n").find("container_width") != std::string::npos);
        CHECK_FALSE(config_error("seed:\n  bits: \"012\"\n").empty());
        CHECK_FALSE(config_error("preset: nonsense\n").empty());
        CHECK_FALSE(config_error("stop_on: Nothing\n").empty());
        CHECK_FALSE(config_error("rng_seed: -1\n").empty());
    }
    SUBCASE("json round trip") {
        SimulationConfig cfg = seeded_replication_config();
        cfg.tolerances.angle_tolerance.red = std::numbers::pi / 64;
        cfg.moment_of_inertia = 2.5;
        cfg.stop_on = EventKind::StrandCompleted;
        cfg.stop_on_bits = "01100111";
        cfg.iterations_after_split = 500;
        cfg.linear_spring_damping = 0.3;
        CHECK(parse_config(config_to_json(cfg)) == cfg);
        CHECK(config_digest(parse_config(config_to_json(cfg))) == config_digest(cfg));
        CHECK(config_digest(cfg).size() == 16);
        SimulationConfig other = cfg;
        other.rng_seed = 99;
        CHECK(config_digest(other) != config_digest(cfg));
    }
}

TEST_CASE("angle expressions") {
    CHECK(parse_angle("pi") == doctest::Approx(std::numbers::pi));
    CHECK(parse_angle("pi/256") == doctest::Approx(std::numbers::pi / 256));
    CHECK(parse_angle("-pi/3") == doctest::Approx(-std::numbers::pi / 3));
    CHECK(parse_angle("2*pi") == doctest::Approx(2 * std::numbers::pi));
    CHECK(parse_angle("0.25") == 0.25);
    CHECK_THROWS(parse_angle("tau"));
    CHECK_THROWS(parse_angle("pi/"));
}

TEST_CASE("snapshot round trip") {
    SUBCASE("no codons") {
        Simulation sim(testing::quiet_config());
        const SnapshotDocument doc = capture(sim);
        const SnapshotDocument back = read_snapshot(write_snapshot(doc));
        CHECK(back == doc);
        CHECK(back.state.codons.empty());
    }
    SUBCASE("a running soup is bit exact") {
        SimulationConfig cfg = seeded_replication_config();
        cfg.rng_seed = 4;
        Simulation sim(cfg);
        for (int k = 0; k < 500; ++k) sim.step();
        const SnapshotDocument doc = capture(sim);
        REQUIRE(doc.state.codons.size() == 88);
        const std::string text = write_snapshot(doc);
        const SnapshotDocument back = read_snapshot(text);
        CHECK(back == doc);
        CHECK(write_snapshot(back) == text);
        for (std::size_t i = 0; i < 88; ++i) {
            CHECK(bit_equal(back.state.codons[i].position.x, doc.state.codons[i].position.x));
            CHECK(bit_equal(back.state.codons[i].angular_velocity, doc.state.codons[i].angular_velocity));
        }
    }
    SUBCASE("awkward doubles") {
        Simulation sim(testing::quiet_config());
        SnapshotDocument doc = capture(sim);
        std::mt19937_64 rng(1);
        const double specials[] = {-0.0, std::numeric_limits<double>::denorm_min(),
                                   std::numeric_limits<double>::min(), 0.1, 1.0 / 3.0,
                                   -std::numeric_limits<double>::epsilon()};
        for (double v : specials) {
            Codon c = testing::make_codon(CodonType::Type1, {200, 200}, 0.0);
            c.velocity = {v, -v};
            c.angular_velocity = v;
            doc.state.codons.push_back(c);
        }
        for (int i = 0; i < 200; ++i) {
            Codon c = testing::make_codon(CodonType::Type0, {200, 200}, 0.0);
            double vx;
            do {
                const std::uint64_t bits = rng();
                std::memcpy(&vx, &bits, sizeof vx);
            } while (!std::isfinite(vx));
            c.velocity = {vx, 0.0};
            doc.state.codons.push_back(c);
        }
        const SnapshotDocument back = read_snapshot(write_snapshot(doc));
        REQUIRE(back.state.codons.size() == doc.state.codons.size());
        for (std::size_t i = 0; i < doc.state.codons.size(); ++i) {
            CHECK(bit_equal(back.state.codons[i].velocity.x, doc.state.codons[i].velocity.x));
            CHECK(bit_equal(back.state.codons[i].velocity.y, doc.state.codons[i].velocity.y));
        }
    }
    SUBCASE("restore continues identically") {
        SimulationConfig cfg = spontaneous_replication_config();
        cfg.rng_seed = 8;
        Simulation a(cfg);
        for (int k = 0; k < 200; ++k) a.step();
        Simulation b = restore(read_snapshot(write_snapshot(capture(a))));
        for (int k = 0; k < 200; ++k) CHECK(a.step() == b.step());
        CHECK(capture(a) == capture(b));
    }
}

TEST_CASE("snapshot rejection") {
    SimulationConfig cfg = testing::quiet_config();
    cfg.seed = SeedPlacement{"0110", {200, 200}, std::numbers::pi / 2};
    Simulation sim(cfg);
    const std::string good = write_snapshot(capture(sim));
    auto error_of = [](const std::string& text) -> std::string {
        try {
            read_snapshot(text);
        } catch (const SnapshotError& e) {
            return e.what();
        }
        return {};
    };
    CHECK(error_of(good).empty());
    CHECK_FALSE(error_of(good.substr(0, good.size() / 2)).empty());
    CHECK_FALSE(error_of("{}").empty());
    CHECK_FALSE(error_of(std::regex_replace(good, std::regex("\"version\": 1"), "\"version\": 9")).empty());
    CHECK_FALSE(error_of(std::regex_replace(good, std::regex("\"codon_count\": 4"), "\"codon_count\": 5")).empty());
    // Break the third codon record.
    nlohmann::json j = nlohmann::json::parse(good);
    j["codons"][2]["type"] = 7;
    CHECK(error_of(j.dump()).find("codon record 2") != std::string::npos);
    nlohmann::json k = nlohmann::json::parse(good);
    k["codons"][1]["bonds"]["red"] = nullptr;
    CHECK_FALSE(error_of(k.dump()).empty());
    nlohmann::json d = nlohmann::json::parse(good);
    d["config_digest"] = "0000000000000000";
    CHECK_FALSE(error_of(d.dump()).empty());
}

TEST_CASE("event log lines") {
    const EventRecord e{12, EventKind::BondFormed, {3, 9}, "red_blue", ""};
    const std::string line = event_to_json_line(e);
    CHECK(line == R"({"v":1,"step":12,"kind":"BondFormed","codons":[3,9],"slot":"red_blue"})");
    CHECK(event_from_json_line(line) == e);
    const EventRecord s{40, EventKind::StrandCompleted, {1, 2, 3}, "", "011"};
    CHECK(event_from_json_line(event_to_json_line(s)) == s);
    for (auto k : {EventKind::BondFormed, EventKind::BondBroken, EventKind::SplitTriggered,
                   EventKind::StrandCompleted, EventKind::SpontaneousDimer, EventKind::Mutation})
        CHECK(event_kind_from_string(to_string(k)) == k);
}

TEST_CASE("metrics rows") {
    CHECK(kMetricsHeader == "step,normalized_time,free_codons,strands,complete_strands,events_cum");
    const MetricsRow r{1000, 150.0, 80, 1, 1, 5};
    CHECK(metrics_csv_row(r) == "1000,150,80,1,1,5");
}

TEST_CASE("rendering") {
    SUBCASE("empty world is the container only") {
        const SimulationConfig cfg = testing::quiet_config(150);
        const std::string svg = render_svg(SimulationState{}, cfg);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(count(svg, "<rect") == 1);
        CHECK(count(svg, "<circle") == 0);
        CHECK(svg.find("width=\"616\"") != std::string::npos);
    }
    SUBCASE("one type 1 codon") {
        const SimulationConfig cfg = testing::quiet_config(150);
        SimulationState s;
        s.codons.push_back(testing::make_codon(CodonType::Type1, {75, 75}, 0.0));
        const std::string svg = render_svg(s, cfg);
        CHECK(count(svg, "<line") == 3);
        CHECK(count(svg, "<circle") == 4);
        CHECK(svg.find("#00AA00") != std::string::npos);
        CHECK(svg.find("#8800CC") == std::string::npos);
        CHECK(render_svg(s, cfg) == svg);
    }
    SUBCASE("bonded pair is drawn as one split disc") {
        const SimulationConfig cfg = testing::quiet_config(150);
        SimulationState s;
        s.codons = encode_seed_strand("01", {75, 75}, std::numbers::pi / 2);
        const std::string svg = render_svg(s, cfg);
        CHECK(count(svg, "<path") == 2);
        CHECK(count(svg, "<circle") == 6);
    }
    SUBCASE("matches the stored seeded frame") {
        const std::string golden = read_file(std::string(REPLISIM_GOLDEN_DIR) + "/seeded_step0.svg");
        const SimulationConfig cfg = seeded_replication_config();
        CHECK(render_svg(init_soup(cfg), cfg) == golden);
    }
}
