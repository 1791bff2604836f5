#include "replisim/io.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace replisim {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<const char*, FieldColor>, 5> kColorKeys{{
    {"red", FieldColor::Red},
    {"blue", FieldColor::Blue},
    {"green", FieldColor::Green},
    {"purple", FieldColor::Purple},
    {"yellow", FieldColor::Yellow},
}};

[[noreturn]] void fail(const YAML::Node& n, const std::string& path, const std::string& what) {
    std::string where;
    if (n.IsDefined() && n.Mark().line >= 0) where = "line " + std::to_string(n.Mark().line + 1) + ": ";
    throw ConfigError(where + path + ": " + what);
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool parse_double_exact(std::string_view s, double& out) {
    std::string t = trim(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    const char* end = t.data() + t.size();
    auto [p, ec] = std::from_chars(t.data(), end, out);
    return ec == std::errc() && p == end && !t.empty();
}

std::string scalar_of(const YAML::Node& n, const std::string& path) {
    if (!n.IsScalar()) fail(n, path, "expected a scalar value");
    return n.Scalar();
}

double as_double(const YAML::Node& n, const std::string& path) {
    double v = 0.0;
    if (!parse_double_exact(scalar_of(n, path), v)) fail(n, path, "expected a number");
    if (!std::isfinite(v)) fail(n, path, "must be finite");
    return v;
}

double as_angle(const YAML::Node& n, const std::string& path) {
    try {
        return parse_angle(scalar_of(n, path));
    } catch (const ConfigError& e) {
        fail(n, path, e.what());
    }
}

template <typename T>
T as_unsigned(const YAML::Node& n, const std::string& path) {
    const std::string s = trim(scalar_of(n, path));
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) fail(n, path, "value out of range");
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        fail(n, path, "expected a non-negative integer");
    return v;
}

std::string as_string(const YAML::Node& n, const std::string& path) { return scalar_of(n, path); }

std::string bit_string(const YAML::Node& n, const std::string& path) {
    std::string s = as_string(n, path);
    if (s.empty()) fail(n, path, "must not be empty");
    for (char ch : s)
        if (ch != '0' && ch != '1') fail(n, path, "must contain only 0 and 1");
    return s;
}

/// A mapping whose keys are all checked against a handler table.
void walk_map(const YAML::Node& n, const std::string& path,
              const std::map<std::string, std::function<void(const YAML::Node&, const std::string&)>>&
                  handlers) {
    if (!n.IsMap()) fail(n, path.empty() ? "<document>" : path, "expected a mapping");
    for (const auto& kv : n) {
        const std::string key = kv.first.as<std::string>();
        const std::string sub = path.empty() ? key : path + "." + key;
        auto it = handlers.find(key);
        if (it == handlers.end()) fail(kv.first, sub, "unknown key");
        it->second(kv.second, sub);
    }
}

void per_color(const YAML::Node& n, const std::string& path, PerColor<double>& out, bool angles) {
    auto read = [&](const YAML::Node& v, const std::string& p) {
        return angles ? as_angle(v, p) : as_double(v, p);
    };
    if (n.IsScalar()) {
        const double v = read(n, path);
        for (auto [name, c] : kColorKeys) out[c] = v;
        return;
    }
    std::map<std::string, std::function<void(const YAML::Node&, const std::string&)>> h;
    for (auto [name, c] : kColorKeys) {
        const FieldColor color = c;
        h[name] = [&, color](const YAML::Node& v, const std::string& p) { out[color] = read(v, p); };
    }
    walk_map(n, path, h);
}

Vec2 as_vec2(const YAML::Node& n, const std::string& path) {
    if (!n.IsSequence() || n.size() != 2) fail(n, path, "expected [x, y]");
    return {as_double(n[0], path + "[0]"), as_double(n[1], path + "[1]")};
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    double v = 0.0;
    if (parse_double_exact(s, v)) return v;
    // [sign][k*]pi[/d]
    double sign = 1.0;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) sign = s[i++] == '-' ? -1.0 : 1.0;
    const std::size_t pi_at = s.find("pi", i);
    if (pi_at == std::string::npos) throw ConfigError("expected a number or a multiple of pi");
    double k = 1.0, d = 1.0;
    if (pi_at > i) {
        if (s[pi_at - 1] != '*' || !parse_double_exact(std::string_view(s).substr(i, pi_at - 1 - i), k))
            throw ConfigError("malformed angle expression '" + std::string(text) + "'");
    }
    const std::size_t rest = pi_at + 2;
    if (rest < s.size()) {
        if (s[rest] != '/' || !parse_double_exact(std::string_view(s).substr(rest + 1), d) || d == 0.0)
            throw ConfigError("malformed angle expression '" + std::string(text) + "'");
    }
    return sign * k * std::numbers::pi / d;
}

SimulationConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ConfigError("line " + std::to_string(e.mark.line + 1) + ": malformed document: " + e.msg);
    }
    if (root.IsNull() || !root.IsDefined()) {
        SimulationConfig cfg;
        cfg.validate();
        return cfg;
    }
    if (!root.IsMap()) fail(root, "<document>", "expected a mapping at top level");

    SimulationConfig cfg;
    if (const YAML::Node p = root["preset"]) {
        const std::string name = as_string(p, "preset");
        if (name == "seeded_replication") cfg = seeded_replication_config();
        else if (name == "spontaneous_replication") cfg = spontaneous_replication_config();
        else if (name != "default") fail(p, "preset", "unknown preset '" + name + "'");
    }

    bool seed_center_default = false;
    using H = std::map<std::string, std::function<void(const YAML::Node&, const std::string&)>>;
    auto num = [](double& dst) {
        return [&dst](const YAML::Node& n, const std::string& p) { dst = as_double(n, p); };
    };
    auto opt_num = [](std::optional<double>& dst) {
        return [&dst](const YAML::Node& n, const std::string& p) {
            if (n.IsNull()) dst.reset();
            else dst = as_double(n, p);
        };
    };
    auto u32 = [](std::uint32_t& dst) {
        return [&dst](const YAML::Node& n, const std::string& p) { dst = as_unsigned<std::uint32_t>(n, p); };
    };
    auto u64 = [](std::uint64_t& dst) {
        return [&dst](const YAML::Node& n, const std::string& p) { dst = as_unsigned<std::uint64_t>(n, p); };
    };
    auto colors = [](PerColor<double>& dst, bool angles) {
        return [&dst, angles](const YAML::Node& n, const std::string& p) { per_color(n, p, dst, angles); };
    };

    H handlers{
        {"preset", [](const YAML::Node&, const std::string&) {}},
        {"container_width", num(cfg.container_width)},
        {"container_height", num(cfg.container_height)},
        {"free_type0", u32(cfg.free_type0)},
        {"free_type1", u32(cfg.free_type1)},
        {"seed",
         [&](const YAML::Node& n, const std::string& p) {
             if (n.IsNull()) {
                 cfg.seed.reset();
                 return;
             }
             SeedPlacement s{"", {cfg.container_width / 2, cfg.container_height / 2},
                             std::numbers::pi / 2};
             if (cfg.seed) s = *cfg.seed;
             bool center_set = false;
             walk_map(n, p,
                      H{{"bits", [&](const YAML::Node& v, const std::string& q) { s.bits = bit_string(v, q); }},
                        {"center",
                         [&](const YAML::Node& v, const std::string& q) {
                             s.center = as_vec2(v, q);
                             center_set = true;
                         }},
                        {"angle", [&](const YAML::Node& v, const std::string& q) { s.angle = as_angle(v, q); }}});
             if (s.bits.empty()) fail(n, p + ".bits", "required");
             seed_center_default = !center_set && !cfg.seed;
             cfg.seed = s;
         }},
        {"timestep_duration", num(cfg.timestep_duration)},
        {"linear_viscosity_rate", num(cfg.linear_viscosity_rate)},
        {"angular_viscosity_rate", num(cfg.angular_viscosity_rate)},
        {"linear_spring_damping_rate", num(cfg.linear_spring_damping_rate)},
        {"angular_spring_damping_rate", num(cfg.angular_spring_damping_rate)},
        {"linear_viscosity", opt_num(cfg.linear_viscosity)},
        {"angular_viscosity", opt_num(cfg.angular_viscosity)},
        {"linear_spring_damping", opt_num(cfg.linear_spring_damping)},
        {"angular_spring_damping", opt_num(cfg.angular_spring_damping)},
        {"iterations_after_split",
         [&](const YAML::Node& n, const std::string& p) {
             if (n.IsNull()) cfg.iterations_after_split.reset();
             else cfg.iterations_after_split = as_unsigned<std::uint32_t>(n, p);
         }},
        {"arm_length", colors(cfg.geometry.arm_length, false)},
        {"small_field_radius", colors(cfg.geometry.small_field_radius, false)},
        {"large_field_radius", colors(cfg.geometry.large_field_radius, false)},
        {"arm_force", colors(cfg.arm_force, false)},
        {"straightening_force", colors(cfg.straightening_force, false)},
        {"angle_tolerance", colors(cfg.tolerances.angle_tolerance, true)},
        {"moment_of_inertia", opt_num(cfg.moment_of_inertia)},
        {"brownian_linear_amplitude", num(cfg.brownian_linear_amplitude)},
        {"brownian_angular_amplitude", num(cfg.brownian_angular_amplitude)},
        {"rng_seed", u64(cfg.rng_seed)},
        {"max_steps", u64(cfg.max_steps)},
        {"snapshot_every", u64(cfg.snapshot_every)},
        {"metrics_every", u64(cfg.metrics_every)},
        {"stop_on",
         [&](const YAML::Node& n, const std::string& p) {
             if (n.IsNull()) {
                 cfg.stop_on.reset();
                 return;
             }
             auto k = event_kind_from_string(as_string(n, p));
             if (!k) fail(n, p, "unknown event kind '" + n.Scalar() + "'");
             cfg.stop_on = *k;
         }},
        {"stop_on_bits",
         [&](const YAML::Node& n, const std::string& p) {
             if (n.IsNull()) cfg.stop_on_bits.reset();
             else cfg.stop_on_bits = bit_string(n, p);
         }},
    };
    walk_map(root, "", handlers);
    if (seed_center_default) cfg.seed->center = {cfg.container_width / 2, cfg.container_height / 2};

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        // Point at the offending key when it is present in the document.
        const std::string msg = e.what();
        const std::string key = msg.substr(0, msg.find(':'));
        YAML::Node n = root;
        std::string rest = key;
        bool found = true;
        while (!rest.empty()) {
            const std::size_t dot = rest.find('.');
            const std::string part = rest.substr(0, dot);
            if (!n.IsMap() || !n[part]) {
                found = false;
                break;
            }
            n = n[part];
            rest = dot == std::string::npos ? "" : rest.substr(dot + 1);
        }
        if (found && n.Mark().line >= 0)
            throw ConfigError("line " + std::to_string(n.Mark().line + 1) + ": " + msg);
        throw;
    }
    return cfg;
}

SimulationConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

namespace {

json per_color_json(const PerColor<double>& v) {
    json j = json::object();
    for (auto [name, c] : kColorKeys) j[name] = v[c];
    return j;
}

json config_json(const SimulationConfig& c) {
    json j = json::object();
    j["container_width"] = c.container_width;
    j["container_height"] = c.container_height;
    j["free_type0"] = c.free_type0;
    j["free_type1"] = c.free_type1;
    if (c.seed)
        j["seed"] = {{"bits", c.seed->bits},
                     {"center", {c.seed->center.x, c.seed->center.y}},
                     {"angle", c.seed->angle}};
    else
        j["seed"] = nullptr;
    j["timestep_duration"] = c.timestep_duration;
    j["linear_viscosity_rate"] = c.linear_viscosity_rate;
    j["angular_viscosity_rate"] = c.angular_viscosity_rate;
    j["linear_spring_damping_rate"] = c.linear_spring_damping_rate;
    j["angular_spring_damping_rate"] = c.angular_spring_damping_rate;
    if (c.linear_viscosity) j["linear_viscosity"] = *c.linear_viscosity;
    if (c.angular_viscosity) j["angular_viscosity"] = *c.angular_viscosity;
    if (c.linear_spring_damping) j["linear_spring_damping"] = *c.linear_spring_damping;
    if (c.angular_spring_damping) j["angular_spring_damping"] = *c.angular_spring_damping;
    if (c.iterations_after_split) j["iterations_after_split"] = *c.iterations_after_split;
    j["arm_length"] = per_color_json(c.geometry.arm_length);
    j["small_field_radius"] = per_color_json(c.geometry.small_field_radius);
    j["large_field_radius"] = per_color_json(c.geometry.large_field_radius);
    j["arm_force"] = per_color_json(c.arm_force);
    j["straightening_force"] = per_color_json(c.straightening_force);
    j["angle_tolerance"] = per_color_json(c.tolerances.angle_tolerance);
    if (c.moment_of_inertia) j["moment_of_inertia"] = *c.moment_of_inertia;
    j["brownian_linear_amplitude"] = c.brownian_linear_amplitude;
    j["brownian_angular_amplitude"] = c.brownian_angular_amplitude;
    j["rng_seed"] = c.rng_seed;
    j["max_steps"] = c.max_steps;
    j["snapshot_every"] = c.snapshot_every;
    j["metrics_every"] = c.metrics_every;
    if (c.stop_on) j["stop_on"] = std::string(to_string(*c.stop_on));
    if (c.stop_on_bits) j["stop_on_bits"] = *c.stop_on_bits;
    return j;
}

}  // namespace

std::string config_to_json(const SimulationConfig& cfg) { return config_json(cfg).dump(); }

std::string config_digest(const SimulationConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : config_to_json(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---- snapshots ------------------------------------------------------------

namespace {

constexpr std::array<const char*, 3> kSplittingNames{"x", "y", "z"};
constexpr std::array<const char*, 3> kBondKeys{"red", "blue", "vertical"};

json codon_json(CodonId id, const Codon& c) {
    std::string sizes;
    for (FieldSize s : c.field_size) sizes += s == FieldSize::Large ? 'L' : 'S';
    json bonds = json::object();
    for (std::size_t k = 0; k < 3; ++k)
        bonds[kBondKeys[k]] = c.bond[k] ? json(*c.bond[k]) : json(nullptr);
    return {
        {"id", id},
        {"type", c.type == CodonType::Type0 ? 0 : 1},
        {"position", {c.position.x, c.position.y}},
        {"angle", c.angle},
        {"velocity", {c.velocity.x, c.velocity.y}},
        {"angular_velocity", c.angular_velocity},
        {"fields", sizes},
        {"bonds", bonds},
        {"strand_location", c.strand_location},
        {"splitting", kSplittingNames[static_cast<std::size_t>(c.splitting)]},
        {"yellow_steps_large", c.yellow_steps_large},
        {"z_steps", c.z_steps},
    };
}

double get_double(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number()) throw SnapshotError(std::string("field '") + key + "' is not a number");
    return v.get<double>();
}

template <typename T>
T get_unsigned(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number_unsigned()) throw SnapshotError(std::string("field '") + key + "' is not a non-negative integer");
    const auto x = v.get<std::uint64_t>();
    if (x > std::numeric_limits<T>::max()) throw SnapshotError(std::string("field '") + key + "' out of range");
    return static_cast<T>(x);
}

Vec2 get_vec2(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw SnapshotError(std::string("field '") + key + "' must be [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

Codon codon_from_json(const json& j, CodonId expected_id, std::size_t count) {
    if (!j.is_object()) throw SnapshotError("not an object");
    if (get_unsigned<CodonId>(j, "id") != expected_id) throw SnapshotError("id out of sequence");
    Codon c;
    const auto type = get_unsigned<unsigned>(j, "type");
    if (type > 1) throw SnapshotError("field 'type' must be 0 or 1");
    c.type = type == 0 ? CodonType::Type0 : CodonType::Type1;
    c.position = get_vec2(j, "position");
    c.angle = get_double(j, "angle");
    c.velocity = get_vec2(j, "velocity");
    c.angular_velocity = get_double(j, "angular_velocity");
    const json& f = j.at("fields");
    if (!f.is_string() || f.get<std::string>().size() != 4)
        throw SnapshotError("field 'fields' must be four S/L characters");
    const std::string sizes = f.get<std::string>();
    for (std::size_t k = 0; k < 4; ++k) {
        if (sizes[k] != 'S' && sizes[k] != 'L') throw SnapshotError("field 'fields' must be four S/L characters");
        c.field_size[k] = sizes[k] == 'L' ? FieldSize::Large : FieldSize::Small;
    }
    const json& b = j.at("bonds");
    if (!b.is_object()) throw SnapshotError("field 'bonds' must be an object");
    for (std::size_t k = 0; k < 3; ++k) {
        const json& v = b.at(kBondKeys[k]);
        if (v.is_null()) continue;
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= count)
            throw SnapshotError(std::string("bond '") + kBondKeys[k] + "' is not a valid codon id");
        c.bond[k] = static_cast<CodonId>(v.get<std::uint64_t>());
    }
    c.strand_location = get_unsigned<std::uint8_t>(j, "strand_location");
    if (c.strand_location > 2) throw SnapshotError("field 'strand_location' must be 0, 1 or 2");
    const json& sp = j.at("splitting");
    bool ok = false;
    for (std::size_t k = 0; k < 3 && sp.is_string(); ++k)
        if (sp.get<std::string>() == kSplittingNames[k]) {
            c.splitting = static_cast<SplittingState>(k);
            ok = true;
        }
    if (!ok) throw SnapshotError("field 'splitting' must be x, y or z");
    c.yellow_steps_large = get_unsigned<std::uint32_t>(j, "yellow_steps_large");
    c.z_steps = get_unsigned<std::uint32_t>(j, "z_steps");
    return c;
}

}  // namespace

SnapshotDocument capture(const Simulation& sim) {
    return {sim.config(), sim.state(), sim.tracker().seen(), sim.events_cum()};
}

Simulation restore(const SnapshotDocument& doc) {
    StrandTracker tracker(doc.config.seed ? std::optional(doc.config.seed->bits) : std::nullopt);
    tracker.restore_seen(doc.tracker_seen);
    return Simulation(doc.config, doc.state, std::move(tracker), doc.events_cum);
}

std::string write_snapshot(const SnapshotDocument& doc) {
    json j = json::object();
    j["format"] = "replisim-snapshot";
    j["version"] = kSnapshotVersion;
    j["step"] = doc.state.step;
    j["normalized_time"] = static_cast<double>(doc.state.step) * doc.config.timestep_duration;
    j["config_digest"] = config_digest(doc.config);
    j["config"] = config_json(doc.config);
    j["events_cum"] = doc.events_cum;
    json seen = json::array();
    for (const auto& key : doc.tracker_seen) seen.push_back(key);
    j["tracker_seen"] = seen;
    j["codon_count"] = doc.state.codons.size();
    json codons = json::array();
    for (CodonId i = 0; i < doc.state.codons.size(); ++i) codons.push_back(codon_json(i, doc.state.codons[i]));
    j["codons"] = codons;
    return j.dump(1) + "\n";
}

SnapshotDocument read_snapshot(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SnapshotError(std::string("truncated or malformed snapshot: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "replisim-snapshot")
        throw SnapshotError("not a snapshot document");
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw SnapshotError("missing snapshot version");
    if (j["version"].get<int>() != kSnapshotVersion)
        throw SnapshotError("unsupported snapshot version " + std::to_string(j["version"].get<int>()) +
                            " (expected " + std::to_string(kSnapshotVersion) + ")");
    SnapshotDocument doc;
    try {
        doc.config = parse_config(j.at("config").dump());
    } catch (const ConfigError& e) {
        throw SnapshotError(std::string("embedded config: ") + e.what());
    } catch (const json::exception& e) {
        throw SnapshotError(std::string("embedded config: ") + e.what());
    }
    try {
        if (j.at("config_digest").get<std::string>() != config_digest(doc.config))
            throw SnapshotError("config digest does not match the embedded config");
        doc.state.step = get_unsigned<std::uint64_t>(j, "step");
        doc.events_cum = get_unsigned<std::uint64_t>(j, "events_cum");
        for (const json& key : j.at("tracker_seen")) doc.tracker_seen.insert(key.get<std::vector<CodonId>>());
    } catch (const json::exception& e) {
        throw SnapshotError(std::string("snapshot header: ") + e.what());
    }
    const json& codons = j.at("codons");
    if (!codons.is_array()) throw SnapshotError("field 'codons' must be an array");
    const std::size_t count = get_unsigned<std::size_t>(j, "codon_count");
    if (codons.size() != count)
        throw SnapshotError("expected " + std::to_string(count) + " codon records, found " +
                            std::to_string(codons.size()));
    doc.state.codons.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        try {
            doc.state.codons.push_back(codon_from_json(codons[i], static_cast<CodonId>(i), count));
        } catch (const std::exception& e) {
            throw SnapshotError("codon record " + std::to_string(i) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        const Codon& c = doc.state.codons[i];
        for (FieldSlot s : kBondSlots) {
            const auto& p = c.bond[index_of(s)];
            if (p && doc.state.codons[*p].bond[index_of(bond_counterpart(s))] != static_cast<CodonId>(i))
                throw SnapshotError("codon record " + std::to_string(i) + ": bond is not reciprocated");
        }
    }
    return doc;
}

// ---- event log and metrics ------------------------------------------------

std::string event_to_json_line(const EventRecord& e) {
    nlohmann::ordered_json j = {{"v", kEventSchemaVersion}, {"step", e.step}, {"kind", std::string(to_string(e.kind))},
              {"codons", e.codons}};
    if (!e.slot.empty()) j["slot"] = e.slot;
    if (!e.bits.empty()) j["bits"] = e.bits;
    return j.dump();
}

EventRecord event_from_json_line(std::string_view line) {
    try {
        const json j = json::parse(line.begin(), line.end());
        if (j.at("v").get<int>() != kEventSchemaVersion) throw IoError("unsupported event schema version");
        EventRecord e;
        e.step = j.at("step").get<std::uint64_t>();
        auto k = event_kind_from_string(j.at("kind").get<std::string>());
        if (!k) throw IoError("unknown event kind");
        e.kind = *k;
        e.codons = j.at("codons").get<std::vector<CodonId>>();
        e.slot = j.value("slot", "");
        e.bits = j.value("bits", "");
        return e;
    } catch (const json::exception& ex) {
        throw IoError(std::string("malformed event line: ") + ex.what());
    }
}

std::string metrics_csv_row(const MetricsRow& r) {
    // normalized_time is step * dt; %.17g keeps it exact.
    char buf[256];
    std::snprintf(buf, sizeof buf, "%llu,%.17g,%llu,%llu,%llu,%llu",
                  static_cast<unsigned long long>(r.step), r.normalized_time,
                  static_cast<unsigned long long>(r.free_codons),
                  static_cast<unsigned long long>(r.strands),
                  static_cast<unsigned long long>(r.complete_strands),
                  static_cast<unsigned long long>(r.events_cum));
    return buf;
}

// ---- files ----------------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace replisim
