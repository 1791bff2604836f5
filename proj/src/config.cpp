#include "replisim/config.hpp"

#include <cmath>

namespace replisim {

PhysicsParams SimulationConfig::physics() const {
    PhysicsParams p;
    p.timestep_duration = timestep_duration;
    p.linear_viscosity =
        linear_viscosity.value_or(per_step_fraction(linear_viscosity_rate, timestep_duration));
    p.angular_viscosity =
        angular_viscosity.value_or(per_step_fraction(angular_viscosity_rate, timestep_duration));
    p.linear_spring_damping = linear_spring_damping.value_or(
        per_step_fraction(linear_spring_damping_rate, timestep_duration));
    p.angular_spring_damping = angular_spring_damping.value_or(
        per_step_fraction(angular_spring_damping_rate, timestep_duration));
    p.arm_force = arm_force;
    p.straightening_force = straightening_force;
    p.brownian_linear_amplitude = brownian_linear_amplitude;
    p.brownian_angular_amplitude = brownian_angular_amplitude;
    p.geometry = geometry;
    p.moment_of_inertia = moment_of_inertia.value_or(rod_moment_of_inertia(geometry));
    return p;
}

std::uint32_t SimulationConfig::split_iterations() const {
    if (iterations_after_split) return *iterations_after_split;
    return static_cast<std::uint32_t>(150.0 / timestep_duration);
}

namespace {

void require(bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ConfigError(key + ": " + what);
}

void require_fraction(const std::optional<double>& v, const std::string& key) {
    if (v) require(*v >= 0.0 && *v <= 1.0, key, "must lie in [0, 1]");
}

void require_per_color(const PerColor<double>& v, const std::string& key, bool allow_zero) {
    const char* names[] = {"red", "blue", "green", "purple", "yellow"};
    const FieldColor colors[] = {FieldColor::Red, FieldColor::Blue, FieldColor::Green,
                                 FieldColor::Purple, FieldColor::Yellow};
    for (int i = 0; i < 5; ++i) {
        const double x = v[colors[i]];
        require(std::isfinite(x) && (allow_zero ? x >= 0.0 : x > 0.0),
                key + "." + names[i], allow_zero ? "must be >= 0" : "must be > 0");
    }
}

}  // namespace

void SimulationConfig::validate() const {
    require(std::isfinite(container_width) && container_width > 0.0, "container_width",
            "must be positive");
    require(std::isfinite(container_height) && container_height > 0.0, "container_height",
            "must be positive");
    require(std::isfinite(timestep_duration) && timestep_duration > 0.0, "timestep_duration",
            "must be positive");
    for (auto [rate, key] : {std::pair{linear_viscosity_rate, "linear_viscosity_rate"},
                             std::pair{angular_viscosity_rate, "angular_viscosity_rate"},
                             std::pair{linear_spring_damping_rate, "linear_spring_damping_rate"},
                             std::pair{angular_spring_damping_rate, "angular_spring_damping_rate"}})
        require(rate >= 0.0 && rate <= 1.0, key, "must lie in [0, 1]");
    require_fraction(linear_viscosity, "linear_viscosity");
    require_fraction(angular_viscosity, "angular_viscosity");
    require_fraction(linear_spring_damping, "linear_spring_damping");
    require_fraction(angular_spring_damping, "angular_spring_damping");
    require_per_color(geometry.arm_length, "arm_length", false);
    require_per_color(geometry.small_field_radius, "small_field_radius", false);
    require_per_color(geometry.large_field_radius, "large_field_radius", false);
    require_per_color(arm_force, "arm_force", true);
    require_per_color(straightening_force, "straightening_force", true);
    const char* names[] = {"red", "blue", "green", "purple", "yellow"};
    const FieldColor colors[] = {FieldColor::Red, FieldColor::Blue, FieldColor::Green,
                                 FieldColor::Purple, FieldColor::Yellow};
    for (int i = 0; i < 5; ++i) {
        const double t = tolerances.angle_tolerance[colors[i]];
        require(t > 0.0 && t <= std::numbers::pi, std::string("angle_tolerance.") + names[i],
                "must lie in (0, pi]");
    }
    if (moment_of_inertia)
        require(std::isfinite(*moment_of_inertia) && *moment_of_inertia > 0.0,
                "moment_of_inertia", "must be positive");
    require(std::isfinite(brownian_linear_amplitude) && brownian_linear_amplitude >= 0.0,
            "brownian_linear_amplitude", "must be >= 0");
    require(std::isfinite(brownian_angular_amplitude) && brownian_angular_amplitude >= 0.0,
            "brownian_angular_amplitude", "must be >= 0");
    if (seed) {
        require(!seed->bits.empty(), "seed.bits", "must not be empty");
        for (char ch : seed->bits) require(ch == '0' || ch == '1', "seed.bits", "must contain only 0 and 1");
        const double span = static_cast<double>(seed->bits.size() - 1) *
                            (geometry.arm_length.red + geometry.arm_length.blue);
        require(span <= std::min(container_width, container_height), "seed.bits",
                "seed strand longer than the container");
        require(bounds().contains(seed->center), "seed.center", "must lie inside the container");
    }
    if (stop_on_bits)
        for (char ch : *stop_on_bits) require(ch == '0' || ch == '1', "stop_on_bits", "must contain only 0 and 1");
}

SimulationConfig seeded_replication_config() {
    SimulationConfig cfg;
    cfg.free_type0 = 40;
    cfg.free_type1 = 40;
    cfg.seed = SeedPlacement{"00011001", {cfg.container_width / 2, cfg.container_height / 2},
                             std::numbers::pi / 2};
    return cfg;
}

SimulationConfig spontaneous_replication_config() {
    SimulationConfig cfg;
    cfg.free_type0 = 44;
    cfg.free_type1 = 44;
    cfg.seed.reset();
    return cfg;
}

}  // namespace replisim
