#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "replisim/bonding.hpp"
#include "replisim/core_model.hpp"
#include "replisim/events.hpp"
#include "replisim/physics.hpp"

namespace replisim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SeedPlacement {
    std::string bits;
    Vec2 center;           // middle of the strand
    double angle = std::numbers::pi / 2;  // heading of every codon in the strand
    friend bool operator==(const SeedPlacement&, const SeedPlacement&) = default;
};

/// Every tunable of a run. Viscosity and damping are given as base rates per
/// unit time and converted to per-step fractions for the chosen timestep,
/// unless an explicit fraction override is set.
struct SimulationConfig {
    double container_width = 150.0;
    double container_height = 150.0;
    std::uint32_t free_type0 = 40;
    std::uint32_t free_type1 = 40;
    std::optional<SeedPlacement> seed;

    double timestep_duration = 0.15;
    double linear_viscosity_rate = 0.10;
    double angular_viscosity_rate = 0.05;
    double linear_spring_damping_rate = 0.90;
    double angular_spring_damping_rate = 0.99;
    std::optional<double> linear_viscosity;
    std::optional<double> angular_viscosity;
    std::optional<double> linear_spring_damping;
    std::optional<double> angular_spring_damping;
    std::optional<std::uint32_t> iterations_after_split;

    Geometry geometry;
    PerColor<double> arm_force{1.8, 1.8, 1.0, 1.0, 1.0};
    PerColor<double> straightening_force{1.0, 1.0, 0.5, 0.5, 0.0};
    BondTolerances tolerances;
    std::optional<double> moment_of_inertia;  // defaults to the uniform-rod value

    double brownian_linear_amplitude = 0.1;
    double brownian_angular_amplitude = 0.05;

    std::uint64_t rng_seed = 1;
    std::uint64_t max_steps = 200000;
    std::uint64_t snapshot_every = 0;  // 0 disables periodic snapshots
    std::uint64_t metrics_every = 1000;
    std::optional<EventKind> stop_on;
    std::optional<std::string> stop_on_bits;  // restricts stop_on to events with these bits

    PhysicsParams physics() const;
    std::uint32_t split_iterations() const;
    Bounds bounds() const { return {0.0, 0.0, container_width, container_height}; }

    /// Throws ConfigError naming the offending key.
    void validate() const;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// The seeded-replication scenario: eight-codon seed "00011001" in a soup of
/// 80 free codons.
SimulationConfig seeded_replication_config();

/// The spontaneous-replication scenario: 88 free codons, no seed.
SimulationConfig spontaneous_replication_config();

}  // namespace replisim
