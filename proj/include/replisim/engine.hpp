#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "replisim/bonding.hpp"
#include "replisim/config.hpp"
#include "replisim/core_model.hpp"
#include "replisim/events.hpp"
#include "replisim/physics.hpp"

namespace replisim {

struct SimulationState {
    std::uint64_t step = 0;
    std::vector<Codon> codons;

    friend bool operator==(const SimulationState&, const SimulationState&) = default;
};

/// One codon per bit (0 -> Type0, 1 -> Type1), middles 14 apart along the red
/// direction, consecutive red-blue bonds already designated. Codon 0 is the
/// one with a free blue arm. Throws ConfigError on characters other than 0/1.
std::vector<Codon> encode_seed_strand(std::string_view bits, Vec2 center, double angle,
                                      const Geometry& g = {});

/// Free codons at uniform random positions and headings, plus the seed strand.
/// Free codons occupy ids [0, free_type0 + free_type1); the seed follows.
SimulationState init_soup(const SimulationConfig& cfg);

/// Owns a running simulation. A step runs these phases in order: contacts;
/// bond breaking; bond formation; field sizes; strand-location then
/// splitting FSM; splits; physics (brownian, pair forces, damping, viscosity,
/// integration, walls); timers.
class Engine {
public:
    explicit Engine(SimulationConfig cfg);
    Engine(SimulationConfig cfg, SimulationState state);

    /// Advances one step; the returned events stay valid until the next call.
    const std::vector<EventRecord>& step();

    const SimulationState& state() const { return m_state; }
    SimulationState& mutable_state() { return m_state; }
    const SimulationConfig& config() const { return m_cfg; }
    const PhysicsParams& physics() const { return m_physics; }

    /// True if any bond formed or broke during the last step.
    bool bonds_changed() const { return m_bonds_changed; }

    double normalized_time() const {
        return static_cast<double>(m_state.step) * m_cfg.timestep_duration;
    }

private:
    void physics_phase(const ContactSet& contacts);

    SimulationConfig m_cfg;
    PhysicsParams m_physics;
    std::uint32_t m_split_iterations;
    SimulationState m_state;
    SpatialIndex m_index;
    ForceAccumulator m_acc;
    std::vector<EventRecord> m_events;
    bool m_bonds_changed = false;
};

}  // namespace replisim
