#include "replisim/engine.hpp"

#include <cmath>

#include "replisim/replication_fsm.hpp"
#include "replisim/rng.hpp"

namespace replisim {

namespace {

// Cell size covering the largest interaction diameter (two large yellow fields).
double index_cell_size(const Geometry& g) { return 2.0 * max_field_radius(g); }

template <typename Fn>
void for_each_bond(std::span<const Codon> codons, Fn&& fn) {
    for (CodonId i = 0; i < codons.size(); ++i) {
        if (const auto& j = codons[i].partner(FieldSlot::Red)) fn(i, FieldSlot::Red, *j);
        if (const auto& j = codons[i].partner(FieldSlot::Vertical); j && *j > i)
            fn(i, FieldSlot::Vertical, *j);
    }
}

}  // namespace

std::vector<Codon> encode_seed_strand(std::string_view bits, Vec2 center, double angle,
                                      const Geometry& g) {
    if (bits.empty()) throw ConfigError("seed.bits: must not be empty");
    std::vector<Codon> out;
    out.reserve(bits.size());
    const double spacing = g.arm_length.red + g.arm_length.blue;
    const Vec2 red_dir = arm_direction(angle, FieldSlot::Red);
    const double half = 0.5 * static_cast<double>(bits.size() - 1);
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != '0' && bits[k] != '1')
            throw ConfigError("seed.bits: invalid character '" + std::string(1, bits[k]) +
                              "' at index " + std::to_string(k));
        Codon c;
        c.type = bits[k] == '0' ? CodonType::Type0 : CodonType::Type1;
        c.position = center + (static_cast<double>(k) - half) * spacing * red_dir;
        c.angle = wrap_angle(angle);
        out.push_back(c);
    }
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        out[k].partner(FieldSlot::Red) = static_cast<CodonId>(k + 1);
        out[k + 1].partner(FieldSlot::Blue) = static_cast<CodonId>(k);
        out[k].set_size(FieldSlot::Red, FieldSize::Large);
        out[k + 1].set_size(FieldSlot::Blue, FieldSize::Large);
    }
    for (Codon& c : out)
        if (c.strand_neighbours() > 0) c.set_size(FieldSlot::Vertical, FieldSize::Large);
    return out;
}

SimulationState init_soup(const SimulationConfig& cfg) {
    cfg.validate();
    SimulationState s;
    const std::uint32_t nfree = cfg.free_type0 + cfg.free_type1;
    s.codons.reserve(nfree + (cfg.seed ? cfg.seed->bits.size() : 0));
    for (std::uint32_t i = 0; i < nfree; ++i) {
        RandomStream rng(cfg.rng_seed, StreamDomain::InitialPlacement, 0, i);
        Codon c;
        c.type = i < cfg.free_type0 ? CodonType::Type0 : CodonType::Type1;
        c.position = {rng.next_unit() * cfg.container_width, rng.next_unit() * cfg.container_height};
        c.angle = wrap_angle(std::numbers::pi * rng.next_symmetric());
        s.codons.push_back(c);
    }
    if (cfg.seed) {
        auto strand = encode_seed_strand(cfg.seed->bits, cfg.seed->center, cfg.seed->angle,
                                         cfg.geometry);
        for (Codon& c : strand) {
            for (auto& b : c.bond)
                if (b) *b += nfree;
            s.codons.push_back(c);
        }
    }
    return s;
}

Engine::Engine(SimulationConfig cfg) : Engine(cfg, init_soup(cfg)) {}

Engine::Engine(SimulationConfig cfg, SimulationState state)
    : m_cfg(std::move(cfg)),
      m_physics(m_cfg.physics()),
      m_split_iterations(m_cfg.split_iterations()),
      m_state(std::move(state)),
      m_index(m_cfg.bounds(), index_cell_size(m_cfg.geometry)) {
    m_cfg.validate();
}

const std::vector<EventRecord>& Engine::step() {
    m_events.clear();
    auto& codons = m_state.codons;
    const std::uint64_t stamp = m_state.step + 1;

    m_index.rebuild(codons, m_cfg.geometry);
    const ContactSet contacts = detect_contacts(codons, m_index, m_cfg.geometry);

    break_separated_bonds(codons, m_cfg.geometry, stamp, m_events);
    form_bonds(codons, contacts.contacts, m_cfg.tolerances, stamp, m_events);

    for (Codon& c : codons) update_field_sizes(c, m_split_iterations);

    for (CodonId id : run_fsm_phases(codons, m_split_iterations))
        execute_split(codons, id, stamp, m_events);
    m_bonds_changed = !m_events.empty();

    physics_phase(contacts);

    for (Codon& c : codons) {
        if (c.size(FieldSlot::Yellow) == FieldSize::Large) ++c.yellow_steps_large;
        if (c.splitting == SplittingState::Z) ++c.z_steps;
    }
    m_state.step = stamp;
    return m_events;
}

void Engine::physics_phase(const ContactSet& contacts) {
    auto& codons = m_state.codons;
    const std::span<const Codon> view(codons);
    const PhysicsParams& p = m_physics;

    if (p.brownian_linear_amplitude != 0.0 || p.brownian_angular_amplitude != 0.0) {
        for (CodonId i = 0; i < codons.size(); ++i) {
            RandomStream rng(m_cfg.rng_seed, StreamDomain::Brownian, m_state.step, i);
            apply_brownian(codons[i], rng, p);
        }
    }

    m_acc.reset(codons.size());
    for_each_bond(view, [&](CodonId i, FieldSlot s, CodonId j) {
        attractive_spring(view, i, s, j, m_acc, p);
        straightening_torque(view, i, s, j, m_acc, p);
        straightening_torque(view, j, bond_counterpart(s), i, m_acc, p);
    });
    for (const ContactPair& yp : contacts.yellow_near) repulsive_yellow(view, yp.a, yp.b, m_acc, p);

    for_each_bond(view, [&](CodonId i, FieldSlot, CodonId j) {
        apply_spring_damping(codons[i], codons[j], p);
    });

    const Bounds bounds = m_cfg.bounds();
    for (CodonId i = 0; i < codons.size(); ++i) {
        apply_viscosity(codons[i], p);
        integrate(codons[i], m_acc.force(i), m_acc.torque(i), p);
        enforce_container(codons[i], bounds);
    }
}

}  // namespace replisim
