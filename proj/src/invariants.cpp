#include "replisim/invariants.hpp"

#include <cmath>

namespace replisim {

std::vector<std::string> check_invariants(const SimulationState& s, const SimulationConfig& cfg) {
    std::vector<std::string> out;
    const auto& cs = s.codons;
    const Bounds b = cfg.bounds();
    auto report = [&](CodonId i, const std::string& what) {
        out.push_back("step " + std::to_string(s.step) + " codon " + std::to_string(i) + ": " + what);
    };
    for (CodonId i = 0; i < cs.size(); ++i) {
        const Codon& c = cs[i];
        for (FieldSlot slot : kBondSlots) {
            const auto& p = c.partner(slot);
            if (!p) continue;
            if (*p == i) report(i, "bonded to itself");
            else if (*p >= cs.size()) report(i, "bond to a missing codon");
            else if (cs[*p].partner(bond_counterpart(slot)) != i) report(i, "bond not reciprocated");
            else if (slot == FieldSlot::Vertical && cs[*p].type == c.type)
                report(i, "vertical bond between codons of the same type");
        }
        for (FieldSlot slot : {FieldSlot::Red, FieldSlot::Blue})
            if ((c.size(slot) == FieldSize::Large) != c.partner(slot).has_value())
                report(i, "red/blue field size disagrees with bond state");
        if ((c.size(FieldSlot::Vertical) == FieldSize::Large) != (c.strand_neighbours() > 0))
            report(i, "vertical field size disagrees with strand neighbours");
        if (c.strand_location > 2) report(i, "strand_location out of range");
        if (c.strand_location == 2 && c.strand_neighbours() != 1)
            report(i, "strand_location 2 without exactly one red-or-blue neighbour");
        if (c.splitting != SplittingState::Z && c.z_steps != 0) report(i, "z timer running outside z");
        if (c.size(FieldSlot::Yellow) == FieldSize::Small && c.yellow_steps_large != 0 &&
            c.yellow_steps_large < cfg.split_iterations())
            report(i, "yellow field reverted before its timer elapsed");
        if (!std::isfinite(c.position.x) || !std::isfinite(c.position.y) || !std::isfinite(c.angle) ||
            !std::isfinite(c.velocity.x) || !std::isfinite(c.velocity.y) ||
            !std::isfinite(c.angular_velocity))
            report(i, "non-finite state");
        else if (!b.contains(c.position))
            report(i, "outside the container");
    }
    return out;
}

std::vector<std::string> check_bond_contact(const SimulationState& s, const SimulationConfig& cfg) {
    SimulationState copy = s;
    std::vector<EventRecord> ignored;
    break_separated_bonds(copy.codons, cfg.geometry, s.step, ignored);
    std::vector<std::string> out;
    const Geometry& g = cfg.geometry;
    for (CodonId i = 0; i < copy.codons.size(); ++i) {
        const Codon& c = copy.codons[i];
        for (FieldSlot slot : kBondSlots) {
            const auto& p = c.partner(slot);
            if (!p) continue;
            const FieldSlot other = bond_counterpart(slot);
            const Codon& d = copy.codons[*p];
            const double gap = (tip_position(d, other, g) - tip_position(c, slot, g)).norm();
            if (gap > field_radius(c, slot, g) + field_radius(d, other, g))
                out.push_back("codon " + std::to_string(i) + ": bonded fields do not intersect");
        }
    }
    return out;
}

}  // namespace replisim
