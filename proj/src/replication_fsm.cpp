#include "replisim/replication_fsm.hpp"

#include "replisim/bonding.hpp"

namespace replisim {

NeighborView neighbor_view(std::span<const Codon> codons, CodonId id) {
    NeighborView nv;
    auto snap = [&](FieldSlot s) -> std::optional<NeighborSnapshot> {
        const auto& p = codons[id].partner(s);
        if (!p) return std::nullopt;
        const Codon& n = codons[*p];
        return NeighborSnapshot{*p, n.strand_location, n.splitting};
    };
    nv.red = snap(FieldSlot::Red);
    nv.blue = snap(FieldSlot::Blue);
    nv.vertical = snap(FieldSlot::Vertical);
    return nv;
}

std::uint8_t update_strand_location(const Codon& c, const NeighborView& nv) {
    const bool one_strand_neighbour = nv.strand_neighbours() == 1;
    const bool has_vertical = nv.vertical.has_value();
    switch (c.strand_location) {
        case 0:
            return (one_strand_neighbour && has_vertical) ? 1 : 0;
        case 1:
            if (!one_strand_neighbour || !has_vertical) return 0;
            return nv.vertical->strand_location >= 1 ? 2 : 1;
        default:
            if (!one_strand_neighbour || !has_vertical || nv.vertical->strand_location == 0)
                return 0;
            return 2;
    }
}

SplittingState update_splitting(const Codon& c, const NeighborView& nv,
                                std::uint32_t iterations_after_split) {
    const bool at_end_pair = c.strand_location == 2 && nv.vertical &&
                             nv.vertical->strand_location == 2;
    // An absent vertical neighbour is not "in state 1".
    const bool unblocked = c.strand_location != 1 &&
                           (!nv.vertical || nv.vertical->strand_location != 1);
    switch (c.splitting) {
        case SplittingState::X:
            if ((at_end_pair && !nv.red) ||
                (unblocked && nv.red && nv.red->splitting == SplittingState::Y))
                return SplittingState::Y;
            return SplittingState::X;
        case SplittingState::Y:
            if ((at_end_pair && !nv.blue) ||
                (unblocked && nv.blue && nv.blue->splitting == SplittingState::Z))
                return SplittingState::Z;
            return SplittingState::Y;
        case SplittingState::Z:
            if ((!nv.red && c.z_steps >= iterations_after_split) ||
                (nv.red && nv.red->splitting == SplittingState::X))
                return SplittingState::X;
            return SplittingState::Z;
    }
    return c.splitting;
}

std::vector<CodonId> run_fsm_phases(std::span<Codon> codons, std::uint32_t iterations_after_split) {
    const std::size_t n = codons.size();
    std::vector<std::uint8_t> next_location(n);
    for (CodonId i = 0; i < n; ++i)
        next_location[i] = update_strand_location(codons[i], neighbor_view(codons, i));
    for (CodonId i = 0; i < n; ++i) codons[i].strand_location = next_location[i];

    std::vector<SplittingState> next_split(n);
    for (CodonId i = 0; i < n; ++i)
        next_split[i] = update_splitting(codons[i], neighbor_view(codons, i), iterations_after_split);

    std::vector<CodonId> entered_z;
    for (CodonId i = 0; i < n; ++i) {
        if (next_split[i] == SplittingState::Z && codons[i].splitting != SplittingState::Z) {
            entered_z.push_back(i);
            codons[i].z_steps = 0;
        }
        codons[i].splitting = next_split[i];
    }
    return entered_z;
}

void execute_split(std::span<Codon> codons, CodonId id, std::uint64_t step,
                   std::vector<EventRecord>& events) {
    Codon& c = codons[id];
    c.set_size(FieldSlot::Yellow, FieldSize::Large);
    c.yellow_steps_large = 0;
    release_bond(codons, id, FieldSlot::Vertical);
    events.push_back({step, EventKind::SplitTriggered, {id}, {}, {}});
}

}  // namespace replisim
