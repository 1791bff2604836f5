#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "replisim/core_model.hpp"
#include "replisim/events.hpp"

namespace replisim {

/// What one neighbour looked like in the snapshot a transition reads.
struct NeighborSnapshot {
    CodonId id = 0;
    std::uint8_t strand_location = 0;
    SplittingState splitting = SplittingState::X;
};

struct NeighborView {
    std::optional<NeighborSnapshot> red;
    std::optional<NeighborSnapshot> blue;
    std::optional<NeighborSnapshot> vertical;

    int strand_neighbours() const { return (red ? 1 : 0) + (blue ? 1 : 0); }
};

/// Builds the view of codon `id` from a snapshot of all codons. Neighbour
/// identity follows the bonds in `codons`; neighbour states come from the
/// same snapshot.
NeighborView neighbor_view(std::span<const Codon> codons, CodonId id);

/// Strand-location transitions (0 -> 1 -> 2, and back to 0).
std::uint8_t update_strand_location(const Codon& c, const NeighborView& nv);

/// Splitting transitions x -> y -> z -> x. `strand_location` values in `c` and
/// `nv` are the freshly committed ones; `splitting` values are the prior ones.
SplittingState update_splitting(const Codon& c, const NeighborView& nv,
                                std::uint32_t iterations_after_split);

/// Both FSM phases over all codons: strand location first (committed), then
/// splitting. Returns the ids that entered z this step, ascending.
std::vector<CodonId> run_fsm_phases(std::span<Codon> codons, std::uint32_t iterations_after_split);

/// Split action for a codon that just entered z: yellow goes Large with its
/// timer reset, the vertical bond (if any) is released on both sides.
void execute_split(std::span<Codon> codons, CodonId id, std::uint64_t step,
                   std::vector<EventRecord>& events);

}  // namespace replisim
