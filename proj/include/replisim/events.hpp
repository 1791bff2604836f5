#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "replisim/core_model.hpp"

namespace replisim {

enum class EventKind : std::uint8_t {
    BondFormed,
    BondBroken,
    SplitTriggered,
    StrandCompleted,
    SpontaneousDimer,
    Mutation,
};

std::string_view to_string(EventKind k);
std::optional<EventKind> event_kind_from_string(std::string_view s);

/// One simulation event. `codons` lists the implicated codon ids: for a
/// red-blue bond the red owner then the blue owner, for a vertical bond the
/// lower id first, for a split the splitting codon, and for strand events the
/// strand in reading order (with `bits` its pattern).
struct EventRecord {
    std::uint64_t step = 0;
    EventKind kind = EventKind::BondFormed;
    std::vector<CodonId> codons;
    std::string slot;
    std::string bits;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

}  // namespace replisim
