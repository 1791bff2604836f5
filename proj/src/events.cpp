#include "replisim/events.hpp"

#include <array>
#include <utility>

namespace replisim {

namespace {
constexpr std::array<std::pair<EventKind, std::string_view>, 6> kNames{{
    {EventKind::BondFormed, "BondFormed"},
    {EventKind::BondBroken, "BondBroken"},
    {EventKind::SplitTriggered, "SplitTriggered"},
    {EventKind::StrandCompleted, "StrandCompleted"},
    {EventKind::SpontaneousDimer, "SpontaneousDimer"},
    {EventKind::Mutation, "Mutation"},
}};
}  // namespace

std::string_view to_string(EventKind k) {
    for (const auto& [kind, name] : kNames)
        if (kind == k) return name;
    return "Unknown";
}

std::optional<EventKind> event_kind_from_string(std::string_view s) {
    for (const auto& [kind, name] : kNames)
        if (name == s) return kind;
    return std::nullopt;
}

}  // namespace replisim
