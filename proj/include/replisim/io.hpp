#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "replisim/config.hpp"
#include "replisim/engine.hpp"
#include "replisim/events.hpp"
#include "replisim/simulation.hpp"

namespace replisim {

// ---- config ---------------------------------------------------------------

/// Parses a YAML (or JSON) config document. Omitted keys keep their defaults;
/// the optional `preset` key (`seeded_replication`, `spontaneous_replication`)
/// picks the defaults the remaining keys override. Throws ConfigError with
/// "line N: key.path: message" on any problem.
SimulationConfig parse_config(std::string_view text);
SimulationConfig load_config(const std::string& path);

/// Every field of `cfg`, as the same keys parse_config accepts.
std::string config_to_json(const SimulationConfig& cfg);

/// FNV-1a 64 over the canonical JSON form, as 16 hex digits.
std::string config_digest(const SimulationConfig& cfg);

/// Parses an angle: a number, or an expression like "pi/256", "-pi/3", "2*pi".
double parse_angle(std::string_view s);

// ---- snapshots ------------------------------------------------------------

inline constexpr int kSnapshotVersion = 1;

class SnapshotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SnapshotDocument {
    SimulationConfig config;
    SimulationState state;
    std::set<std::vector<CodonId>> tracker_seen;
    std::uint64_t events_cum = 0;

    friend bool operator==(const SnapshotDocument&, const SnapshotDocument&) = default;
};

SnapshotDocument capture(const Simulation& sim);
Simulation restore(const SnapshotDocument& doc);

/// Doubles are written as shortest round-trip decimals, so reading back
/// reproduces every bit.
std::string write_snapshot(const SnapshotDocument& doc);
SnapshotDocument read_snapshot(std::string_view text);

// ---- event log and metrics ------------------------------------------------

inline constexpr int kEventSchemaVersion = 1;

/// One JSON object per line.
std::string event_to_json_line(const EventRecord& e);
EventRecord event_from_json_line(std::string_view line);

inline constexpr std::string_view kMetricsHeader =
    "step,normalized_time,free_codons,strands,complete_strands,events_cum";
std::string metrics_csv_row(const MetricsRow& row);

// ---- files ----------------------------------------------------------------

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace replisim
