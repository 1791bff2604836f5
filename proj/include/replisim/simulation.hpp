#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "replisim/analytics.hpp"
#include "replisim/engine.hpp"

namespace replisim {

/// One row of the metrics series.
struct MetricsRow {
    std::uint64_t step = 0;
    double normalized_time = 0.0;
    std::uint64_t free_codons = 0;      // codons with no bonds at all
    std::uint64_t strands = 0;          // red-blue components of two or more codons
    std::uint64_t complete_strands = 0; // of those, complete and unpaired
    std::uint64_t events_cum = 0;

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

MetricsRow compute_metrics(const SimulationState& s, double timestep_duration,
                           std::uint64_t events_cum);

/// Engine plus strand analytics; the unit that snapshots capture and replay.
class Simulation {
public:
    explicit Simulation(const SimulationConfig& cfg);
    Simulation(const SimulationConfig& cfg, SimulationState state, StrandTracker tracker,
               std::uint64_t events_cum);

    /// Advances one step and returns engine events followed by strand events.
    const std::vector<EventRecord>& step();

    MetricsRow metrics() const;

    const SimulationState& state() const { return m_engine.state(); }
    const SimulationConfig& config() const { return m_engine.config(); }
    const StrandTracker& tracker() const { return m_tracker; }
    std::uint64_t events_cum() const { return m_events_cum; }
    const Engine& engine() const { return m_engine; }

private:
    Engine m_engine;
    StrandTracker m_tracker;
    std::uint64_t m_events_cum = 0;
    std::vector<EventRecord> m_events;
};

/// Receives run outputs as they are produced.
class RunObserver {
public:
    virtual ~RunObserver() = default;
    virtual void on_event(const EventRecord&) {}
    virtual void on_metrics(const MetricsRow&) {}
    virtual void on_snapshot(const Simulation&) {}
};

struct RunResult {
    SimulationState final_state;
    std::vector<EventRecord> events;
    std::vector<MetricsRow> metrics;
    std::uint64_t steps = 0;
    double normalized_time = 0.0;
    std::optional<EventRecord> stop_event;
};

/// Whether `e` satisfies the config's stop condition.
bool matches_stop(const SimulationConfig& cfg, const EventRecord& e);

/// Runs `steps` steps (or until the stop condition fires), emitting a
/// snapshot at the start, every `snapshot_every` steps and at the end, and
/// a metrics row at the start, every `metrics_every` steps and at the end.
RunResult run(Simulation& sim, std::uint64_t steps, RunObserver* observer = nullptr);

/// Fresh run of `cfg.max_steps` steps.
RunResult run(const SimulationConfig& cfg, RunObserver* observer = nullptr);

}  // namespace replisim
