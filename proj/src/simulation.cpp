#include "replisim/simulation.hpp"

namespace replisim {

MetricsRow compute_metrics(const SimulationState& s, double timestep_duration,
                           std::uint64_t events_cum) {
    MetricsRow row;
    row.step = s.step;
    row.normalized_time = static_cast<double>(s.step) * timestep_duration;
    row.events_cum = events_cum;
    for (const Codon& c : s.codons)
        if (c.is_free()) ++row.free_codons;
    for (const StrandRecord& r : extract_strands(s.codons)) {
        if (r.codons.size() < 2) continue;
        ++row.strands;
        if (r.complete && !r.paired) ++row.complete_strands;
    }
    return row;
}

Simulation::Simulation(const SimulationConfig& cfg)
    : m_engine(cfg), m_tracker(cfg.seed ? std::optional(cfg.seed->bits) : std::nullopt) {
    m_tracker.set_baseline(extract_strands(m_engine.state().codons));
}

Simulation::Simulation(const SimulationConfig& cfg, SimulationState state, StrandTracker tracker,
                       std::uint64_t events_cum)
    : m_engine(cfg, std::move(state)), m_tracker(std::move(tracker)), m_events_cum(events_cum) {}

const std::vector<EventRecord>& Simulation::step() {
    m_events = m_engine.step();
    if (m_engine.bonds_changed()) {
        auto strand_events =
            m_tracker.detect_events(extract_strands(m_engine.state().codons), m_engine.state().step);
        m_events.insert(m_events.end(), strand_events.begin(), strand_events.end());
    }
    m_events_cum += m_events.size();
    return m_events;
}

MetricsRow Simulation::metrics() const {
    return compute_metrics(m_engine.state(), m_engine.config().timestep_duration, m_events_cum);
}

bool matches_stop(const SimulationConfig& cfg, const EventRecord& e) {
    if (!cfg.stop_on || e.kind != *cfg.stop_on) return false;
    return !cfg.stop_on_bits || e.bits == *cfg.stop_on_bits;
}

RunResult run(Simulation& sim, std::uint64_t steps, RunObserver* observer) {
    RunResult result;
    const SimulationConfig& cfg = sim.config();
    auto emit_metrics = [&] {
        MetricsRow row = sim.metrics();
        if (!result.metrics.empty() && result.metrics.back().step == row.step) return;
        result.metrics.push_back(row);
        if (observer) observer->on_metrics(row);
    };
    std::uint64_t last_snapshot = sim.state().step;
    if (observer) observer->on_snapshot(sim);
    emit_metrics();

    for (std::uint64_t k = 0; k < steps; ++k) {
        const auto& events = sim.step();
        const std::uint64_t now = sim.state().step;
        for (const EventRecord& e : events) {
            result.events.push_back(e);
            if (observer) observer->on_event(e);
            if (!result.stop_event && matches_stop(cfg, e)) result.stop_event = e;
        }
        if (cfg.metrics_every > 0 && now % cfg.metrics_every == 0) emit_metrics();
        if (cfg.snapshot_every > 0 && now % cfg.snapshot_every == 0) {
            if (observer) observer->on_snapshot(sim);
            last_snapshot = now;
        }
        if (result.stop_event) break;
    }
    emit_metrics();
    if (observer && last_snapshot != sim.state().step) observer->on_snapshot(sim);

    result.final_state = sim.state();
    result.steps = sim.state().step;
    result.normalized_time = static_cast<double>(result.steps) * cfg.timestep_duration;
    return result;
}

RunResult run(const SimulationConfig& cfg, RunObserver* observer) {
    Simulation sim(cfg);
    return run(sim, cfg.max_steps, observer);
}

}  // namespace replisim
