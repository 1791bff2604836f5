// Command-line front end: run, render, replay, sweep, verify.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "replisim/bonding.hpp"
#include "replisim/invariants.hpp"
#include "replisim/io.hpp"
#include "replisim/render.hpp"
#include "replisim/simulation.hpp"

namespace fs = std::filesystem;
using namespace replisim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitViolation = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Overrides {
    std::string config_path;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> steps;
    std::optional<std::uint64_t> snapshot_every;
    std::optional<std::uint64_t> metrics_every;
    std::string stop_on;
    std::string stop_on_bits;

    void add_to(CLI::App* app) {
        app->add_option("-c,--config", config_path, "Config file (YAML or JSON)");
        app->add_option("--preset", preset, "seeded_replication | spontaneous_replication");
        app->add_option("--seed", seed, "RNG seed override");
        app->add_option("--steps", steps, "Step budget override");
        app->add_option("--snapshot-every", snapshot_every, "Snapshot interval (0 = start and end only)");
        app->add_option("--metrics-every", metrics_every, "Metrics interval");
        app->add_option("--stop-on", stop_on, "Stop after the first event of this kind");
        app->add_option("--stop-on-bits", stop_on_bits, "Only stop on events carrying these bits");
    }

    SimulationConfig build() const {
        std::string text;
        if (!config_path.empty()) text = read_file(config_path);
        if (!preset.empty()) {
            if (!text.empty()) throw UsageError("--preset and --config are mutually exclusive");
            text = "preset: " + preset + "\n";
        }
        SimulationConfig cfg = parse_config(text);
        apply(cfg);
        cfg.validate();
        return cfg;
    }

    void apply(SimulationConfig& cfg) const {
        if (seed) cfg.rng_seed = *seed;
        if (steps) cfg.max_steps = *steps;
        if (snapshot_every) cfg.snapshot_every = *snapshot_every;
        if (metrics_every) cfg.metrics_every = *metrics_every;
        if (!stop_on.empty()) {
            auto k = event_kind_from_string(stop_on);
            if (!k) throw UsageError("--stop-on: unknown event kind '" + stop_on + "'");
            cfg.stop_on = *k;
        }
        if (!stop_on_bits.empty()) cfg.stop_on_bits = stop_on_bits;
    }
};

/// Streams a run's outputs into a directory.
class DirectoryWriter : public RunObserver {
public:
    explicit DirectoryWriter(const fs::path& dir, bool quiet) : m_dir(dir), m_quiet(quiet) {
        std::error_code ec;
        fs::create_directories(dir / "snapshots", ec);
        if (ec) throw IoError("cannot create '" + (dir / "snapshots").string() + "': " + ec.message());
        m_events.open(dir / "events.jsonl", std::ios::trunc);
        m_metrics.open(dir / "metrics.csv", std::ios::trunc);
        if (!m_events || !m_metrics) throw IoError("cannot open output files in '" + dir.string() + "'");
        m_metrics << kMetricsHeader << '\n';
    }

    void on_event(const EventRecord& e) override {
        m_events << event_to_json_line(e) << '\n';
        if (!m_events) throw IoError("error writing events.jsonl");
        if (!m_quiet && (e.kind == EventKind::StrandCompleted || e.kind == EventKind::SpontaneousDimer ||
                         e.kind == EventKind::Mutation))
            std::cout << "step " << e.step << ": " << to_string(e.kind) << ' ' << e.bits << '\n';
    }

    void on_metrics(const MetricsRow& r) override {
        m_metrics << metrics_csv_row(r) << '\n';
        if (!m_metrics) throw IoError("error writing metrics.csv");
    }

    void on_snapshot(const Simulation& sim) override {
        char name[64];
        std::snprintf(name, sizeof name, "step_%010llu.json",
                      static_cast<unsigned long long>(sim.state().step));
        m_last_snapshot = write_snapshot(capture(sim));
        write_file((m_dir / "snapshots" / name).string(), m_last_snapshot);
    }

    void finish() {
        m_events.flush();
        m_metrics.flush();
        write_file((m_dir / "final.json").string(), m_last_snapshot);
    }

private:
    fs::path m_dir;
    bool m_quiet;
    std::ofstream m_events;
    std::ofstream m_metrics;
    std::string m_last_snapshot;
};

void print_summary(const RunResult& r) {
    std::cout << "steps " << r.steps << " (normalized time " << r.normalized_time << "), "
              << r.events.size() << " events";
    if (r.stop_event) std::cout << ", stopped on " << to_string(r.stop_event->kind);
    std::cout << '\n';
}

int cmd_run(const Overrides& o, const std::string& out, bool quiet) {
    const SimulationConfig cfg = o.build();
    DirectoryWriter w(out, quiet);
    write_file((fs::path(out) / "config.json").string(), config_to_json(cfg) + "\n");
    Simulation sim(cfg);
    const RunResult r = run(sim, cfg.max_steps, &w);
    w.finish();
    if (!quiet) print_summary(r);
    return kExitOk;
}

int cmd_render(const std::string& snapshot, const std::string& out, double scale) {
    const SnapshotDocument doc = read_snapshot(read_file(snapshot));
    RenderSpec spec;
    spec.scale = scale;
    const std::string svg = render_svg(doc.state, doc.config, spec);
    if (out.empty() || out == "-") std::cout << svg;
    else write_file(out, svg);
    return kExitOk;
}

int cmd_replay(const std::string& snapshot, std::uint64_t steps, const std::string& out, bool quiet) {
    const SnapshotDocument doc = read_snapshot(read_file(snapshot));
    Simulation sim = restore(doc);
    DirectoryWriter w(out, quiet);
    const RunResult r = run(sim, steps, &w);
    w.finish();
    if (!quiet) print_summary(r);
    return kExitOk;
}

// --param path=v1,v2,...  The path follows config keys; `.red_blue` under a
// per-colour key sets both red and blue.
struct SweepAxis {
    std::string path;
    std::vector<std::string> values;
};

SweepAxis parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
        throw UsageError("--param expects name=v1,v2,...: '" + spec + "'");
    SweepAxis a{spec.substr(0, eq), {}};
    std::stringstream ss(spec.substr(eq + 1));
    for (std::string v; std::getline(ss, v, ',');)
        if (!v.empty()) a.values.push_back(v);
    if (a.values.empty()) throw UsageError("--param '" + a.path + "' has no values");
    return a;
}

SimulationConfig with_param(const SimulationConfig& base, const std::string& path, const std::string& value) {
    nlohmann::json j = nlohmann::json::parse(config_to_json(base));
    std::vector<std::string> parts;
    std::stringstream ss(path);
    for (std::string p; std::getline(ss, p, '.');) parts.push_back(p);
    std::vector<std::vector<std::string>> targets{parts};
    if (parts.size() == 2 && parts[1] == "red_blue")
        targets = {{parts[0], "red"}, {parts[0], "blue"}};
    for (const auto& t : targets) {
        nlohmann::json* node = &j;
        for (std::size_t k = 0; k + 1 < t.size(); ++k) {
            if (!node->is_object() || !node->contains(t[k]) || !(*node)[t[k]].is_object())
                throw UsageError("--param: unknown key '" + path + "'");
            node = &(*node)[t[k]];
        }
        (*node)[t.back()] = value;  // parsed by the config reader like any scalar
    }
    try {
        return parse_config(j.dump());
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("--param ") + path + "=" + value + ": " + e.what());
    }
}

int cmd_sweep(const Overrides& o, const std::vector<std::string>& params, std::uint64_t seeds,
              const std::string& out, bool quiet) {
    const SimulationConfig base = o.build();
    std::vector<SweepAxis> axes;
    for (const auto& p : params) axes.push_back(parse_axis(p));
    if (seeds == 0) throw UsageError("--seeds must be positive");

    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create '" + out + "': " + ec.message());
    std::ofstream runs(fs::path(out) / "sweep_runs.csv", std::ios::trunc);
    std::ofstream summary(fs::path(out) / "sweep_summary.csv", std::ios::trunc);
    if (!runs || !summary) throw IoError("cannot open sweep outputs in '" + out + "'");

    std::string header;
    for (const auto& a : axes) header += a.path + ",";
    runs << header << "rng_seed,steps,stop_step,strands_completed,spontaneous_dimers,mutations\n";
    summary << header << "runs,stopped,median_stop_step\n";

    std::vector<std::size_t> idx(axes.size(), 0);
    for (bool more = true; more;) {
        SimulationConfig cell = base;
        std::string cell_label;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            cell = with_param(cell, axes[k].path, axes[k].values[idx[k]]);
            cell_label += axes[k].values[idx[k]] + ",";
        }
        std::vector<double> stops;  // censored runs count as +inf
        std::uint64_t stopped = 0;
        for (std::uint64_t s = 1; s <= seeds; ++s) {
            SimulationConfig cfg = cell;
            cfg.rng_seed = o.seed ? *o.seed + s - 1 : s;
            const RunResult r = run(cfg);
            std::size_t completed = 0, dimers = 0, mutations = 0;
            for (const EventRecord& e : r.events) {
                completed += e.kind == EventKind::StrandCompleted;
                dimers += e.kind == EventKind::SpontaneousDimer;
                mutations += e.kind == EventKind::Mutation;
            }
            runs << cell_label << cfg.rng_seed << ',' << r.steps << ',';
            if (r.stop_event) {
                runs << r.stop_event->step;
                stops.push_back(static_cast<double>(r.stop_event->step));
                ++stopped;
            } else {
                stops.push_back(std::numeric_limits<double>::infinity());
            }
            runs << ',' << completed << ',' << dimers << ',' << mutations << '\n';
            runs.flush();
            if (!quiet)
                std::cout << cell_label << "seed " << cfg.rng_seed << ": "
                          << (r.stop_event ? std::to_string(r.stop_event->step) : std::string("no stop"))
                          << '\n';
        }
        std::sort(stops.begin(), stops.end());
        const std::size_t n = stops.size();
        const double median = n % 2 ? stops[n / 2] : 0.5 * (stops[n / 2 - 1] + stops[n / 2]);
        summary << cell_label << n << ',' << stopped << ',';
        if (std::isinf(median)) summary << "inf";
        else summary << median;
        summary << '\n';
        summary.flush();

        more = false;
        for (std::size_t k = axes.size(); k-- > 0;) {
            if (++idx[k] < axes[k].values.size()) {
                more = true;
                break;
            }
            idx[k] = 0;
        }
    }
    if (!runs || !summary) throw IoError("error writing sweep outputs");
    return kExitOk;
}

int cmd_verify(Overrides o, bool quiet) {
    if (o.config_path.empty() && o.preset.empty()) o.preset = "seeded_replication";
    SimulationConfig cfg = o.build();
    if (!o.steps) cfg.max_steps = 2000;
    Simulation sim(cfg);
    std::vector<std::string> problems;
    auto check = [&] {
        for (auto& m : check_invariants(sim.state(), cfg)) problems.push_back(m);
        for (auto& m : check_bond_contact(sim.state(), cfg)) problems.push_back(m);
        SpatialIndex index(cfg.bounds(), 2.0 * max_field_radius(cfg.geometry));
        index.rebuild(sim.state().codons, cfg.geometry);
        const ContactSet fast = detect_contacts(sim.state().codons, index, cfg.geometry);
        const ContactSet slow = detect_contacts_all_pairs(sim.state().codons, cfg.geometry);
        if (fast.contacts != slow.contacts || fast.yellow_near != slow.yellow_near)
            problems.push_back("step " + std::to_string(sim.state().step) +
                               ": grid contacts differ from all-pairs contacts");
    };
    check();
    const std::uint64_t half = cfg.max_steps / 2;
    std::string mid_snapshot;
    for (std::uint64_t k = 0; k < cfg.max_steps && problems.size() < 20; ++k) {
        if (k == half) mid_snapshot = write_snapshot(capture(sim));
        sim.step();
        check();
    }
    if (!mid_snapshot.empty()) {
        const SnapshotDocument doc = read_snapshot(mid_snapshot);
        if (write_snapshot(doc) != mid_snapshot) problems.push_back("snapshot round trip is not exact");
        Simulation replay = restore(doc);
        while (replay.state().step < sim.state().step) replay.step();
        if (!(replay.state() == sim.state())) problems.push_back("replay from snapshot diverged");
    }
    for (const auto& p : problems) std::cerr << "violation: " << p << '\n';
    if (!quiet)
        std::cout << (problems.empty() ? "ok" : "FAILED") << ": " << cfg.max_steps << " steps, "
                  << sim.state().codons.size() << " codons, " << problems.size() << " violations\n";
    return problems.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-replicating codon soup simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Suppress progress output");

    Overrides run_o, sweep_o, verify_o;
    std::string run_out, render_in, render_out, replay_in, replay_out, sweep_out;
    double render_scale = 4.0;
    std::uint64_t replay_steps = 0, sweep_seeds = 10;
    std::vector<std::string> sweep_params;

    auto* run_cmd = app.add_subcommand("run", "Run a simulation and write snapshots, events and metrics");
    run_o.add_to(run_cmd);
    run_cmd->add_option("-o,--out", run_out, "Output directory")->required();

    auto* render_cmd = app.add_subcommand("render", "Render a snapshot as SVG");
    render_cmd->add_option("snapshot", render_in, "Snapshot file")->required();
    render_cmd->add_option("-o,--out", render_out, "SVG file (default stdout)");
    render_cmd->add_option("--scale", render_scale, "Pixels per world unit")->check(CLI::PositiveNumber);

    auto* replay_cmd = app.add_subcommand("replay", "Continue a run from a snapshot");
    replay_cmd->add_option("snapshot", replay_in, "Snapshot file")->required();
    replay_cmd->add_option("--steps", replay_steps, "Steps to run")->required();
    replay_cmd->add_option("-o,--out", replay_out, "Output directory")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid, one run per cell and seed");
    sweep_o.add_to(sweep_cmd);
    sweep_cmd->add_option("-p,--param", sweep_params, "name=v1,v2,... (repeatable)")->required();
    sweep_cmd->add_option("--seeds", sweep_seeds, "Seeds per cell");
    sweep_cmd->add_option("-o,--out", sweep_out, "Output directory")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check invariants on a short randomized run");
    verify_o.add_to(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run_o, run_out, quiet);
        if (*render_cmd) return cmd_render(render_in, render_out, render_scale);
        if (*replay_cmd) return cmd_replay(replay_in, replay_steps, replay_out, quiet);
        if (*sweep_cmd) return cmd_sweep(sweep_o, sweep_params, sweep_seeds, sweep_out, quiet);
        if (*verify_cmd) return cmd_verify(verify_o, quiet);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SnapshotError& e) {
        std::cerr << "snapshot error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
