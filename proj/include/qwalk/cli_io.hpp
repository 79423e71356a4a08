#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/ensemble.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

// Flat run description: everything a batch run needs, round-trippable
// through a key=value config file. Command-line flags override file values.
struct RunConfig {
    std::string scenario;                // empty: custom single run
    std::string schedule = "hadamard";   // hadamard|fourier|sdd2|sddinf|ado2|adoinf|wdd|
                                         // transient|periodic-fourier|restart2|restartinf
    int steps = 1000;
    std::string init = "local";          // local|gauss
    double sigma0 = 10.0;
    int cutoff = 100;
    double p = 0.0;                      // wdd Fourier probability
    int dt = 100;                        // ado block length
    int period = 33;                     // periodic-fourier period
    int switch_step = 500;               // restart*: first ordered step
    std::string transient = "quadratic"; // linear|quadratic|negative-quadratic
    std::string direction = "order-to-disorder";
    std::uint64_t seed = 20190615;
    double grid_step = 0.1;
    std::string policy = "shared";       // shared|per-qubit
    int realizations = 1;
    int tref = 100;                      // pscan / eta reference step
    std::string out = "series.csv";
    int workers = 0;
    std::string replay;                  // path of an exported sequence to replay
    double p_min = 0.0;                  // pscan grid
    double p_max = 1.0;
    int p_count = 101;
    std::string p_list;                  // optional explicit comma-separated p values

    bool operator==(const RunConfig&) const = default;
};

RunConfig load_config(const std::string& path);
void save_config(const RunConfig& config, std::ostream& out);

CoinSchedule schedule_from_config(const RunConfig& config);
PositionInit init_from_config(const RunConfig& config);
BlochGrid grid_from_config(const RunConfig& config);

// Expanded preset run: label "" means "write to config.out as-is".
struct PresetRun {
    std::string label;
    RunConfig config;
};

std::vector<PresetRun> expand_scenario(const RunConfig& base);
std::vector<std::string> scenario_names();

// Series/scan CSV path for a preset label.
std::string output_path(const RunConfig& config, const std::string& label);

// Runs the configured scenario (or single run) and writes one CSV series
// per run plus a .meta sidecar echoing the effective config. Returns the
// paths written.
std::vector<std::string> run_scenario(const RunConfig& config);

// Runs a WDD probability scan at t = tref and writes `p,mean_SE_at_tref`
// rows plus a sidecar; prints an argmax summary to stdout.
std::vector<std::string> run_pscan(const RunConfig& config);

// Plain-text sequence exchange: one line per step, `t q theta phi`, 17
// significant digits, reproducing the parameters exactly on import.
void export_sequence(const CoinSequence& seq, const std::string& path);
CoinSequence import_sequence(const std::string& path);

}  // namespace qwalk
