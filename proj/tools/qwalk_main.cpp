#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qwalk/cli_io.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/schedule.hpp"
#include "qwalk/version.hpp"

namespace {

// Command-line values land in optionals so file-config values survive
// unless a flag was actually given.
struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> scenario;
    std::optional<std::string> schedule;
    std::optional<int> steps;
    std::optional<std::string> init;
    std::optional<double> sigma0;
    std::optional<int> cutoff;
    std::optional<double> p;
    std::optional<int> dt;
    std::optional<int> period;
    std::optional<int> switch_step;
    std::optional<std::string> transient;
    std::optional<std::string> direction;
    std::optional<std::uint64_t> seed;
    std::optional<double> grid_step;
    std::optional<std::string> policy;
    std::optional<int> realizations;
    std::optional<int> tref;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::optional<std::string> replay;
    std::optional<double> p_min;
    std::optional<double> p_max;
    std::optional<int> p_count;
    std::optional<std::string> p_list;
};

void add_common_options(CLI::App& cmd, Flags& f) {
    cmd.add_option("--config", f.config, "key=value config file; flags override file values");
    cmd.add_option("--scenario", f.scenario, "named figure preset (e.g. fig1b, fig5b)");
    cmd.add_option("--schedule", f.schedule,
                   "hadamard|fourier|sdd2|sddinf|ado2|adoinf|wdd|transient|periodic-fourier|restart2|restartinf");
    cmd.add_option("--steps", f.steps, "number of walk steps N");
    cmd.add_option("--init", f.init, "initial position state: local|gauss");
    cmd.add_option("--sigma0", f.sigma0, "Gaussian initial dispersion");
    cmd.add_option("--cutoff", f.cutoff, "Gaussian truncation half-width in sites");
    cmd.add_option("--p", f.p, "wdd Fourier probability");
    cmd.add_option("--dt", f.dt, "ado block length");
    cmd.add_option("--period", f.period, "periodic-fourier period");
    cmd.add_option("--switch-step", f.switch_step, "restart*: first ordered step");
    cmd.add_option("--transient", f.transient, "linear|quadratic|negative-quadratic");
    cmd.add_option("--direction", f.direction, "order-to-disorder|disorder-to-order");
    cmd.add_option("--seed", f.seed, "base RNG seed");
    cmd.add_option("--grid-step", f.grid_step, "Bloch grid step for both angles");
    cmd.add_option("--policy", f.policy, "realization policy: shared|per-qubit");
    cmd.add_option("--realizations", f.realizations, "number of disorder realizations to average");
    cmd.add_option("--tref", f.tref, "reference step for p scans");
    cmd.add_option("--out", f.out, "output CSV path (stem for multi-series presets)");
    cmd.add_option("--workers", f.workers, "worker threads (0 = hardware)");
    cmd.add_option("--replay", f.replay, "exported sequence file to replay");
}

void add_pscan_options(CLI::App& cmd, Flags& f) {
    cmd.add_option("--p-min", f.p_min, "lowest scanned p");
    cmd.add_option("--p-max", f.p_max, "highest scanned p");
    cmd.add_option("--p-count", f.p_count, "number of scanned p values");
    cmd.add_option("--p-list", f.p_list, "explicit comma-separated p values");
}

qwalk::RunConfig build_config(const Flags& f) {
    qwalk::RunConfig cfg;
    if (f.config) cfg = qwalk::load_config(*f.config);
    if (f.scenario) cfg.scenario = *f.scenario;
    if (f.schedule) cfg.schedule = *f.schedule;
    if (f.steps) cfg.steps = *f.steps;
    if (f.init) cfg.init = *f.init;
    if (f.sigma0) cfg.sigma0 = *f.sigma0;
    if (f.cutoff) cfg.cutoff = *f.cutoff;
    if (f.p) cfg.p = *f.p;
    if (f.dt) cfg.dt = *f.dt;
    if (f.period) cfg.period = *f.period;
    if (f.switch_step) cfg.switch_step = *f.switch_step;
    if (f.transient) cfg.transient = *f.transient;
    if (f.direction) cfg.direction = *f.direction;
    if (f.seed) cfg.seed = *f.seed;
    if (f.grid_step) cfg.grid_step = *f.grid_step;
    if (f.policy) cfg.policy = *f.policy;
    if (f.realizations) cfg.realizations = *f.realizations;
    if (f.tref) cfg.tref = *f.tref;
    if (f.out) cfg.out = *f.out;
    if (f.workers) cfg.workers = *f.workers;
    if (f.replay) cfg.replay = *f.replay;
    if (f.p_min) cfg.p_min = *f.p_min;
    if (f.p_max) cfg.p_max = *f.p_max;
    if (f.p_count) cfg.p_count = *f.p_count;
    if (f.p_list) cfg.p_list = *f.p_list;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qwalk: disordered discrete-time quantum walk batch simulator"};
    app.set_version_flag("--version", std::string("qwalk ") + qwalk::kVersion);
    app.require_subcommand(1);

    Flags run_flags;
    CLI::App* run = app.add_subcommand("run", "run a scenario preset or a custom ensemble, write CSV series");
    add_common_options(*run, run_flags);

    Flags pscan_flags;
    CLI::App* pscan = app.add_subcommand("pscan", "scan the wdd probability p at a reference step");
    add_common_options(*pscan, pscan_flags);
    add_pscan_options(*pscan, pscan_flags);

    Flags export_flags;
    CLI::App* export_seq = app.add_subcommand("export-seq", "materialize a coin sequence to a text file");
    add_common_options(*export_seq, export_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            qwalk::run_scenario(build_config(run_flags));
        } else if (pscan->parsed()) {
            qwalk::run_pscan(build_config(pscan_flags));
        } else if (export_seq->parsed()) {
            const qwalk::RunConfig cfg = build_config(export_flags);
            const qwalk::CoinSequence seq =
                qwalk::generate_sequence(qwalk::schedule_from_config(cfg), cfg.steps, cfg.seed);
            qwalk::export_sequence(seq, cfg.out);
            std::cout << "wrote " << cfg.out << "\n";
        }
    } catch (const qwalk::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qwalk::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
