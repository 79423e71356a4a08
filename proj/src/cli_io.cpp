#include "qwalk/cli_io.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/version.hpp"

namespace qwalk {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& value, const std::string& key, int line) {
    try {
        std::size_t idx = 0;
        const double v = std::stod(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "' needs a number, got '" + value + "'", line);
    }
}

long long parse_ll(const std::string& value, const std::string& key, int line) {
    try {
        std::size_t idx = 0;
        const long long v = std::stoll(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "' needs an integer, got '" + value + "'", line);
    }
}

std::uint64_t parse_u64(const std::string& value, const std::string& key, int line) {
    try {
        std::size_t idx = 0;
        const unsigned long long v = std::stoull(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config key '" + key + "' needs an unsigned integer, got '" + value + "'", line);
    }
}

void apply_key(RunConfig& c, const std::string& key, const std::string& value, int line) {
    if (key == "scenario") c.scenario = value;
    else if (key == "schedule") c.schedule = value;
    else if (key == "steps") c.steps = static_cast<int>(parse_ll(value, key, line));
    else if (key == "init") c.init = value;
    else if (key == "sigma0") c.sigma0 = parse_double(value, key, line);
    else if (key == "cutoff") c.cutoff = static_cast<int>(parse_ll(value, key, line));
    else if (key == "p") c.p = parse_double(value, key, line);
    else if (key == "dt") c.dt = static_cast<int>(parse_ll(value, key, line));
    else if (key == "period") c.period = static_cast<int>(parse_ll(value, key, line));
    else if (key == "switch_step") c.switch_step = static_cast<int>(parse_ll(value, key, line));
    else if (key == "transient") c.transient = value;
    else if (key == "direction") c.direction = value;
    else if (key == "seed") c.seed = parse_u64(value, key, line);
    else if (key == "grid_step") c.grid_step = parse_double(value, key, line);
    else if (key == "policy") c.policy = value;
    else if (key == "realizations") c.realizations = static_cast<int>(parse_ll(value, key, line));
    else if (key == "tref") c.tref = static_cast<int>(parse_ll(value, key, line));
    else if (key == "out") c.out = value;
    else if (key == "workers") c.workers = static_cast<int>(parse_ll(value, key, line));
    else if (key == "replay") c.replay = value;
    else if (key == "p_min") c.p_min = parse_double(value, key, line);
    else if (key == "p_max") c.p_max = parse_double(value, key, line);
    else if (key == "p_count") c.p_count = static_cast<int>(parse_ll(value, key, line));
    else if (key == "p_list") c.p_list = value;
    else throw ParseError("unknown config key '" + key + "'", line);
}

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

RealizationPolicy policy_from(const RunConfig& c) {
    if (c.policy == "shared") return RealizationPolicy::shared;
    if (c.policy == "per-qubit") return RealizationPolicy::per_qubit;
    throw DomainError("policy must be 'shared' or 'per-qubit', got '" + c.policy + "'");
}

EnsembleOptions options_from(const RunConfig& c) {
    EnsembleOptions opts;
    opts.policy = policy_from(c);
    opts.realizations = c.realizations;
    opts.workers = c.workers;
    return opts;
}

TransientShape shape_from(const RunConfig& c) {
    if (c.transient == "linear") return TransientShape::linear;
    if (c.transient == "quadratic") return TransientShape::quadratic;
    if (c.transient == "negative-quadratic") return TransientShape::negative_quadratic;
    throw DomainError("transient must be linear|quadratic|negative-quadratic, got '" + c.transient + "'");
}

TransientDirection direction_from(const RunConfig& c) {
    if (c.direction == "order-to-disorder") return TransientDirection::order_to_disorder;
    if (c.direction == "disorder-to-order") return TransientDirection::disorder_to_order;
    throw DomainError("direction must be order-to-disorder|disorder-to-order, got '" + c.direction + "'");
}

void write_meta(const std::string& csv_path, const RunConfig& effective, const EnsembleResult* result,
                const std::string& label) {
    std::ofstream out = open_output(csv_path + ".meta");
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    out << "# qwalk " << kVersion << "\n";
    if (!label.empty()) out << "# label = " << label << "\n";
    if (result) {
        out << "# schedule_descriptor = " << result->schedule_descriptor << "\n";
        out << "# init_descriptor = " << result->init_descriptor << "\n";
        out << "# qubits = " << result->qubit_count << "\n";
    }
    out << "# timestamp = " << now << "\n";
    save_config(effective, out);
}

void write_series_csv(const std::string& path, const EnsembleResult& result) {
    std::ofstream out = open_output(path);
    const bool with_stderr = !result.stderr_entropy.empty();
    out << (with_stderr ? "t,mean_SE,stderr" : "t,mean_SE") << "\n";
    for (std::size_t t = 0; t < result.mean_entropy.size(); ++t) {
        out << t << ',' << fmt17(result.mean_entropy[t]);
        if (with_stderr) out << ',' << fmt17(result.stderr_entropy[t]);
        out << "\n";
    }
}

// Series preset catalog; every entry rewrites a copy of the base config.
using Mutator = std::function<void(RunConfig&)>;

struct PresetEntry {
    std::string label;
    Mutator mutate;
};

Mutator sched(const std::string& name) {
    return [name](RunConfig& c) { c.schedule = name; };
}

Mutator wdd(double p) {
    return [p](RunConfig& c) {
        c.schedule = "wdd";
        c.p = p;
    };
}

Mutator ado(const std::string& name, int dt) {
    return [name, dt](RunConfig& c) {
        c.schedule = name;
        c.dt = dt;
    };
}

Mutator restart(const std::string& name, int at) {
    return [name, at](RunConfig& c) {
        c.schedule = name;
        c.switch_step = at;
    };
}

Mutator transient(const std::string& shape, const std::string& direction) {
    return [shape, direction](RunConfig& c) {
        c.schedule = "transient";
        c.transient = shape;
        c.direction = direction;
    };
}

Mutator local_init() {
    return [](RunConfig& c) { c.init = "local"; };
}

Mutator gauss_init(double sigma0) {
    return [sigma0](RunConfig& c) {
        c.init = "gauss";
        c.sigma0 = sigma0;
    };
}

Mutator combine(std::vector<Mutator> ms) {
    return [ms = std::move(ms)](RunConfig& c) {
        for (const Mutator& m : ms) m(c);
    };
}

std::vector<PresetEntry> series_preset(const std::string& name) {
    const std::vector<double> sigmas{1.0, 2.0, 5.0, 10.0};
    std::vector<PresetEntry> entries;

    auto add = [&entries](std::string label, Mutator m) { entries.push_back({std::move(label), std::move(m)}); };

    if (name == "fig1a") {
        add("hadamard-local", combine({sched("hadamard"), local_init()}));
        add("fourier-local", combine({sched("fourier"), local_init()}));
        for (const double s : sigmas) {
            const std::string tag = std::to_string(static_cast<int>(s));
            add("hadamard-gauss" + tag, combine({sched("hadamard"), gauss_init(s)}));
            add("fourier-gauss" + tag, combine({sched("fourier"), gauss_init(s)}));
        }
    } else if (name == "fig1a-hadamard-local") {
        add("", combine({sched("hadamard"), local_init()}));
    } else if (name == "fig1a-fourier-local") {
        add("", combine({sched("fourier"), local_init()}));
    } else if (name == "fig1a-hadamard-gauss") {
        add("", combine({sched("hadamard"), [](RunConfig& c) { c.init = "gauss"; }}));
    } else if (name == "fig1a-fourier-gauss") {
        add("", combine({sched("fourier"), [](RunConfig& c) { c.init = "gauss"; }}));
    } else if (name == "fig1b") {
        add("sdd2-gauss10", combine({sched("sdd2"), gauss_init(10.0)}));
        add("sddinf-gauss10", combine({sched("sddinf"), gauss_init(10.0)}));
    } else if (name == "fig1b-local") {
        add("sdd2-local", combine({sched("sdd2"), local_init()}));
        add("sddinf-local", combine({sched("sddinf"), local_init()}));
    } else if (name == "fig1b-full") {
        for (const char* k : {"sdd2", "sddinf"}) {
            add(std::string(k) + "-local", combine({sched(k), local_init()}));
            for (const double s : sigmas)
                add(std::string(k) + "-gauss" + std::to_string(static_cast<int>(s)), combine({sched(k), gauss_init(s)}));
        }
    } else if (name == "fig1c" || name == "fig1d") {
        const Mutator init = name == "fig1c" ? local_init() : gauss_init(10.0);
        add("sdd2", combine({sched("sdd2"), init}));
        add("sddinf", combine({sched("sddinf"), init}));
        for (const int at : {500, 250, 100, 50}) {
            add("restart2-t" + std::to_string(at), combine({restart("restart2", at), init}));
            add("restartinf-t" + std::to_string(at), combine({restart("restartinf", at), init}));
        }
    } else if (name == "fig2a" || name == "fig2b") {
        const Mutator init = name == "fig2a" ? local_init() : gauss_init(10.0);
        for (const int dt : {10, 100}) {
            add("ado2-dt" + std::to_string(dt), combine({ado("ado2", dt), init}));
            add("adoinf-dt" + std::to_string(dt), combine({ado("adoinf", dt), init}));
        }
        add("sdd2", combine({sched("sdd2"), init}));
        add("sddinf", combine({sched("sddinf"), init}));
    } else if (name == "fig3a") {
        for (const double p : {0.12, 0.25}) add("wdd-p" + std::to_string(p).substr(0, 4), combine({wdd(p), local_init()}));
        add("sdd2", combine({sched("sdd2"), local_init()}));
        add("hadamard", combine({sched("hadamard"), local_init()}));
    } else if (name == "fig3b") {
        add("wdd-p0.12", combine({wdd(0.12), local_init()}));
        add("wdd-p0.01", combine({wdd(0.01), local_init()}));
        add("wdd-p0.001", combine({wdd(0.001), local_init()}));
        add("sdd2", combine({sched("sdd2"), local_init()}));
        add("hadamard", combine({sched("hadamard"), local_init()}));
    } else if (name == "fig3c") {
        add("wdd-p0.03", combine({wdd(0.03), gauss_init(10.0)}));
        add("wdd-p0.10", combine({wdd(0.10), gauss_init(10.0)}));
        add("wdd-p0.30", combine({wdd(0.30), gauss_init(10.0)}));
        add("sdd2", combine({sched("sdd2"), gauss_init(10.0)}));
        add("hadamard", combine({sched("hadamard"), gauss_init(10.0)}));
    } else if (name == "fig3d") {
        add("wdd-p0.03", combine({wdd(0.03), gauss_init(10.0)}));
        add("wdd-p0.01", combine({wdd(0.01), gauss_init(10.0)}));
        add("wdd-p0.005", combine({wdd(0.005), gauss_init(10.0)}));
        add("wdd-p0.001", combine({wdd(0.001), gauss_init(10.0)}));
        add("sdd2", combine({sched("sdd2"), gauss_init(10.0)}));
        add("hadamard", combine({sched("hadamard"), gauss_init(10.0)}));
    } else if (name == "fig5a") {
        add("ado2-dt100", combine({ado("ado2", 100), local_init()}));
        add("wdd-p0.12", combine({wdd(0.12), local_init()}));
        add("sdd2", combine({sched("sdd2"), local_init()}));
        add("hadamard", combine({sched("hadamard"), local_init()}));
    } else if (name == "fig5b") {
        add("ado2-dt100", combine({ado("ado2", 100), gauss_init(10.0)}));
        add("wdd-p0.03", combine({wdd(0.03), gauss_init(10.0)}));
        add("sdd2", combine({sched("sdd2"), gauss_init(10.0)}));
        add("periodic-fourier-33", combine({sched("periodic-fourier"), gauss_init(10.0),
                                            [](RunConfig& c) { c.period = 33; }}));
        add("hadamard", combine({sched("hadamard"), gauss_init(10.0)}));
    } else if (name == "fig6a" || name == "fig6b") {
        const std::string dir = name == "fig6a" ? "order-to-disorder" : "disorder-to-order";
        for (const char* shape : {"quadratic", "linear", "negative-quadratic"})
            add(std::string("transient-") + shape, combine({transient(shape, dir), gauss_init(10.0)}));
        add("wdd-p0.03", combine({wdd(0.03), gauss_init(10.0)}));
        add("sdd2", combine({sched("sdd2"), gauss_init(10.0)}));
        add("hadamard", combine({sched("hadamard"), gauss_init(10.0)}));
    }
    return entries;
}

bool is_eta_scan(const std::string& name) { return name == "fig2c" || name == "fig2d"; }
bool is_pscan_preset(const std::string& name) { return name == "fig4"; }

// Block lengths that split `steps` into equally many ordered and disordered
// steps: the divisors of steps/2.
std::vector<int> balanced_block_lengths(int steps) {
    if (steps < 2 || steps % 2 != 0) throw DomainError("eta scan needs an even number of steps");
    const int half = steps / 2;
    std::vector<int> dts;
    for (int d = 1; d <= half; ++d)
        if (half % d == 0) dts.push_back(d);
    return dts;
}

std::vector<std::string> run_eta_scan(const RunConfig& base) {
    RunConfig cfg = base;
    cfg.scenario.clear();
    cfg.init = base.scenario == "fig2c" ? "local" : "gauss";
    if (cfg.init == "gauss") cfg.sigma0 = 10.0;
    const int t_ref = cfg.steps;

    const BlochGrid grid = grid_from_config(cfg);
    const PositionInit init = init_from_config(cfg);
    const EnsembleOptions opts = options_from(cfg);
    const std::vector<int> dts = balanced_block_lengths(cfg.steps);

    std::vector<std::string> written;
    for (const DisorderKind kind : {DisorderKind::two_coin, DisorderKind::su2}) {
        const CoinSchedule sdd =
            kind == DisorderKind::two_coin ? CoinSchedule(schedules::SDD2{}) : CoinSchedule(schedules::SDDInf{});
        const EnsembleResult ref = average_entanglement(grid, init, sdd, cfg.steps, cfg.seed, opts);

        const std::string label = kind == DisorderKind::two_coin ? "eta-ado2" : "eta-adoinf";
        const std::string path = output_path(base, label);
        std::ofstream out = open_output(path);
        out << "dt,eta\n";
        for (const int dt : dts) {
            const CoinSchedule ado = schedules::ADO{kind, dt, hadamard()};
            const EnsembleResult res = average_entanglement(grid, init, ado, cfg.steps, cfg.seed, opts);
            out << dt << ',' << fmt17(eta(res, ref, t_ref)) << "\n";
        }
        out.close();
        write_meta(path, cfg, nullptr, label);
        std::cout << "wrote " << path << "\n";
        written.push_back(path);
    }
    return written;
}

std::vector<double> pscan_values(const RunConfig& cfg) {
    std::vector<double> ps;
    if (!cfg.p_list.empty()) {
        std::stringstream ss(cfg.p_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            ps.push_back(parse_double(item, "p_list", 0));
        }
        if (ps.empty()) throw DomainError("p_list is empty");
    } else {
        if (cfg.p_count < 1) throw DomainError("p_count must be >= 1");
        if (!(cfg.p_min >= 0.0 && cfg.p_max <= 1.0 && cfg.p_min <= cfg.p_max))
            throw DomainError("p scan range must satisfy 0 <= p_min <= p_max <= 1");
        if (cfg.p_count == 1) {
            ps.push_back(cfg.p_min);
        } else {
            for (int i = 0; i < cfg.p_count; ++i)
                ps.push_back(cfg.p_min + (cfg.p_max - cfg.p_min) * i / (cfg.p_count - 1));
        }
    }
    for (const double p : ps)
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p values must lie in [0, 1]");
    return ps;
}

std::string run_single_pscan(const RunConfig& cfg, const std::string& label) {
    const BlochGrid grid = grid_from_config(cfg);
    const PositionInit init = init_from_config(cfg);
    const std::vector<double> ps = pscan_values(cfg);
    const PScanResult scan = best_p_scan(ps, init, grid, cfg.tref, cfg.seed, options_from(cfg));

    const std::string path = output_path(cfg, label);
    std::ofstream out = open_output(path);
    out << "p,mean_SE_at_tref\n";
    for (const PScanPoint& pt : scan.points) out << fmt17(pt.p) << ',' << fmt17(pt.mean_entropy_at_tref) << "\n";
    out.close();
    write_meta(path, cfg, nullptr, label);

    const PScanPoint& best = scan.points[scan.argmax];
    std::cout << "wrote " << path << "\n";
    std::cout << "best p = " << fmt17(best.p) << " with mean_SE(t=" << scan.t_ref << ") = "
              << fmt17(best.mean_entropy_at_tref) << "\n";
    return path;
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError("empty config key", lineno);
        apply_key(cfg, key, value, lineno);
    }
    return cfg;
}

void save_config(const RunConfig& c, std::ostream& out) {
    out << "scenario = " << c.scenario << "\n";
    out << "schedule = " << c.schedule << "\n";
    out << "steps = " << c.steps << "\n";
    out << "init = " << c.init << "\n";
    out << "sigma0 = " << fmt17(c.sigma0) << "\n";
    out << "cutoff = " << c.cutoff << "\n";
    out << "p = " << fmt17(c.p) << "\n";
    out << "dt = " << c.dt << "\n";
    out << "period = " << c.period << "\n";
    out << "switch_step = " << c.switch_step << "\n";
    out << "transient = " << c.transient << "\n";
    out << "direction = " << c.direction << "\n";
    out << "seed = " << c.seed << "\n";
    out << "grid_step = " << fmt17(c.grid_step) << "\n";
    out << "policy = " << c.policy << "\n";
    out << "realizations = " << c.realizations << "\n";
    out << "tref = " << c.tref << "\n";
    out << "out = " << c.out << "\n";
    out << "workers = " << c.workers << "\n";
    out << "replay = " << c.replay << "\n";
    out << "p_min = " << fmt17(c.p_min) << "\n";
    out << "p_max = " << fmt17(c.p_max) << "\n";
    out << "p_count = " << c.p_count << "\n";
    out << "p_list = " << c.p_list << "\n";
}

CoinSchedule schedule_from_config(const RunConfig& c) {
    if (!c.replay.empty()) return schedules::FixedSequence{import_sequence(c.replay).coins};
    const std::string& s = c.schedule;
    if (s == "hadamard") return schedules::Ordered{hadamard()};
    if (s == "fourier") return schedules::Ordered{fourier()};
    if (s == "sdd2") return schedules::SDD2{};
    if (s == "sddinf") return schedules::SDDInf{};
    if (s == "ado2") return schedules::ADO{DisorderKind::two_coin, c.dt, hadamard()};
    if (s == "adoinf") return schedules::ADO{DisorderKind::su2, c.dt, hadamard()};
    if (s == "wdd") {
        if (!(c.p >= 0.0 && c.p <= 1.0)) throw DomainError("wdd probability p must lie in [0, 1]");
        return schedules::WDDConst{c.p};
    }
    if (s == "transient") return schedules::WDDTransient{shape_from(c), direction_from(c), c.steps};
    if (s == "periodic-fourier") return schedules::PeriodicFourier{c.period};
    if (s == "restart2") return schedules::DisorderThenOrder{DisorderKind::two_coin, c.switch_step, hadamard()};
    if (s == "restartinf") return schedules::DisorderThenOrder{DisorderKind::su2, c.switch_step, hadamard()};
    throw DomainError("unknown schedule '" + s + "'");
}

PositionInit init_from_config(const RunConfig& c) {
    if (c.init == "local") return LocalInit{};
    if (c.init == "gauss") return GaussianSpec{c.sigma0, c.cutoff};
    throw DomainError("init must be 'local' or 'gauss', got '" + c.init + "'");
}

BlochGrid grid_from_config(const RunConfig& c) { return bloch_grid(c.grid_step, c.grid_step); }

std::vector<std::string> scenario_names() {
    return {"fig1a", "fig1a-hadamard-local", "fig1a-fourier-local", "fig1a-hadamard-gauss", "fig1a-fourier-gauss",
            "fig1b", "fig1b-local", "fig1b-full", "fig1c", "fig1d", "fig2a", "fig2b", "fig2c", "fig2d",
            "fig3a", "fig3b", "fig3c", "fig3d", "fig4", "fig5a", "fig5b", "fig6a", "fig6b"};
}

std::vector<PresetRun> expand_scenario(const RunConfig& base) {
    if (base.scenario.empty()) return {{"", base}};
    std::vector<PresetEntry> entries = series_preset(base.scenario);
    if (entries.empty()) throw DomainError("unknown scenario '" + base.scenario + "'");
    std::vector<PresetRun> runs;
    runs.reserve(entries.size());
    for (const PresetEntry& e : entries) {
        RunConfig cfg = base;
        cfg.scenario.clear();
        e.mutate(cfg);
        runs.push_back({e.label, std::move(cfg)});
    }
    return runs;
}

std::string output_path(const RunConfig& config, const std::string& label) {
    if (label.empty()) return config.out;
    std::string stem = config.out;
    const std::string suffix = ".csv";
    if (stem.size() >= suffix.size() && stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0)
        stem.resize(stem.size() - suffix.size());
    return stem + "-" + label + ".csv";
}

std::vector<std::string> run_scenario(const RunConfig& config) {
    if (config.steps < 0) throw DomainError("steps must be >= 0");
    if (is_eta_scan(config.scenario)) return run_eta_scan(config);
    if (is_pscan_preset(config.scenario)) {
        RunConfig cfg = config;
        cfg.scenario.clear();
        cfg.tref = 100;
        cfg.p_min = 0.0;
        cfg.p_max = 1.0;
        if (cfg.p_list.empty() && cfg.p_count <= 101) cfg.p_count = 1000;
        std::vector<std::string> written;
        RunConfig local_cfg = cfg;
        local_cfg.init = "local";
        written.push_back(run_single_pscan(local_cfg, "pscan-local"));
        for (const double s : {2.0, 5.0, 10.0}) {
            RunConfig gcfg = cfg;
            gcfg.init = "gauss";
            gcfg.sigma0 = s;
            written.push_back(run_single_pscan(gcfg, "pscan-gauss" + std::to_string(static_cast<int>(s))));
        }
        return written;
    }

    std::vector<std::string> written;
    for (const PresetRun& run : expand_scenario(config)) {
        const RunConfig& cfg = run.config;
        const CoinSchedule schedule = schedule_from_config(cfg);
        const PositionInit init = init_from_config(cfg);
        const BlochGrid grid = grid_from_config(cfg);
        const EnsembleResult result =
            average_entanglement(grid, init, schedule, cfg.steps, cfg.seed, options_from(cfg));

        const std::string path = output_path(config, run.label);
        write_series_csv(path, result);
        write_meta(path, cfg, &result, run.label);
        std::cout << "wrote " << path << "\n";
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> run_pscan(const RunConfig& config) {
    RunConfig cfg = config;
    cfg.scenario.clear();
    return {run_single_pscan(cfg, "")};
}

void export_sequence(const CoinSequence& seq, const std::string& path) {
    std::ofstream out = open_output(path);
    char line[128];
    for (int t = 1; t <= seq.steps(); ++t) {
        const CoinParams& c = seq.at_step(t);
        std::snprintf(line, sizeof line, "%d %.17g %.17g %.17g\n", t, c.q, c.theta, c.phi);
        out << line;
    }
    if (!out) throw IoError("failed writing sequence to '" + path + "'");
}

CoinSequence import_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sequence file '" + path + "'");
    CoinSequence seq;
    seq.descriptor = "imported:" + path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) throw ParseError("blank line in sequence file", lineno);
        std::istringstream ss(line);
        int t = 0;
        CoinParams c;
        if (!(ss >> t >> c.q >> c.theta >> c.phi)) throw ParseError("expected 't q theta phi'", lineno);
        std::string rest;
        if (ss >> rest) throw ParseError("trailing characters after phi", lineno);
        if (t != lineno) throw ParseError("step index out of order", lineno);
        try {
            validate_coin_params(c);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), lineno);
        }
        seq.coins.push_back(c);
    }
    return seq;
}

}  // namespace qwalk
