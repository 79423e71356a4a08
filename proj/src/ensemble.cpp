#include "qwalk/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "qwalk/entanglement.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

// Compensated summation keeps grid means independent of accumulation
// grouping down to the last bit, as long as the visit order is fixed.
struct KahanAccumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

int resolve_workers(int requested, std::size_t jobs) {
    int w = requested;
    if (w <= 0) w = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), jobs));
}

// Entropy series S(t), t = 0..steps, for one qubit under one coin sequence.
std::vector<double> entropy_series(const QubitSpec& qubit, const PositionInit& init, int steps,
                                   std::span<const CoinMatrix> mats) {
    std::vector<double> series(static_cast<std::size_t>(steps) + 1);
    WalkState st = make_initial_state(qubit, init, steps);
    series[0] = entropy(reduce_coin(st));
    if (steps == 0) return series;
    auto sink = [&series](const StepSnapshot& snap) {
        series[static_cast<std::size_t>(snap.report.step_index)] = entropy(snap.reduced);
    };
    evolve(std::move(st), mats, sink);
    return series;
}

struct RealizationOutput {
    std::vector<double> mean;            // grid mean per t
    std::vector<double> final_entropies; // per qubit, only when requested
};

RealizationOutput run_realization(const BlochGrid& grid, const PositionInit& init, const CoinSchedule& schedule,
                                  int steps, std::uint64_t realization_seed, const EnsembleOptions& options) {
    const std::size_t n = grid.qubits.size();
    std::vector<std::vector<double>> rows(n);

    CoinSequence shared_seq;
    std::vector<CoinMatrix> shared_mats;
    if (options.policy == RealizationPolicy::shared && steps > 0) {
        shared_seq = generate_sequence(schedule, steps, realization_seed);
        shared_mats = coin_matrices(shared_seq);
    }

    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        try {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= n) break;
                if (options.policy == RealizationPolicy::per_qubit && steps > 0) {
                    const std::uint64_t qs = derive_stream_seed(realization_seed, kQubitSalt, i);
                    const CoinSequence seq = generate_sequence(schedule, steps, qs);
                    const std::vector<CoinMatrix> mats = coin_matrices(seq);
                    rows[i] = entropy_series(grid.qubits[i], init, steps, mats);
                } else {
                    rows[i] = entropy_series(grid.qubits[i], init, steps, shared_mats);
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    const int workers = resolve_workers(options.workers, n);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    RealizationOutput out;
    out.mean.resize(static_cast<std::size_t>(steps) + 1);
    for (std::size_t t = 0; t <= static_cast<std::size_t>(steps); ++t) {
        KahanAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) acc.add(rows[i][t]);
        out.mean[t] = acc.sum / static_cast<double>(n);
    }
    if (options.keep_final_entropies) {
        out.final_entropies.resize(n);
        for (std::size_t i = 0; i < n; ++i) out.final_entropies[i] = rows[i][static_cast<std::size_t>(steps)];
    }
    return out;
}

}  // namespace

WalkState make_initial_state(const QubitSpec& qubit, const PositionInit& init, int planned_steps) {
    if (std::holds_alternative<LocalInit>(init)) return make_local_state(qubit, planned_steps);
    return make_gaussian_state(qubit, std::get<GaussianSpec>(init), planned_steps);
}

std::string describe(const PositionInit& init) {
    if (std::holds_alternative<LocalInit>(init)) return "local";
    const GaussianSpec& g = std::get<GaussianSpec>(init);
    char buf[64];
    std::snprintf(buf, sizeof buf, "gauss(sigma0=%g,cutoff=%d)", g.sigma0, g.cutoff);
    return buf;
}

BlochGrid bloch_grid(double alpha_step, double beta_step) {
    if (!(alpha_step > 0.0)) throw DomainError("alpha_step must be positive");
    if (!(beta_step > 0.0)) throw DomainError("beta_step must be positive");

    // k * step can land a few ulps past the closed upper bound when it is
    // mathematically equal to it; accept and clamp those.
    constexpr double kEdgeTol = 1e-12;
    std::vector<double> alphas;
    for (int k = 0;; ++k) {
        const double a = k * alpha_step;
        if (a > kPi + kEdgeTol) break;
        alphas.push_back(std::min(a, kPi));
    }
    std::vector<double> betas;
    for (int k = 0;; ++k) {
        const double b = k * beta_step;
        if (b > kTwoPi + kEdgeTol) break;
        betas.push_back(std::min(b, kTwoPi));
    }

    BlochGrid grid;
    grid.alpha_step = alpha_step;
    grid.beta_step = beta_step;
    grid.qubits.reserve(alphas.size() * betas.size());
    for (const double a : alphas)
        for (const double b : betas) grid.qubits.push_back({a, b});
    return grid;
}

EnsembleResult average_entanglement(const BlochGrid& grid, const PositionInit& init, const CoinSchedule& schedule,
                                    int steps, std::uint64_t seed, const EnsembleOptions& options) {
    if (grid.qubits.empty()) throw DomainError("Bloch grid is empty");
    if (steps < 0) throw DomainError("steps must be >= 0");
    if (options.realizations < 1) throw DomainError("realizations must be >= 1");

    const int rcount = options.realizations;
    std::vector<std::vector<double>> means;
    means.reserve(static_cast<std::size_t>(rcount));

    EnsembleResult result;
    for (int r = 0; r < rcount; ++r) {
        const std::uint64_t rseed = rcount == 1 ? seed : derive_stream_seed(seed, kRealizationSalt, r);
        RealizationOutput out = run_realization(grid, init, schedule, steps, rseed, options);
        if (r == rcount - 1) result.final_entropies = std::move(out.final_entropies);
        means.push_back(std::move(out.mean));
    }

    result.mean_entropy.resize(static_cast<std::size_t>(steps) + 1);
    for (std::size_t t = 0; t <= static_cast<std::size_t>(steps); ++t) {
        KahanAccumulator acc;
        for (int r = 0; r < rcount; ++r) acc.add(means[static_cast<std::size_t>(r)][t]);
        result.mean_entropy[t] = acc.sum / rcount;
    }
    if (rcount > 1) {
        result.stderr_entropy.resize(static_cast<std::size_t>(steps) + 1);
        for (std::size_t t = 0; t <= static_cast<std::size_t>(steps); ++t) {
            KahanAccumulator sq;
            for (int r = 0; r < rcount; ++r) {
                const double d = means[static_cast<std::size_t>(r)][t] - result.mean_entropy[t];
                sq.add(d * d);
            }
            result.stderr_entropy[t] = std::sqrt(sq.sum / (rcount - 1) / rcount);
        }
    }

    result.seed = seed;
    result.policy = options.policy;
    result.realizations = rcount;
    result.steps = steps;
    result.qubit_count = grid.qubits.size();
    result.schedule_descriptor = describe(schedule);
    result.init_descriptor = describe(init);
    return result;
}

double eta(const EnsembleResult& ado, const EnsembleResult& sdd, int t_ref) {
    if (t_ref < 0 || static_cast<std::size_t>(t_ref) >= ado.mean_entropy.size() ||
        static_cast<std::size_t>(t_ref) >= sdd.mean_entropy.size())
        throw DomainError("t_ref outside both series");
    const double denom = sdd.mean_entropy[static_cast<std::size_t>(t_ref)];
    if (denom <= 0.0) throw DomainError("reference average entanglement vanishes at t_ref");
    return ado.mean_entropy[static_cast<std::size_t>(t_ref)] / denom - 1.0;
}

PScanResult best_p_scan(std::span<const double> p_values, const PositionInit& init, const BlochGrid& grid, int t_ref,
                        std::uint64_t seed, const EnsembleOptions& options) {
    if (p_values.empty()) throw DomainError("p scan needs at least one value");
    if (t_ref < 1) throw DomainError("t_ref must be >= 1");

    PScanResult scan;
    scan.t_ref = t_ref;
    scan.points.reserve(p_values.size());
    for (const double p : p_values) {
        const EnsembleResult res =
            average_entanglement(grid, init, schedules::WDDConst{p}, t_ref, seed, options);
        scan.points.push_back({p, res.mean_entropy[static_cast<std::size_t>(t_ref)]});
    }
    std::sort(scan.points.begin(), scan.points.end(),
              [](const PScanPoint& a, const PScanPoint& b) { return a.p < b.p; });
    for (std::size_t i = 1; i < scan.points.size(); ++i)
        if (scan.points[i].mean_entropy_at_tref > scan.points[scan.argmax].mean_entropy_at_tref) scan.argmax = i;
    return scan;
}

}  // namespace qwalk
