#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qwalk/core_state.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

struct LocalInit {};

using PositionInit = std::variant<LocalInit, GaussianSpec>;

WalkState make_initial_state(const QubitSpec& qubit, const PositionInit& init, int planned_steps);
std::string describe(const PositionInit& init);

// Grid of initial qubits covering the Bloch sphere: alpha = 0, step, ...
// up to pi and beta likewise up to 2*pi, endpoints included.
struct BlochGrid {
    double alpha_step = 0.1;
    double beta_step = 0.1;
    std::vector<QubitSpec> qubits;
};

BlochGrid bloch_grid(double alpha_step = 0.1, double beta_step = 0.1);

// shared: one coin sequence per realization, used for every qubit.
// per_qubit: every qubit gets a stream derived deterministically from
// (realization seed, qubit index).
enum class RealizationPolicy { shared, per_qubit };

struct EnsembleOptions {
    RealizationPolicy policy = RealizationPolicy::shared;
    int realizations = 1;
    int workers = 0;  // 0 = one per hardware thread
    bool keep_final_entropies = false;
};

struct EnsembleResult {
    std::vector<double> mean_entropy;     // indexed by t = 0..steps
    std::vector<double> stderr_entropy;   // over realizations; empty when realizations == 1
    std::vector<double> final_entropies;  // per qubit at t = steps, last realization; optional
    std::uint64_t seed = 0;
    RealizationPolicy policy = RealizationPolicy::shared;
    int realizations = 1;
    int steps = 0;
    std::size_t qubit_count = 0;
    std::string schedule_descriptor;
    std::string init_descriptor;
};

// Evolves every grid qubit under the schedule and averages the per-step
// entanglement entropy over the grid (and over realizations when
// requested). The reduction runs in ascending qubit order with compensated
// summation, so the result is bitwise identical for any worker count.
EnsembleResult average_entanglement(const BlochGrid& grid, const PositionInit& init, const CoinSchedule& schedule,
                                    int steps, std::uint64_t seed, const EnsembleOptions& options = {});

// Relative average-entanglement improvement of `ado` over `sdd` at t_ref.
double eta(const EnsembleResult& ado, const EnsembleResult& sdd, int t_ref = 1000);

struct PScanPoint {
    double p;
    double mean_entropy_at_tref;
};

struct PScanResult {
    std::vector<PScanPoint> points;  // sorted by p
    std::size_t argmax = 0;
    int t_ref = 0;
};

// Runs WDDConst(p) for every listed p with a common seed and reports the
// grid-mean entanglement at t_ref.
PScanResult best_p_scan(std::span<const double> p_values, const PositionInit& init, const BlochGrid& grid, int t_ref,
                        std::uint64_t seed, const EnsembleOptions& options = {});

}  // namespace qwalk
