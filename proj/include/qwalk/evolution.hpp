#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/core_state.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

struct StepReport {
    int step_index = 0;
    double norm_after = 0.0;
    int support_halfwidth = 0;
};

// Streamed per-step observables. `state` is non-null only when
// EvolveOptions::emit_full_state is set.
struct StepSnapshot {
    StepReport report;
    ReducedCoinState reduced;
    const WalkState* state = nullptr;
};

using SnapshotSink = std::function<void(const StepSnapshot&)>;

struct EvolveOptions {
    bool emit_full_state = false;
};

// One coined-shift step: (a', b') = C (a, b) at each site, then a' moves one
// site right and b' one site left. Allocates the successor state. Throws
// CapacityError if the support already touches the window edge.
WalkState step(const WalkState& state, const CoinMatrix& coin);

std::vector<CoinMatrix> coin_matrices(const CoinSequence& seq);

// Sequential application of the coins in increasing step order, double
// buffered over two amplitude arrays. The sink, when set, receives a
// snapshot after every step.
WalkState evolve(WalkState state, std::span<const CoinMatrix> coins, const SnapshotSink& sink = {},
                 const EvolveOptions& options = {});
WalkState evolve(WalkState state, const CoinSequence& seq, const SnapshotSink& sink = {},
                 const EvolveOptions& options = {});

namespace detail {

// Kernel: writes the stepped state into dst, which must share src's window
// and be clean outside src's support (maintained by the double-buffer loop).
void step_into(const WalkState& src, WalkState& dst, const CoinMatrix& coin);

}  // namespace detail

}  // namespace qwalk
