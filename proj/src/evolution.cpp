#include "qwalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace detail {

void step_into(const WalkState& src, WalkState& dst, const CoinMatrix& coin) {
    if (src.support_lo <= src.window_lo() || src.support_hi >= src.window_hi())
        throw CapacityError("walk support reached the preallocated window edge");

    const std::size_t lo = src.index_of(src.support_lo);
    const std::size_t hi = src.index_of(src.support_hi);
    const Amplitude* su = src.up_amps.data();
    const Amplitude* sd = src.down_amps.data();
    Amplitude* du = dst.up_amps.data();
    Amplitude* dd = dst.down_amps.data();

    // The loop writes up on [lo+1, hi+1] and down on [lo-1, hi-1]; clear the
    // remaining slots of the new support so stale data from two steps ago
    // cannot survive.
    du[lo - 1] = Amplitude{};
    du[lo] = Amplitude{};
    dd[hi] = Amplitude{};
    dd[hi + 1] = Amplitude{};

    for (std::size_t i = lo; i <= hi; ++i) {
        const Amplitude a = su[i];
        const Amplitude b = sd[i];
        du[i + 1] = coin.c00 * a + coin.c01 * b;
        dd[i - 1] = coin.c10 * a + coin.c11 * b;
    }

    dst.support_lo = src.support_lo - 1;
    dst.support_hi = src.support_hi + 1;
}

}  // namespace detail

WalkState step(const WalkState& state, const CoinMatrix& coin) {
    WalkState next = make_blank_state(state.window_lo(), state.window_hi());
    detail::step_into(state, next, coin);
    return next;
}

std::vector<CoinMatrix> coin_matrices(const CoinSequence& seq) {
    std::vector<CoinMatrix> mats;
    mats.reserve(seq.coins.size());
    for (const CoinParams& p : seq.coins) mats.push_back(coin_matrix(p));
    return mats;
}

WalkState evolve(WalkState state, std::span<const CoinMatrix> coins, const SnapshotSink& sink,
                 const EvolveOptions& options) {
    if (coins.empty()) return state;

    WalkState scratch = make_blank_state(state.window_lo(), state.window_hi());
    WalkState* cur = &state;
    WalkState* nxt = &scratch;
    for (std::size_t k = 0; k < coins.size(); ++k) {
        detail::step_into(*cur, *nxt, coins[k]);
        std::swap(cur, nxt);
        if (sink) {
            StepSnapshot snap;
            snap.reduced = reduce_coin(*cur);
            snap.report.step_index = static_cast<int>(k) + 1;
            snap.report.norm_after = snap.reduced.A + snap.reduced.B;
            snap.report.support_halfwidth = std::max(std::abs(cur->support_lo), std::abs(cur->support_hi));
            snap.state = options.emit_full_state ? cur : nullptr;
            sink(snap);
        }
    }
    if (cur != &state) state = std::move(*cur);
    return state;
}

WalkState evolve(WalkState state, const CoinSequence& seq, const SnapshotSink& sink, const EvolveOptions& options) {
    const std::vector<CoinMatrix> mats = coin_matrices(seq);
    return evolve(std::move(state), std::span<const CoinMatrix>(mats), sink, options);
}

}  // namespace qwalk
