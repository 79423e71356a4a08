#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qwalk/coins.hpp"

namespace qwalk {

// Which family the disordered steps draw from: a fair Hadamard/Fourier
// choice or the full three-parameter SU(2) box.
enum class DisorderKind { two_coin, su2 };

enum class TransientShape { linear, quadratic, negative_quadratic };

// order_to_disorder ramps p from 0 to 1/2; disorder_to_order the reverse.
enum class TransientDirection { order_to_disorder, disorder_to_order };

namespace schedules {

struct Ordered {
    CoinParams coin;
};

struct SDD2 {};

struct SDDInf {};

// Alternating blocks: delta_t disordered steps, then delta_t steps of
// ordered_coin, repeating; a trailing partial block is truncated.
struct ADO {
    DisorderKind inner = DisorderKind::two_coin;
    int delta_t = 1;
    CoinParams ordered_coin{0.5, 0.0, 0.0};
};

struct WDDConst {
    double p = 0.0;
};

struct WDDTransient {
    TransientShape shape = TransientShape::linear;
    TransientDirection direction = TransientDirection::order_to_disorder;
    int horizon = 1000;
};

// Fourier at t = period, 2*period, ...; Hadamard otherwise.
struct PeriodicFourier {
    int period = 33;
};

// Disordered steps until switch_step, ordered_coin from then on (one-time
// switch, not periodic).
struct DisorderThenOrder {
    DisorderKind inner = DisorderKind::two_coin;
    int switch_step = 500;
    CoinParams ordered_coin{0.5, 0.0, 0.0};
};

// Externally supplied coin list (replay of an exported sequence).
struct FixedSequence {
    std::vector<CoinParams> coins;
};

}  // namespace schedules

using CoinSchedule =
    std::variant<schedules::Ordered, schedules::SDD2, schedules::SDDInf, schedules::ADO, schedules::WDDConst,
                 schedules::WDDTransient, schedules::PeriodicFourier, schedules::DisorderThenOrder,
                 schedules::FixedSequence>;

std::string describe(const CoinSchedule& schedule);

// p(t) for the order<->disorder transients, exactly as tabulated; result
// lies in [0, 1/2]. t must lie in [0, horizon].
double transient_p(TransientShape shape, TransientDirection direction, int t, int horizon);

// Materialized coin sequence: coins[t-1] drives step t, t = 1..steps.
struct CoinSequence {
    std::vector<CoinParams> coins;
    std::uint64_t seed = 0;
    std::string descriptor;

    int steps() const { return static_cast<int>(coins.size()); }
    const CoinParams& at_step(int t) const { return coins[static_cast<std::size_t>(t - 1)]; }
};

// One RngStream seeded with `seed` drives the whole sequence, consumed in
// time-step order. Identical arguments reproduce the sequence exactly.
CoinSequence generate_sequence(const CoinSchedule& schedule, int steps, std::uint64_t seed);

}  // namespace qwalk
