#include "qwalk/schedule.hpp"

#include <cstdio>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string kind_suffix(DisorderKind kind) { return kind == DisorderKind::two_coin ? "2" : "inf"; }

CoinParams draw_disordered(DisorderKind kind, RngStream& rng) {
    return kind == DisorderKind::two_coin ? sample_two_coin(0.5, rng) : sample_su2_uniform(rng);
}

std::string shape_name(TransientShape shape) {
    switch (shape) {
        case TransientShape::linear: return "linear";
        case TransientShape::quadratic: return "quadratic";
        case TransientShape::negative_quadratic: return "negative-quadratic";
    }
    return "?";
}

std::string direction_name(TransientDirection direction) {
    return direction == TransientDirection::order_to_disorder ? "order-to-disorder" : "disorder-to-order";
}

}  // namespace

std::string describe(const CoinSchedule& schedule) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, schedules::Ordered>) {
                if (s.coin == hadamard()) return "hadamard";
                if (s.coin == fourier()) return "fourier";
                return "ordered(q=" + format_double(s.coin.q) + ",theta=" + format_double(s.coin.theta) +
                       ",phi=" + format_double(s.coin.phi) + ")";
            } else if constexpr (std::is_same_v<T, schedules::SDD2>) {
                return "sdd2";
            } else if constexpr (std::is_same_v<T, schedules::SDDInf>) {
                return "sddinf";
            } else if constexpr (std::is_same_v<T, schedules::ADO>) {
                return "ado" + kind_suffix(s.inner) + "(dt=" + std::to_string(s.delta_t) + ")";
            } else if constexpr (std::is_same_v<T, schedules::WDDConst>) {
                return "wdd(p=" + format_double(s.p) + ")";
            } else if constexpr (std::is_same_v<T, schedules::WDDTransient>) {
                return "transient(" + shape_name(s.shape) + "," + direction_name(s.direction) +
                       ",N=" + std::to_string(s.horizon) + ")";
            } else if constexpr (std::is_same_v<T, schedules::PeriodicFourier>) {
                return "periodic-fourier(" + std::to_string(s.period) + ")";
            } else if constexpr (std::is_same_v<T, schedules::DisorderThenOrder>) {
                return "restart" + kind_suffix(s.inner) + "(t=" + std::to_string(s.switch_step) + ")";
            } else {
                return "fixed(" + std::to_string(s.coins.size()) + " steps)";
            }
        },
        schedule);
}

double transient_p(TransientShape shape, TransientDirection direction, int t, int horizon) {
    if (horizon < 1) throw DomainError("transient horizon must be >= 1");
    if (t < 0 || t > horizon) throw DomainError("transient step must lie in [0, horizon]");
    const double td = t;
    const double nd = horizon;
    if (direction == TransientDirection::order_to_disorder) {
        switch (shape) {
            case TransientShape::linear: return td / (2.0 * nd);
            case TransientShape::quadratic: return td * td / (2.0 * nd * nd);
            case TransientShape::negative_quadratic: return 0.5 - (td - nd) * (td - nd) / (2.0 * nd * nd);
        }
    } else {
        switch (shape) {
            case TransientShape::linear: return -(td - nd) / (2.0 * nd);
            case TransientShape::quadratic: return (td - nd) * (td - nd) / (2.0 * nd * nd);
            case TransientShape::negative_quadratic: return 0.5 - td * td / (2.0 * nd * nd);
        }
    }
    throw DomainError("unknown transient shape");
}

CoinSequence generate_sequence(const CoinSchedule& schedule, int steps, std::uint64_t seed) {
    if (steps < 1) throw DomainError("steps must be >= 1");

    CoinSequence seq;
    seq.seed = seed;
    seq.descriptor = describe(schedule);
    seq.coins.reserve(static_cast<std::size_t>(steps));
    RngStream rng(seed);

    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, schedules::Ordered>) {
                validate_coin_params(s.coin);
                seq.coins.assign(static_cast<std::size_t>(steps), s.coin);
            } else if constexpr (std::is_same_v<T, schedules::SDD2>) {
                for (int t = 1; t <= steps; ++t) seq.coins.push_back(sample_two_coin(0.5, rng));
            } else if constexpr (std::is_same_v<T, schedules::SDDInf>) {
                for (int t = 1; t <= steps; ++t) seq.coins.push_back(sample_su2_uniform(rng));
            } else if constexpr (std::is_same_v<T, schedules::ADO>) {
                if (s.delta_t <= 0 || s.delta_t > steps) throw DomainError("ado delta_t must lie in [1, steps]");
                validate_coin_params(s.ordered_coin);
                for (int t = 1; t <= steps; ++t) {
                    const bool ordered_block = ((t - 1) / s.delta_t) % 2 == 1;
                    seq.coins.push_back(ordered_block ? s.ordered_coin : draw_disordered(s.inner, rng));
                }
            } else if constexpr (std::is_same_v<T, schedules::WDDConst>) {
                for (int t = 1; t <= steps; ++t) seq.coins.push_back(sample_two_coin(s.p, rng));
            } else if constexpr (std::is_same_v<T, schedules::WDDTransient>) {
                if (steps > s.horizon) throw DomainError("steps must not exceed the transient horizon");
                for (int t = 1; t <= steps; ++t)
                    seq.coins.push_back(sample_two_coin(transient_p(s.shape, s.direction, t, s.horizon), rng));
            } else if constexpr (std::is_same_v<T, schedules::PeriodicFourier>) {
                if (s.period <= 0) throw DomainError("periodic-fourier period must be >= 1");
                for (int t = 1; t <= steps; ++t) seq.coins.push_back(t % s.period == 0 ? fourier() : hadamard());
            } else if constexpr (std::is_same_v<T, schedules::DisorderThenOrder>) {
                if (s.switch_step < 1) throw DomainError("switch_step must be >= 1");
                validate_coin_params(s.ordered_coin);
                for (int t = 1; t <= steps; ++t)
                    seq.coins.push_back(t < s.switch_step ? draw_disordered(s.inner, rng) : s.ordered_coin);
            } else {
                if (static_cast<int>(s.coins.size()) != steps)
                    throw DomainError("fixed sequence length does not match the requested steps");
                for (const CoinParams& c : s.coins) validate_coin_params(c);
                seq.coins = s.coins;
            }
        },
        schedule);

    return seq;
}

}  // namespace qwalk
